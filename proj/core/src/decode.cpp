#include "zigzag/decode.hpp"

#include <algorithm>
#include <map>

#include "zigzag/linsolve.hpp"

namespace zigzag {

bool Syndrome::clean() const {
    for (const auto& row : s)
        for (int x : row)
            if (x != 0) return false;
    return true;
}

bool Syndrome::parity_clean(int l) const {
    return std::all_of(s[l].begin(), s[l].end(), [](int x) { return x == 0; });
}

Syndrome compute_syndrome(const CodeSpec& spec, const CodeArray& array) {
    if (!array.erased.empty())
        throw InvalidArgument("compute_syndrome: array has erasures");
    Syndrome syn;
    syn.s.assign(spec.r, std::vector<int>(spec.p, 0));
    const Field& f = spec.field;
    for (int l = 0; l < spec.r; ++l) {
        for (int t = 0; t < spec.p; ++t) {
            int acc = 0;
            for (int j = 0; j < spec.k(); ++j) {
                const int src = source_row(spec, l, j, t);
                acc = f.add(acc, f.mul(spec.columns[j].coeff[l][src], array.info[src][j]));
            }
            syn.s[l][t] = f.sub(acc, array.parity[t][l]);
        }
    }
    return syn;
}

void decode_erasures(const CodeSpec& spec, CodeArray& array) {
    const int k = spec.k();
    if (static_cast<int>(array.erased.size()) > spec.r)
        throw CapabilityExceeded("decode_erasures: more erasures than parities");
    std::vector<int> einfo, epar;
    for (int idx : array.erased) {
        if (idx < 0 || idx >= spec.n()) throw InvalidArgument("decode_erasures: bad column index");
        (idx < k ? einfo : epar).push_back(idx);
    }

    if (!einfo.empty()) {
        std::vector<int> live_par;
        for (int l = 0; l < spec.r; ++l)
            if (!std::count(epar.begin(), epar.end(), k + l)) live_par.push_back(l);

        const Field& f = spec.field;
        const int e = static_cast<int>(einfo.size());
        const RVector& v0 = spec.columns[einfo.front()].vector;
        std::vector<RVector> diffs;
        for (int j : einfo) diffs.push_back(spec.columns[j].vector - v0);
        const Subspace h = Subspace::span(spec.r, spec.m, diffs);

        std::vector<char> done(spec.p, 0);
        for (int start = 0; start < spec.p; ++start) {
            if (done[start]) continue;
            const std::vector<int> orbit =
                h.coset(RVector::from_integer(spec.r, spec.m, start));
            for (int x : orbit) done[x] = 1;

            std::map<std::pair<int, int>, int> var_of;
            int vars = 0;
            for (int s = 0; s < e; ++s)
                for (int x : orbit) var_of[{s, x}] = vars++;

            Matrix a;
            std::vector<int> b;
            for (int l : live_par) {
                for (int x : orbit) {
                    // zigzag index fed by row x of the anchor column
                    const int t = static_cast<int>(
                        (RVector::from_integer(spec.r, spec.m, x) + v0.scaled(l)).to_integer());
                    std::vector<int> row(vars, 0);
                    for (int s = 0; s < e; ++s) {
                        const int src = source_row(spec, l, einfo[s], t);
                        row[var_of.at({s, src})] = spec.columns[einfo[s]].coeff[l][src];
                    }
                    int rhs = array.parity[t][l];
                    for (int u = 0; u < k; ++u) {
                        if (std::count(einfo.begin(), einfo.end(), u)) continue;
                        const int src = source_row(spec, l, u, t);
                        rhs = f.sub(rhs, f.mul(spec.columns[u].coeff[l][src], array.info[src][u]));
                    }
                    a.push_back(std::move(row));
                    b.push_back(rhs);
                }
            }
            const SolveResult res = solve_linear(f, std::move(a), std::move(b));
            if (!res.solved)
                throw SingularSystem("erasure system singular: code is not MDS for this pattern");
            int var = 0;
            for (int s = 0; s < e; ++s)
                for (int x : orbit) array.info[x][einfo[s]] = res.solution[var++];
        }
    }

    if (!epar.empty()) {
        const auto parity = encode(spec, array.info);
        for (int idx : epar)
            for (int t = 0; t < spec.p; ++t) array.parity[t][idx - k] = parity[t][idx - k];
    }
    array.erased.clear();
}

ErrorDecodeResult decode_error(const CodeSpec& spec, CodeArray& array) {
    if (spec.r != 2)
        throw CapabilityExceeded("decode_error: column-error location needs r = 2");
    const Field& f = spec.field;
    const Syndrome syn = compute_syndrome(spec, array);
    const bool z0 = syn.parity_clean(0), z1 = syn.parity_clean(1);
    if (z0 && z1) return {ErrorDecodeStatus::Clean, -1};
    if (!z0 && z1) {
        // row parity in error
        for (int t = 0; t < spec.p; ++t)
            array.parity[t][0] = f.add(array.parity[t][0], syn.s[0][t]);
        return {ErrorDecodeStatus::Corrected, spec.k()};
    }
    if (z0 && !z1) {
        for (int t = 0; t < spec.p; ++t)
            array.parity[t][1] = f.add(array.parity[t][1], syn.s[1][t]);
        return {ErrorDecodeStatus::Corrected, spec.k() + 1};
    }

    std::vector<int> matches;
    for (int j = 0; j < spec.k(); ++j) {
        const ColumnDef& col = spec.columns[j];
        bool ok = true;
        for (int t = 0; t < spec.p && ok; ++t) {
            const int src = source_row(spec, 1, j, t);
            ok = f.mul(col.coeff[1][src], syn.s[0][src]) == syn.s[1][t];
        }
        if (ok) matches.push_back(j);
    }
    if (matches.empty()) return {ErrorDecodeStatus::MultipleErrors, -1};
    if (matches.size() > 1) return {ErrorDecodeStatus::Ambiguous, -1};
    const int j = matches.front();
    for (int x = 0; x < spec.p; ++x) array.info[x][j] = f.sub(array.info[x][j], syn.s[0][x]);
    return {ErrorDecodeStatus::Corrected, j};
}

} // namespace zigzag
