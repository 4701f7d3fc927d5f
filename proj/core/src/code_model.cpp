#include "zigzag/code_model.hpp"

#include <algorithm>
#include <numeric>

namespace zigzag {

Permutation zigzag_of(const CodeSpec& spec, int l, int j) {
    if (l < 0 || l >= spec.r || j < 0 || j >= spec.k())
        throw InvalidArgument("zigzag_of: index out of range");
    return vec_perm(spec.columns[j].vector, l);
}

int source_row(const CodeSpec& spec, int l, int j, int t) {
    const RVector row = RVector::from_integer(spec.r, spec.m, t);
    return static_cast<int>((row - spec.columns[j].vector.scaled(l)).to_integer());
}

std::vector<std::vector<int>> encode(const CodeSpec& spec,
                                     const std::vector<std::vector<int>>& info) {
    const int k = spec.k();
    if (static_cast<int>(info.size()) != spec.p)
        throw InvalidArgument("encode: row count mismatch");
    for (const auto& row : info)
        if (static_cast<int>(row.size()) != k) throw InvalidArgument("encode: column count mismatch");

    std::vector<std::vector<int>> parity(spec.p, std::vector<int>(spec.r, 0));
    const Field& f = spec.field;
    for (int l = 0; l < spec.r; ++l) {
        for (int t = 0; t < spec.p; ++t) {
            int acc = 0;
            for (int j = 0; j < k; ++j) {
                const int x = source_row(spec, l, j, t);
                acc = f.add(acc, f.mul(spec.columns[j].coeff[l][x], info[x][j]));
            }
            parity[t][l] = acc;
        }
    }
    return parity;
}

CodeArray make_array(const CodeSpec& spec, std::vector<std::vector<int>> info) {
    CodeArray a;
    a.parity = encode(spec, info);
    a.info = std::move(info);
    return a;
}

void install_rebuild_sets(const CodeSpec& spec, ColumnDef& col) {
    col.rebuild_rows.assign(spec.r, {});
    if (col.modified_sets) {
        const RVector ones(spec.r, std::vector<int>(spec.m, 1));
        for (int l = 0; l < spec.r; ++l) col.rebuild_rows[l] = hyperplane_rows(ones, l);
    } else {
        for (int l = 0; l < spec.r; ++l)
            col.rebuild_rows[l] = hyperplane_rows(col.vector, (spec.r - l) % spec.r);
    }
}

void validate(const CodeSpec& spec) {
    if (spec.r < 1 || spec.m < 1) throw InvalidArgument("spec: r and m must be positive");
    long long p = 1;
    for (int i = 0; i < spec.m; ++i) p *= spec.r;
    if (p != spec.p) throw InvalidArgument("spec: p must equal r^m");

    for (const ColumnDef& col : spec.columns) {
        if (col.vector.r() != spec.r || col.vector.m() != spec.m)
            throw InvalidArgument("spec: column vector dimension mismatch");
        if (col.vector.is_zero()) {
            if (!col.modified_sets)
                throw InvalidArgument("spec: zero vector requires the modified row sets");
        } else {
            int g = spec.r;
            for (int d : col.vector.digits()) g = std::gcd(g, d);
            if (g != 1) throw InvalidArgument("spec: column vector violates gcd condition");
        }

        if (static_cast<int>(col.rebuild_rows.size()) != spec.r)
            throw InvalidArgument("spec: rebuild sets missing");
        std::vector<char> seen(spec.p, 0);
        for (const auto& rows : col.rebuild_rows) {
            if (static_cast<int>(rows.size()) * spec.r != spec.p)
                throw InvalidArgument("spec: rebuild set has wrong size");
            for (int x : rows) {
                if (x < 0 || x >= spec.p || seen[x])
                    throw InvalidArgument("spec: rebuild sets do not partition the rows");
                seen[x] = 1;
            }
        }

        if (static_cast<int>(col.coeff.size()) != spec.r)
            throw InvalidArgument("spec: coefficient table missing parities");
        for (int l = 0; l < spec.r; ++l) {
            if (static_cast<int>(col.coeff[l].size()) != spec.p)
                throw InvalidArgument("spec: coefficient table missing rows");
            for (int c : col.coeff[l]) {
                if (c <= 0 || c >= spec.field.q())
                    throw InvalidArgument("spec: coefficient zero or out of field");
                if (l == 0 && c != 1)
                    throw InvalidArgument("spec: parity 0 coefficients must be 1");
            }
        }
    }
}

} // namespace zigzag
