#include "zigzag/rebuild.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zigzag/linsolve.hpp"

namespace zigzag {

namespace {

std::vector<int> shifted(const std::vector<int>& rows, const RVector& d) {
    std::vector<int> out;
    out.reserve(rows.size());
    const int r = d.r(), m = d.m();
    for (int x : rows)
        out.push_back(static_cast<int>((RVector::from_integer(r, m, x) + d).to_integer()));
    std::sort(out.begin(), out.end());
    return out;
}

void union_into(std::set<int>& acc, const std::vector<int>& rows) {
    acc.insert(rows.begin(), rows.end());
}

int inv_mod(int a, int r) {
    for (int x = 1; x < r; ++x)
        if (a * x % r == 1) return x;
    throw InvalidArgument("no inverse: modulus not coprime");
}

// Unknown rows per erased column and the equation system of a solve plan.
struct MultiSystem {
    std::vector<std::vector<int>> unknown_rows;  // per erased column, sorted
    Matrix a;
    std::vector<std::pair<int, int>> eq_index;  // (l, zigzag t) per equation row
    int vars = 0;
};

MultiSystem build_system(const CodeSpec& spec, const RebuildPlan& plan) {
    MultiSystem sys;
    const int e = static_cast<int>(plan.erased.size());
    std::map<std::pair<int, int>, int> var_of;  // (erased slot, row) -> column
    sys.unknown_rows.resize(e);
    for (int s = 0; s < e; ++s) {
        const RVector& vj = spec.columns[plan.erased[s]].vector;
        std::set<int> rows;
        for (int l = 0; l < spec.r; ++l)
            union_into(rows, shifted(plan.parity_reads[l], vj.scaled(-l)));
        sys.unknown_rows[s].assign(rows.begin(), rows.end());
        for (int x : sys.unknown_rows[s]) var_of[{s, x}] = sys.vars++;
    }

    for (int l = 0; l < spec.r; ++l) {
        for (int t : plan.parity_reads[l]) {
            std::vector<int> row(sys.vars, 0);
            for (int s = 0; s < e; ++s) {
                const int j = plan.erased[s];
                const int src = source_row(spec, l, j, t);
                row[var_of.at({s, src})] = spec.columns[j].coeff[l][src];
            }
            sys.a.push_back(std::move(row));
            sys.eq_index.emplace_back(l, t);
        }
    }
    return sys;
}

} // namespace

RebuildPlan plan_single(const CodeSpec& spec, int j) {
    if (j < 0 || j >= spec.k())
        throw InvalidArgument("plan_single: not a systematic column");
    RebuildPlan plan;
    plan.erased = {j};
    plan.parity_reads.resize(spec.r);
    plan.column_reads.resize(spec.k());
    const ColumnDef& col = spec.columns[j];
    for (int l = 0; l < spec.r; ++l)
        plan.parity_reads[l] = shifted(col.rebuild_rows[l], col.vector.scaled(l));
    for (int u = 0; u < spec.k(); ++u) {
        if (u == j) continue;
        std::set<int> rows;
        const RVector d = col.vector - spec.columns[u].vector;
        for (int l = 0; l < spec.r; ++l)
            union_into(rows, shifted(col.rebuild_rows[l], d.scaled(l)));
        plan.column_reads[u].assign(rows.begin(), rows.end());
    }
    return plan;
}

RebuildPlan plan_multi(const CodeSpec& spec, const std::vector<int>& erased) {
    const int e = static_cast<int>(erased.size());
    const int r = spec.r, m = spec.m;
    if (e < 1 || e > r) throw CapabilityExceeded("plan_multi: need 1 <= e <= r erasures");
    if (!is_prime(r)) throw InvalidArgument("plan_multi: r must be prime");
    for (int j : erased)
        if (j < 0 || j >= spec.k()) throw InvalidArgument("plan_multi: not a systematic column");

    RebuildPlan plan;
    plan.erased = erased;
    std::sort(plan.erased.begin(), plan.erased.end());
    plan.direct = false;
    plan.parity_reads.resize(r);
    plan.column_reads.resize(spec.k());

    std::vector<int> survivors;
    for (int j = 0; j < spec.k(); ++j)
        if (!std::binary_search(plan.erased.begin(), plan.erased.end(), j))
            survivors.push_back(j);
    if (survivors.empty()) {
        // all systematic columns gone: only the parities can serve
        plan.full_fallback = true;
        std::vector<int> all(spec.p);
        for (int x = 0; x < spec.p; ++x) all[x] = x;
        for (int l = 0; l < r; ++l) plan.parity_reads[l] = all;
        return plan;
    }
    const int anchor = survivors.front();
    const RVector& va = spec.columns[anchor].vector;

    std::vector<RVector> diffs;  // erased differences from the anchor
    for (int j : plan.erased) diffs.push_back(spec.columns[j].vector - va);

    // greedy I: keep survivor i while no erased difference falls into Z
    std::vector<int> chosen;
    std::vector<RVector> zgen;
    for (int i : survivors) {
        std::vector<RVector> cand = zgen;
        cand.push_back(spec.columns[i].vector - va);
        const Subspace z = Subspace::span(r, m, cand);
        bool ok = true;
        for (const RVector& d : diffs)
            if (z.contains(d)) { ok = false; break; }
        if (ok) {
            chosen.push_back(i);
            zgen = std::move(cand);
        }
    }

    // first u in (Z)^perp, integer order, non-orthogonal to every erased
    // difference; shrink I from the back when none exists
    std::optional<RVector> u;
    while (true) {
        const Subspace z = Subspace::span(r, m, zgen);
        std::vector<RVector> cands = z.orthogonal_complement().vectors();
        std::sort(cands.begin(), cands.end(), [](const RVector& a, const RVector& b) {
            return a.to_integer() < b.to_integer();
        });
        for (const RVector& c : cands) {
            if (c.is_zero()) continue;
            bool ok = true;
            for (const RVector& d : diffs)
                if (c.dot(d) == 0) { ok = false; break; }
            if (ok) { u = c; break; }
        }
        if (u || chosen.empty()) break;
        chosen.pop_back();
        zgen.pop_back();
    }
    plan.chosen_cols = chosen;

    if (!u) {
        // e.g. an erased duplicate of a surviving copy: no hyperplane
        // separates them, so read everything
        plan.full_fallback = true;
        std::vector<int> all(spec.p);
        for (int x = 0; x < spec.p; ++x) all[x] = x;
        for (int l = 0; l < r; ++l) plan.parity_reads[l] = all;
        for (int j : survivors) plan.column_reads[j] = all;
        return plan;
    }
    plan.u = u;

    int c = 0;
    while (u->digit(c) == 0) ++c;
    RVector w(r, m);
    {
        std::vector<int> wd(m, 0);
        wd[c] = inv_mod(u->digit(c), r);
        w = RVector(r, wd);
    }
    plan.coset_step = w;

    const std::vector<int> x0 = hyperplane_rows(*u, 0);
    std::set<int> xset;
    for (int t = 0; t < e; ++t) union_into(xset, shifted(x0, w.scaled(t)));
    const std::vector<int> x(xset.begin(), xset.end());

    for (int l = 0; l < r; ++l) plan.parity_reads[l] = shifted(x, va.scaled(l));
    for (int j : survivors) {
        std::set<int> rows;
        const RVector d = va - spec.columns[j].vector;
        for (int l = 0; l < r; ++l) union_into(rows, shifted(x, d.scaled(l)));
        plan.column_reads[j].assign(rows.begin(), rows.end());
    }

    // every erased column must become fully determined by the read set
    for (const RVector& d : diffs) {
        std::set<int> cover;
        for (int l = 0; l < r; ++l) union_into(cover, shifted(x, d.scaled(l)));
        if (static_cast<int>(cover.size()) != spec.p)
            throw Error("plan_multi: coset union does not cover the rows");
    }
    return plan;
}

RebuildPlan plan_rebuild(const CodeSpec& spec, const std::vector<int>& erased) {
    if (erased.size() == 1) return plan_single(spec, erased.front());
    return plan_multi(spec, erased);
}

AccessReport access_report(const CodeSpec& spec, const RebuildPlan& plan) {
    AccessReport rep;
    rep.per_node.assign(spec.n(), 0);
    for (int j = 0; j < spec.k(); ++j)
        rep.per_node[j] = static_cast<long long>(plan.column_reads[j].size());
    for (int l = 0; l < spec.r; ++l)
        rep.per_node[spec.k() + l] = static_cast<long long>(plan.parity_reads[l].size());
    for (long long c : rep.per_node) rep.total_accessed += c;
    rep.surviving_total =
        static_cast<long long>(spec.p) * (spec.n() - static_cast<int>(plan.erased.size()));
    return rep;
}

void execute_rebuild(const CodeSpec& spec, const RebuildPlan& plan, CodeArray& array) {
    const Field& f = spec.field;
    if (plan.direct) {
        const int j = plan.erased.front();
        const ColumnDef& col = spec.columns[j];
        for (int l = 0; l < spec.r; ++l) {
            for (int x : col.rebuild_rows[l]) {
                const int t = static_cast<int>((RVector::from_integer(spec.r, spec.m, x) +
                                                col.vector.scaled(l))
                                                   .to_integer());
                int val = array.parity[t][l];
                for (int u = 0; u < spec.k(); ++u) {
                    if (u == j) continue;
                    const int src = source_row(spec, l, u, t);
                    val = f.sub(val, f.mul(spec.columns[u].coeff[l][src], array.info[src][u]));
                }
                array.info[x][j] = f.mul(val, f.inv(col.coeff[l][x]));
            }
        }
    } else {
        MultiSystem sys = build_system(spec, plan);
        std::vector<int> b;
        b.reserve(sys.a.size());
        for (const auto& [l, t] : sys.eq_index) {
            int rhs = array.parity[t][l];
            for (int u = 0; u < spec.k(); ++u) {
                if (std::binary_search(plan.erased.begin(), plan.erased.end(), u)) continue;
                const int src = source_row(spec, l, u, t);
                rhs = f.sub(rhs, f.mul(spec.columns[u].coeff[l][src], array.info[src][u]));
            }
            b.push_back(rhs);
        }
        const SolveResult res = solve_linear(f, sys.a, b);
        if (!res.solved)
            throw SingularSystem("coefficients insufficient for this erasure pattern");
        int var = 0;
        for (size_t s = 0; s < plan.erased.size(); ++s)
            for (int x : sys.unknown_rows[s]) array.info[x][plan.erased[s]] = res.solution[var++];
    }
    for (int j : plan.erased) array.erased.erase(j);
}

Rational measure_ratio(const CodeSpec& spec, int e) {
    if (e < 1 || e > spec.r) throw CapabilityExceeded("measure_ratio: need 1 <= e <= r");
    Rational sum(0);
    long long count = 0;
    std::vector<int> pick(e);
    // enumerate all e-subsets of the systematic columns
    for (int i = 0; i < e; ++i) pick[i] = i;
    if (e > spec.k()) throw InvalidArgument("measure_ratio: more erasures than columns");
    while (true) {
        const RebuildPlan plan = plan_rebuild(spec, pick);
        sum = sum + access_report(spec, plan).ratio();
        ++count;
        int i = e - 1;
        while (i >= 0 && pick[i] == spec.k() - e + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int t = i + 1; t < e; ++t) pick[t] = pick[t - 1] + 1;
    }
    return sum / Rational(count);
}

bool all_multi_erasure_plans_solvable(const CodeSpec& spec) {
    for (int e = 2; e <= spec.r && e <= spec.k(); ++e) {
        std::vector<int> pick(e);
        for (int i = 0; i < e; ++i) pick[i] = i;
        while (true) {
            const RebuildPlan plan = plan_multi(spec, pick);
            MultiSystem sys = build_system(spec, plan);
            if (matrix_rank(spec.field, sys.a) != sys.vars) return false;
            int i = e - 1;
            while (i >= 0 && pick[i] == spec.k() - e + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int t = i + 1; t < e; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
    return true;
}

} // namespace zigzag
