#include "zigzag/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zigzag/decode.hpp"

namespace zigzag {

namespace {

// deterministic nonzero-rich test pattern
std::vector<std::vector<int>> probe_array(const CodeSpec& spec) {
    std::vector<std::vector<int>> info(spec.p, std::vector<int>(spec.k(), 0));
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int x = 0; x < spec.p; ++x)
        for (int j = 0; j < spec.k(); ++j) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            info[x][j] = static_cast<int>((state >> 33) % spec.field.q());
        }
    return info;
}

bool next_subset(std::vector<int>& pick, int n) {
    const int e = static_cast<int>(pick.size());
    int i = e - 1;
    while (i >= 0 && pick[i] == n - e + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int t = i + 1; t < e; ++t) pick[t] = pick[t - 1] + 1;
    return true;
}

} // namespace

std::string MdsReport::witness_str() const {
    std::string out = "{";
    for (size_t i = 0; i < witness.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(witness[i]);
    }
    return out + "}";
}

MdsReport verify_mds(const CodeSpec& spec) {
    MdsReport rep;
    const auto info = probe_array(spec);
    const CodeArray original = make_array(spec, info);
    for (int e = 1; e <= spec.r; ++e) {
        std::vector<int> pick(e);
        std::iota(pick.begin(), pick.end(), 0);
        do {
            CodeArray arr = original;
            for (int idx : pick) {
                arr.erased.insert(idx);
                if (idx < spec.k())
                    for (int x = 0; x < spec.p; ++x) arr.info[x][idx] = 0;
                else
                    for (int x = 0; x < spec.p; ++x) arr.parity[x][idx - spec.k()] = 0;
            }
            bool ok = true;
            try {
                decode_erasures(spec, arr);
            } catch (const SingularSystem&) {
                ok = false;
            }
            if (ok) ok = arr.info == original.info && arr.parity == original.parity;
            if (!ok) {
                rep.mds = false;
                rep.witness = pick;
                return rep;
            }
        } while (next_subset(pick, spec.n()));
    }
    return rep;
}

MdsReport verify_mds_pairwise(const CodeSpec& spec) {
    if (spec.r != 2) throw InvalidArgument("pairwise MDS condition applies to r = 2");
    MdsReport rep;
    const Field& f = spec.field;
    for (int i = 0; i < spec.k(); ++i) {
        for (int j = i + 1; j < spec.k(); ++j) {
            const ColumnDef& ci = spec.columns[i];
            const ColumnDef& cj = spec.columns[j];
            bool ok = true;
            if (ci.vector == cj.vector) {
                for (int x = 0; x < spec.p && ok; ++x)
                    ok = ci.coeff[1][x] != cj.coeff[1][x];
            } else {
                const RVector step = ci.vector + cj.vector;
                for (int x = 0; x < spec.p && ok; ++x) {
                    const int x2 = static_cast<int>(
                        (RVector::from_integer(2, spec.m, x) + step).to_integer());
                    if (x2 < x) continue;  // each row pair once
                    ok = f.mul(ci.coeff[1][x], ci.coeff[1][x2]) !=
                         f.mul(cj.coeff[1][x], cj.coeff[1][x2]);
                }
            }
            if (!ok) {
                rep.mds = false;
                rep.witness = {i, j};
                return rep;
            }
        }
    }
    return rep;
}

std::vector<PermFamilyMember> family_of(const CodeSpec& spec) {
    std::vector<PermFamilyMember> fam;
    for (const ColumnDef& col : spec.columns) {
        PermFamilyMember mem;
        for (int l = 0; l < spec.r; ++l) {
            mem.f.push_back(vec_perm(col.vector, l));
            mem.X.push_back(col.rebuild_rows[l]);
        }
        fam.push_back(std::move(mem));
    }
    return fam;
}

bool check_orthogonal(const std::vector<PermFamilyMember>& family, int r) {
    if (family.empty()) return true;
    const int p = family.front().f.front().size();
    if (p % r != 0) throw InvalidArgument("domain size not divisible by r");
    for (const PermFamilyMember& mem : family) {
        if (static_cast<int>(mem.f.size()) != r || static_cast<int>(mem.X.size()) != r)
            throw InvalidArgument("family member missing permutations or sets");
        std::vector<char> seen(p, 0);
        for (const auto& x : mem.X) {
            if (static_cast<int>(x.size()) * r != p)
                throw InvalidArgument("row sets are not an equal partition");
            for (int row : x) {
                if (row < 0 || row >= p || seen[row])
                    throw InvalidArgument("row sets are not a partition");
                seen[row] = 1;
            }
        }
    }

    const int n = static_cast<int>(family.size());
    for (int i = 0; i < n; ++i) {
        std::vector<char> in_x0(p, 0);
        for (int row : family[i].X[0]) in_x0[row] = 1;
        for (int j = 0; j < n; ++j) {
            std::set<int> image;
            for (int l = 1; l < r; ++l) {
                const Permutation fj_inv = family[j].f[l].inverse();
                for (int x : family[i].X[l]) image.insert(fj_inv(family[i].f[l](x)));
            }
            int hits = 0;
            for (int x : image)
                if (!in_x0[x]) ++hits;
            const int expected = (i == j) ? (p / r) * (r - 1) : 0;
            if (hits != expected) return false;
        }
    }
    return true;
}

int max_orthogonal_family_size(int r, int m) {
    long long p = 1;
    for (int i = 0; i < m; ++i) p *= r;
    if (p > 4) throw CapabilityExceeded("exhaustive family search limited to p <= 4");
    const int n = static_cast<int>(p);

    // candidate members: identity row permutation, all choices for the
    // remaining parities, all ordered equal partitions
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 0);
        do perms.push_back(im);
        while (std::next_permutation(im.begin(), im.end()));
    }
    std::vector<std::vector<std::vector<int>>> partitions;
    {
        std::vector<int> assign(n, 0);
        // assign each row to one of r cells; keep equal-sized results
        const long long total = [&] {
            long long t = 1;
            for (int i = 0; i < n; ++i) t *= r;
            return t;
        }();
        for (long long code = 0; code < total; ++code) {
            long long rem = code;
            std::vector<std::vector<int>> cells(r);
            for (int x = 0; x < n; ++x) {
                cells[rem % r].push_back(x);
                rem /= r;
            }
            bool equal = true;
            for (const auto& cell : cells) equal = equal && static_cast<int>(cell.size()) * r == n;
            if (equal) partitions.push_back(std::move(cells));
        }
    }
    std::vector<PermFamilyMember> members;
    std::vector<int> choice(r - 1, 0);
    while (true) {
        for (const auto& part : partitions) {
            PermFamilyMember mem;
            mem.f.push_back(Permutation::identity(n));
            for (int l = 1; l < r; ++l) mem.f.push_back(Permutation(perms[choice[l - 1]]));
            mem.X = part;
            members.push_back(std::move(mem));
        }
        int i = r - 2;
        while (i >= 0 && choice[i] == static_cast<int>(perms.size()) - 1) --i;
        if (i < 0) break;
        ++choice[i];
        for (int t = i + 1; t < r - 1; ++t) choice[t] = 0;
    }

    const int cand = static_cast<int>(members.size());
    std::vector<std::vector<char>> compat(cand, std::vector<char>(cand, 0));
    for (int i = 0; i < cand; ++i)
        for (int j = i; j < cand; ++j) {
            bool ok;
            if (i == j) {
                ok = check_orthogonal({members[i]}, r);
            } else {
                ok = check_orthogonal({members[i], members[j]}, r);
            }
            compat[i][j] = compat[j][i] = ok;
        }

    int best = 0;
    std::vector<int> clique;
    auto grow = [&](auto&& self, int start) -> void {
        best = std::max(best, static_cast<int>(clique.size()));
        for (int c = start; c < cand; ++c) {
            if (!compat[c][c]) continue;
            bool ok = true;
            for (int q : clique)
                if (!compat[q][c]) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(c);
            self(self, c + 1);
            clique.pop_back();
        }
    };
    grow(grow, 0);
    return best;
}

Rational ratio_formula(const CodeSpec& spec) {
    const int k = spec.k(), r = spec.r, p = spec.p;
    long long accessed = 0;
    for (int jv = 0; jv < k; ++jv) {
        const ColumnDef& cv = spec.columns[jv];
        accessed += p;  // one full zigzag set per parity
        for (int ju = 0; ju < k; ++ju) {
            if (ju == jv) continue;
            const RVector& u = spec.columns[ju].vector;
            if (cv.modified_sets) {
                std::set<int> rows;
                const RVector d = cv.vector - u;
                for (int l = 0; l < r; ++l) {
                    const Permutation shift = vec_perm(d, l);
                    for (int x : cv.rebuild_rows[l]) rows.insert(shift(x));
                }
                accessed += static_cast<long long>(rows.size());
            } else {
                const int c = ((cv.vector.dot(cv.vector - u) - 1) % r + r) % r;
                accessed += p / std::gcd(r, c == 0 ? r : c);
            }
        }
    }
    return Rational(accessed, static_cast<long long>(k) * p * (k + r - 1));
}

Rational density(const std::vector<RVector>& t) {
    const int n = static_cast<int>(t.size());
    for (const RVector& v : t)
        if (v.is_zero()) throw InvalidArgument("density: zero vector not allowed");
    long long edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int diff = 0;
            for (int d = 0; d < t[j].m(); ++d)
                if (t[j].digit(d) != 0 && t[i].digit(d) == 0) ++diff;
            if (diff % 2 == 1) ++edges;
        }
    return Rational(edges, static_cast<long long>(n) * n);
}

bool check_property_e(const std::vector<RVector>& t, int e) {
    const int n = static_cast<int>(t.size());
    if (e < 1 || e > n - 1) throw InvalidArgument("property e needs 1 <= e <= |T| - 1");
    const int r = t.front().r(), m = t.front().m();
    std::vector<int> pick(e);
    std::iota(pick.begin(), pick.end(), 0);
    do {
        std::vector<char> in_a(n, 0);
        for (int idx : pick) in_a[idx] = 1;
        for (int vi = 0; vi < n; ++vi) {
            if (in_a[vi]) continue;
            std::vector<RVector> gens;
            for (int wi = 0; wi < n; ++wi)
                if (!in_a[wi]) gens.push_back(t[wi] - t[vi]);
            const Subspace z = Subspace::span(r, m, gens);
            for (int ui : pick)
                if (z.contains(t[ui] - t[vi])) return false;
        }
    } while (next_subset(pick, n));
    return true;
}

std::optional<int> min_optimal_e(const std::vector<RVector>& t, int max_e) {
    for (int e = 1; e <= max_e && e <= static_cast<int>(t.size()) - 1; ++e)
        if (check_property_e(t, e)) return e;
    return std::nullopt;
}

bool column_bound_check(const std::vector<RVector>& t, int e) {
    return static_cast<int>(t.size()) <= t.front().m() + e;
}

} // namespace zigzag
