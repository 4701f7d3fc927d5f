#include "zigzag/constructions.hpp"

#include <algorithm>
#include <random>

#include "zigzag/analysis.hpp"
#include "zigzag/rebuild.hpp"

namespace zigzag {

namespace {

int ipow(int b, int e) {
    long long acc = 1;
    for (int i = 0; i < e; ++i) acc *= b;
    return static_cast<int>(acc);
}

CodeSpec base_spec(int r, int m, Field field) {
    CodeSpec spec;
    spec.field = std::move(field);
    spec.r = r;
    spec.m = m;
    spec.p = ipow(r, m);
    return spec;
}

// u_j = e_1 + ... + e_j (u_0 is the zero vector)
RVector running_basis_sum(int r, int m, int j) {
    RVector u(r, m);
    for (int l = 1; l <= j; ++l) u = u + RVector::unit(r, m, l);
    return u;
}

} // namespace

Field field_of_order(int q, std::optional<int> alpha_hint) {
    if (q < 2) throw InvalidArgument("field order must be at least 2");
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int d = 0, n = q;
        while (n % p == 0) { n /= p; ++d; }
        if (n != 1) break;  // q has a second prime factor
        return Field::make(p, d, alpha_hint);
    }
    throw InvalidArgument("field order is not a prime power");
}

CodeSpec build_optimal_r2(int m) {
    if (m < 1) throw InvalidArgument("m must be positive");
    CodeSpec spec = base_spec(2, m, Field::make(3, 1));
    spec.kind = CodeKind::OptimalR2;
    spec.name = "optimal-r2-m" + std::to_string(m);
    spec.coefficients_verified = true;

    for (int j = 0; j <= m; ++j) {
        ColumnDef col(RVector::unit(2, m, j));
        col.modified_sets = (j == 0);
        install_rebuild_sets(spec, col);
        const RVector uj = running_basis_sum(2, m, j);
        col.coeff.assign(2, std::vector<int>(spec.p, 1));
        for (int i = 0; i < spec.p; ++i) {
            const RVector row = RVector::from_integer(2, m, i);
            col.coeff[1][i] = spec.field.pow(2, row.dot(uj));
        }
        spec.columns.push_back(std::move(col));
    }
    validate(spec);
    return spec;
}

CodeSpec build_duplication(const CodeSpec& base, int s, int q) {
    if (base.r != 2) throw InvalidArgument("duplication supports two-parity bases");
    if (s < 1) throw InvalidArgument("copy count must be positive");
    const bool odd_q = q % 2 == 1;
    if (odd_q && s > q - 1)
        throw InvalidArgument("s-duplication needs q >= s+1 (odd q allows s <= q-1)");
    if (!odd_q && s > q - 2)
        throw InvalidArgument("s-duplication over even q needs s <= q-2");

    CodeSpec spec = base_spec(2, base.m, field_of_order(q));
    spec.kind = CodeKind::Duplication;
    spec.dup_copies = s;
    spec.base_k = base.k();
    spec.name = base.name + "-dup" + std::to_string(s) + "-q" + std::to_string(q);
    const Field& f = spec.field;
    const int a = f.alpha();
    const bool exact = base.kind == CodeKind::OptimalR2;
    spec.coefficients_verified = exact;

    for (int t = 0; t < s; ++t) {
        for (int j = 0; j < base.k(); ++j) {
            ColumnDef col(base.columns[j].vector, t);
            col.modified_sets = base.columns[j].modified_sets;
            install_rebuild_sets(spec, col);
            col.coeff.assign(2, std::vector<int>(spec.p, 1));
            const RVector uj = running_basis_sum(2, base.m, j);
            for (int i = 0; i < spec.p; ++i) {
                if (exact) {
                    const bool hot = RVector::from_integer(2, base.m, i).dot(uj) == 1;
                    if (odd_q)
                        col.coeff[1][i] = f.pow(a, hot ? t + 1 : t);
                    else
                        col.coeff[1][i] = hot ? f.inv(f.pow(a, t + 1)) : f.pow(a, t + 1);
                } else {
                    // distinct powers per copy satisfy the duplicate-column
                    // condition; MDS for the rest is not certified here
                    col.coeff[1][i] = f.pow(a, t);
                }
            }
            spec.columns.push_back(std::move(col));
        }
    }
    validate(spec);
    return spec;
}

Rational duplication_ratio(const Rational& base_ratio, int s, int base_k) {
    return base_ratio * (Rational(1) + Rational(s - 1, s * base_k + 1));
}

CodeSpec build_weight3(int m, int q) {
    if (m % 3 != 0 || m < 3) throw InvalidArgument("weight-3 construction needs 3 | m");
    if (q != 9 && q != 16) throw InvalidArgument("weight-3 construction uses GF(9) or GF(16)");
    CodeSpec spec = base_spec(2, m, field_of_order(q));
    spec.kind = CodeKind::Weight3;
    spec.name = "weight3-m" + std::to_string(m) + "-q" + std::to_string(q);
    spec.coefficients_verified = true;
    const Field& f = spec.field;
    const int third = m / 3;

    for (int i1 = 1; i1 <= third; ++i1) {
        for (int i2 = third + 1; i2 <= 2 * third; ++i2) {
            for (int i3 = 2 * third + 1; i3 <= m; ++i3) {
                RVector v = RVector::unit(2, m, i1) + RVector::unit(2, m, i2) +
                            RVector::unit(2, m, i3);
                ColumnDef col(std::move(v));
                install_rebuild_sets(spec, col);
                col.coeff.assign(2, std::vector<int>(spec.p, 1));
                // M_v columns are the partial basis sums up to each index
                auto partial = [&](int idx, int lo) {
                    RVector s2(2, m);
                    for (int l = lo; l <= idx; ++l) s2 = s2 + RVector::unit(2, m, l);
                    return s2;
                };
                const RVector c1 = partial(i1, 1);
                const RVector c2 = partial(i2, third + 1);
                const RVector c3 = partial(i3, 2 * third + 1);
                for (int i = 0; i < spec.p; ++i) {
                    const RVector row = RVector::from_integer(2, m, i);
                    const int t = row.dot(c1) * 4 + row.dot(c2) * 2 + row.dot(c3);
                    col.coeff[1][i] = f.pow(f.alpha(), t % (f.q() - 1));
                }
                spec.columns.push_back(std::move(col));
            }
        }
    }
    validate(spec);
    return spec;
}

CodeSpec build_optimal_general(int m, int r, int q, std::optional<int> alpha_hint) {
    if (m < 1) throw InvalidArgument("m must be positive");
    if (r == 2) return build_optimal_r2(m);
    if (r != 3)
        throw InvalidArgument(
            "no closed-form coefficients for r > 3; use assign_coefficients_random");
    if (q < 2 * (m + 1))
        throw InvalidArgument("r=3 coefficients need a field of size at least 2(m+1)");

    CodeSpec spec = base_spec(3, m, field_of_order(q, alpha_hint));
    spec.kind = CodeKind::OptimalGeneral;
    spec.name = "optimal-r3-m" + std::to_string(m) + "-q" + std::to_string(q);
    spec.coefficients_verified = true;
    const Field& f = spec.field;

    for (int c = 0; c <= m; ++c) {
        ColumnDef col(RVector::unit(3, m, c));
        col.modified_sets = (c == 0);
        install_rebuild_sets(spec, col);
        col.coeff.assign(3, std::vector<int>(spec.p, 1));
        if (c > 0) {
            const RVector ec = RVector::unit(3, m, c);
            for (int l = 1; l < 3; ++l) {
                for (int x = 0; x < spec.p; ++x) {
                    const RVector row = RVector::from_integer(3, m, x);
                    int hits = 0;
                    for (int s = 0; s < l; ++s)
                        if ((row + ec.scaled(s)).dot(ec) == 0) ++hits;
                    col.coeff[l][x] = f.pow(f.alpha(), static_cast<long long>(c) * hits);
                }
            }
        }
        spec.columns.push_back(std::move(col));
    }
    validate(spec);
    return spec;
}

CodeSpec build_from_vectors(const std::vector<RVector>& vectors, int r, int m, int q) {
    CodeSpec spec = base_spec(r, m, field_of_order(q));
    spec.name = "skeleton";
    spec.coefficients_verified = false;
    for (size_t idx = 0; idx < vectors.size(); ++idx) {
        const RVector& v = vectors[idx];
        if (v.r() != r || v.m() != m) throw InvalidArgument("vector dimension mismatch");
        for (size_t j = 0; j < idx; ++j)
            if (vectors[j] == v) throw InvalidArgument("duplicate vector in set");
        if (v.is_zero() && idx != 0)
            throw InvalidArgument("zero vector allowed only as the first column");
        if (!v.is_zero()) {
            int g = r;
            for (int d : v.digits()) g = std::gcd(g, d);
            if (g != 1)
                throw InvalidArgument("vector " + std::to_string(v.to_integer()) +
                                      " violates the gcd condition");
        }
        ColumnDef col(v);
        col.modified_sets = v.is_zero();
        install_rebuild_sets(spec, col);
        col.coeff.assign(r, std::vector<int>(spec.p, 1));
        spec.columns.push_back(std::move(col));
    }
    validate(spec);
    return spec;
}

CodeSpec assign_coefficients_random(const CodeSpec& skeleton, int q, std::uint64_t seed,
                                    int max_tries, bool check_multi_erasure) {
    CodeSpec spec = skeleton;
    spec.field = field_of_order(q);
    spec.name = skeleton.name + "-random-q" + std::to_string(q);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(1, q - 1);

    MdsReport last;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        for (ColumnDef& col : spec.columns) {
            col.coeff.assign(spec.r, std::vector<int>(spec.p, 1));
            for (int l = 1; l < spec.r; ++l)
                for (int i = 0; i < spec.p; ++i) col.coeff[l][i] = dist(rng);
        }
        last = verify_mds(spec);
        if (!last.mds) continue;
        if (check_multi_erasure && !all_multi_erasure_plans_solvable(spec)) continue;
        spec.coefficients_verified = true;
        return spec;
    }
    throw Error("random coefficient search exhausted " + std::to_string(max_tries) +
                " tries; last failing erasure set: " + last.witness_str());
}

} // namespace zigzag
