#include <doctest.h>

#include <algorithm>
#include <random>

#include "zigzag/analysis.hpp"
#include "zigzag/constructions.hpp"
#include "zigzag/rebuild.hpp"

using namespace zigzag;

TEST_CASE("verify_mds certifies the constructed codes") {
    CHECK(verify_mds(build_optimal_r2(2)).mds);
    CHECK(verify_mds(build_duplication(build_optimal_r2(2), 2, 3)).mds);
    CHECK(verify_mds(build_optimal_general(2, 3, 7, 3)).mds);
}

TEST_CASE("verify_mds reports a witness for a non-MDS assignment") {
    const CodeSpec spec = build_from_vectors(
        {RVector(2, 2), RVector::unit(2, 2, 1), RVector::unit(2, 2, 2)}, 2, 2, 2);
    const MdsReport rep = verify_mds(spec);
    REQUIRE(!rep.mds);
    CHECK(rep.witness.size() == 2);
    CHECK(rep.witness_str().front() == '{');
    CHECK(rep.witness_str().back() == '}');
}

TEST_CASE("pairwise and exhaustive MDS checks agree on two-parity codes") {
    const std::vector<CodeSpec> specs = {
        build_optimal_r2(2), build_optimal_r2(3),
        build_duplication(build_optimal_r2(2), 2, 3), build_weight3(3, 9),
        build_from_vectors({RVector(2, 2), RVector::unit(2, 2, 1), RVector::unit(2, 2, 2)},
                           2, 2, 2)};
    for (const CodeSpec& spec : specs)
        CHECK(verify_mds(spec).mds == verify_mds_pairwise(spec).mds);
}

TEST_CASE("pairwise check rejects r != 2") {
    CHECK_THROWS_AS(verify_mds_pairwise(build_optimal_general(2, 3, 7, 3)), InvalidArgument);
}

TEST_CASE("constructed permutation families are orthogonal") {
    for (int m = 1; m <= 3; ++m) {
        CHECK(check_orthogonal(family_of(build_optimal_r2(m)), 2));
        const int q = 2 * (m + 1) < 7 ? 7 : 13;
        CHECK(check_orthogonal(family_of(build_optimal_general(m, 3, q)), 3));
    }
}

TEST_CASE("a repeated member breaks orthogonality") {
    auto fam = family_of(build_optimal_r2(2));
    fam.push_back(fam.front());
    CHECK(!check_orthogonal(fam, 2));
}

TEST_CASE("malformed partitions are rejected") {
    auto fam = family_of(build_optimal_r2(2));
    fam[0].X[0] = fam[0].X[1];
    CHECK_THROWS_AS(check_orthogonal(fam, 2), InvalidArgument);
    auto fam2 = family_of(build_optimal_r2(2));
    fam2[0].f.pop_back();
    CHECK_THROWS_AS(check_orthogonal(fam2, 2), InvalidArgument);
}

TEST_CASE("largest orthogonal family on two rows has two members") {
    CHECK(max_orthogonal_family_size(2, 1) == 2);
    CHECK_THROWS_AS(max_orthogonal_family_size(2, 3), CapabilityExceeded);
}

TEST_CASE("ratio formula matches the measured ratio on every family") {
    const std::vector<CodeSpec> specs = {
        build_optimal_r2(1), build_optimal_r2(2), build_optimal_r2(3),
        build_duplication(build_optimal_r2(2), 2, 3),
        build_weight3(3, 9), build_weight3(6, 9),
        build_optimal_general(2, 3, 7, 3)};
    for (const CodeSpec& spec : specs) CHECK(ratio_formula(spec) == measure_ratio(spec));
}

TEST_CASE("ratio formula worked values") {
    CHECK(ratio_formula(build_optimal_r2(2)) == Rational(1, 2));
    CHECK(ratio_formula(build_duplication(build_optimal_r2(2), 2, 3)) == Rational(4, 7));
    CHECK(ratio_formula(build_optimal_general(2, 3, 7, 3)) == Rational(1, 3));
    CHECK(ratio_formula(build_weight3(6, 9)) == Rational(2, 3));
}

TEST_CASE("difference-graph density") {
    std::vector<RVector> basis;
    for (int i = 1; i <= 4; ++i) basis.push_back(RVector::unit(2, 4, i));
    CHECK(density(basis) == Rational(3, 4));
    CHECK(density({RVector::unit(2, 2, 1)}) == Rational(0, 1));
    CHECK_THROWS_AS(density({RVector(2, 2)}), InvalidArgument);
    // two disjoint singleton supports: both directions differ by one
    CHECK(density({RVector::unit(2, 2, 1), RVector::unit(2, 2, 2)}) == Rational(1, 2));
}

TEST_CASE("the four-vector GF(3)^2 set has property 2 but not property 1") {
    const std::vector<RVector> t = {
        RVector(3, 2), RVector::unit(3, 2, 1), RVector::unit(3, 2, 2),
        RVector::unit(3, 2, 1) + RVector::unit(3, 2, 2)};
    CHECK(!check_property_e(t, 1));
    CHECK(check_property_e(t, 2));
    CHECK(min_optimal_e(t, 3) == 2);
    CHECK(column_bound_check(t, 2));
}

TEST_CASE("the augmented standard basis has property 1") {
    const std::vector<RVector> t = {RVector(3, 2), RVector::unit(3, 2, 1),
                                    RVector::unit(3, 2, 2)};
    CHECK(min_optimal_e(t, 2) == 1);
}

TEST_CASE("property e is monotone and bounds the column count on random sets") {
    std::mt19937_64 rng(42);
    int with_property = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> ids(9);
        std::iota(ids.begin(), ids.end(), 0);
        std::shuffle(ids.begin(), ids.end(), rng);
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<RVector> t;
        for (int i = 0; i < n; ++i) t.push_back(RVector::from_integer(3, 2, ids[i]));
        const auto e = min_optimal_e(t, n - 1);
        if (!e) continue;
        ++with_property;
        for (int e2 = *e; e2 <= n - 1; ++e2) CHECK(check_property_e(t, e2));
        CHECK(column_bound_check(t, *e));
    }
    CHECK(with_property > 0);
}

TEST_CASE("check_property_e validates its range") {
    const std::vector<RVector> t = {RVector(3, 2), RVector::unit(3, 2, 1)};
    CHECK_THROWS_AS(check_property_e(t, 0), InvalidArgument);
    CHECK_THROWS_AS(check_property_e(t, 2), InvalidArgument);
}
