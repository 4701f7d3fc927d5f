#include <doctest.h>

#include <random>

#include "zigzag/code_model.hpp"
#include "zigzag/constructions.hpp"

using namespace zigzag;

namespace {

std::vector<std::vector<int>> random_info(const CodeSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> info(spec.p, std::vector<int>(spec.k()));
    for (auto& row : info)
        for (int& x : row) x = static_cast<int>(rng() % spec.field.q());
    return info;
}

} // namespace

TEST_CASE("(5,3) zigzag z_0 = a_00 + 2 a_21 + 2 a_12") {
    const CodeSpec spec = build_optimal_r2(2);
    REQUIRE(spec.k() == 3);
    REQUIRE(spec.p == 4);
    auto z0_of = [&](const std::vector<std::vector<int>>& info) {
        return encode(spec, info)[0][1];
    };
    const Field& f = spec.field;
    for (int trial = 0; trial < 20; ++trial) {
        const auto info = random_info(spec, trial);
        const int expect = f.add(info[0][0], f.add(f.mul(2, info[2][1]), f.mul(2, info[1][2])));
        CHECK(z0_of(info) == expect);
    }
}

TEST_CASE("all-zero information encodes to all-zero parity") {
    const CodeSpec spec = build_optimal_r2(2);
    const auto parity = encode(spec, std::vector<std::vector<int>>(4, std::vector<int>(3, 0)));
    for (const auto& row : parity)
        for (int x : row) CHECK(x == 0);
}

TEST_CASE("unit impulse a_21 = 1 in the (5,3) code") {
    const CodeSpec spec = build_optimal_r2(2);
    std::vector<std::vector<int>> info(4, std::vector<int>(3, 0));
    info[2][1] = 1;
    const auto parity = encode(spec, info);
    for (int t = 0; t < 4; ++t) {
        CHECK(parity[t][0] == (t == 2 ? 1 : 0));
        CHECK(parity[t][1] == (t == 0 ? 2 : 0));
    }
}

TEST_CASE("zigzag_of accessor") {
    const CodeSpec spec = build_optimal_r2(2);
    for (int j = 0; j < spec.k(); ++j) CHECK(zigzag_of(spec, 0, j) == Permutation::identity(4));
    const Permutation f1 = zigzag_of(spec, 1, 1);
    CHECK(f1(0) == 2);
    CHECK(f1(2) == 0);
    CHECK(f1(1) == 3);
    CHECK(f1(3) == 1);

    const CodeSpec g = build_optimal_general(2, 3, 7, 3);
    CHECK(zigzag_of(g, 2, 2) == vec_perm(RVector::unit(3, 2, 2), 2));
    CHECK_THROWS_AS(zigzag_of(spec, 2, 0), InvalidArgument);
}

TEST_CASE("every zigzag permutation is a bijection and r=2 ones are involutions") {
    for (int m = 1; m <= 3; ++m) {
        const CodeSpec spec = build_optimal_r2(m);
        for (int j = 0; j < spec.k(); ++j)
            for (int l = 0; l < spec.r; ++l) {
                const Permutation f = zigzag_of(spec, l, j);
                CHECK(f.compose(f) == Permutation::identity(spec.p));
            }
    }
}

TEST_CASE("encode is linear") {
    for (const CodeSpec& spec :
         {build_optimal_r2(2), build_optimal_general(2, 3, 7, 3), build_weight3(3, 9)}) {
        const Field& f = spec.field;
        const auto a = random_info(spec, 11), b = random_info(spec, 12);
        auto sum = a;
        for (int x = 0; x < spec.p; ++x)
            for (int j = 0; j < spec.k(); ++j) sum[x][j] = f.add(a[x][j], b[x][j]);
        const auto pa = encode(spec, a), pb = encode(spec, b), ps = encode(spec, sum);
        for (int x = 0; x < spec.p; ++x)
            for (int l = 0; l < spec.r; ++l) CHECK(ps[x][l] == f.add(pa[x][l], pb[x][l]));
    }
}

TEST_CASE("encode rejects dimension mismatches") {
    const CodeSpec spec = build_optimal_r2(2);
    CHECK_THROWS_AS(encode(spec, std::vector<std::vector<int>>(3, std::vector<int>(3, 0))),
                    InvalidArgument);
    CHECK_THROWS_AS(encode(spec, std::vector<std::vector<int>>(4, std::vector<int>(2, 0))),
                    InvalidArgument);
}

TEST_CASE("validate enforces the spec invariants") {
    CodeSpec spec = build_optimal_r2(2);
    CHECK_NOTHROW(validate(spec));
    SUBCASE("zero coefficient rejected") {
        spec.columns[1].coeff[1][0] = 0;
        CHECK_THROWS_AS(validate(spec), InvalidArgument);
    }
    SUBCASE("row-parity coefficients must be 1") {
        spec.columns[1].coeff[0][0] = 2;
        CHECK_THROWS_AS(validate(spec), InvalidArgument);
    }
    SUBCASE("rebuild sets must partition the rows") {
        spec.columns[1].rebuild_rows[0] = spec.columns[1].rebuild_rows[1];
        CHECK_THROWS_AS(validate(spec), InvalidArgument);
    }
}

TEST_CASE("rebuild sets partition the rows for every factory") {
    for (const CodeSpec& spec :
         {build_optimal_r2(3), build_duplication(build_optimal_r2(2), 2, 3),
          build_weight3(3, 9), build_optimal_general(2, 3, 7, 3)}) {
        for (const ColumnDef& col : spec.columns) {
            std::vector<char> seen(spec.p, 0);
            for (const auto& rows : col.rebuild_rows) {
                CHECK(static_cast<int>(rows.size()) * spec.r == spec.p);
                for (int x : rows) {
                    CHECK(!seen[x]);
                    seen[x] = 1;
                }
            }
        }
    }
}
