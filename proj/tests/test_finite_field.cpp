#include <doctest.h>

#include "zigzag/finite_field.hpp"

using namespace zigzag;

TEST_CASE("prime field basics") {
    const Field f = Field::make(3, 1);
    CHECK(f.q() == 3);
    CHECK(f.alpha() == 2);  // the only generator of a 2-element group
    CHECK(f.mul(2, 2) == 1);
    CHECK(f.mul(1, 2) == 2);
    CHECK(f.add(2, 2) == 1);
    CHECK(f.inv(2) == 2);
}

TEST_CASE("alpha hint accepted when primitive") {
    const Field f = Field::make(7, 1, 3);
    CHECK(f.alpha() == 3);
    CHECK(f.pow(3, 3) == 6);  // 27 mod 7
}

TEST_CASE("alpha hint rejected when not primitive") {
    // 2 has order 3 in GF(7)*
    CHECK_THROWS_AS(Field::make(7, 1, 2), NotPrimitive);
    CHECK_THROWS_AS(Field::make(4, 1), InvalidArgument);  // p not prime
}

TEST_CASE("GF(9) uses modulus x^2 + 1 and polynomial arithmetic") {
    const Field f = Field::make(3, 2);
    CHECK(f.q() == 9);
    CHECK(f.modulus() == std::vector<int>{1, 0, 1});
    // element 3 encodes x; x*x = -1 = 2
    CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("division by zero is an error") {
    const Field f = Field::make(5, 1);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    CHECK(f.pow(0, 0) == 1);
    for (int x = 1; x < 5; ++x) CHECK(f.pow(x, 0) == 1);
}

TEST_CASE("field axioms by exhaustive enumeration for small q") {
    for (auto [p, d] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 4}, {13, 1}}) {
        const Field f = Field::make(p, d);
        const int q = f.q();
        REQUIRE(q <= 16);
        for (int x = 0; x < q; ++x) {
            for (int y = 0; y < q; ++y) {
                CHECK(f.add(x, y) == f.add(y, x));
                CHECK(f.mul(x, y) == f.mul(y, x));
                if (y != 0) CHECK(f.mul(f.mul(x, y), f.inv(y)) == x);
                for (int z = 0; z < q; ++z) {
                    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                }
            }
        }
    }
}

TEST_CASE("exp/log roundtrip up to q = 256") {
    for (auto [p, d] : {std::pair{3, 1}, {7, 1}, {3, 2}, {2, 4}, {2, 8}, {251, 1}}) {
        const Field f = Field::make(p, d);
        const int q = f.q();
        const auto& log = f.log_table();
        const auto& exp = f.exp_table();
        for (int x = 1; x < q; ++x) CHECK(exp[log[x]] == x);
        for (int x = 1; x < q; ++x)
            for (int y = 1; y < q; ++y)
                CHECK(f.mul(x, y) == exp[(log[x] + log[y]) % (q - 1)]);
    }
}

TEST_CASE("multiplicative group of GF(3) behaves as additive GF(2) exponents") {
    const Field f = Field::make(3, 1);
    CHECK(f.mul(2, 2) == 1);  // 2^1 * 2^1 = 2^(1+1 mod 2)
    CHECK(f.mul(1, 2) == 2);  // 2^0 * 2^1 = 2^1
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK(is_prime(251));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
}
