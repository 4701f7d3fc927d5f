#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zigzag/errors.hpp"

namespace zigzag {

/// Arithmetic in GF(p^d), q = p^d <= 65536. Elements are integers in
/// [0, q-1]: the polynomial coefficient vector packed base p, constant
/// term least significant. Immutable after construction; all operations
/// are pure and safe for concurrent use.
class Field {
public:
    /// Builds GF(p^d). The modulus, when not given, is the lowest-valued
    /// monic irreducible polynomial of degree d (by packed coefficient
    /// value); the primitive element is alpha_hint when given (rejected
    /// with NotPrimitive if it does not generate the multiplicative
    /// group), otherwise the smallest generator by value.
    static Field make(int p, int d, std::optional<int> alpha_hint = std::nullopt,
                      std::optional<std::vector<int>> modulus = std::nullopt);

    int p() const { return p_; }
    int d() const { return d_; }
    int q() const { return q_; }
    int alpha() const { return alpha_; }
    /// Monic modulus, ascending coefficients, size d+1.
    const std::vector<int>& modulus() const { return modulus_; }
    const std::vector<int>& log_table() const { return log_; }
    const std::vector<int>& exp_table() const { return exp_; }

    int add(int x, int y) const;
    int sub(int x, int y) const;
    int neg(int x) const;
    int mul(int x, int y) const;
    int inv(int x) const;          // throws DivisionByZero on 0
    int pow(int x, long long e) const;

    /// Embedding of a small integer via repeated addition of 1.
    int from_int(long long n) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && d_ == o.d_ && q_ == o.q_ && alpha_ == o.alpha_ && modulus_ == o.modulus_;
    }

    Field() = default;

private:
    int mul_raw(int x, int y) const;  // table-free polynomial multiplication
    void check_element(int x) const;

    int p_ = 0, d_ = 0, q_ = 0, alpha_ = 0;
    std::vector<int> modulus_;
    std::vector<int> log_;  // log_[0] = -1
    std::vector<int> exp_;  // exp_[i] = alpha^i, length q (index q-1 wraps to 1)
};

bool is_prime(int n);

} // namespace zigzag
