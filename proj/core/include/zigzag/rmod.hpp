#pragma once

#include <vector>

#include "zigzag/errors.hpp"

namespace zigzag {

/// Vector in Z_r^m. digits[0] is the most significant r-ary digit of the
/// integer form, so integer x corresponds to (x / r^{m-1}, ..., x mod r).
class RVector {
public:
    RVector(int r, int m) : r_(r), m_(m), digits_(m, 0) {}
    RVector(int r, std::vector<int> digits);
    static RVector from_integer(int r, int m, long long x);
    static RVector unit(int r, int m, int i);  // e_i, 1-based; e_0 is the zero vector

    int r() const { return r_; }
    int m() const { return m_; }
    const std::vector<int>& digits() const { return digits_; }
    int digit(int i) const { return digits_[i]; }

    long long to_integer() const;
    bool is_zero() const;

    RVector operator+(const RVector& o) const;
    RVector operator-(const RVector& o) const;
    RVector scaled(int c) const;

    /// Dot product mod r.
    int dot(const RVector& o) const;

    bool operator==(const RVector& o) const {
        return r_ == o.r_ && m_ == o.m_ && digits_ == o.digits_;
    }
    bool operator!=(const RVector& o) const { return !(*this == o); }

private:
    void check_compatible(const RVector& o) const;

    int r_, m_;
    std::vector<int> digits_;
};

/// Bijection on [0, n-1].
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// (this ∘ other)(x) = this(other(x))
    Permutation compose(const Permutation& other) const;
    std::vector<int> apply(const std::vector<int>& set) const;  // image, sorted

    bool operator==(const Permutation& o) const { return images_ == o.images_; }

private:
    std::vector<int> images_;
};

/// x -> x + l*v over Z_r^m, in integer form.
Permutation vec_perm(const RVector& v, int l);

/// Sorted {x in [0, r^m-1] : x . w == c mod r}. w must be nonzero.
std::vector<int> hyperplane_rows(const RVector& w, int c);

/// Subspace of Z_r^m (r prime), stored as a reduced-row-echelon basis.
class Subspace {
public:
    /// Span of the given vectors (may be empty; all must share r, m).
    static Subspace span(int r, int m, const std::vector<RVector>& vectors);

    int r() const { return r_; }
    int m() const { return m_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<RVector>& basis() const { return basis_; }

    bool contains(const RVector& v) const;
    Subspace orthogonal_complement() const;

    /// Sorted integers {x + offset : x in subspace}.
    std::vector<int> coset(const RVector& offset) const;
    std::vector<int> elements() const { return coset(RVector(r_, m_)); }

    /// All vectors of the subspace, in enumeration order of the basis span.
    std::vector<RVector> vectors() const;

private:
    Subspace(int r, int m) : r_(r), m_(m) {}

    int r_, m_;
    std::vector<RVector> basis_;
};

} // namespace zigzag
