#include "zigzag/rmod.hpp"

#include <algorithm>
#include <numeric>

#include "zigzag/finite_field.hpp"

namespace zigzag {

RVector::RVector(int r, std::vector<int> digits)
    : r_(r), m_(static_cast<int>(digits.size())), digits_(std::move(digits)) {
    if (r_ < 2) throw InvalidArgument("modulus r must be at least 2");
    for (int& d : digits_) {
        d %= r_;
        if (d < 0) d += r_;
    }
}

RVector RVector::from_integer(int r, int m, long long x) {
    RVector v(r, m);
    for (int i = m - 1; i >= 0; --i) {
        v.digits_[i] = static_cast<int>(x % r);
        x /= r;
    }
    return v;
}

RVector RVector::unit(int r, int m, int i) {
    RVector v(r, m);
    if (i < 0 || i > m) throw InvalidArgument("unit vector index out of range");
    if (i > 0) v.digits_[i - 1] = 1;
    return v;
}

long long RVector::to_integer() const {
    long long x = 0;
    for (int d : digits_) x = x * r_ + d;
    return x;
}

bool RVector::is_zero() const {
    return std::all_of(digits_.begin(), digits_.end(), [](int d) { return d == 0; });
}

void RVector::check_compatible(const RVector& o) const {
    if (r_ != o.r_ || m_ != o.m_) throw InvalidArgument("mixed r or m in vector operation");
}

RVector RVector::operator+(const RVector& o) const {
    check_compatible(o);
    RVector out(r_, m_);
    for (int i = 0; i < m_; ++i) out.digits_[i] = (digits_[i] + o.digits_[i]) % r_;
    return out;
}

RVector RVector::operator-(const RVector& o) const {
    check_compatible(o);
    RVector out(r_, m_);
    for (int i = 0; i < m_; ++i) out.digits_[i] = (digits_[i] - o.digits_[i] + r_) % r_;
    return out;
}

RVector RVector::scaled(int c) const {
    c %= r_;
    if (c < 0) c += r_;
    RVector out(r_, m_);
    for (int i = 0; i < m_; ++i) out.digits_[i] = (digits_[i] * c) % r_;
    return out;
}

int RVector::dot(const RVector& o) const {
    check_compatible(o);
    int acc = 0;
    for (int i = 0; i < m_; ++i) acc = (acc + digits_[i] * o.digits_[i]) % r_;
    return acc;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
            throw InvalidArgument("images do not form a bijection");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int x = 0; x < size(); ++x) im[images_[x]] = x;
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw InvalidArgument("permutation size mismatch");
    std::vector<int> im(images_.size());
    for (int x = 0; x < size(); ++x) im[x] = images_[other.images_[x]];
    return Permutation(std::move(im));
}

std::vector<int> Permutation::apply(const std::vector<int>& set) const {
    std::vector<int> out;
    out.reserve(set.size());
    for (int x : set) out.push_back(images_[x]);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation vec_perm(const RVector& v, int l) {
    long long p = 1;
    for (int i = 0; i < v.m(); ++i) p *= v.r();
    const RVector step = v.scaled(l);
    std::vector<int> im(static_cast<size_t>(p));
    for (long long x = 0; x < p; ++x)
        im[x] = static_cast<int>((RVector::from_integer(v.r(), v.m(), x) + step).to_integer());
    return Permutation(std::move(im));
}

std::vector<int> hyperplane_rows(const RVector& w, int c) {
    if (w.is_zero()) throw InvalidArgument("degenerate hyperplane: zero normal vector");
    c %= w.r();
    if (c < 0) c += w.r();
    long long p = 1;
    for (int i = 0; i < w.m(); ++i) p *= w.r();
    std::vector<int> rows;
    for (long long x = 0; x < p; ++x)
        if (RVector::from_integer(w.r(), w.m(), x).dot(w) == c) rows.push_back(static_cast<int>(x));
    return rows;
}

namespace {

// modular inverse for prime r
int inv_mod(int a, int r) {
    a %= r;
    if (a < 0) a += r;
    for (int x = 1; x < r; ++x)
        if (a * x % r == 1) return x;
    throw InvalidArgument("no modular inverse; r not prime?");
}

} // namespace

Subspace Subspace::span(int r, int m, const std::vector<RVector>& vectors) {
    if (!is_prime(r)) throw InvalidArgument("subspace machinery requires prime r");
    Subspace s(r, m);
    std::vector<std::vector<int>> rows;
    for (const RVector& v : vectors) {
        if (v.r() != r || v.m() != m) throw InvalidArgument("mixed r or m in span");
        rows.push_back(v.digits());
    }
    // Gaussian elimination to RREF over F_r
    std::vector<std::vector<int>> rref;
    for (int col = 0; col < m && !rows.empty(); ++col) {
        int pivot = -1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i][col] != 0) { pivot = static_cast<int>(i); break; }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows.back());
        std::vector<int> prow = rows.back();
        rows.pop_back();
        int iv = inv_mod(prow[col], r);
        for (int& x : prow) x = x * iv % r;
        for (auto& row : rows) {
            int f = row[col];
            if (f == 0) continue;
            for (int j = 0; j < m; ++j) row[j] = ((row[j] - f * prow[j]) % r + r) % r;
        }
        for (auto& row : rref) {
            int f = row[col];
            if (f == 0) continue;
            for (int j = 0; j < m; ++j) row[j] = ((row[j] - f * prow[j]) % r + r) % r;
        }
        rref.push_back(std::move(prow));
    }
    // drop all-zero leftovers and sort by pivot column
    std::sort(rref.begin(), rref.end(), [](const auto& a, const auto& b) {
        auto piv = [](const std::vector<int>& v) {
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) return i;
            return v.size();
        };
        return piv(a) < piv(b);
    });
    for (auto& row : rref) s.basis_.emplace_back(r, row);
    return s;
}

bool Subspace::contains(const RVector& v) const {
    if (v.r() != r_ || v.m() != m_) throw InvalidArgument("mixed r or m in membership test");
    std::vector<int> w = v.digits();
    for (const RVector& b : basis_) {
        int piv = 0;
        while (piv < m_ && b.digit(piv) == 0) ++piv;
        if (piv == m_) continue;
        int f = w[piv];  // basis rows have pivot 1
        if (f == 0) continue;
        for (int j = 0; j < m_; ++j) w[j] = ((w[j] - f * b.digit(j)) % r_ + r_) % r_;
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Subspace Subspace::orthogonal_complement() const {
    // kernel of the RREF basis matrix
    int n = dimension();
    std::vector<std::vector<int>> a(n, std::vector<int>(m_));
    for (int i = 0; i < n; ++i) a[i] = basis_[i].digits();
    // a is already in RREF with unit pivots
    std::vector<int> pivot_col(n, -1);
    std::vector<char> is_pivot(m_, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m_; ++j)
            if (a[i][j] != 0) { pivot_col[i] = j; is_pivot[j] = 1; break; }
    }
    std::vector<RVector> kernel;
    for (int freecol = 0; freecol < m_; ++freecol) {
        if (is_pivot[freecol]) continue;
        std::vector<int> v(m_, 0);
        v[freecol] = 1;
        for (int i = 0; i < n; ++i)
            v[pivot_col[i]] = ((-a[i][freecol]) % r_ + r_) % r_;
        kernel.emplace_back(r_, v);
    }
    return span(r_, m_, kernel);
}

std::vector<RVector> Subspace::vectors() const {
    std::vector<RVector> out;
    int dim = dimension();
    long long count = 1;
    for (int i = 0; i < dim; ++i) count *= r_;
    for (long long idx = 0; idx < count; ++idx) {
        RVector v(r_, m_);
        long long rem = idx;
        for (int i = 0; i < dim; ++i) {
            v = v + basis_[i].scaled(static_cast<int>(rem % r_));
            rem /= r_;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> Subspace::coset(const RVector& offset) const {
    if (offset.r() != r_ || offset.m() != m_) throw InvalidArgument("mixed r or m in coset");
    std::vector<int> out;
    for (const RVector& v : vectors()) out.push_back(static_cast<int>((v + offset).to_integer()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace zigzag
