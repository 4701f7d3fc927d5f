#include "zigzag/finite_field.hpp"

#include <algorithm>

namespace zigzag {
namespace {

// Polynomials over GF(p): ascending coefficient vectors, no implicit
// normalization of the leading term.

std::vector<int> unpack(int value, int p, int len) {
    std::vector<int> c(len, 0);
    for (int i = 0; i < len && value > 0; ++i) {
        c[i] = value % p;
        value /= p;
    }
    return c;
}

int degree(const std::vector<int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// a mod b, b monic of positive degree
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = degree(b);
    for (int i = degree(a); i >= db; --i) {
        int f = a[i];
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int& c = a[i - db + j];
            c = (c - f * b[j]) % p;
            if (c < 0) c += p;
        }
    }
    a.resize(db);
    return a;
}

bool is_irreducible(const std::vector<int>& mod, int p, int d) {
    if (degree(mod) != d) return false;
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (int dd = 1; dd <= d / 2; ++dd) {
        int count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            std::vector<int> div = unpack(low, p, dd + 1);
            div[dd] = 1;
            if (degree(poly_mod(mod, div, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> fs;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            fs.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

int Field::mul_raw(int x, int y) const {
    std::vector<int> a = unpack(x, p_, d_);
    std::vector<int> b = unpack(y, p_, d_);
    std::vector<int> c(2 * d_ - 1, 0);
    for (int i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
    }
    c = poly_mod(std::move(c), modulus_, p_);
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p_ + c[i];
    return v;
}

Field Field::make(int p, int d, std::optional<int> alpha_hint,
                  std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic must be prime");
    if (d < 1) throw InvalidArgument("extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < d; ++i) {
        q *= p;
        if (q > 65536) throw InvalidArgument("field order exceeds 65536");
    }

    Field f;
    f.p_ = p;
    f.d_ = d;
    f.q_ = static_cast<int>(q);

    if (modulus) {
        f.modulus_ = *modulus;
        if (static_cast<int>(f.modulus_.size()) != d + 1 || f.modulus_[d] != 1)
            throw InvalidArgument("modulus must be monic of degree d");
        for (int c : f.modulus_)
            if (c < 0 || c >= p) throw InvalidArgument("modulus coefficient out of range");
        if (!is_irreducible(f.modulus_, p, d))
            throw InvalidArgument("modulus polynomial is reducible");
    } else {
        for (int low = 0;; ++low) {
            if (low >= f.q_) throw InvalidArgument("no irreducible modulus found");
            std::vector<int> cand = unpack(low, p, d + 1);
            cand[d] = 1;
            if (is_irreducible(cand, p, d)) {
                f.modulus_ = std::move(cand);
                break;
            }
        }
    }

    const int order = f.q_ - 1;
    const std::vector<int> factors = prime_factors(order);
    auto pow_raw = [&f](int x, int e) {
        int acc = 1;
        while (e > 0) {
            if (e & 1) acc = f.mul_raw(acc, x);
            x = f.mul_raw(x, x);
            e >>= 1;
        }
        return acc;
    };
    auto primitive = [&](int x) {
        if (order == 1) return x == 1;
        for (int fac : factors)
            if (pow_raw(x, order / fac) == 1) return false;
        return true;
    };

    if (alpha_hint) {
        if (*alpha_hint < 1 || *alpha_hint >= f.q_)
            throw InvalidArgument("alpha hint out of range");
        if (!primitive(*alpha_hint))
            throw NotPrimitive("alpha hint does not generate the multiplicative group");
        f.alpha_ = *alpha_hint;
    } else {
        f.alpha_ = 0;
        for (int x = 1; x < f.q_; ++x) {
            if (primitive(x)) {
                f.alpha_ = x;
                break;
            }
        }
    }

    f.exp_.assign(f.q_, 1);
    f.log_.assign(f.q_, -1);
    int acc = 1;
    for (int i = 0; i < order; ++i) {
        f.exp_[i] = acc;
        f.log_[acc] = i;
        acc = f.mul_raw(acc, f.alpha_);
    }
    f.exp_[order] = 1;  // wraparound slot, keeps the table length q
    return f;
}

void Field::check_element(int x) const {
    if (x < 0 || x >= q_) throw InvalidArgument("field element out of range");
}

int Field::add(int x, int y) const {
    check_element(x);
    check_element(y);
    if (p_ == 2) return x ^ y;
    int v = 0, mult = 1;
    for (int i = 0; i < d_; ++i) {
        v += ((x % p_ + y % p_) % p_) * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return v;
}

int Field::neg(int x) const {
    check_element(x);
    if (p_ == 2) return x;
    int v = 0, mult = 1;
    for (int i = 0; i < d_; ++i) {
        v += ((p_ - x % p_) % p_) * mult;
        x /= p_;
        mult *= p_;
    }
    return v;
}

int Field::sub(int x, int y) const { return add(x, neg(y)); }

int Field::mul(int x, int y) const {
    check_element(x);
    check_element(y);
    if (x == 0 || y == 0) return 0;
    return exp_[(log_[x] + log_[y]) % (q_ - 1)];
}

int Field::inv(int x) const {
    check_element(x);
    if (x == 0) throw DivisionByZero();
    return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

int Field::pow(int x, long long e) const {
    check_element(x);
    if (e < 0) throw InvalidArgument("negative exponent");
    if (x == 0) return e == 0 ? 1 : 0;
    return exp_[static_cast<int>((log_[x] * (e % (q_ - 1))) % (q_ - 1))];
}

int Field::from_int(long long n) const {
    n %= p_;
    if (n < 0) n += p_;
    return static_cast<int>(n);
}

} // namespace zigzag
