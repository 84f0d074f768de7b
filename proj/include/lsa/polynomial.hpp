#pragma once

#include <algorithm>
#include <map>

#include "lsa/matrix.hpp"

namespace lsa {

// Univariate polynomial over Scalar, coefficients stored low degree first.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Scalar& s) { return Poly(Vec{s}); }
    static Poly x() { return Poly(Vec{Scalar(), Scalar::integer(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Vec& coeffs() const { return c_; }
    Scalar coeff(size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
    Scalar leading() const { return c_.empty() ? Scalar() : c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Vec r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Vec r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Vec r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Scalar& s, const Poly& a) {
        Vec r = a.c_;
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Scalar eval(const Scalar& x) const {
        Scalar r;
        for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    Matrix eval(const Matrix& A) const {
        Matrix r(A.rows(), A.cols());
        for (size_t k = c_.size(); k-- > 0;) {
            r = r * A;
            for (size_t d = 0; d < A.rows(); ++d) r(d, d) += c_[k];
        }
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        Vec r(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k)
            r[k - 1] = Scalar::integer(static_cast<long>(k)) * c_[k];
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return (Scalar::integer(1) / leading()) * *this;
    }

    // Quotient/remainder over the coefficient field.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw Error("polynomial division by zero");
        if (c_.size() < d.c_.size()) return {Poly(), *this};
        Vec rem = c_;
        Vec quo(c_.size() - d.c_.size() + 1);
        for (size_t shift = quo.size(); shift-- > 0;) {
            Scalar f = rem[shift + d.c_.size() - 1] / d.c_.back();
            quo[shift] = f;
            if (f.is_zero()) continue;
            for (size_t k = 0; k < d.c_.size(); ++k) rem[shift + k] -= f * d.c_[k];
        }
        rem.resize(d.c_.size() - 1);
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    // Synthetic division by (t - r); remainder is discarded (use only on roots).
    Poly deflate(const Scalar& r) const {
        if (c_.size() < 2) return Poly();
        Vec q(c_.size() - 1);
        Scalar carry = c_.back();
        for (size_t k = c_.size() - 1; k-- > 0;) {
            q[k] = carry;
            carry = c_[k] + carry * r;
        }
        return Poly(std::move(q));
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            std::string coef = c_[k].to_string();
            std::string term;
            if (k == 0) {
                term = coef;
            } else {
                std::string pow = (k == 1) ? var : var + "^" + std::to_string(k);
                if (coef == "1") term = pow;
                else if (coef == "-1") term = "-" + pow;
                else term = coef + "*" + pow;
            }
            if (out.empty()) out = term;
            else if (!term.empty() && term[0] == '-') out += term;
            else out += "+" + term;
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    Vec c_;
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Poly squarefree_part(const Poly& f) {
    if (f.degree() <= 1) return f.monic();
    Poly g = poly_gcd(f, f.derivative());
    return f.divmod(g).first.monic();
}

// char poly det(tI - A) by the Faddeev-LeVerrier recurrence; exact over Q(i).
inline Poly charpoly(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("charpoly of non-square matrix");
    size_t n = A.rows();
    Vec coeffs(n + 1);
    coeffs[n] = Scalar::integer(1);
    Matrix M = Matrix::identity(n);
    Scalar c = -(A.trace());
    coeffs[n - 1] = c;
    for (size_t k = 2; k <= n; ++k) {
        M = A * M;
        for (size_t d = 0; d < n; ++d) M(d, d) += c;
        c = -((A * M).trace()) / Scalar::integer(static_cast<long>(k));
        coeffs[n - k] = c;
    }
    return Poly(std::move(coeffs));
}

// ---- Gaussian integers, used to extract Q(i)-rational polynomial roots ----

namespace detail {

struct GInt {
    BigInt re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }
    BigInt norm() const { return re * re + im * im; }
    GInt conj() const { return {re, -im}; }
    friend GInt operator*(const GInt& a, const GInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GInt operator-(const GInt& a, const GInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend bool operator==(const GInt& a, const GInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator<(const GInt& a, const GInt& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

inline BigInt round_div(const BigInt& a, const BigInt& b) {
    // nearest integer to a/b so Euclidean remainders strictly shrink
    BigInt q = a / b;
    BigInt r = a - q * b;
    BigInt ar = r < 0 ? BigInt(-r) : r;
    BigInt ab = b < 0 ? BigInt(-b) : b;
    if (2 * ar > ab) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

inline std::pair<GInt, GInt> gdivmod(const GInt& a, const GInt& b) {
    BigInt n = b.norm();
    if (n == 0) throw Error("gaussian division by zero");
    GInt num = a * b.conj();
    GInt q{round_div(num.re, n), round_div(num.im, n)};
    GInt r = a - q * b;
    return {q, r};
}

inline bool gdivides(const GInt& d, const GInt& a) {
    return gdivmod(a, d).second.is_zero();
}

inline GInt ggcd(GInt a, GInt b) {
    while (!b.is_zero()) {
        GInt r = gdivmod(a, b).second;
        a = b;
        b = r;
    }
    return a;
}

// canonical associate: re > 0 and im >= 0 (zero stays zero)
inline GInt canonical(GInt z) {
    if (z.is_zero()) return z;
    for (int k = 0; k < 4; ++k) {
        if (z.re > 0 && z.im >= 0) return z;
        z = GInt{-z.im, z.re}; // multiply by i
    }
    return z;
}

inline std::map<BigInt, int> factor_norm(BigInt n) {
    std::map<BigInt, int> f;
    if (n < 0) n = -n;
    for (BigInt p = 2; p * p <= n; p = (p == 2 ? BigInt(3) : p + 2)) {
        if (p > 1000000) {
            if (n > BigInt(1000000) * BigInt(1000000))
                throw NumericFallback("integer factoring beyond trial-division bound",
                                      n.str());
            break;
        }
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

// modular exponentiation for locating sqrt(-1) mod p (p = 1 mod 4)
inline BigInt pow_mod(BigInt b, BigInt e, const BigInt& m) {
    BigInt r = 1;
    b %= m;
    while (e > 0) {
        if (e % 2 == 1) r = r * b % m;
        b = b * b % m;
        e /= 2;
    }
    return r;
}

inline GInt gaussian_prime_above(const BigInt& p) {
    if (p == 2) return {1, 1};
    if (p % 4 == 3) return {p, 0};
    // p = 1 mod 4: find s with s^2 = -1, then gcd(p, s+i) has norm p
    for (BigInt a = 2;; ++a) {
        BigInt s = pow_mod(a, (p - 1) / 4, p);
        if (s * s % p == p - 1) {
            GInt g = ggcd(GInt{p, 0}, GInt{s, 1});
            if (g.norm() == p) return canonical(g);
        }
    }
}

inline std::vector<std::pair<GInt, int>> factor_gaussian(GInt z) {
    if (z.is_zero()) throw Error("factoring zero");
    std::vector<std::pair<GInt, int>> out;
    auto nf = factor_norm(z.norm());
    for (const auto& [p, e] : nf) {
        (void)e;
        GInt pi = gaussian_prime_above(p);
        for (GInt cand : {pi, canonical(pi.conj())}) {
            int cnt = 0;
            while (gdivides(cand, z)) {
                z = gdivmod(z, cand).first;
                ++cnt;
            }
            if (cnt > 0) out.emplace_back(cand, cnt);
            if (p == 2 || p % 4 == 3) break; // single prime above p
        }
    }
    if (!z.is_unit()) throw Error("gaussian factorization incomplete");
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

inline std::vector<GInt> gaussian_divisors(const GInt& z) {
    auto f = factor_gaussian(z);
    std::vector<GInt> divs{GInt{1, 0}};
    for (const auto& [p, e] : f) {
        std::vector<GInt> next;
        GInt pk{1, 0};
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : divs) next.push_back(canonical(d * pk));
            pk = pk * p;
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

inline Scalar gint_to_scalar(const GInt& z) {
    return Scalar::gaussian(Rational(z.re), Rational(z.im));
}

} // namespace detail

struct RootSearchResult {
    std::vector<std::pair<Scalar, int>> roots; // sorted by (re, im), with multiplicity
    Poly remainder;                            // monic, root-free over Q(i)
};

// All roots of f lying in Q(i), by divisor search over Z[i] after clearing
// denominators; anything left unfactored is returned as the remainder.
inline RootSearchResult roots_in_qi(Poly f) {
    if (f.is_zero()) throw Error("root search on the zero polynomial");
    std::map<Scalar, int> mult;
    // strip roots at zero
    while (f.degree() >= 1 && f.coeff(0).is_zero()) {
        ++mult[Scalar()];
        f = f.deflate(Scalar());
    }
    while (f.degree() >= 1) {
        // clear denominators: collect lcm of all coefficient denominators
        BigInt den = 1;
        for (const auto& c : f.coeffs()) {
            den = boost::multiprecision::lcm(den, denominator(c.re()));
            den = boost::multiprecision::lcm(den, denominator(c.im()));
        }
        std::vector<detail::GInt> zc;
        for (const auto& c : f.coeffs())
            zc.push_back(detail::GInt{numerator(Rational(c.re() * den)),
                                      numerator(Rational(c.im() * den))});
        detail::GInt lead = zc.back(), konst = zc.front();
        auto ps = detail::gaussian_divisors(konst);
        auto qs = detail::gaussian_divisors(lead);
        const detail::GInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        bool found = false;
        Scalar root;
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (const auto& u : units) {
                    Scalar cand = detail::gint_to_scalar(u * p) / detail::gint_to_scalar(q);
                    if (f.eval(cand).is_zero()) {
                        root = cand;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        ++mult[root];
        f = f.deflate(root);
    }
    RootSearchResult res;
    for (const auto& [r, m] : mult) res.roots.emplace_back(r, m);
    res.remainder = f.degree() >= 1 ? f.monic() : Poly::constant(Scalar::integer(1));
    return res;
}

} // namespace lsa
