#pragma once

// sparse multivariate polynomials over Scalar, keyed by exponent vectors,
// plus just enough polynomial-matrix algebra for symbolic traces and
// determinants of small matrices

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lsa/errors.hpp"
#include "lsa/scalar.hpp"

namespace lsa {

class MPoly {
  public:
    using Expo = std::vector<unsigned>;

    explicit MPoly(size_t nvars = 0) : nvars_(nvars) {}

    static MPoly constant(size_t nvars, const Scalar& c) {
        MPoly p(nvars);
        p.add_term(Expo(nvars, 0), c);
        return p;
    }
    static MPoly var(size_t nvars, size_t i, unsigned power = 1) {
        if (i >= nvars) throw DimensionMismatch("variable index out of range");
        MPoly p(nvars);
        Expo e(nvars, 0);
        e[i] = power;
        p.add_term(e, Scalar::integer(1));
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (unsigned e : terms_.begin()->first)
            if (e) return false;
        return true;
    }
    Scalar constant_value() const {
        if (terms_.empty()) return Scalar();
        if (!is_constant()) throw Error("polynomial is not constant");
        return terms_.begin()->second;
    }
    const std::map<Expo, Scalar>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    MPoly& add_term(const Expo& e, const Scalar& c) {
        if (e.size() != nvars_) throw DimensionMismatch("exponent vector length");
        if (c.is_zero()) return *this;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, Scalar() - c);
        return r;
    }
    MPoly operator-() const { return MPoly(nvars_) - *this; }
    friend MPoly operator*(const Scalar& s, const MPoly& a) {
        MPoly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_) throw DimensionMismatch("mixed variable counts");
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(a.nvars_);
                for (size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MPoly pow(unsigned k) const {
        MPoly r = constant(nvars_, Scalar::integer(1));
        MPoly base = *this;
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    Scalar eval(const std::vector<Scalar>& point) const {
        if (point.size() != nvars_) throw DimensionMismatch("evaluation point length");
        Scalar total;
        for (const auto& [e, c] : terms_) {
            Scalar t = c;
            for (size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
            total = total + t;
        }
        return total;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [e, c] : terms_) m = std::max(m, c.abs());
        return m;
    }

    unsigned degree_in(size_t var) const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    bool uses_var(size_t var) const {
        for (const auto& [e, c] : terms_)
            if (e[var]) return true;
        return false;
    }

    // f = sum_k result[k] * var^k, with the var exponent stripped from each part
    std::vector<MPoly> collect(size_t var) const {
        std::vector<MPoly> parts(degree_in(var) + 1, MPoly(nvars_));
        for (const auto& [e, c] : terms_) {
            Expo f = e;
            unsigned k = f[var];
            f[var] = 0;
            parts[k].add_term(f, c);
        }
        return parts;
    }

    MPoly subst(size_t var, const MPoly& g) const {
        auto parts = collect(var);
        MPoly r(nvars_);
        MPoly gp = constant(nvars_, Scalar::integer(1));
        for (size_t k = 0; k < parts.size(); ++k) {
            r = r + parts[k] * gp;
            if (k + 1 < parts.size()) gp = gp * g;
        }
        return r;
    }

    // componentwise minimum of all exponent vectors: the monomial content
    Expo content_monomial() const {
        if (terms_.empty()) return Expo(nvars_, 0);
        Expo m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
        return m;
    }
    MPoly divide_by_monomial(const Expo& m) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Expo f(nvars_);
            for (size_t i = 0; i < nvars_; ++i) {
                if (e[i] < m[i]) throw Error("monomial does not divide polynomial");
                f[i] = e[i] - m[i];
            }
            r.add_term(f, c);
        }
        return r;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string term;
            bool unit_coeff = (c == Scalar::integer(1));
            bool has_vars = false;
            for (size_t i = 0; i < nvars_; ++i) {
                if (!e[i]) continue;
                has_vars = true;
                if (!term.empty()) term += "*";
                term += i < names.size() ? names[i] : "x" + std::to_string(i);
                if (e[i] > 1) term += "^" + std::to_string(e[i]);
            }
            std::string coeff = c.to_string();
            std::string piece;
            if (!has_vars) {
                piece = coeff;
            } else if (unit_coeff) {
                piece = term;
            } else if (c == Scalar::integer(-1)) {
                piece = "-" + term;
            } else {
                // wrap composite coefficients like 1+2i, a leading minus is fine
                bool needs_parens = false;
                for (size_t k = 1; k < coeff.size(); ++k)
                    if (coeff[k] == '+' || coeff[k] == '-') needs_parens = true;
                piece = (needs_parens ? "(" + coeff + ")" : coeff) + "*" + term;
            }
            if (out.empty()) {
                out = piece;
            } else if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        return out;
    }

  private:
    size_t nvars_;
    std::map<Expo, Scalar> terms_;
};

// dense matrices with polynomial entries
using MPolyMat = std::vector<std::vector<MPoly>>;

inline MPolyMat mpoly_mat_mul(const MPolyMat& a, const MPolyMat& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    MPolyMat r(n, std::vector<MPoly>(m, MPoly(a[0][0].nvars())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    return r;
}

inline MPoly mpoly_mat_trace(const MPolyMat& a) {
    MPoly t(a[0][0].nvars());
    for (size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
    return t;
}

// Tr(A B) without forming the product
inline MPoly mpoly_trace_of_product(const MPolyMat& a, const MPolyMat& b) {
    MPoly t(a[0][0].nvars());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) t = t + a[i][j] * b[j][i];
    return t;
}

// Laplace expansion along rows, memoized over the set of unused columns.
// Exponential in the dimension, fine for the small matrices this library meets.
inline MPoly mpoly_det(const MPolyMat& a) {
    size_t n = a.size();
    if (n == 0) return MPoly(0);
    if (n > 20) throw Error("symbolic determinant limited to dimension 20");
    size_t nv = a[0][0].nvars();
    std::map<uint32_t, MPoly> memo;
    // mask = columns still available; row index is n - popcount(mask)
    std::function<MPoly(uint32_t)> go = [&](uint32_t mask) -> MPoly {
        if (!mask) return MPoly::constant(nv, Scalar::integer(1));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        size_t row = n - static_cast<size_t>(__builtin_popcount(mask));
        MPoly acc(nv);
        int sign = 1;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            if (!a[row][j].is_zero()) {
                MPoly sub = go(mask & ~(1u << j));
                acc = sign > 0 ? acc + a[row][j] * sub : acc - a[row][j] * sub;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return go((n >= 32 ? ~0u : (1u << n) - 1u));
}

}  // namespace lsa
