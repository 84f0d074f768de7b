#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "lsa/errors.hpp"

namespace lsa {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

constexpr double kDefaultEps = 1e-10;

// A field element, either a Gaussian rational (exact mode) or a complex
// double (numeric mode). Mixing modes promotes to numeric.
class Scalar {
  public:
    Scalar() : exact_(true), re_(0), im_(0), num_(0.0, 0.0) {}

    static Scalar integer(long v) { return Scalar(Rational(v), Rational(0)); }
    static Scalar rational(const Rational& r) { return Scalar(r, Rational(0)); }
    static Scalar gaussian(const Rational& re, const Rational& im) { return Scalar(re, im); }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar numeric(std::complex<double> z) {
        Scalar s;
        s.exact_ = false;
        s.num_ = z;
        return s;
    }
    static Scalar numeric(double re, double im = 0.0) { return numeric({re, im}); }

    bool is_exact() const { return exact_; }
    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    std::complex<double> to_complex() const {
        if (!exact_) return num_;
        return {static_cast<double>(re_), static_cast<double>(im_)};
    }

    Scalar to_numeric() const { return exact_ ? numeric(to_complex()) : *this; }

    bool is_zero() const {
        if (exact_) return re_ == 0 && im_ == 0;
        return num_ == std::complex<double>(0.0, 0.0);
    }

    bool is_zero(double eps) const {
        if (exact_) return re_ == 0 && im_ == 0;
        return std::abs(num_) <= eps;
    }

    double abs() const { return std::abs(to_complex()); }

    Scalar conj() const {
        if (exact_) return Scalar(re_, -im_);
        return numeric(std::conj(num_));
    }

    // |z|^2, exact in exact mode.
    Scalar norm_sq() const {
        if (exact_) return Scalar(re_ * re_ + im_ * im_, Rational(0));
        return numeric(std::norm(num_));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(a.re_ + b.re_, a.im_ + b.im_);
        return numeric(a.to_complex() + b.to_complex());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(a.re_ - b.re_, a.im_ - b.im_);
        return numeric(a.to_complex() - b.to_complex());
    }
    friend Scalar operator-(const Scalar& a) {
        if (a.exact_) return Scalar(-a.re_, -a.im_);
        return numeric(-a.num_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_)
            return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
        return numeric(a.to_complex() * b.to_complex());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) {
            Rational d = b.re_ * b.re_ + b.im_ * b.im_;
            if (d == 0) throw Error("scalar division by zero");
            return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / d,
                          (a.im_ * b.re_ - a.re_ * b.im_) / d);
        }
        return numeric(a.to_complex() / b.to_complex());
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    // Value equality; exact vs numeric compares promoted doubles exactly.
    // Tolerant comparison is always explicit via approx_equal.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return a.re_ == b.re_ && a.im_ == b.im_;
        return a.to_complex() == b.to_complex();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    bool approx_equal(const Scalar& b, double eps = kDefaultEps) const {
        if (exact_ && b.exact_) return *this == b;
        return std::abs(to_complex() - b.to_complex()) <= eps;
    }

    // Lexicographic (re, im) order; used for deterministic sorting only.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) {
            if (a.re_ != b.re_) return a.re_ < b.re_;
            return a.im_ < b.im_;
        }
        auto x = a.to_complex(), y = b.to_complex();
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    }

    std::string to_string() const;
    static Scalar parse(const std::string& text);

  private:
    Scalar(Rational re, Rational im)
        : exact_(true), re_(std::move(re)), im_(std::move(im)), num_(0.0, 0.0) {}

    bool exact_;
    Rational re_, im_;
    std::complex<double> num_;
};

namespace detail {

inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational parse_rational(std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

} // namespace detail

inline std::string Scalar::to_string() const {
    if (!exact_) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", num_.real(), num_.imag());
        return buf;
    }
    if (im_ == 0) return detail::rational_str(re_);
    Rational ai = im_ < 0 ? Rational(-im_) : im_;
    std::string istr = (ai == 1) ? "i" : detail::rational_str(ai) + "i";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + istr;
    return detail::rational_str(re_) + (im_ < 0 ? "-" : "+") + istr;
}

inline Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar");
    if (s.front() == '(') {
        // numeric pair "(re,im)"
        if (s.back() != ')') throw ParseError("bad numeric scalar '" + text + "'");
        auto comma = s.find(',');
        if (comma == std::string::npos) throw ParseError("bad numeric scalar '" + text + "'");
        try {
            double re = std::stod(s.substr(1, comma - 1));
            double im = std::stod(s.substr(comma + 1, s.size() - comma - 2));
            return numeric(re, im);
        } catch (const std::logic_error&) {
            throw ParseError("bad numeric scalar '" + text + "'");
        }
    }
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        // split off a real part if a sign separates two components
        for (size_t k = 1; k < body.size(); ++k) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' &&
                std::isdigit(static_cast<unsigned char>(body[k - 1]))) {
                Rational re = detail::parse_rational(body.substr(0, k));
                std::string imtxt = body.substr(k);
                Rational im = (imtxt == "+") ? Rational(1)
                            : (imtxt == "-") ? Rational(-1)
                                             : detail::parse_rational(imtxt);
                return gaussian(re, im);
            }
        }
        if (body.empty()) return i();
        if (body == "-") return gaussian(Rational(0), Rational(-1));
        if (body == "+") return i();
        return gaussian(Rational(0), detail::parse_rational(body));
    }
    return rational(detail::parse_rational(s));
}

inline std::string to_string(const Scalar& s) { return s.to_string(); }

} // namespace lsa
