#pragma once

// completeness of a left-symmetric algebra: the trace criterion decides, the
// nilpotency / determinant / nonvanishing criteria verify, plus the
// conjugation and eigenfunction identities of the affine action

#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <string>

#include "lsa/algebra.hpp"
#include "lsa/mpoly.hpp"

namespace lsa {

struct CompletenessReport {
    bool verdict = false;                     // trace criterion: Tr R(e_i) = 0 for all i
    std::optional<bool> nilpotent_all;        // R(x) nilpotent for every x, symbolic
    std::optional<bool> det_identically_one;  // det(I + R(x)) = 1, symbolic
    std::optional<bool> nonvanishing_sampled; // det(I + R(x)) != 0 on a sample grid
    std::string witness;
};

namespace detail {

// M(x) = sum_i x_i R(e_i) with polynomial entries
inline MPolyMat symbolic_right_op(const Algebra& A) {
    size_t n = A.dim();
    MPolyMat M(n, std::vector<MPoly>(n, MPoly(n)));
    for (size_t v = 0; v < n; ++v) {
        Matrix R = A.right_op_basis(v);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!R(i, j).is_zero()) {
                    MPoly::Expo e(n, 0);
                    e[v] = 1;
                    M[i][j].add_term(e, R(i, j));
                }
    }
    return M;
}

// deterministic sample vectors with small Gaussian-integer entries
inline std::vector<Vec> sample_grid(size_t n) {
    std::vector<Vec> pts;
    for (size_t i = 0; i < n; ++i) {
        pts.push_back(unit_vec(n, i));
        pts.push_back(Scalar::integer(-1) * unit_vec(n, i));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            for (long si : {1L, -1L})
                for (long sj : {1L, -1L}) {
                    Vec v(n);
                    v[i] = Scalar::integer(si);
                    v[j] = Scalar::integer(sj);
                    pts.push_back(v);
                }
        }
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int s = 0; s < 64; ++s) {
        Vec v(n);
        for (size_t i = 0; i < n; ++i) {
            long re = static_cast<long>(next() % 5) - 2;
            long im = (next() % 3 == 0) ? static_cast<long>(next() % 3) - 1 : 0;
            v[i] = Scalar::gaussian(Rational(re), Rational(im));
        }
        pts.push_back(v);
    }
    return pts;
}

}  // namespace detail

// decision procedure: x -> Tr R(x) is linear, so zero trace on the basis
// settles completeness of a left-symmetric algebra
inline CompletenessReport is_complete(const Algebra& A) {
    require_left_symmetric(A);
    CompletenessReport rep;
    rep.verdict = true;
    for (size_t i = 0; i < A.dim(); ++i) {
        Scalar t = A.right_op_basis(i).trace();
        if (!t.is_zero(A.eps())) {
            rep.verdict = false;
            rep.witness = "Tr R(" + A.labels()[i] + ") = " + t.to_string();
            break;
        }
    }
    return rep;
}

inline void require_complete(const Algebra& A) {
    auto rep = is_complete(A);
    if (!rep.verdict) throw NotComplete(A.name() + " is not complete: " + rep.witness);
}

// all four criteria; in exact mode they must agree (they are equivalent for
// left-symmetric algebras), and disagreement is reported as an internal error
inline CompletenessReport check_all_criteria(const Algebra& A) {
    CompletenessReport rep = is_complete(A);
    size_t n = A.dim();
    MPolyMat M = detail::symbolic_right_op(A);

    // (a) R(x)^n traces: Tr((sum x_i R_i)^k) = 0 for k = 1..n means nilpotency
    // for all x; only powers up to ceil(n/2) are formed, the rest are traced
    // as pair products to keep the symbolic degree down
    bool nil = true;
    {
        std::vector<MPolyMat> pows{M};  // pows[j] = M^{j+1}
        while (pows.size() < (n + 1) / 2) pows.push_back(mpoly_mat_mul(pows.back(), M));
        for (size_t k = 1; k <= n && nil; ++k) {
            size_t lo = k / 2, hi = k - lo;
            MPoly t = lo == 0 ? mpoly_mat_trace(pows[hi - 1])
                              : mpoly_trace_of_product(pows[hi - 1], pows[lo - 1]);
            bool zero = A.is_exact() ? t.is_zero() : t.max_abs_coeff() <= A.eps();
            if (!zero) {
                nil = false;
                std::vector<std::string> names;
                for (size_t i = 0; i < n; ++i) names.push_back("x_" + A.labels()[i]);
                rep.witness = "Tr R(x)^" + std::to_string(k) + " = " + t.to_string(names);
            }
        }
    }
    rep.nilpotent_all = nil;

    // (b) det(I + R(x)) as a polynomial in the coordinates of x
    MPolyMat IM = M;
    for (size_t i = 0; i < n; ++i)
        IM[i][i] = IM[i][i] + MPoly::constant(n, Scalar::integer(1));
    MPoly det_poly = mpoly_det(IM);
    MPoly det_diff = det_poly - MPoly::constant(n, Scalar::integer(1));
    bool det_one = A.is_exact() ? det_diff.is_zero() : det_diff.max_abs_coeff() <= A.eps();
    rep.det_identically_one = det_one;

    // (c) nonvanishing of the same determinant, sampled
    bool nonvan = true;
    for (const Vec& x : detail::sample_grid(n)) {
        if (right_det_at(A, x).is_zero(A.eps())) {
            nonvan = false;
            if (rep.witness.empty()) {
                std::ostringstream os;
                os << "det(I+R(x)) = 0 at x = (";
                for (size_t i = 0; i < n; ++i) os << (i ? "," : "") << x[i].to_string();
                os << ")";
                rep.witness = os.str();
            }
            break;
        }
    }
    rep.nonvanishing_sampled = nonvan;

    if (A.is_exact() && (nil != rep.verdict || det_one != rep.verdict))
        throw Error("completeness criteria disagree on " + A.name() +
                    " -- not a left-symmetric table?");
    return rep;
}

// R(e^{L(y)} x) = e^{L(y)} R(x) e^{-ad(y)} computed in the unital extension
inline bool verify_conjugation_identity(const Algebra& A, const Vec& x, const Vec& y) {
    Algebra E = unital_extension(A);
    size_t n = A.dim();
    Vec x1 = x, y1 = y;
    x1.push_back(Scalar());
    y1.push_back(Scalar());
    Matrix Ly = E.left_op(y1), Ady = E.ad(y1);
    bool exact = A.is_exact();
    for (const auto& s : x) exact = exact && s.is_exact();
    for (const auto& s : y) exact = exact && s.is_exact();
    Matrix expL(n + 1, n + 1), expAd(n + 1, n + 1);
    if (exact) {
        expL = exp_nilpotent(Ly);
        expAd = exp_nilpotent(Scalar::integer(-1) * Ady);
    } else {
        expL = exp_series(Ly, A.eps());
        expAd = exp_series(Scalar::integer(-1) * Ady, A.eps());
    }
    Vec moved = expL * x1;
    Matrix lhs = E.right_op(moved);
    Matrix rhs = expL * E.right_op(x1) * expAd;
    return (lhs - rhs).is_zero(exact ? 0.0 : A.eps());
}

struct EigenfunctionReport {
    bool ok = false;
    Scalar lhs;        // P1(e^{L(y)} x)
    Scalar p1_x;       // P1(x)
    Scalar character;  // e^{Tr R(y)} as evaluated
    Scalar trace;      // Tr R(y)
};

// P1(e^{L(y)} x) = e^{Tr R(y)} P1(x); x lives in the extension, y in the base.
// Exact mode: a nonzero rational trace makes e^{Tr R(y)} transcendental, so
// the identity can only be confirmed exactly when Tr R(y) = 0 or P1(x) = 0;
// otherwise both sides are compared as doubles.
inline EigenfunctionReport verify_eigenfunction(const Algebra& A, const Vec& x_ext,
                                                const Vec& y_base) {
    Algebra E = unital_extension(A);
    size_t n = A.dim();
    if (x_ext.size() != n + 1 || y_base.size() != n)
        throw DimensionMismatch("eigenfunction arguments");
    Vec y1 = y_base;
    y1.push_back(Scalar());
    Matrix Ly = E.left_op(y1);
    EigenfunctionReport r;
    r.trace = A.right_op(y_base).trace();
    bool exact = A.is_exact();
    for (const auto& s : x_ext) exact = exact && s.is_exact();
    for (const auto& s : y_base) exact = exact && s.is_exact();
    Matrix expL = exact ? exp_nilpotent(Ly) : exp_series(Ly, A.eps());
    r.lhs = extended_det(E, expL * x_ext);
    r.p1_x = extended_det(E, x_ext);
    if (exact && r.trace.is_zero()) {
        r.character = Scalar::integer(1);
        r.ok = (r.lhs == r.p1_x);
    } else {
        std::complex<double> t = r.trace.to_complex();
        r.character = Scalar::numeric(std::exp(t.real()) * std::cos(t.imag()),
                                      std::exp(t.real()) * std::sin(t.imag()));
        Scalar rhs = r.character * r.p1_x;
        r.ok = r.lhs.approx_equal(rhs, A.eps());
    }
    return r;
}

struct TraceInvariantReport {
    bool pair_traces = true;    // Tr(R(x) R(y)) = 0
    bool square_traces = true;  // Tr(R(x)^2 R(y)) = 0
    std::string witness;
};

// both invariants expanded over basis monomials by multilinearity
inline TraceInvariantReport trace_invariants(const Algebra& A) {
    require_complete(A);
    size_t n = A.dim();
    std::vector<Matrix> R;
    R.reserve(n);
    for (size_t i = 0; i < n; ++i) R.push_back(A.right_op_basis(i));
    TraceInvariantReport rep;
    // Tr(R_i R_j) is already symmetric in (i, j), no symmetrization needed
    for (size_t i = 0; i < n && rep.pair_traces; ++i)
        for (size_t j = i; j < n; ++j) {
            Scalar t = (R[i] * R[j]).trace();
            if (!t.is_zero(A.eps())) {
                rep.pair_traces = false;
                rep.witness = "Tr(R(" + A.labels()[i] + ")R(" + A.labels()[j] + ")) != 0";
                break;
            }
        }
    for (size_t k = 0; k < n && rep.square_traces; ++k)
        for (size_t i = 0; i < n && rep.square_traces; ++i)
            for (size_t j = i; j < n; ++j) {
                Scalar t = i == j ? (R[i] * R[i] * R[k]).trace()
                                  : (R[i] * R[j] * R[k]).trace() + (R[j] * R[i] * R[k]).trace();
                if (!t.is_zero(A.eps())) {
                    rep.square_traces = false;
                    rep.witness = "Tr(R(x)^2 R(" + A.labels()[k] + ")) coefficient (" +
                                  A.labels()[i] + "," + A.labels()[j] + ") != 0";
                    break;
                }
            }
    return rep;
}

}  // namespace lsa
