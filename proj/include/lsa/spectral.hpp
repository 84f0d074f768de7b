#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <functional>

#include "lsa/polynomial.hpp"
#include "lsa/subspace.hpp"

namespace lsa {

namespace detail {

inline Eigen::MatrixXcd to_eigen(const Matrix& M) {
    Eigen::MatrixXcd E(M.rows(), M.cols());
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) E(i, j) = M(i, j).to_complex();
    return E;
}

// Union-find clustering of numerically close eigenvalues.
inline std::vector<std::pair<Scalar, size_t>> cluster_values(
    std::vector<std::complex<double>> vals, double tol) {
    std::vector<int> parent(vals.size());
    for (size_t k = 0; k < vals.size(); ++k) parent[k] = static_cast<int>(k);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t a = 0; a < vals.size(); ++a)
        for (size_t b = a + 1; b < vals.size(); ++b)
            if (std::abs(vals[a] - vals[b]) <= tol) parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
    std::map<int, std::vector<std::complex<double>>> groups;
    for (size_t k = 0; k < vals.size(); ++k) groups[find(static_cast<int>(k))].push_back(vals[k]);
    std::vector<std::pair<Scalar, size_t>> out;
    for (const auto& [root, members] : groups) {
        (void)root;
        std::complex<double> c(0.0, 0.0);
        for (auto v : members) c += v;
        c /= static_cast<double>(members.size());
        out.emplace_back(Scalar::numeric(c), members.size());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace detail

// Distinct eigenvalues lying in the scalar field, with algebraic multiplicity.
// Exact mode factors the characteristic polynomial over Q(i) and raises
// NumericFallback when an irreducible factor of degree > 1 remains.
// Numeric mode returns clustered eigenvalues.
inline std::vector<std::pair<Scalar, size_t>> eigenvalues_in_field(const Matrix& A,
                                                                   double eps = kDefaultEps) {
    if (A.rows() != A.cols()) throw DimensionMismatch("eigenvalues of non-square matrix");
    if (A.is_exact()) {
        Poly chi = charpoly(A);
        RootSearchResult r = roots_in_qi(chi);
        if (r.remainder.degree() >= 1)
            throw NumericFallback("characteristic polynomial has an irreducible factor of degree > 1 over Q(i)",
                                  r.remainder.to_string());
        std::vector<std::pair<Scalar, size_t>> out;
        for (const auto& [root, m] : r.roots) out.emplace_back(root, static_cast<size_t>(m));
        return out;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(detail::to_eigen(A));
    if (solver.info() != Eigen::Success) throw Error("numeric eigensolver failed");
    std::vector<std::complex<double>> vals;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
        vals.push_back(solver.eigenvalues()(k));
    double scale = std::max(1.0, A.max_abs());
    return detail::cluster_values(std::move(vals), eps * scale);
}

// ker (A - lambda I)^n as a canonical subspace.
inline Subspace generalized_eigenspace(const Matrix& A, const Scalar& lambda,
                                       double eps = kDefaultEps) {
    if (A.rows() != A.cols()) throw DimensionMismatch("eigenspace of non-square matrix");
    size_t n = A.rows();
    Matrix shifted = A;
    for (size_t d = 0; d < n; ++d) shifted(d, d) -= lambda;
    return Subspace::from_matrix_rows(kernel_basis(shifted.pow(n), eps), eps);
}

// Semisimple part S of A: S is a polynomial in A, A - S is nilpotent and
// [A, S] = 0. Exact mode runs a Newton iteration on the squarefree part of
// the characteristic polynomial and needs no eigenvalues; numeric mode
// assembles S from clustered spectral projections.
inline Matrix jordan_chevalley_semisimple(const Matrix& A, double eps = kDefaultEps) {
    if (A.rows() != A.cols()) throw DimensionMismatch("semisimple part of non-square matrix");
    size_t n = A.rows();
    if (A.is_exact()) {
        Poly g = squarefree_part(charpoly(A));
        Poly gp = g.derivative();
        Matrix S = A;
        for (size_t iter = 0; iter <= n + 1; ++iter) {
            Matrix gS = g.eval(S);
            if (gS.is_zero()) return S;
            auto inv = inverse(gp.eval(S));
            if (!inv) throw Error("Newton step: derivative not invertible");
            S = S - gS * *inv;
        }
        throw MaxIterations("Jordan-Chevalley Newton iteration did not stabilize");
    }
    auto vals = eigenvalues_in_field(A, eps);
    Matrix B(n, n);         // columns: generalized eigenvectors
    Matrix D(n, n);         // matching eigenvalue diagonal
    size_t col = 0;
    for (const auto& [lambda, mult] : vals) {
        (void)mult;
        Subspace V = generalized_eigenspace(A, lambda, eps);
        for (size_t k = 0; k < V.dim(); ++k) {
            if (col >= n) throw Error("eigenspace dimensions exceed ambient");
            Vec v = V.basis_vector(k);
            for (size_t i = 0; i < n; ++i) B(i, col) = v[i];
            D(col, col) = lambda;
            ++col;
        }
    }
    if (col != n) throw Error("generalized eigenspaces do not fill the space");
    auto Binv = inverse(B, eps);
    if (!Binv) throw Error("change of basis not invertible");
    return B * D * *Binv;
}

} // namespace lsa
