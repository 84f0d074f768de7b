#pragma once

#include "lsa/matrix.hpp"

namespace lsa {

// Subspace of F^n held in canonical form: reduced-echelon basis rows.
// Two subspaces are equal iff their canonical matrices are equal.
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace from_rows(const std::vector<Vec>& rows, size_t ambient,
                              double eps = kDefaultEps) {
        Matrix m = Matrix::from_rows(rows, ambient);
        return from_matrix_rows(m, eps);
    }

    static Subspace from_matrix_rows(const Matrix& m, double eps = kDefaultEps) {
        RrefResult r = rref(m, eps);
        Subspace s(m.cols());
        Matrix b(r.rank, m.cols());
        for (size_t i = 0; i < r.rank; ++i)
            for (size_t j = 0; j < m.cols(); ++j) b(i, j) = r.mat(i, j);
        s.basis_ = std::move(b);
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    static Subspace whole(size_t ambient) {
        Subspace s(ambient);
        s.basis_ = Matrix::identity(ambient);
        for (size_t k = 0; k < ambient; ++k) s.pivots_.push_back(k);
        return s;
    }

    static Subspace span_of(const Vec& v, double eps = kDefaultEps) {
        return from_rows({v}, v.size(), eps);
    }

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(size_t k) const { return basis_.row(k); }
    const std::vector<size_t>& pivots() const { return pivots_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    // Coordinates w.r.t. the echelon basis: read off pivot columns, then verify.
    std::optional<Vec> coordinates_of(const Vec& v, double eps = kDefaultEps) const {
        if (v.size() != ambient_) throw DimensionMismatch("vector/ambient mismatch");
        Vec coords(dim());
        Vec residual = v;
        for (size_t r = 0; r < dim(); ++r) {
            coords[r] = v[pivots_[r]];
            residual = residual - (coords[r] * basis_.row(r));
        }
        double thr = eps * std::max(basis_.max_abs(), 1.0);
        if (!vec_is_zero(residual, thr)) return std::nullopt;
        return coords;
    }

    bool contains(const Vec& v, double eps = kDefaultEps) const {
        return coordinates_of(v, eps).has_value();
    }

    bool contains(const Subspace& other, double eps = kDefaultEps) const {
        for (size_t k = 0; k < other.dim(); ++k)
            if (!contains(other.basis_vector(k), eps)) return false;
        return true;
    }

    Subspace sum(const Subspace& other, double eps = kDefaultEps) const {
        if (ambient_ != other.ambient_) throw DimensionMismatch("subspace ambient mismatch");
        std::vector<Vec> rows;
        for (size_t k = 0; k < dim(); ++k) rows.push_back(basis_vector(k));
        for (size_t k = 0; k < other.dim(); ++k) rows.push_back(other.basis_vector(k));
        return from_rows(rows, ambient_, eps);
    }

    // Image of the subspace under the operator M (columns act on vectors).
    Subspace image_under(const Matrix& M, double eps = kDefaultEps) const {
        std::vector<Vec> rows;
        for (size_t k = 0; k < dim(); ++k) rows.push_back(M * basis_vector(k));
        return from_rows(rows, ambient_, eps);
    }

    bool invariant_under(const Matrix& M, double eps = kDefaultEps) const {
        for (size_t k = 0; k < dim(); ++k)
            if (!contains(M * basis_vector(k), eps)) return false;
        return true;
    }

    // Matrix of M restricted to the subspace in the echelon basis,
    // or nullopt when the subspace is not invariant.
    std::optional<Matrix> restriction(const Matrix& M, double eps = kDefaultEps) const {
        Matrix C(dim(), dim());
        for (size_t k = 0; k < dim(); ++k) {
            auto coords = coordinates_of(M * basis_vector(k), eps);
            if (!coords) return std::nullopt;
            for (size_t r = 0; r < dim(); ++r) C(r, k) = (*coords)[r];
        }
        return C;
    }

  private:
    size_t ambient_;
    Matrix basis_;
    std::vector<size_t> pivots_;
};

} // namespace lsa
