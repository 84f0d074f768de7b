#pragma once

#include <optional>
#include <vector>

#include "lsa/scalar.hpp"

namespace lsa {

using Vec = std::vector<Scalar>;

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
    return r;
}

inline Vec operator*(const Scalar& c, const Vec& a) {
    Vec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = c * a[k];
    return r;
}

inline bool vec_is_zero(const Vec& a, double eps = 0.0) {
    for (const auto& x : a)
        if (!(eps > 0.0 ? x.is_zero(eps) : x.is_zero())) return false;
    return true;
}

inline Vec unit_vec(size_t n, size_t k) {
    Vec v(n);
    v[k] = Scalar::integer(1);
    return v;
}

class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t k = 0; k < n; ++k) m(k, k) = Scalar::integer(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec row(size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vec col(size_t j) const {
        Vec v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_row(size_t i, const Vec& v) {
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    static Matrix from_rows(const std::vector<Vec>& rows, size_t ncols) {
        Matrix m(rows.size(), ncols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != ncols) throw DimensionMismatch("row length mismatch");
            m.set_row(i, rows[i]);
        }
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) throw DimensionMismatch("from_rows needs a column count for 0 rows");
        return from_rows(rows, rows[0].size());
    }

    bool is_exact() const {
        for (const auto& x : a_)
            if (!x.is_exact()) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : a_) m = std::max(m, x.abs());
        return m;
    }

    bool is_zero(double eps = 0.0) const { return vec_is_zero(a_, eps); }

    Scalar trace() const {
        Scalar t;
        for (size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
        return t;
    }

    friend Matrix operator+(const Matrix& A, const Matrix& B) {
        if (A.rows_ != B.rows_ || A.cols_ != B.cols_)
            throw DimensionMismatch("matrix sizes differ");
        Matrix R(A.rows_, A.cols_);
        for (size_t k = 0; k < A.a_.size(); ++k) R.a_[k] = A.a_[k] + B.a_[k];
        return R;
    }
    friend Matrix operator-(const Matrix& A, const Matrix& B) {
        if (A.rows_ != B.rows_ || A.cols_ != B.cols_)
            throw DimensionMismatch("matrix sizes differ");
        Matrix R(A.rows_, A.cols_);
        for (size_t k = 0; k < A.a_.size(); ++k) R.a_[k] = A.a_[k] - B.a_[k];
        return R;
    }
    friend Matrix operator-(const Matrix& A) {
        Matrix R(A.rows_, A.cols_);
        for (size_t k = 0; k < A.a_.size(); ++k) R.a_[k] = -A.a_[k];
        return R;
    }
    friend Matrix operator*(const Scalar& c, const Matrix& A) {
        Matrix R(A.rows_, A.cols_);
        for (size_t k = 0; k < A.a_.size(); ++k) R.a_[k] = c * A.a_[k];
        return R;
    }
    friend Matrix operator*(const Matrix& A, const Matrix& B) {
        if (A.cols_ != B.rows_) throw DimensionMismatch("matrix product shapes");
        Matrix R(A.rows_, B.cols_);
        for (size_t i = 0; i < A.rows_; ++i)
            for (size_t k = 0; k < A.cols_; ++k) {
                const Scalar& aik = A(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < B.cols_; ++j) R(i, j) += aik * B(k, j);
            }
        return R;
    }
    friend Vec operator*(const Matrix& A, const Vec& v) {
        if (A.cols_ != v.size()) throw DimensionMismatch("matrix*vector shapes");
        Vec r(A.rows_);
        for (size_t i = 0; i < A.rows_; ++i)
            for (size_t j = 0; j < A.cols_; ++j) r[i] += A(i, j) * v[j];
        return r;
    }
    friend bool operator==(const Matrix& A, const Matrix& B) {
        return A.rows_ == B.rows_ && A.cols_ == B.cols_ && A.a_ == B.a_;
    }

    Matrix pow(size_t e) const {
        if (rows_ != cols_) throw DimensionMismatch("pow of non-square matrix");
        Matrix r = identity(rows_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

  private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

namespace detail {

// Numeric zero decisions are relative to the largest entry of the matrix the
// elimination started from; exact entries use exact tests.
struct ZeroTest {
    double threshold = 0.0;
    bool operator()(const Scalar& x) const {
        return x.is_exact() ? x.is_zero() : x.is_zero(threshold);
    }
    static ZeroTest for_matrix(const Matrix& M, double eps) {
        return ZeroTest{eps * M.max_abs()};
    }
};

} // namespace detail

struct RrefResult {
    Matrix mat;
    std::vector<size_t> pivots;
    size_t rank = 0;
    Scalar det_factor; // product of pivots with row-swap sign, square case
    size_t row_swaps = 0;
};

inline RrefResult rref(Matrix M, double eps = kDefaultEps) {
    auto zero = detail::ZeroTest::for_matrix(M, eps);
    RrefResult res;
    res.det_factor = Scalar::integer(1);
    size_t r = 0;
    for (size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        // pick a pivot: exact entries take the first nonzero, numeric the largest
        size_t piv = M.rows();
        double best = 0.0;
        for (size_t i = r; i < M.rows(); ++i) {
            if (zero(M(i, c))) continue;
            if (M(i, c).is_exact()) {
                piv = i;
                break;
            }
            double mag = M(i, c).abs();
            if (mag > best) {
                best = mag;
                piv = i;
            }
        }
        if (piv == M.rows()) continue;
        if (piv != r) {
            for (size_t j = 0; j < M.cols(); ++j) std::swap(M(piv, j), M(r, j));
            res.det_factor = -res.det_factor;
            ++res.row_swaps;
        }
        Scalar p = M(r, c);
        res.det_factor *= p;
        for (size_t j = c; j < M.cols(); ++j) M(r, j) = M(r, j) / p;
        for (size_t i = 0; i < M.rows(); ++i) {
            if (i == r || zero(M(i, c))) continue;
            Scalar f = M(i, c);
            for (size_t j = c; j < M.cols(); ++j) M(i, j) = M(i, j) - f * M(r, j);
            M(i, c) = Scalar(); // exact zero by construction
        }
        res.pivots.push_back(c);
        ++r;
    }
    // flush sub-threshold residue so downstream exact tests see clean zeros
    auto post = detail::ZeroTest{zero.threshold};
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j)
            if (!M(i, j).is_exact() && post(M(i, j))) M(i, j) = Scalar::numeric(0.0);
    res.mat = std::move(M);
    res.rank = res.pivots.size();
    return res;
}

inline size_t rank(const Matrix& M, double eps = kDefaultEps) { return rref(M, eps).rank; }

// Rows of the result span the right null space {v : Mv = 0}.
inline Matrix kernel_basis(const Matrix& M, double eps = kDefaultEps) {
    RrefResult R = rref(M, eps);
    std::vector<bool> is_pivot(M.cols(), false);
    for (size_t c : R.pivots) is_pivot[c] = true;
    std::vector<Vec> rows;
    for (size_t c = 0; c < M.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(M.cols());
        v[c] = Scalar::integer(1);
        for (size_t r = 0; r < R.pivots.size(); ++r) v[R.pivots[r]] = -R.mat(r, c);
        rows.push_back(std::move(v));
    }
    return Matrix::from_rows(rows, M.cols());
}

// One solution of Ax = b (free coordinates set to zero), or nullopt.
inline std::optional<Vec> solve_linear(const Matrix& A, const Vec& b, double eps = kDefaultEps) {
    if (A.rows() != b.size()) throw DimensionMismatch("solve shapes");
    Matrix aug(A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    RrefResult R = rref(aug, eps);
    auto zero = detail::ZeroTest::for_matrix(aug, eps);
    for (size_t r = 0; r < R.pivots.size(); ++r)
        if (R.pivots[r] == A.cols()) return std::nullopt; // pivot in the rhs column
    Vec x(A.cols());
    for (size_t r = 0; r < R.pivots.size(); ++r) x[R.pivots[r]] = R.mat(r, A.cols());
    // guard for inconsistent rows below the pivot block
    for (size_t i = R.pivots.size(); i < A.rows(); ++i)
        if (!zero(R.mat(i, A.cols()))) return std::nullopt;
    return x;
}

inline Scalar det(const Matrix& M, double eps = kDefaultEps) {
    if (M.rows() != M.cols()) throw DimensionMismatch("det of non-square matrix");
    RrefResult R = rref(M, eps);
    if (R.rank < M.rows()) return Scalar();
    return R.det_factor;
}

inline std::optional<Matrix> inverse(const Matrix& M, double eps = kDefaultEps) {
    if (M.rows() != M.cols()) throw DimensionMismatch("inverse of non-square matrix");
    size_t n = M.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = M(i, j);
        aug(i, n + i) = Scalar::integer(1);
    }
    RrefResult R = rref(aug, eps);
    if (R.rank < n || R.pivots[n - 1] >= n) return std::nullopt;
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = R.mat(i, n + j);
    return inv;
}

// Truncated exponential series for a nilpotent matrix; exact in exact mode.
inline Matrix exp_nilpotent(const Matrix& N) {
    if (N.rows() != N.cols()) throw DimensionMismatch("exp of non-square matrix");
    size_t n = N.rows();
    Matrix sum = Matrix::identity(n), term = Matrix::identity(n);
    Scalar kfact = Scalar::integer(1);
    for (size_t k = 1; k <= n; ++k) {
        term = term * N;
        if (term.is_zero()) return sum;
        if (k == n) throw NotNilpotent("matrix power " + std::to_string(k) + " is nonzero");
        kfact *= Scalar::integer(static_cast<long>(k));
        sum = sum + (Scalar::integer(1) / kfact) * term;
    }
    return sum;
}

// Convergent series exponential for numeric-mode matrices.
inline Matrix exp_series(const Matrix& M, double eps = kDefaultEps, size_t max_terms = 200) {
    if (M.rows() != M.cols()) throw DimensionMismatch("exp of non-square matrix");
    if (M.is_exact()) return exp_nilpotent(M);
    size_t n = M.rows();
    Matrix sum = Matrix::identity(n), term = Matrix::identity(n);
    for (size_t k = 1; k <= max_terms; ++k) {
        term = (Scalar::integer(1) / Scalar::integer(static_cast<long>(k))) * (term * M);
        sum = sum + term;
        if (term.max_abs() <= eps * 1e-4) return sum;
    }
    throw MaxIterations("matrix exponential series did not converge");
}

} // namespace lsa
