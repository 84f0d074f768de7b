#pragma once

// finite dimensional algebras over Q(i) (or numerically over C) presented by
// structure constants, together with the multiplication operators and the
// identity checks the rest of the library is built on

#include <optional>
#include <string>
#include <vector>

#include "lsa/errors.hpp"
#include "lsa/matrix.hpp"

namespace lsa {

class Algebra {
  public:
    Algebra(std::string name, size_t dim)
        : name_(std::move(name)), dim_(dim), c_(dim * dim * dim) {
        labels_.reserve(dim);
        for (size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
    }

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    size_t dim() const { return dim_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) {
        if (l.size() != dim_) throw DimensionMismatch("label count");
        labels_ = std::move(l);
    }

    double eps() const { return eps_; }
    void set_eps(double e) { eps_ = e; }

    // e_i e_j = sum_k c(i,j,k) e_k
    const Scalar& c(size_t i, size_t j, size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
    void set_c(size_t i, size_t j, size_t k, const Scalar& v) { c_[(i * dim_ + j) * dim_ + k] = v; }

    bool is_exact() const {
        for (const auto& x : c_)
            if (!x.is_exact()) return false;
        return true;
    }

    Vec basis_product(size_t i, size_t j) const {
        Vec v(dim_);
        for (size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
        return v;
    }

    Vec multiply(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("vector length");
        Vec v(dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Scalar f = x[i] * y[j];
                for (size_t k = 0; k < dim_; ++k) v[k] = v[k] + f * c(i, j, k);
            }
        }
        return v;
    }

    // L(x): y -> x y
    Matrix left_op(const Vec& x) const {
        Matrix m(dim_, dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j)
                for (size_t k = 0; k < dim_; ++k) m(k, j) = m(k, j) + x[i] * c(i, j, k);
        }
        return m;
    }
    // R(x): y -> y x
    Matrix right_op(const Vec& x) const {
        Matrix m(dim_, dim_);
        for (size_t j = 0; j < dim_; ++j) {
            if (x[j].is_zero()) continue;
            for (size_t i = 0; i < dim_; ++i)
                for (size_t k = 0; k < dim_; ++k) m(k, i) = m(k, i) + x[j] * c(i, j, k);
        }
        return m;
    }
    Matrix left_op_basis(size_t i) const { return left_op(unit_vec(dim_, i)); }
    Matrix right_op_basis(size_t j) const { return right_op(unit_vec(dim_, j)); }

    // (x, y, z) = x(yz) - (xy)z
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const {
        return multiply(x, multiply(y, z)) - multiply(multiply(x, y), z);
    }

    Vec lie_bracket(const Vec& x, const Vec& y) const {
        return multiply(x, y) - multiply(y, x);
    }

    // ad(x) = L(x) - R(x)
    Matrix ad(const Vec& x) const { return left_op(x) - right_op(x); }

  private:
    std::string name_;
    size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Scalar> c_;
    double eps_ = kDefaultEps;
};

// witness for a failed identity: basis indices and the nonzero difference
struct IdentityWitness {
    bool ok = true;
    size_t i = 0, j = 0, k = 0;
    Vec diff;
};

// left symmetry: the associator is symmetric in its first two arguments
inline IdentityWitness left_symmetry_witness(const Algebra& A) {
    size_t n = A.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
                Vec d = A.associator(ei, ej, ek) - A.associator(ej, ei, ek);
                if (!vec_is_zero(d, A.eps())) return {false, i, j, k, d};
            }
    return {};
}

inline bool is_left_symmetric(const Algebra& A) { return left_symmetry_witness(A).ok; }

inline void require_left_symmetric(const Algebra& A) {
    auto w = left_symmetry_witness(A);
    if (!w.ok)
        throw NotLeftSymmetric("associator asymmetry at basis triple (" + std::to_string(w.i) +
                               "," + std::to_string(w.j) + "," + std::to_string(w.k) + ") of " +
                               A.name());
}

// the commutator bracket of a left-symmetric product satisfies Jacobi
inline bool check_jacobi(const Algebra& A) {
    size_t n = A.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
                Vec s = A.lie_bracket(ei, A.lie_bracket(ej, ek)) +
                        A.lie_bracket(ej, A.lie_bracket(ek, ei)) +
                        A.lie_bracket(ek, A.lie_bracket(ei, ej));
                if (!vec_is_zero(s, A.eps())) return false;
            }
    return true;
}

// L is a representation of the commutator algebra: L([x,y]) = [L(x), L(y)]
inline bool check_left_representation(const Algebra& A) {
    size_t n = A.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
            Matrix lhs = A.left_op(A.lie_bracket(ei, ej));
            Matrix li = A.left_op(ei), lj = A.left_op(ej);
            Matrix rhs = li * lj - lj * li;
            if (!(lhs - rhs).is_zero(A.eps())) return false;
        }
    return true;
}

// the companion form: [L(x), R(z)] = R(xz) - R(z) R(x)
inline bool check_left_right_identity(const Algebra& A) {
    size_t n = A.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(n, i), z = unit_vec(n, j);
            Matrix lx = A.left_op(x), rz = A.right_op(z);
            Matrix lhs = lx * rz - rz * lx;
            Matrix rhs = A.right_op(A.multiply(x, z)) - rz * A.right_op(x);
            if (!(lhs - rhs).is_zero(A.eps())) return false;
        }
    return true;
}

// adjoin a two-sided unit as the last basis vector
inline Algebra unital_extension(const Algebra& A) {
    size_t n = A.dim();
    Algebra B(A.name() + "+unit", n + 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) B.set_c(i, j, k, A.c(i, j, k));
    for (size_t i = 0; i <= n; ++i) {
        B.set_c(i, n, i, Scalar::integer(1));
        B.set_c(n, i, i, Scalar::integer(1));
    }
    auto labels = A.labels();
    labels.push_back("1");
    B.set_labels(labels);
    B.set_eps(A.eps());
    return B;
}

// embed x in the unital extension and translate by the unit: 1 + x
inline Vec unit_plus(const Vec& x) {
    Vec v = x;
    v.push_back(Scalar::integer(1));
    return v;
}

// det(I + R(x)), the polynomial controlling the affine action
inline Scalar right_det_at(const Algebra& A, const Vec& x) {
    return det(Matrix::identity(A.dim()) + A.right_op(x), A.eps());
}

// P1(v) = det R1(v) on the unital extension; restricted to 1 + g it gives
// back det(I + R(x))
inline Scalar extended_det(const Algebra& E, const Vec& v) {
    return det(E.right_op(v), E.eps());
}

// the affine motion attached to x: F_x(y) = xy + x = (I + R(y))x
inline Vec affine_field(const Algebra& A, const Vec& x, const Vec& y) {
    return A.multiply(x, y) + x;
}

// forget exactness: every structure constant becomes a double pair
inline Algebra to_numeric(const Algebra& A) {
    Algebra B = A;
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t j = 0; j < A.dim(); ++j)
            for (size_t k = 0; k < A.dim(); ++k) {
                auto v = A.c(i, j, k).to_complex();
                B.set_c(i, j, k, Scalar::numeric(v.real(), v.imag()));
            }
    return B;
}

inline bool same_structure_constants(const Algebra& A, const Algebra& B) {
    if (A.dim() != B.dim()) return false;
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t j = 0; j < A.dim(); ++j)
            for (size_t k = 0; k < A.dim(); ++k)
                if (!(A.c(i, j, k) == B.c(i, j, k))) return false;
    return true;
}

}  // namespace lsa
