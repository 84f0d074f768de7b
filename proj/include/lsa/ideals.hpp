#pragma once

// two-sided ideals, quotients, induced subalgebras, and simplicity

#include <optional>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/decomposition.hpp"

namespace lsa {

struct Ideal {
    Subspace subspace;
    std::vector<Vec> generators;
};

// least subspace containing the generators and closed under multiplication
// by every basis element on both sides
inline Ideal ideal_closure(const Algebra& A, const std::vector<Vec>& generators) {
    size_t n = A.dim();
    Subspace s = Subspace::from_rows(generators, n, A.eps());
    for (size_t round = 0; round <= n; ++round) {
        std::vector<Vec> rows;
        for (size_t k = 0; k < s.dim(); ++k) rows.push_back(s.basis_vector(k));
        for (size_t k = 0; k < s.dim(); ++k)
            for (size_t i = 0; i < n; ++i) {
                rows.push_back(A.multiply(unit_vec(n, i), s.basis_vector(k)));
                rows.push_back(A.multiply(s.basis_vector(k), unit_vec(n, i)));
            }
        Subspace next = Subspace::from_rows(rows, n, A.eps());
        if (next.dim() == s.dim()) break;
        s = next;
    }
    return {s, generators};
}

inline bool is_ideal(const Algebra& A, const Subspace& s) {
    for (size_t k = 0; k < s.dim(); ++k)
        for (size_t i = 0; i < A.dim(); ++i) {
            if (!s.contains(A.multiply(unit_vec(A.dim(), i), s.basis_vector(k)))) return false;
            if (!s.contains(A.multiply(s.basis_vector(k), unit_vec(A.dim(), i)))) return false;
        }
    return true;
}

// smallest product-closed subspace containing the generators
inline Subspace subalgebra_closure(const Algebra& A, const std::vector<Vec>& generators) {
    Subspace s = Subspace::from_rows(generators, A.dim(), A.eps());
    for (size_t round = 0; round <= A.dim(); ++round) {
        std::vector<Vec> rows;
        for (size_t k = 0; k < s.dim(); ++k) rows.push_back(s.basis_vector(k));
        for (size_t k = 0; k < s.dim(); ++k)
            for (size_t l = 0; l < s.dim(); ++l)
                rows.push_back(A.multiply(s.basis_vector(k), s.basis_vector(l)));
        Subspace next = Subspace::from_rows(rows, A.dim(), A.eps());
        if (next.dim() == s.dim()) break;
        s = next;
    }
    return s;
}

// {x : L(x) = 0}; a two-sided ideal in any left-symmetric algebra
inline Subspace l_kernel(const Algebra& A) {
    size_t n = A.dim();
    Matrix stacked(n * n, n);
    for (size_t i = 0; i < n; ++i) {
        Matrix Li = A.left_op_basis(i);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) stacked(r * n + c, i) = Li(r, c);
    }
    Subspace ker = Subspace::from_matrix_rows(kernel_basis(stacked, A.eps()), A.eps());
    if (!is_ideal(A, ker)) throw Error("L-kernel failed the ideal check; product not left-symmetric?");
    return ker;
}

// quotient by a two-sided ideal; representatives are the standard basis
// vectors independent of the ideal, in index order
inline Algebra quotient_algebra(const Algebra& A, const Subspace& ideal) {
    size_t n = A.dim();
    if (!is_ideal(A, ideal)) throw BadParameters("subspace is not a two-sided ideal");
    std::vector<Vec> rows;
    for (size_t k = 0; k < ideal.dim(); ++k) rows.push_back(ideal.basis_vector(k));
    std::vector<size_t> reps;
    for (size_t i = 0; i < n && rows.size() < n; ++i) {
        std::vector<Vec> trial = rows;
        trial.push_back(unit_vec(n, i));
        if (Subspace::from_rows(trial, n, A.eps()).dim() == rows.size() + 1) {
            rows = std::move(trial);
            reps.push_back(i);
        }
    }
    size_t m = reps.size();
    Matrix B(n, n);
    for (size_t c = 0; c < n; ++c)
        for (size_t r = 0; r < n; ++r) B(r, c) = rows[c][r];
    Algebra Q(A.name() + "/ideal", m);
    if (!A.is_exact()) Q = to_numeric(Q);
    std::vector<std::string> labels(m);
    for (size_t a = 0; a < m; ++a) labels[a] = "q" + std::to_string(a);
    Q.set_labels(labels);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            Vec w = A.basis_product(reps[a], reps[b]);
            auto coords = solve_linear(B, w, A.eps());
            if (!coords) throw Error("quotient coordinates not solvable");
            for (size_t c = 0; c < m; ++c) Q.set_c(a, b, c, (*coords)[ideal.dim() + c]);
        }
    return Q;
}

// restriction of the product to a product-closed subspace, in its echelon basis
inline Algebra induced_subalgebra(const Algebra& A, const Subspace& s) {
    size_t m = s.dim();
    Algebra S(A.name() + "|sub", m);
    if (!A.is_exact()) S = to_numeric(S);
    std::vector<std::string> labels(m);
    for (size_t a = 0; a < m; ++a) labels[a] = "s" + std::to_string(a);
    S.set_labels(labels);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            Vec w = A.multiply(s.basis_vector(a), s.basis_vector(b));
            auto coords = s.coordinates_of(w, A.eps());
            if (!coords) throw BadParameters("subspace is not closed under the product");
            for (size_t c = 0; c < m; ++c) S.set_c(a, b, c, (*coords)[c]);
        }
    return S;
}

struct SimplicityReport {
    bool simple = false;
    // true: decided by the distinct-root structure theorem (every ideal is
    // spanned by root vectors); false: decided over verified generators only
    bool exact = false;
    std::optional<Subspace> witness;  // proper nonzero ideal, when found
};

namespace detail {

inline std::optional<Subspace> proper_closure(const Algebra& A, const Vec& gen) {
    if (vec_is_zero(gen, A.eps())) return std::nullopt;
    Ideal id = ideal_closure(A, {gen});
    if (id.subspace.dim() > 0 && id.subspace.dim() < A.dim()) return id.subspace;
    return std::nullopt;
}

}  // namespace detail

inline SimplicityReport is_simple(const Algebra& A) {
    size_t n = A.dim();
    SimplicityReport rep;

    std::vector<Vec> root_vectors;
    bool distinct_one_dim = false;
    try {
        auto [h, w] = make_canonical(A);
        auto dec = root_decomposition(A, h, Rep::L);
        distinct_one_dim = true;
        for (const auto& p : dec.parts) {
            if (p.space.dim() != 1) distinct_one_dim = false;
            root_vectors.push_back(p.space.basis_vector(0));
        }
        for (size_t i = 0; distinct_one_dim && i < dec.parts.size(); ++i)
            for (size_t j = i + 1; j < dec.parts.size(); ++j)
                if (dec.parts[i].root == dec.parts[j].root) distinct_one_dim = false;
    } catch (const Error&) {
        root_vectors.clear();  // no canonical decomposition; fall back
    }

    if (distinct_one_dim) {
        // every ideal is invariant under the semisimple derivations, hence
        // spanned by root vectors: singleton closures decide exactly
        rep.exact = true;
        for (const Vec& v : root_vectors)
            if (auto wit = detail::proper_closure(A, v)) {
                rep.witness = *wit;
                return rep;
            }
        rep.simple = true;
        return rep;
    }

    rep.exact = false;
    std::vector<Vec> gens;
    for (size_t i = 0; i < n; ++i) gens.push_back(unit_vec(n, i));
    gens.insert(gens.end(), root_vectors.begin(), root_vectors.end());
    uint64_t s = 0x2545f4914f6cdd1dull;
    for (size_t k = 0; k < 16; ++k) {
        Vec v(n);
        for (size_t i = 0; i < n; ++i) {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            v[i] = Scalar::integer(static_cast<long>(s % 7) - 3);
        }
        gens.push_back(v);
    }
    for (const Vec& v : gens)
        if (auto wit = detail::proper_closure(A, v)) {
            rep.witness = *wit;
            return rep;
        }
    rep.simple = true;
    return rep;
}

}  // namespace lsa
