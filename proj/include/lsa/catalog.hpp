#pragma once

// built-in algebras: the simple complete algebras of dimension <= 5, the
// graded series they embed into, and small control algebras for tests

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"

namespace lsa {

namespace detail {

inline std::string root_label(const Scalar& r) { return "e" + r.to_string(); }

}  // namespace detail

// weights -1, 0, 1, ..., n-2 with e_{-1} acting as a lowering operator:
// e_0 e_k = k e_k, e_{-1} e_k = k e_{k-1}, e_k e_{-1} = e_{k-1}, e_0 e_{-1} = -e_{-1}
inline Algebra series(size_t n) {
    if (n < 3) throw BadParameters("series needs dimension >= 3");
    Algebra A("series" + std::to_string(n), n);
    // basis order e_{-1}, e_0, e_1, ..., e_{n-2}; index of e_k is k+1
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(static_cast<long>(i) - 1));
    A.set_labels(labels);
    auto idx = [](long k) { return static_cast<size_t>(k + 1); };
    A.set_c(idx(0), idx(-1), idx(-1), Scalar::integer(-1));
    for (long k = 1; k + 1 < static_cast<long>(n); ++k) {
        A.set_c(idx(0), idx(k), idx(k), Scalar::integer(k));
        A.set_c(idx(-1), idx(k), idx(k - 1), Scalar::integer(k));
        A.set_c(idx(k), idx(-1), idx(k - 1), Scalar::integer(1));
    }
    return A;
}

// the unique simple complete algebra of dimension 3
inline Algebra auslander3() {
    Algebra A = series(3);
    A.set_name("auslander3");
    return A;
}

// the unique simple complete algebra of dimension 4; the off-grading
// coefficients are (1, 2): e_2 e_{-1} = e_1, e_{-1} e_2 = 2 e_1
inline Algebra simple4() {
    Algebra A = series(4);
    A.set_name("simple4");
    return A;
}

// the same table with the two coefficients swapped (e_2 e_{-1} = 2 e_1,
// e_{-1} e_2 = e_1); kept as a control: it fails the left-symmetry check
inline Algebra simple4_printed() {
    Algebra A = simple4();
    A.set_name("simple4_printed");
    auto idx = [](long k) { return static_cast<size_t>(k + 1); };
    A.set_c(idx(2), idx(-1), idx(1), Scalar::integer(2));
    A.set_c(idx(-1), idx(2), idx(1), Scalar::integer(1));
    return A;
}

// two symmetric root pairs +-1, +-lambda glued at 0; basis order
// (e_{-lambda}, e_{-1}, e_0, e_1, e_lambda)
inline Algebra family5(const Scalar& lambda) {
    Scalar one = Scalar::integer(1);
    if (lambda == Scalar() || lambda == one || lambda == Scalar::integer(-1))
        throw BadParameters("family5 needs lambda outside {0, 1, -1}");
    Algebra A("family5(" + lambda.to_string() + ")", 5);
    Scalar mlam = Scalar() - lambda;
    A.set_labels({detail::root_label(mlam), "e-1", "e0", "e1", detail::root_label(lambda)});
    enum : size_t { ML, M1, Z, P1, PL };
    A.set_c(Z, M1, M1, Scalar::integer(-1));
    A.set_c(Z, P1, P1, one);
    A.set_c(Z, ML, ML, mlam);
    A.set_c(Z, PL, PL, lambda);
    A.set_c(M1, P1, Z, one);
    A.set_c(P1, M1, Z, one);
    A.set_c(ML, PL, Z, one);
    A.set_c(PL, ML, Z, one);
    return A;
}

// the lambda = 2 family with coupling between the pairs:
// e_2 e_{-1} = alpha e_1, e_{-1} e_2 = beta e_1, e_{-1} e_{-1} = gamma e_{-2},
// admissible exactly when 2 alpha = beta + gamma
inline Algebra family5_mod(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    if (!(alpha + alpha == beta + gamma))
        throw BadParameters("family5_mod needs 2*alpha = beta + gamma");
    Algebra A = family5(Scalar::integer(2));
    A.set_name("family5_mod(" + alpha.to_string() + "," + beta.to_string() + "," +
               gamma.to_string() + ")");
    enum : size_t { M2, M1, Z, P1, P2 };
    A.set_c(P2, M1, P1, alpha);
    A.set_c(M1, P2, P1, beta);
    A.set_c(M1, M1, M2, gamma);
    return A;
}

inline Algebra zero_algebra(size_t n) { return Algebra("zero" + std::to_string(n), n); }

// the one dimensional field acting on itself: e e = e; not complete
inline Algebra idempotent1() {
    Algebra A("idempotent1", 1);
    A.set_labels({"e"});
    A.set_c(0, 0, 0, Scalar::integer(1));
    return A;
}

inline Algebra direct_sum(const Algebra& A, const Algebra& B) {
    size_t n = A.dim(), m = B.dim();
    Algebra S(A.name() + "+" + B.name(), n + m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) S.set_c(i, j, k, A.c(i, j, k));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k) S.set_c(n + i, n + j, n + k, B.c(i, j, k));
    std::vector<std::string> labels = A.labels();
    for (const auto& l : B.labels()) {
        std::string cand = l;
        while (std::find(labels.begin(), labels.end(), cand) != labels.end()) cand += "'";
        labels.push_back(cand);
    }
    S.set_labels(labels);
    return S;
}

// name-keyed access used by the command line tool
inline Algebra catalog(const std::string& name,
                       const std::map<std::string, std::string>& params = {}) {
    auto scalar_param = [&](const char* key, const char* fallback = nullptr) {
        auto it = params.find(key);
        if (it == params.end()) {
            if (!fallback) throw BadParameters(std::string("missing parameter '") + key + "'");
            return Scalar::parse(fallback);
        }
        return Scalar::parse(it->second);
    };
    auto count_param = [&](const char* key, size_t fallback) {
        auto it = params.find(key);
        if (it == params.end()) return fallback;
        size_t v = 0;
        for (char ch : it->second) {
            if (ch < '0' || ch > '9') throw BadParameters(std::string("bad count '") + it->second + "'");
            v = v * 10 + static_cast<size_t>(ch - '0');
        }
        return v;
    };
    if (name == "auslander3") return auslander3();
    if (name == "simple4") return simple4();
    if (name == "simple4_printed") return simple4_printed();
    if (name == "family5") return family5(scalar_param("lambda"));
    if (name == "family5_mod")
        return family5_mod(scalar_param("alpha"), scalar_param("beta"), scalar_param("gamma"));
    if (name == "series") return series(count_param("n", 5));
    if (name == "zero") return zero_algebra(count_param("dim", 2));
    if (name == "idempotent1") return idempotent1();
    throw BadParameters("unknown catalog name '" + name + "'");
}

struct CatalogEntry {
    std::string name;
    Algebra algebra;
    bool simple;    // expected simplicity
    bool complete;  // expected completeness
};

// the standing corpus the test suites and cross-checks run over
inline std::vector<CatalogEntry> standard_catalog() {
    std::vector<CatalogEntry> v;
    v.push_back({"auslander3", auslander3(), true, true});
    v.push_back({"simple4", simple4(), true, true});
    v.push_back({"family5(3)", family5(Scalar::integer(3)), true, true});
    v.push_back({"family5(5/2)", family5(Scalar::rational(Rational(5, 2))), true, true});
    v.push_back({"family5(i)", family5(Scalar::i()), true, true});
    v.push_back({"family5(1+i)", family5(Scalar::gaussian(Rational(1), Rational(1))), true, true});
    v.push_back({"family5_mod(1,2,0)",
                 family5_mod(Scalar::integer(1), Scalar::integer(2), Scalar()), true, true});
    v.push_back({"family5_mod(0,1,-1)",
                 family5_mod(Scalar(), Scalar::integer(1), Scalar::integer(-1)), true, true});
    v.push_back({"family5_mod(1,0,2)",
                 family5_mod(Scalar::integer(1), Scalar(), Scalar::integer(2)), true, true});
    v.push_back({"series5", series(5), true, true});
    v.push_back({"series6", series(6), true, true});
    v.push_back({"series7", series(7), true, true});
    v.push_back({"series8", series(8), true, true});
    v.push_back({"zero2", zero_algebra(2), false, true});
    v.push_back({"zero3", zero_algebra(3), false, true});
    return v;
}

}  // namespace lsa
