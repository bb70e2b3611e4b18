#pragma once

#include "adelic/catalog.hpp"
#include "adelic/chars.hpp"
#include "adelic/sampling.hpp"

#include <memory>
#include <vector>

namespace fixtures {

using namespace adelic;

inline Rational q(long n, long d = 1) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline RatVector vec(std::initializer_list<long> xs) {
    RatVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<RatVector> r;
    for (auto row : rows) r.push_back(vec(row));
    return RatMatrix::from_rows(r, r.empty() ? 0 : r.front().size());
}

inline Subspace span(std::size_t d, std::initializer_list<RatVector> vs) {
    std::vector<RatVector> v(vs);
    return Subspace::span(d, v);
}

/// h3 with [X, Y] = Z (basis X, Y, Z).
inline LieAlgebra h3() { return LieAlgebra::from_brackets(3, {{0, 1, 2, 1}}); }

/// Strictly upper triangular n x n matrices, basis E_ij (i < j) in
/// lexicographic order; class n - 1.
struct UpperTriangular {
    std::size_t n;
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    LieAlgebra algebra;

    explicit UpperTriangular(std::size_t n_) : n(n_) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) basis.emplace_back(i, j);
        std::vector<StructureConstant> br;
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                RatVector c = from_matrix(to_matrix(unit_vector(basis.size(), a)) * to_matrix(unit_vector(basis.size(), b)) -
                                          to_matrix(unit_vector(basis.size(), b)) * to_matrix(unit_vector(basis.size(), a)));
                for (std::size_t k = 0; k < c.size(); ++k) {
                    if (sgn(c[k]) != 0) br.push_back({a, b, k, c[k]});
                }
            }
        algebra = LieAlgebra::from_brackets(basis.size(), br);
    }

    RatMatrix to_matrix(const RatVector& x) const {
        RatMatrix m(n, n);
        for (std::size_t a = 0; a < basis.size(); ++a) m(basis[a].first, basis[a].second) = x[a];
        return m;
    }
    RatVector from_matrix(const RatMatrix& m) const {
        RatVector x(basis.size());
        for (std::size_t a = 0; a < basis.size(); ++a) x[a] = m(basis[a].first, basis[a].second);
        return x;
    }
};

/// exp of a nilpotent matrix by its (finite) power series.
inline RatMatrix mexp(const RatMatrix& x) {
    RatMatrix out = RatMatrix::identity(x.rows()), term = out;
    for (unsigned k = 1; k <= x.rows(); ++k) {
        term = Rational(1, k) * (term * x);
        out = out + term;
    }
    return out;
}

/// log of a unipotent matrix: Σ (-1)^{k+1} (g - I)^k / k.
inline RatMatrix mlog(const RatMatrix& g) {
    const RatMatrix n = g - RatMatrix::identity(g.rows());
    RatMatrix out(g.rows(), g.cols()), power = RatMatrix::identity(g.rows());
    for (unsigned k = 1; k <= g.rows(); ++k) {
        power = power * n;
        out = out + Rational(k % 2 ? 1 : -1, k) * power;
    }
    return out;
}

inline std::shared_ptr<const LeviSystem> sl2_standard() { return abelian_radical_system(Sl2Rep::Standard).system; }

}  // namespace fixtures
