#include "adelic/nilpotent.hpp"

#include <functional>
#include <map>

namespace adelic {

namespace {

Rational factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

std::vector<std::pair<std::vector<bool>, Rational>> dynkin_terms(unsigned max_degree) {
    std::map<std::vector<bool>, Rational> grouped;
    // blocks: chosen (r_i, s_i) pairs so far
    std::vector<std::pair<unsigned, unsigned>> blocks;
    std::function<void(unsigned)> extend = [&](unsigned used) {
        if (!blocks.empty()) {
            const auto [rn, sn] = blocks.back();
            // Right-nested brackets ending in YY or XX vanish.
            const bool vanishes = sn > 1 || (sn == 0 && rn > 1);
            if (!vanishes) {
                const auto n = static_cast<long>(blocks.size());
                Rational denom = Rational(static_cast<long>(used));
                std::vector<bool> word;
                for (const auto& [r, s] : blocks) {
                    denom *= factorial(r) * factorial(s);
                    word.insert(word.end(), r, false);
                    word.insert(word.end(), s, true);
                }
                Rational c = Rational(n % 2 == 1 ? 1 : -1, n) / denom;
                c.canonicalize();
                grouped[word] += c;
            }
        }
        for (unsigned r = 0; used + r <= max_degree; ++r) {
            for (unsigned s = (r == 0 ? 1u : 0u); used + r + s <= max_degree; ++s) {
                blocks.emplace_back(r, s);
                extend(used + r + s);
                blocks.pop_back();
            }
        }
    };
    extend(0);
    std::vector<std::pair<std::vector<bool>, Rational>> out;
    for (auto& [w, c] : grouped) {
        if (sgn(c) != 0) out.emplace_back(w, c);
    }
    return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Rational> tensor) : dim_(dim), tensor_(std::move(tensor)) {
    if (tensor_.size() != dim * dim * dim) {
        throw DimensionError("structure tensor must have dim^3 = " + std::to_string(dim * dim * dim) +
                             " entries, got " + std::to_string(tensor_.size()));
    }
    for (auto& q : tensor_) q.canonicalize();
    finish_construction();
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<StructureConstant>& brackets) {
    std::vector<Rational> t(dim * dim * dim, Rational(0));
    for (const auto& b : brackets) {
        if (b.i >= dim || b.j >= dim || b.k >= dim) {
            throw DimensionError("structure constant index " + triple(b.i, b.j, b.k) + " out of range for dim " +
                                 std::to_string(dim));
        }
        if (b.i >= b.j) {
            throw ValidationError("structure constants must be given with i < j, got " + triple(b.i, b.j, b.k));
        }
        t[(b.i * dim + b.j) * dim + b.k] += b.value;
        t[(b.j * dim + b.i) * dim + b.k] -= b.value;
    }
    return LieAlgebra(dim, std::move(t));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
    return LieAlgebra(dim, std::vector<Rational>(dim * dim * dim, Rational(0)));
}

void LieAlgebra::finish_construction() {
    const auto lcs = lower_central_series();
    if (lcs.empty() || lcs.back().is_zero()) {
        nil_class_ = lcs.empty() ? 0u : static_cast<unsigned>(lcs.size() - 1);
        if (dim_ == 0) nil_class_ = 0;
        bch_terms_.clear();
        for (auto& [w, c] : dynkin_terms(*nil_class_)) bch_terms_.push_back({c, w});
    } else {
        nil_class_.reset();
    }
}

unsigned LieAlgebra::require_nil_class() const {
    if (!nil_class_) throw ValidationError("Lie algebra is not nilpotent");
    return *nil_class_;
}

void LieAlgebra::check(const LieVector& v, const char* what) const {
    if (v.size() != dim_) {
        throw DimensionError(std::string(what) + ": vector of length " + std::to_string(v.size()) +
                             " in algebra of dim " + std::to_string(dim_));
    }
}

std::vector<StructureConstant> LieAlgebra::sparse_brackets() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (sgn(constant(i, j, k)) != 0) out.push_back({i, j, k, constant(i, j, k)});
    return out;
}

LieVector LieAlgebra::bracket(const LieVector& x, const LieVector& y) const {
    check(x, "bracket");
    check(y, "bracket");
    LieVector z(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const auto& c = constant(i, j, k);
                if (sgn(c) != 0) z[k] += xy * c;
            }
        }
    }
    return z;
}

RatMatrix LieAlgebra::ad_matrix(const LieVector& x) const {
    check(x, "ad_matrix");
    RatMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                const auto& c = constant(i, j, k);
                if (sgn(c) != 0) m(k, j) += x[i] * c;
            }
    }
    return m;
}

RatMatrix LieAlgebra::Ad_of_group(const LieVector& x) const {
    const unsigned cls = require_nil_class();
    const RatMatrix ad = ad_matrix(x);
    RatMatrix term = RatMatrix::identity(dim_);
    RatMatrix sum = term;
    for (unsigned k = 1; k < cls; ++k) {
        term = Rational(1, k) * (term * ad);
        sum = sum + term;
    }
    return sum;
}

LieVector LieAlgebra::bch(const LieVector& x, const LieVector& y) const {
    require_nil_class();
    check(x, "bch");
    check(y, "bch");
    LieVector out(dim_, Rational(0));
    for (const auto& term : bch_terms_) {
        LieVector v = term.word.back() ? y : x;
        for (auto it = term.word.rbegin() + 1; it != term.word.rend() && !is_zero(v); ++it) {
            v = bracket(*it ? y : x, v);
        }
        if (is_zero(v)) continue;
        for (std::size_t k = 0; k < dim_; ++k) out[k] += term.coefficient * v[k];
    }
    return out;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
    std::vector<Subspace> series;
    Subspace current = Subspace::full(dim_);
    series.push_back(current);
    while (!current.is_zero()) {
        std::vector<RatVector> gens;
        for (std::size_t i = 0; i < dim_; ++i) {
            const auto ei = unit_vector(dim_, i);
            for (const auto& v : current.basis_vectors()) gens.push_back(bracket(ei, v));
        }
        Subspace next = Subspace::span(dim_, gens);
        if (next.dim() == current.dim()) break;
        series.push_back(next);
        current = std::move(next);
    }
    return series;
}

Subspace LieAlgebra::center() const {
    std::vector<RatMatrix> blocks;
    for (std::size_t j = 0; j < dim_; ++j) blocks.push_back(ad_matrix(unit_vector(dim_, j)));
    // [x, e_j] = -ad(e_j) x, so the center is the common kernel.
    return kernel(vstack(blocks, dim_));
}

std::vector<Subspace> LieAlgebra::ascending_central_series() const {
    require_nil_class();
    std::vector<RatMatrix> ads;
    for (std::size_t j = 0; j < dim_; ++j) ads.push_back(ad_matrix(unit_vector(dim_, j)));
    std::vector<Subspace> series;
    Subspace current = Subspace::zero(dim_);
    while (!current.is_full()) {
        Subspace next = Subspace::full(dim_);
        for (const auto& a : ads) next = intersect(next, preimage(a, current));
        series.push_back(next);
        current = std::move(next);
    }
    return series;
}

AlgebraValidation validate(const LieAlgebra& alg) {
    AlgebraValidation out;
    const std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                if (alg.constant(i, j, k) + alg.constant(j, i, k) != 0) {
                    out.violations.push_back({AlgebraViolation::Kind::Antisymmetry,
                                              {i, j, k},
                                              "antisymmetry fails at " + triple(i, j, k) + ": c[i][j][k] = " +
                                                  pretty_rational(alg.constant(i, j, k)) + ", c[j][i][k] = " +
                                                  pretty_rational(alg.constant(j, i, k))});
                }
            }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                const auto ei = unit_vector(d, i), ej = unit_vector(d, j), ek = unit_vector(d, k);
                const auto s = alg.bracket(ei, alg.bracket(ej, ek)) + alg.bracket(ej, alg.bracket(ek, ei)) +
                               alg.bracket(ek, alg.bracket(ei, ej));
                if (!is_zero(s)) {
                    out.violations.push_back({AlgebraViolation::Kind::Jacobi,
                                              {i, j, k},
                                              "Jacobi identity fails for basis triple " + triple(i, j, k) +
                                                  ": sum = " + format_vector(s)});
                }
            }
    out.nil_class = alg.nil_class();
    if (!out.nil_class) {
        out.violations.push_back({AlgebraViolation::Kind::NotNilpotent,
                                  {},
                                  "lower central series does not reach {0}: algebra is not nilpotent"});
    }
    return out;
}

bool is_nilpotent_matrix(const RatMatrix& n) {
    if (!n.is_square()) return false;
    return n.pow(static_cast<unsigned>(n.rows())).is_zero();
}

RatMatrix exp_nilpotent(const RatMatrix& n, const Rational& t) {
    if (!n.is_square()) throw DimensionError("exp_nilpotent: matrix must be square");
    if (!is_nilpotent_matrix(n)) throw DomainError("exp_nilpotent: matrix is not nilpotent");
    const std::size_t d = n.rows();
    const RatMatrix tn = t * n;
    RatMatrix term = RatMatrix::identity(d);
    RatMatrix sum = term;
    for (std::size_t k = 1; k < d; ++k) {
        term = Rational(1, static_cast<unsigned long>(k)) * (term * tn);
        if (term.is_zero()) break;
        sum = sum + term;
    }
    return sum;
}

bool is_derivation(const RatMatrix& n, const LieAlgebra& alg) {
    const std::size_t d = alg.dim();
    if (n.rows() != d || n.cols() != d) throw DimensionError("is_derivation: operator must be dim x dim");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const auto ei = unit_vector(d, i), ej = unit_vector(d, j);
            const auto lhs = n.apply(alg.bracket(ei, ej));
            const auto rhs = alg.bracket(n.apply(ei), ej) + alg.bracket(ei, n.apply(ej));
            if (lhs != rhs) return false;
        }
    return true;
}

bool preserves_bracket(const RatMatrix& a, const LieAlgebra& alg) {
    const std::size_t d = alg.dim();
    if (a.rows() != d || a.cols() != d) throw DimensionError("preserves_bracket: operator must be dim x dim");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const auto ei = unit_vector(d, i), ej = unit_vector(d, j);
            if (a.apply(alg.bracket(ei, ej)) != alg.bracket(a.apply(ei), a.apply(ej))) return false;
        }
    return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t da = a.dim(), d = a.dim() + b.dim();
    std::vector<Rational> t(d * d * d, Rational(0));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) t[(i * d + j) * d + k] = a.constant(i, j, k);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                t[((da + i) * d + (da + j)) * d + (da + k)] = b.constant(i, j, k);
    return LieAlgebra(d, std::move(t));
}

}  // namespace adelic
