#pragma once

#include "adelic/ratlinalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace adelic {

/// Elements of the Lie algebra; by exponential coordinates also elements of
/// the unipotent group U = exp(u).
using LieVector = RatVector;

/// One entry c[i][j][k] of a sparse structure-constant list: [X_i, X_j] = Σ_k c X_k.
struct StructureConstant {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rational value;
};

struct AlgebraViolation {
    enum class Kind { Antisymmetry, Jacobi, NotNilpotent };
    Kind kind;
    std::array<std::size_t, 3> indices{};
    std::string message;
};

struct AlgebraValidation {
    std::vector<AlgebraViolation> violations;
    std::optional<unsigned> nil_class;
    bool ok() const { return violations.empty(); }
};

/// A finite-dimensional Lie algebra over Q given by structure constants.
///
/// The tensor is stored densely; construction never throws on axiom failures
/// so that `validate` can report them. Operations that need nilpotency (BCH,
/// Ad, ...) throw ValidationError on an algebra that is not nilpotent.
class LieAlgebra {
public:
    LieAlgebra() = default;

    /// From a dense tensor of size dim^3, index (i*dim + j)*dim + k.
    LieAlgebra(std::size_t dim, std::vector<Rational> tensor);

    /// From sparse triples with i < j; the (j, i) entries are filled in by
    /// antisymmetry.
    static LieAlgebra from_brackets(std::size_t dim, const std::vector<StructureConstant>& brackets);
    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Rational>& tensor() const { return tensor_; }

    /// Nilpotency class (0 for the zero algebra, 1 for abelian), or nullopt
    /// if the lower central series stalls before reaching {0}.
    std::optional<unsigned> nil_class() const { return nil_class_; }
    unsigned require_nil_class() const;

    /// The nonzero i < j entries, in lexicographic order.
    std::vector<StructureConstant> sparse_brackets() const;

    LieVector bracket(const LieVector& x, const LieVector& y) const;

    /// Matrix of y ↦ [x, y].
    RatMatrix ad_matrix(const LieVector& x) const;

    /// Finite exponential Σ_{k < class} ad(x)^k / k!, the automorphism Ad(exp x).
    RatMatrix Ad_of_group(const LieVector& x) const;

    /// exp(x) exp(y) = exp(bch(x, y)), truncated at the nilpotency class.
    LieVector bch(const LieVector& x, const LieVector& y) const;

    /// Lower central series u = C^1 ⊋ C^2 ⊋ ... ending in {0} (or stalling).
    std::vector<Subspace> lower_central_series() const;

    /// z^1 = center, z^{i+1}/z^i = center of u/z^i, ..., last term is u.
    std::vector<Subspace> ascending_central_series() const;

    Subspace center() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
    }

private:
    struct BchTerm {
        Rational coefficient;
        std::vector<bool> word;  // false = x, true = y; right-nested bracket
    };

    void check(const LieVector& v, const char* what) const;
    void finish_construction();

    std::size_t dim_ = 0;
    std::vector<Rational> tensor_;
    std::optional<unsigned> nil_class_;
    std::vector<BchTerm> bch_terms_;
};

AlgebraValidation validate(const LieAlgebra& alg);

/// Dynkin's series for log(e^X e^Y) grouped by bracket word, up to the given
/// degree. Exposed for testing.
std::vector<std::pair<std::vector<bool>, Rational>> dynkin_terms(unsigned max_degree);

/// Σ t^k n^k / k!; throws DomainError when n is not nilpotent.
RatMatrix exp_nilpotent(const RatMatrix& n, const Rational& t);

bool is_nilpotent_matrix(const RatMatrix& n);

/// n[x, y] = [n x, y] + [x, n y] on all basis pairs.
bool is_derivation(const RatMatrix& n, const LieAlgebra& alg);

/// a[x, y] = [a x, a y] on all basis pairs.
bool preserves_bracket(const RatMatrix& a, const LieAlgebra& alg);

/// Block-diagonal direct sum a ⊕ b.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace adelic
