#pragma once

#include "adelic/nilpotent.hpp"

#include <memory>
#include <string>
#include <vector>

namespace adelic {

/// A finite central subgroup of L given by labels, an action of each label on
/// u and a multiplication table of label indices.
///
/// It carries exactly the part of L that the action on u cannot see (the
/// kernel F of L → GL(u)), or any other central elements the user wants to
/// address by name.
struct CentralTable {
    std::vector<std::string> labels;
    std::vector<RatMatrix> actions;
    std::vector<std::vector<std::size_t>> table;

    static CentralTable trivial(std::size_t dim);

    std::size_t size() const { return labels.size(); }
    /// Index of the identity label (throws ValidationError if none).
    std::size_t identity() const;
    std::size_t inverse(std::size_t label) const;
    std::size_t index_of(const std::string& label) const;

    friend bool operator==(const CentralTable&, const CentralTable&) = default;
};

/// One factor exp(t N_generator) of a Levi word.
struct WordLetter {
    std::size_t generator = 0;
    Rational t;
    friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

/// An element of L: a central label together with its action on u.
/// Equality is equality of the (label, action) pair; the word records how the
/// element was built and is informational only.
struct LeviElement {
    std::size_t label = 0;
    RatMatrix action;
    std::vector<WordLetter> word;

    friend bool operator==(const LeviElement& a, const LeviElement& b) {
        return a.label == b.label && a.action == b.action;
    }
};

/// g = l · exp(uni), l ∈ L, uni ∈ u.
struct GroupElement {
    LeviElement levi;
    LieVector uni;

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.levi == b.levi && a.uni == b.uni;
    }
};

struct SystemViolation {
    std::string check;
    std::string message;
};

/// G = L ⋉ U with U = exp(u) and L generated by the one-parameter subgroups
/// exp(t N_i) together with a finite central table.
class LeviSystem {
public:
    LeviSystem() = default;

    /// Throws ValidationError listing every violated axiom.
    LeviSystem(LieAlgebra algebra, std::vector<RatMatrix> one_param_gens, CentralTable central,
               std::vector<std::string> basis_names = {});

    /// Every axiom failure of the given data; empty iff it defines a system.
    static std::vector<SystemViolation> check(const LieAlgebra& algebra, const std::vector<RatMatrix>& gens,
                                              const CentralTable& central);

    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t dim() const { return algebra_.dim(); }
    const std::vector<RatMatrix>& one_param_gens() const { return gens_; }
    const CentralTable& central_table() const { return central_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }

    LeviElement levi_identity() const;
    LeviElement one_param(std::size_t i, const Rational& t) const;
    LeviElement central(std::size_t label) const;
    LeviElement word(const std::vector<WordLetter>& letters) const;
    LeviElement levi_multiply(const LeviElement& a, const LeviElement& b) const;
    LeviElement levi_inverse(const LeviElement& a) const;

    GroupElement identity() const;
    GroupElement from_levi(const LeviElement& l) const { return {l, zero_vector(dim())}; }
    GroupElement from_unipotent(const LieVector& x) const;

    /// (l1, x1)(l2, x2) = (l1 l2, bch(α(l2)^{-1} x1, x2)).
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    /// h a h^{-1}.
    GroupElement conjugate(const GroupElement& a, const GroupElement& h) const;
    /// a b a^{-1} b^{-1}.
    GroupElement commutator(const GroupElement& a, const GroupElement& b) const;
    /// Ad(g) on u: g exp(y) g^{-1} = exp(Ad(g) y).
    RatMatrix adjoint_action(const GroupElement& g) const;

    std::string describe(const LeviElement& l) const;
    std::string describe(const GroupElement& g) const;

    friend bool operator==(const LeviSystem& a, const LeviSystem& b) {
        return a.algebra_ == b.algebra_ && a.gens_ == b.gens_ && a.central_ == b.central_ &&
               a.basis_names_ == b.basis_names_;
    }

private:
    void require(const LieVector& x) const;
    void require(const LeviElement& l) const;

    LieAlgebra algebra_;
    std::vector<RatMatrix> gens_;
    CentralTable central_;
    std::vector<std::string> basis_names_;
};

/// The product system G1 × G2 with the block-wise embeddings and projection.
/// Product labels are indexed first_label * second_size + second_label.
struct DirectSum {
    LeviSystem system;
    std::size_t first_dim = 0;
    std::size_t second_dim = 0;
    std::size_t first_gens = 0;
    std::size_t first_identity = 0;
    std::size_t second_identity = 0;
    std::size_t second_table_size = 0;

    GroupElement embed_first(const GroupElement& g) const;
    GroupElement embed_second(const GroupElement& g) const;
    /// Splits an element of the product into its two blocks. Throws
    /// DomainError when the action is not block diagonal.
    std::pair<GroupElement, GroupElement> split(const GroupElement& g) const;
};

DirectSum direct_sum(const LeviSystem& a, const LeviSystem& b);

}  // namespace adelic
