#pragma once

#include "adelic/adelic.hpp"
#include "adelic/group.hpp"
#include "adelic/trace_function.hpp"

#include <string>
#include <utility>
#include <vector>

namespace adelic {

/// Generators of the action of G on u, enough to decide invariance of
/// subspaces: one-parameter Levi generators N_i, ad(e_j) for every basis
/// vector, and the central actions together with their inverses.
struct OperatorSet {
    std::vector<RatMatrix> levi;
    std::vector<RatMatrix> adjoint;
    std::vector<RatMatrix> central;

    /// Nilpotent generators (levi, then adjoint).
    std::vector<RatMatrix> infinitesimal() const;
    std::vector<RatMatrix> all() const;
};

OperatorSet full_operator_set(const LeviSystem& system);

/// W(λ): the X with λ trivial on the line QX.
Subspace line_triviality_locus(const AdeleCharacter& lambda);

/// k_λ: largest G-invariant subspace of W(λ).
Subspace compute_k(const AdeleCharacter& lambda, const LeviSystem& system);

/// p_λ: the X with N X, ad(e_j) X, (α_c - I) X all in k_λ.
Subspace compute_p(const AdeleCharacter& lambda, const LeviSystem& system);
Subspace compute_p(const Subspace& k, const LeviSystem& system);

/// Preimage in u of the G-fixed part of the center of u/k_λ, computed in
/// explicit quotient coordinates. Independent route to p_λ.
Subspace fixed_center_of_quotient(const AdeleCharacter& lambda, const LeviSystem& system);
Subspace fixed_center_of_quotient(const Subspace& k, const LeviSystem& system);

/// l ∈ L_λ iff (α(l) - I) u ⊆ k_λ.
bool in_L_lambda(const LeviElement& l, const Subspace& k);

/// χ_λ(exp x) = λ(x) for x ∈ p; throws DomainError when x ∉ p.
Phase chi_lambda(const AdeleCharacter& lambda, const LieVector& x, const Subspace& p);

/// Smallest G^T-invariant subspace containing the infinitesimal orbit
/// directions M^T a_v and (α_c - I)^T a_v; the coadjoint orbit closure of λ is
/// λ + (this subspace over the adeles).
Subspace orbit_direction_V(const AdeleCharacter& lambda, const LeviSystem& system);

/// p_λ == annihilator(orbit_direction_V(λ)).
bool duality_check(const AdeleCharacter& lambda, const LeviSystem& system);

/// Complete invariant of the quasi-orbit of λ: p_λ together with λ restricted
/// to p_λ. The restriction is stored exactly as an adele vector on
/// coordinates of the canonical basis of p_λ; chi_values are the phases of λ
/// on that basis.
struct QuasiOrbitKey {
    Subspace p;
    std::vector<Phase> chi_values;
    AdeleCharacter restriction;

    friend bool operator==(const QuasiOrbitKey& a, const QuasiOrbitKey& b) {
        return a.p == b.p && a.restriction == b.restriction;
    }
};

QuasiOrbitKey quasi_orbit_key(const AdeleCharacter& lambda, const LeviSystem& system);
bool same_quasi_orbit(const AdeleCharacter& a, const AdeleCharacter& b, const LeviSystem& system);

/// A Levi element with a stable name, used as a classification sample.
struct NamedLeviElement {
    std::string name;
    LeviElement element;
};

struct MembershipSample {
    std::string element;
    bool member = false;
    friend bool operator==(const MembershipSample&, const MembershipSample&) = default;
};

struct ClassificationReport {
    AdeleCharacter lambda;
    Subspace k;
    Subspace p;
    std::vector<Phase> chi_on_p_basis;
    Subspace orbit_V;
    bool duality_ok = false;
    std::vector<MembershipSample> l_lambda_samples;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Φ_(λ,φ)(l exp x) = φ(l) χ_λ(x) when l ∈ L_λ and x ∈ p_λ, and 0 otherwise.
/// Throws DomainError when a TildeCentralCharacter is not a homomorphism on a
/// central subgroup contained in L_λ.
TraceFunction make_character(const AdeleCharacter& lambda, const LeviCharacter& phi,
                             std::shared_ptr<const LeviSystem> system);

/// Checks that phi's support is a subgroup of central elements lying in
/// L_λ (given by k) and that its values form a homomorphism. Returns the
/// first problem found, or an empty string.
std::string check_tilde_character(const TildeCentralCharacter& phi, const Subspace& k, const LeviSystem& system);

ClassificationReport classify(const AdeleCharacter& lambda, const LeviSystem& system,
                              const std::vector<NamedLeviElement>& samples);

}  // namespace adelic
