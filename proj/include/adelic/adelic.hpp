#pragma once

#include "adelic/qmod1.hpp"
#include "adelic/ratlinalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace adelic {

/// A place of Q: the archimedean place or a prime. Orders ∞ first, then
/// primes ascending.
class Place {
public:
    static Place infinity() { return Place(0); }
    /// Throws DomainError when p is not prime.
    static Place prime(std::uint64_t p);

    bool is_infinity() const { return p_ == 0; }
    /// Precondition: !is_infinity().
    std::uint64_t p() const { return p_; }

    /// "inf" or the decimal prime.
    std::string str() const;

    friend auto operator<=>(const Place&, const Place&) = default;

private:
    explicit Place(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// A character λ_a of Q^d, a = (a_v) an adele vector with rational entries at
/// finitely many places and zero elsewhere.
///
/// Evaluation uses e = e_∞ Π e_p with e_∞(x) = e^{2πix} and
/// e_p(x) = e^{-2πi frac_p(x)}, so λ_a(q) has phase
/// <a_∞, q> - Σ_p frac_p(<a_p, q>) mod 1. Zero components are dropped, which
/// makes the representation canonical: distinct values are distinct
/// characters.
class AdeleCharacter {
public:
    using Components = std::map<Place, RatVector>;

    AdeleCharacter() = default;
    explicit AdeleCharacter(std::size_t dim) : dim_(dim) {}
    AdeleCharacter(std::size_t dim, Components comps);

    static AdeleCharacter trivial(std::size_t dim) { return AdeleCharacter(dim); }
    static AdeleCharacter archimedean(const RatVector& a);
    static AdeleCharacter at_prime(std::uint64_t p, const RatVector& a);

    std::size_t dim() const { return dim_; }
    const Components& components() const { return comps_; }
    bool is_trivial_representative() const { return comps_.empty(); }

    /// All stored component vectors as rows (the line-triviality constraints).
    RatMatrix constraint_matrix() const;

    friend bool operator==(const AdeleCharacter&, const AdeleCharacter&) = default;
    friend AdeleCharacter operator-(const AdeleCharacter& a, const AdeleCharacter& b);
    friend AdeleCharacter operator+(const AdeleCharacter& a, const AdeleCharacter& b);

    std::string str() const;

private:
    void canonicalize();

    std::size_t dim_ = 0;
    Components comps_;
};

Phase eval(const AdeleCharacter& lambda, const RatVector& q);

/// λ(t x) = 1 for all t ∈ Q.
bool line_trivial(const AdeleCharacter& lambda, const RatVector& x);

bool trivial_on_subspace(const AdeleCharacter& lambda, const Subspace& s);

/// Ad*(g)λ = λ ∘ g^{-1}, realized as a_v ↦ (g^{-1})^T a_v at every place.
/// Throws DomainError when g_action is singular.
AdeleCharacter coadjoint(const AdeleCharacter& lambda, const RatMatrix& g_action);

/// λ ∘ m for any linear m: a_v ↦ m^T a_v.
AdeleCharacter pullback(const AdeleCharacter& lambda, const RatMatrix& m);

}  // namespace adelic
