#pragma once

#include "adelic/adelic.hpp"
#include "adelic/chars.hpp"
#include "adelic/group.hpp"

#include <memory>
#include <string>
#include <vector>

namespace adelic {

struct ExpectedCase {
    std::string lambda_name;
    std::size_t k_dim = 0;
    std::size_t p_dim = 0;
    /// (named element, expected membership in L_λ).
    std::vector<std::pair<std::string, bool>> l_lambda;
    std::string characters;
};

struct CatalogFixture {
    std::string name;
    std::shared_ptr<const LeviSystem> system;
    std::vector<std::pair<std::string, AdeleCharacter>> lambdas;
    std::vector<ExpectedCase> expected;
    /// Elements worth sampling explicitly (for instance -I as a word).
    std::vector<NamedLeviElement> named_elements;

    const AdeleCharacter& lambda(const std::string& name) const;
    const NamedLeviElement& element(const std::string& name) const;
};

enum class Sl2Rep { Standard, Sym };

/// SL2 ⋉ V with V the standard representation (k = 1) or Sym^k.
CatalogFixture abelian_radical_system(Sl2Rep rep, unsigned k = 1);

/// Sp_2n ⋉ H_{2n+1}.
CatalogFixture heisenberg_system(unsigned n);

/// SL_n ⋉ (V ⊕ ∧²V), the free 2-step nilpotent algebra on n generators.
/// Throws DomainError for n < 3.
CatalogFixture free_nilpotent_system(unsigned n);

/// Catalog names: abelian-sl2, heisenberg-1, heisenberg-2, free-3.
const std::vector<std::string>& catalog_names();
/// Throws DomainError for an unknown name.
CatalogFixture catalog_fixture(const std::string& name);

/// Default classification samples: identity, every central label, exp(N_i)
/// for each generator, then the extra named elements.
std::vector<NamedLeviElement> default_levi_samples(const LeviSystem& system,
                                                   const std::vector<NamedLeviElement>& extra = {});

/// (exp(a N_i) exp(-N_j / a) exp(a N_i))^2 for an sl2-triple (N_i, N_j): -1 on
/// the corresponding weight-one part.
LeviElement weyl_square(const LeviSystem& system, std::size_t i, std::size_t j, const Rational& a = 1);

/// smallest_invariant_containing({v}) for each basis vector v, as subspaces.
std::vector<Subspace> basis_generated_ideals(const LeviSystem& system);

}  // namespace adelic
