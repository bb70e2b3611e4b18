#include "adelic/catalog.hpp"

#include <algorithm>

namespace adelic {

namespace {

RatMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
    RatMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

// n x n block placed at (r0, c0) of a d x d matrix.
void place(RatMatrix& m, const RatMatrix& block, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) m(r0 + i, c0 + j) += block(i, j);
}

std::vector<std::pair<std::string, bool>> all_members(const std::vector<NamedLeviElement>& samples, bool member) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& s : samples) out.emplace_back(s.name, member);
    return out;
}

std::vector<std::pair<std::string, bool>> only_kernel(const std::vector<NamedLeviElement>& samples) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& s : samples) out.emplace_back(s.name, s.element.action == RatMatrix::identity(s.element.action.rows()));
    return out;
}

}  // namespace

const AdeleCharacter& CatalogFixture::lambda(const std::string& n) const {
    for (const auto& [name, l] : lambdas) {
        if (name == n) return l;
    }
    throw DomainError("fixture " + this->name + " has no character named '" + n + "'");
}

const NamedLeviElement& CatalogFixture::element(const std::string& n) const {
    for (const auto& e : named_elements) {
        if (e.name == n) return e;
    }
    throw DomainError("fixture " + this->name + " has no element named '" + n + "'");
}

LeviElement weyl_square(const LeviSystem& system, std::size_t i, std::size_t j, const Rational& a) {
    const LeviElement w = system.levi_multiply(
        system.levi_multiply(system.one_param(i, a), system.one_param(j, -1 / a)), system.one_param(i, a));
    return system.levi_multiply(w, w);
}

std::vector<NamedLeviElement> default_levi_samples(const LeviSystem& system,
                                                   const std::vector<NamedLeviElement>& extra) {
    std::vector<NamedLeviElement> out{{"identity", system.levi_identity()}};
    const auto& table = system.central_table();
    for (std::size_t c = 0; c < table.size(); ++c) {
        if (c != table.identity()) out.push_back({table.labels[c], system.central(c)});
    }
    for (std::size_t i = 0; i < system.one_param_gens().size(); ++i) {
        out.push_back({"exp(N" + std::to_string(i) + ")", system.one_param(i, 1)});
    }
    for (const auto& e : extra) {
        const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) { return o.name == e.name; });
        if (!dup) out.push_back(e);
    }
    return out;
}

std::vector<Subspace> basis_generated_ideals(const LeviSystem& system) {
    const auto ops = full_operator_set(system).all();
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < system.dim(); ++i) {
        const std::vector<RatVector> seed{unit_vector(system.dim(), i)};
        out.push_back(smallest_invariant_containing(system.dim(), seed, ops));
    }
    return out;
}

CatalogFixture abelian_radical_system(Sl2Rep rep, unsigned k) {
    if (rep == Sl2Rep::Standard) k = 1;
    if (k < 1) throw DomainError("abelian_radical_system: Sym^k needs k >= 1");
    const std::size_t d = k + 1;

    // Basis x^{k-i} y^i; e = x d/dy, f = y d/dx.
    RatMatrix e(d, d), f(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (i > 0) e(i - 1, i) = static_cast<long>(i);
        if (i + 1 < d) f(i + 1, i) = static_cast<long>(k - i);
    }
    std::vector<std::string> names;
    if (k == 1) {
        names = {"x", "y"};
    } else {
        for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(k - i) + "y" + std::to_string(i));
    }

    const bool minus_one_trivial = k % 2 == 0;
    CentralTable central = CentralTable::trivial(d);
    if (minus_one_trivial) {
        const auto id = RatMatrix::identity(d);
        central = CentralTable{{"e", "-I"}, {id, id}, {{0, 1}, {1, 0}}};
    }

    CatalogFixture fx;
    fx.name = k == 1 ? "abelian-sl2" : "abelian-sl2-sym" + std::to_string(k);
    fx.system = std::make_shared<const LeviSystem>(LieAlgebra::abelian(d), std::vector<RatMatrix>{e, f}, central, names);
    const auto& sys = *fx.system;
    if (!minus_one_trivial) fx.named_elements.push_back({"-I", weyl_square(sys, 0, 1)});

    RatVector e1 = zero_vector(d);
    e1[0] = 1;
    RatVector half_e1 = zero_vector(d);
    half_e1[0] = Rational(1, 2);
    fx.lambdas = {{"zero", AdeleCharacter::trivial(d)},
                  {"e1_inf", AdeleCharacter::archimedean(e1)},
                  {"e1_2adic", AdeleCharacter::at_prime(2, half_e1)}};

    const auto samples = default_levi_samples(sys, fx.named_elements);
    fx.expected.push_back({"zero", d, d, all_members(samples, true), "lifted characters of L: 1_G, epsilon"});
    for (const char* n : {"e1_inf", "e1_2adic"}) {
        fx.expected.push_back({n, 0, 0, only_kernel(samples), "tilde-chi for chi in Char(F), F = ker(L -> GL(V))"});
    }
    return fx;
}

CatalogFixture heisenberg_system(unsigned n) {
    if (n < 1) throw DomainError("heisenberg_system: n must be >= 1");
    const std::size_t m = 2 * n;
    const std::size_t d = m + 1;
    const std::size_t z = m;

    std::vector<StructureConstant> brackets;
    for (std::size_t i = 0; i < n; ++i) brackets.push_back({i, n + i, z, 1});
    LieAlgebra alg = LieAlgebra::from_brackets(d, brackets);

    // Root vectors of sp_2n in the form [[A, B], [C, -A^T]], extended by 0 on z.
    std::vector<RatMatrix> gens;
    std::vector<std::size_t> long_root_b(n), long_root_c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            RatMatrix g(d, d);
            g(i, j) = 1;
            g(n + j, n + i) = -1;
            gens.push_back(g);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            RatMatrix g(d, d);
            g(i, n + j) += 1;
            if (i != j) g(j, n + i) += 1;
            if (i == j) long_root_b[i] = gens.size();
            gens.push_back(g);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            RatMatrix g(d, d);
            g(n + i, j) += 1;
            if (i != j) g(n + j, i) += 1;
            if (i == j) long_root_c[i] = gens.size();
            gens.push_back(g);
        }

    std::vector<std::string> names;
    for (const char* prefix : {"X", "Y"})
        for (std::size_t i = 0; i < n; ++i) names.push_back(n == 1 ? prefix : prefix + std::to_string(i + 1));
    names.push_back("Z");

    CatalogFixture fx;
    fx.name = "heisenberg-" + std::to_string(n);
    fx.system = std::make_shared<const LeviSystem>(std::move(alg), std::move(gens), CentralTable::trivial(d), names);
    const auto& sys = *fx.system;

    LeviElement minus_one = sys.levi_identity();
    for (std::size_t i = 0; i < n; ++i) {
        minus_one = sys.levi_multiply(minus_one, weyl_square(sys, long_root_b[i], long_root_c[i]));
    }
    fx.named_elements.push_back({"-I", minus_one});

    RatVector zstar = zero_vector(d), xstar = zero_vector(d);
    zstar[z] = 1;
    xstar[0] = 1;
    fx.lambdas = {{"zero", AdeleCharacter::trivial(d)},
                  {"center", AdeleCharacter::archimedean(zstar)},
                  {"V", AdeleCharacter::archimedean(xstar)}};

    const auto samples = default_levi_samples(sys, fx.named_elements);
    fx.expected.push_back({"zero", d, d, all_members(samples, true), "lifted characters of Sp: 1_G, 1_H, epsilon"});
    fx.expected.push_back({"center", 0, 1, only_kernel(samples), "tilde-chi_lambda, chi_lambda a character of Z"});
    fx.expected.push_back({"V", 1, 1, only_kernel(samples), "1_Z"});
    return fx;
}

CatalogFixture free_nilpotent_system(unsigned n) {
    if (n < 3) throw DomainError("free_nilpotent_system: n must be >= 3 (n = 2 is the Heisenberg algebra)");
    // Wedge basis w_ab (a < b) in lexicographic order after v_0 .. v_{n-1}.
    std::vector<std::vector<std::size_t>> wedge(n, std::vector<std::size_t>(n, 0));
    std::size_t next = n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) wedge[a][b] = next++;
    const std::size_t d = next;

    std::vector<StructureConstant> brackets;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) brackets.push_back({a, b, wedge[a][b], 1});
    LieAlgebra alg = LieAlgebra::from_brackets(d, brackets);

    // E_ij on V and the induced derivation on ∧²V.
    std::vector<RatMatrix> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            RatMatrix g(d, d);
            place(g, elementary(n, i, j), 0, 0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    // E_ij (v_a ∧ v_b) = δ_ja v_i ∧ v_b + δ_jb v_a ∧ v_i.
                    auto add = [&](std::size_t p, std::size_t q, long sign) {
                        if (p == q) return;
                        if (p > q) std::swap(p, q), sign = -sign;
                        g(wedge[p][q], wedge[a][b]) += sign;
                    };
                    if (j == a) add(i, b, 1);
                    if (j == b) add(a, i, 1);
                }
            gens.push_back(g);
        }

    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) names.push_back("v" + std::to_string(a + 1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) names.push_back("w" + std::to_string(a + 1) + std::to_string(b + 1));

    CatalogFixture fx;
    fx.name = "free-" + std::to_string(n);
    fx.system = std::make_shared<const LeviSystem>(std::move(alg), std::move(gens), CentralTable::trivial(d), names);
    const auto& sys = *fx.system;

    RatVector vstar = zero_vector(d), wstar = zero_vector(d);
    vstar[0] = 1;
    wstar[n] = 1;
    fx.lambdas = {{"zero", AdeleCharacter::trivial(d)},
                  {"V", AdeleCharacter::archimedean(vstar)},
                  {"wedge", AdeleCharacter::archimedean(wstar)}};

    const std::size_t wdim = d - n;
    const auto samples = default_levi_samples(sys, fx.named_elements);
    fx.expected.push_back({"zero", d, d, all_members(samples, true), "lifted characters of L: 1_G, tilde-chi o p"});
    fx.expected.push_back({"V", wdim, wdim, only_kernel(samples), "1 on the wedge part"});
    fx.expected.push_back({"wedge", 0, 0, only_kernel(samples), "delta_e"});
    return fx;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"abelian-sl2", "heisenberg-1", "heisenberg-2", "free-3"};
    return names;
}

CatalogFixture catalog_fixture(const std::string& name) {
    if (name == "abelian-sl2") return abelian_radical_system(Sl2Rep::Standard);
    if (name == "heisenberg-1") return heisenberg_system(1);
    if (name == "heisenberg-2") return heisenberg_system(2);
    if (name == "free-3") return free_nilpotent_system(3);
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown catalog system '" + name + "' (known: " + known + ")");
}

}  // namespace adelic
