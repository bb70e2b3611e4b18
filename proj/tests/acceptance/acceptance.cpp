#include "fixtures.hpp"

#include "adelic/traces.hpp"
#include "adelic/verify.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace fixtures;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && budget_s > 0 && secs > budget_s) {
        out.ok = false;
        out.detail = "over the " + std::to_string(budget_s) + " s budget";
    }
    if (!out.ok) ++failures;
    std::printf("%s  %2d  %-44s %7.2f s%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

bool is_identity(const RatMatrix& m) { return m == RatMatrix::identity(m.rows()); }
bool is_minus_identity(const RatMatrix& m) { return m == Rational(-1) * RatMatrix::identity(m.rows()); }

std::vector<LeviElement> distinguished(const CatalogFixture& fx) {
    std::vector<LeviElement> out;
    for (const auto& n : fx.named_elements) out.push_back(n.element);
    return out;
}

/// uni lies in the span of the listed coordinates.
bool supported_on(const RatVector& x, const std::vector<std::size_t>& coords) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) != 0 && std::find(coords.begin(), coords.end(), i) == coords.end()) return false;
    }
    return true;
}

Subspace coords_span(std::size_t d, const std::vector<std::size_t>& coords) {
    std::vector<RatVector> vs;
    for (auto i : coords) vs.push_back(unit_vector(d, i));
    return Subspace::span(d, vs);
}

TildeCentralCharacter epsilon_of(std::size_t dim, std::size_t identity_label) {
    return {{{identity_label, RatMatrix::identity(dim), Phase()},
             {identity_label, Rational(-1) * RatMatrix::identity(dim), Phase(q(1, 2))}}};
}

/// L_λ membership oracle: the action fixes u pointwise modulo k.
bool acts_trivially_mod(const RatMatrix& action, const Subspace& k) {
    const std::size_t d = action.rows();
    for (std::size_t i = 0; i < d; ++i) {
        if (!k.contains(action.apply(unit_vector(d, i)) - unit_vector(d, i))) return false;
    }
    return true;
}

/// frac_p by inversion modulo p^k rather than by the library routine.
Rational frac_p_by_inverse(const Rational& x, unsigned long p) {
    Integer den = x.get_den(), pk = 1;
    while (den % p == 0) den /= p, pk *= p;
    if (pk == 1) return 0;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t());
    Integer num = (Integer(x.get_num()) * inv) % pk;
    if (num < 0) num += pk;
    Rational f(num, pk);
    f.canonicalize();
    return f;
}

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    status = pclose(pipe);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct NamedTrace {
    std::string name;
    TraceFunction phi;
    std::vector<LeviElement> special;
};

}  // namespace

int main() {
    std::printf("acceptance suite\n");

    criterion(1, "SL2 standard fixture", 1.0, [] {
        Outcome out;
        const auto fx = abelian_radical_system(Sl2Rep::Standard);
        const auto sys = fx.system;
        Sampler rng(1001);
        rng.set_distinguished(distinguished(fx));

        auto samples = default_levi_samples(*sys, fx.named_elements);
        for (int i = 0; i < 50; ++i) samples.push_back({"random" + std::to_string(i), rng.levi(*sys)});

        const auto zero = classify(fx.lambda("zero"), *sys, samples);
        out.require(zero.k.is_full() && zero.p.is_full(), "lambda = 0 does not give (u, u)");
        for (const auto& s : zero.l_lambda_samples) out.require(s.member, "lambda = 0: " + s.element + " not in L_lambda");

        const auto e1 = fx.lambda("e1_inf");
        const auto r = classify(e1, *sys, default_levi_samples(*sys, fx.named_elements));
        out.require(r.k.is_zero() && r.p.is_zero(), "e1* does not give ({0}, {0})");
        for (const auto& s : r.l_lambda_samples) {
            if (s.element == "-I") out.require(!s.member, "-I in L_lambda for e1*");
            if (s.element == "identity") out.require(s.member, "I not in L_lambda for e1*");
        }

        const auto one = make_character(fx.lambda("zero"), ConstantOne{}, sys);
        const auto eps = make_character(fx.lambda("zero"), epsilon_of(2, sys->central_table().identity()), sys);
        const auto delta = make_character(e1, ConstantOne{}, sys);
        int minus_hits = 0, identity_hits = 0;
        for (int i = 0; i < 200; ++i) {
            const auto g = i == 0 ? sys->identity() : rng.element(*sys);
            const bool id_action = is_identity(g.levi.action), minus = is_minus_identity(g.levi.action);
            minus_hits += minus;
            identity_hits += g == sys->identity();
            out.require(one(g).is_one(), "1_G mismatch at " + sys->describe(g));
            const auto eps_oracle =
                id_action ? CharValue::one() : minus ? CharValue::root(Phase(q(1, 2))) : CharValue::zero();
            out.require(eps(g) == eps_oracle, "epsilon mismatch at " + sys->describe(g));
            const auto delta_oracle = g == sys->identity() ? CharValue::one() : CharValue::zero();
            out.require(delta(g) == delta_oracle, "delta_e mismatch at " + sys->describe(g));
        }
        out.require(minus_hits > 0 && identity_hits > 0, "samples never reached -I or e");
        return out;
    });

    criterion(2, "Heisenberg fixtures n = 1, 2", 5.0, [] {
        Outcome out;
        for (unsigned n : {1u, 2u}) {
            const auto fx = heisenberg_system(n);
            const auto sys = fx.system;
            const std::size_t d = sys->dim();
            const auto z = coords_span(d, {d - 1});
            const std::string tag = "n=" + std::to_string(n) + ": ";
            Sampler rng(1100 + n);
            rng.set_distinguished(distinguished(fx));

            struct Row {
                const char* lambda;
                Subspace k, p;
            };
            const Row rows[] = {{"zero", Subspace::full(d), Subspace::full(d)}, {"V", z, z}, {"center", Subspace::zero(d), z}};
            std::vector<NamedLeviElement> samples = default_levi_samples(*sys, fx.named_elements);
            for (int i = 0; i < 30; ++i) samples.push_back({"random" + std::to_string(i), rng.levi(*sys)});
            for (const auto& row : rows) {
                const auto r = classify(fx.lambda(row.lambda), *sys, samples);
                out.require(r.k == row.k, tag + row.lambda + ": k differs");
                out.require(r.p == row.p, tag + row.lambda + ": p differs");
                for (std::size_t i = 0; i < samples.size(); ++i) {
                    const bool expected = row.k.is_full() || is_identity(samples[i].element.action);
                    out.require(r.l_lambda_samples[i].member == expected, tag + row.lambda + ": L_lambda at " + samples[i].name);
                    out.require(expected == acts_trivially_mod(samples[i].element.action, row.k),
                                tag + row.lambda + ": L_lambda oracle disagrees at " + samples[i].name);
                }
            }

            // tilde-chi for several characters of Z, plus 1_Z, 1_G, 1_H and epsilon.
            std::vector<std::pair<Rational, TraceFunction>> tildes;
            for (const Rational& c : {q(1), q(1, 3), q(-2, 5), q(7, 4)}) {
                RatVector a(d);
                a[d - 1] = c;
                tildes.emplace_back(c, make_character(AdeleCharacter::archimedean(a), ConstantOne{}, sys));
            }
            const auto one_z = make_character(fx.lambda("V"), ConstantOne{}, sys);
            const auto one_g = make_character(fx.lambda("zero"), ConstantOne{}, sys);
            const auto id = sys->levi_identity();
            const auto one_h = make_character(
                fx.lambda("zero"), PluginCharacter{[id](const LeviElement& l) { return l == id ? CharValue::one() : CharValue::zero(); }, "1_H"},
                sys);
            const auto eps = make_character(fx.lambda("zero"), epsilon_of(d, sys->central_table().identity()), sys);
            int central_hits = 0;
            for (int i = 0; i < 200; ++i) {
                auto g = rng.element(*sys);
                if (i % 8 == 0) g = sys->from_unipotent(rng.rational() * unit_vector(d, d - 1));
                const bool on_z = is_identity(g.levi.action) && supported_on(g.uni, {d - 1});
                central_hits += on_z;
                for (const auto& [c, phi] : tildes) {
                    const auto oracle = on_z ? CharValue::root(Phase(c * g.uni[d - 1])) : CharValue::zero();
                    out.require(phi(g) == oracle, tag + "tilde-chi mismatch at " + sys->describe(g));
                }
                out.require(one_z(g) == (on_z ? CharValue::one() : CharValue::zero()), tag + "1_Z mismatch");
                out.require(one_g(g).is_one(), tag + "1_G mismatch");
                out.require(one_h(g) == (is_identity(g.levi.action) ? CharValue::one() : CharValue::zero()), tag + "1_H mismatch");
                const auto eps_oracle = is_identity(g.levi.action)       ? CharValue::one()
                                        : is_minus_identity(g.levi.action) ? CharValue::root(Phase(q(1, 2)))
                                                                         : CharValue::zero();
                out.require(eps(g) == eps_oracle, tag + "epsilon mismatch");
            }
            out.require(central_hits > 10, tag + "too few central samples");
        }
        return out;
    });

    criterion(3, "free 2-step nilpotent fixture n = 3", 5.0, [] {
        Outcome out;
        const auto fx = free_nilpotent_system(3);
        const auto sys = fx.system;
        const auto z = coords_span(6, {3, 4, 5});
        const auto u = Subspace::full(6), zero = Subspace::zero(6);
        const std::pair<const char*, Subspace> rows[] = {{"wedge", zero}, {"V", z}, {"zero", u}};
        for (const auto& [name, expected] : rows) {
            out.require(compute_k(fx.lambda(name), *sys) == expected, std::string(name) + ": k differs");
            out.require(compute_p(fx.lambda(name), *sys) == expected, std::string(name) + ": p differs");
        }
        const auto ideals = basis_generated_ideals(*sys);
        for (const auto& ideal : ideals) out.require(ideal == z || ideal == u, "unexpected invariant ideal");
        bool saw_z = false, saw_u = false;
        for (const auto& ideal : ideals) saw_z = saw_z || ideal == z, saw_u = saw_u || ideal == u;
        out.require(saw_z && saw_u, "ideal scan misses z or u");
        // Each basis ideal is closed under every operator.
        const auto ops = full_operator_set(*sys);
        for (const auto& ideal : ideals)
            for (const auto& m : ops.infinitesimal())
                for (const auto& b : ideal.basis_vectors()) out.require(ideal.contains(m.apply(b)), "ideal not invariant");
        return out;
    });

    // Shared random suite for the duality criteria.
    struct SuiteEntry {
        std::shared_ptr<const LeviSystem> sys;
        AdeleCharacter lambda;
    };
    std::vector<SuiteEntry> suite;
    {
        Sampler rng(1400);
        for (const auto& name : catalog_names()) {
            const auto fx = catalog_fixture(name);
            for (int i = 0; i < 100; ++i) suite.push_back({fx.system, rng.character(fx.system->dim())});
        }
    }

    criterion(4, "duality p = annihilator(V)", 30.0, [&] {
        Outcome out;
        for (const auto& [sys, lambda] : suite) {
            const auto p = compute_p(lambda, *sys);
            const auto v = orbit_direction_V(lambda, *sys);
            out.require(p == annihilator(v), "duality fails");
            out.require(p.dim() + v.dim() == sys->dim(), "dimensions do not add up");
            for (const auto& a : v.basis_vectors())
                for (const auto& b : p.basis_vectors()) out.require(sgn(dot(a, b)) == 0, "p not orthogonal to V");
        }
        return out;
    });

    criterion(5, "p = fixed center of the quotient", 30.0, [&] {
        Outcome out;
        for (const auto& [sys, lambda] : suite) {
            const auto k = compute_k(lambda, *sys);
            const auto p = compute_p(lambda, *sys);
            out.require(p == fixed_center_of_quotient(lambda, *sys), "compute_p differs from the quotient oracle");
            const auto ops = full_operator_set(*sys);
            for (const auto& x : p.basis_vectors()) {
                for (const auto& m : ops.infinitesimal()) out.require(k.contains(m.apply(x)), "[p, u] not in k");
                for (const auto& c : ops.central) out.require(k.contains(c.apply(x) - x), "central action moves p");
            }
        }
        return out;
    });

    criterion(6, "k = p intersect W", 30.0, [&] {
        Outcome out;
        for (const auto& [sys, lambda] : suite) {
            const auto k = compute_k(lambda, *sys);
            out.require(k == intersect(compute_p(lambda, *sys), line_triviality_locus(lambda)), "k identity fails");
            for (const auto& x : k.basis_vectors()) out.require(line_trivial(lambda, x), "k leaves W");
        }
        return out;
    });

    criterion(7, "BCH and Ad suite, classes 2 and 3", 30.0, [] {
        Outcome out;
        const UpperTriangular n4(4);
        std::vector<std::pair<std::string, LieAlgebra>> algebras{{"h3", h3()},
                                                                 {"heisenberg-2", heisenberg_system(2).system->algebra()},
                                                                 {"free-3", free_nilpotent_system(3).system->algebra()},
                                                                 {"n4", n4.algebra}};
        Sampler rng(1700);
        for (const auto& [name, alg] : algebras) {
            const std::size_t d = alg.dim();
            for (int i = 0; i < 200; ++i) {
                const auto x = rng.vector(d), y = rng.vector(d), w = rng.vector(d);
                out.require(alg.bch(alg.bch(x, y), w) == alg.bch(x, alg.bch(y, w)), name + ": associativity");
                out.require(alg.Ad_of_group(alg.bch(x, y)) == alg.Ad_of_group(x) * alg.Ad_of_group(y), name + ": Ad");
                out.require(is_zero(alg.bch(x, -x)), name + ": bch(x, -x)");
            }
        }
        out.require(n4.algebra.nil_class() == 3u, "n4 is not class 3");
        for (int i = 0; i < 200; ++i) {
            const auto x = rng.vector(6), y = rng.vector(6);
            const auto xy = n4.algebra.bracket(x, y);
            const auto closed = x + y + q(1, 2) * xy +
                                q(1, 12) * (n4.algebra.bracket(x, xy) + n4.algebra.bracket(y, n4.algebra.bracket(y, x)));
            out.require(n4.algebra.bch(x, y) == closed, "Dynkin series differs from the closed formula");
            out.require(n4.from_matrix(mlog(mexp(n4.to_matrix(x)) * mexp(n4.to_matrix(y)))) == closed,
                        "matrix log(exp exp) differs from the closed formula");
        }
        return out;
    });

    criterion(8, "trace axioms for constructed characters", 60.0, [] {
        Outcome out;
        std::vector<std::pair<std::shared_ptr<const LeviSystem>, NamedTrace>> traces;
        Sampler pick(1800);
        for (const auto& name : catalog_names()) {
            const auto fx = catalog_fixture(name);
            const auto sys = fx.system;
            const auto dist = distinguished(fx);
            for (const auto& [lname, lambda] : fx.lambdas)
                traces.push_back({sys, {name + "/" + lname, make_character(lambda, ConstantOne{}, sys), dist}});
            const auto id = sys->levi_identity();
            traces.push_back({sys, {name + "/1_H", make_character(AdeleCharacter::trivial(sys->dim()),
                                                                  PluginCharacter{[id](const LeviElement& l) {
                                                                      return l == id ? CharValue::one() : CharValue::zero();
                                                                  }},
                                                                  sys),
                                    dist}});
            if (name != "free-3") {
                traces.push_back({sys, {name + "/epsilon",
                                        make_character(AdeleCharacter::trivial(sys->dim()),
                                                       epsilon_of(sys->dim(), sys->central_table().identity()), sys),
                                        dist}});
            }
            for (int i = 0; i < 2; ++i) {
                const auto lambda = pick.character(sys->dim());
                traces.push_back({sys, {name + "/random", make_character(lambda, ConstantOne{}, sys), dist}});
            }
        }

        Sampler rng(1801);
        int numeric_sets = 0;
        for (auto& [sys, t] : traces) {
            rng.set_distinguished(t.special);
            out.require(t.phi(sys->identity()).is_one(), t.name + ": not normalized");
            std::vector<std::pair<GroupElement, GroupElement>> pairs;
            for (int i = 0; i < 500; ++i) pairs.emplace_back(rng.element(*sys), rng.element(*sys));
            out.require(central_check(t.phi, pairs), t.name + ": not central");
            for (int s = 0; s < 20; ++s) {
                const auto gram = gram_matrix(t.phi, rng.elements(*sys, 8));
                const auto exact = psd_check(gram);
                const auto numeric = psd_check_numeric(gram, kDefaultPsdTolerance, 60);
                ++numeric_sets;
                out.require(numeric.min_eigenvalue && *numeric.min_eigenvalue >= -1e-9L,
                            t.name + ": Gram minimum eigenvalue below -1e-9");
                out.require(exact.psd, t.name + ": Gram matrix not PSD");
            }
        }
        out.require(numeric_sets == static_cast<int>(traces.size()) * 20, "missing Gram sets");

        // Negative control: λ evaluated everywhere, ignoring L_λ and p_λ.
        const auto h = heisenberg_system(1).system;
        const auto lambda = heisenberg_system(1).lambda("V");
        TraceFunction broken(h, [lambda](const GroupElement& g) { return CharValue::root(eval(lambda, g.uni)); }, "broken");
        std::vector<std::pair<GroupElement, GroupElement>> pairs;
        for (int i = 0; i < 500; ++i) pairs.emplace_back(rng.element(*h), rng.element(*h));
        out.require(!central_check(broken, pairs), "negative control passed centrality");
        if (out.ok) out.detail = std::to_string(traces.size()) + " characters";
        return out;
    });

    criterion(9, "quasi-orbit coherence", 0, [] {
        Outcome out;
        Sampler rng(1900);
        for (const auto& name : catalog_names()) {
            const auto fx = catalog_fixture(name);
            const auto& sys = *fx.system;
            rng.set_distinguished(distinguished(fx));
            std::vector<AdeleCharacter> pool;
            for (int i = 0; i < 50; ++i) {
                const auto lambda = rng.character(sys.dim());
                auto g = sys.from_levi(sys.word(rng.word(sys.one_param_gens().size())));
                g = sys.multiply(g, rng.element(sys));
                const auto moved = coadjoint(lambda, sys.adjoint_action(g));
                out.require(same_quasi_orbit(lambda, moved, sys), name + ": moved character in another quasi-orbit");
                out.require(quasi_orbit_key(lambda, sys) == quasi_orbit_key(moved, sys), name + ": keys differ");
                if (pool.size() < 6) pool.push_back(lambda);
            }
            for (int i = 0; i < 4; ++i) pool.push_back(coadjoint(pool[i], sys.adjoint_action(rng.element(sys))));
            for (const auto& a : pool) {
                out.require(same_quasi_orbit(a, a, sys), name + ": not reflexive");
                for (const auto& b : pool) {
                    const bool ab = same_quasi_orbit(a, b, sys);
                    out.require(ab == same_quasi_orbit(b, a, sys), name + ": not symmetric");
                    for (const auto& c : pool) {
                        if (ab && same_quasi_orbit(b, c, sys))
                            out.require(same_quasi_orbit(a, c, sys), name + ": not transitive");
                    }
                }
            }
        }
        for (unsigned n : {1u, 2u}) {
            const auto fx = heisenberg_system(n);
            out.require(!same_quasi_orbit(fx.lambda("center"), fx.lambda("V"), *fx.system), "center and V coincide");
        }
        return out;
    });

    criterion(10, "adelic convention self-test", 0, [] {
        Outcome out;
        Sampler rng(2000);
        rng.max_num = 1000000;
        rng.max_den = 1000000;
        for (int i = 0; i < 1000; ++i) {
            const Rational x = rng.rational();
            out.require(global_phase_zero(x), "global phase nonzero at " + x.get_str());
            Rational total = frac(x);
            for (auto p : prime_divisors(x.get_den())) total -= frac_p_by_inverse(x, p);
            out.require(total.get_den() == 1, "independent sum not integral at " + x.get_str());
        }
        Sampler small(2001);
        for (const auto& name : catalog_names()) {
            const auto fx = catalog_fixture(name);
            const auto& sys = *fx.system;
            for (int i = 0; i < 100; ++i) {
                const auto lambda = small.character(sys.dim());
                const auto x = small.vector(sys.dim()), y = small.vector(sys.dim());
                out.require(eval(lambda, x + y) == eval(lambda, x) + eval(lambda, y), name + ": eval not additive");
                const auto ad = sys.adjoint_action(small.element(sys));
                out.require(eval(coadjoint(lambda, ad), ad.apply(x)) == eval(lambda, x), name + ": coadjoint not equivariant");
            }
        }
        return out;
    });

    criterion(11, "tensor of catalog characters", 0, [] {
        Outcome out;
        const auto sl2 = abelian_radical_system(Sl2Rep::Standard);
        const auto h1 = heisenberg_system(1);
        const auto ds = direct_sum(*sl2.system, *h1.system);
        const auto eps = make_character(sl2.lambda("zero"), epsilon_of(2, sl2.system->central_table().identity()), sl2.system);
        const auto delta = make_character(sl2.lambda("e1_inf"), ConstantOne{}, sl2.system);
        const auto tilde = make_character(h1.lambda("center"), ConstantOne{}, h1.system);
        const auto one_z = make_character(h1.lambda("V"), ConstantOne{}, h1.system);

        Sampler rng(2100);
        std::vector<LeviElement> special;
        const auto minus = ds.embed_first(sl2.system->from_levi(sl2.element("-I").element)).levi;
        special.push_back(minus);
        special.push_back(ds.embed_second(h1.system->from_levi(h1.element("-I").element)).levi);
        rng.set_distinguished(special);

        const std::pair<const TraceFunction*, const TraceFunction*> factors[] = {{&eps, &tilde}, {&delta, &one_z}, {&eps, &one_z}};
        for (const auto& [a, b] : factors) {
            const auto t = tensor(*a, *b, ds);
            const std::string tag = a->name() + " x " + b->name() + ": ";
            out.require(t(ds.system.identity()).is_one(), tag + "not normalized");
            std::vector<std::pair<GroupElement, GroupElement>> pairs;
            for (int i = 0; i < 500; ++i) pairs.emplace_back(rng.element(ds.system), rng.element(ds.system));
            out.require(central_check(t, pairs), tag + "not central");
            for (int s = 0; s < 20; ++s) {
                const auto gram = gram_matrix(t, rng.elements(ds.system, 8));
                const auto numeric = psd_check_numeric(gram, kDefaultPsdTolerance, 60);
                out.require(psd_check(gram).psd && numeric.min_eigenvalue && *numeric.min_eigenvalue >= -1e-9L,
                            tag + "Gram matrix not PSD");
            }
            Sampler r1(2101), r2(2102);
            r1.set_distinguished(distinguished(sl2));
            r2.set_distinguished(distinguished(h1));
            for (int i = 0; i < 200; ++i) {
                const auto g1 = i % 10 == 0 ? sl2.system->identity() : r1.element(*sl2.system);
                auto g2 = r2.element(*h1.system);
                if (i % 5 == 0) g2 = h1.system->from_unipotent(r2.rational() * unit_vector(3, 2));
                const auto g = ds.system.multiply(ds.embed_first(g1), ds.embed_second(g2));
                out.require(t(g) == (*a)(g1) * (*b)(g2), tag + "not multiplicative across blocks");
            }
        }
        return out;
    });

    criterion(12, "CLI determinism", 0, [] {
        Outcome out;
        const std::string cli = ADELIC_CLI_PATH;
        const fs::path golden = ADELIC_GOLDEN_DIR;
        const fs::path work = fs::temp_directory_path() / "adelic_chars_acceptance";
        fs::remove_all(work);
        for (const auto& name : catalog_names()) {
            int status = 0;
            run_capture(cli + " catalog " + name + " --emit " + (work / name).string(), status);
            out.require(status == 0, name + ": catalog --emit failed");
            std::size_t files = 0;
            for (const auto& entry : fs::directory_iterator(golden / name)) {
                ++files;
                const auto fresh = work / name / entry.path().filename();
                out.require(fs::exists(fresh), name + ": missing " + fresh.filename().string());
                if (fs::exists(fresh)) out.require(slurp(entry.path()) == slurp(fresh), name + ": " + fresh.filename().string() + " differs");
            }
            std::size_t emitted = std::distance(fs::directory_iterator(work / name), fs::directory_iterator{});
            out.require(files == emitted && files > 0, name + ": file sets differ");

            const auto system = (golden / name / "system.json").string();
            const auto a = run_capture(cli + " verify " + system + " --seed 11 --lambdas 10 --json", status);
            out.require(status == 0, name + ": verify failed");
            const auto b = run_capture(cli + " verify " + system + " --seed 11 --lambdas 10 --json", status);
            out.require(!a.empty() && a == b, name + ": verify output not reproducible");
        }
        fs::remove_all(work);
        return out;
    });

    std::printf("%s: %d of 12 criteria failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
