#include "adelic/verify.hpp"

#include "adelic/sampling.hpp"
#include "adelic/traces.hpp"

#include <functional>
#include <memory>

namespace adelic {

namespace {

class Runner {
public:
    Runner(const LeviSystem& system, const std::vector<NamedLeviElement>& named, const VerifyOptions& opts)
        : sys_(std::make_shared<const LeviSystem>(system)), opts_(opts), rng_(opts.seed) {
        std::vector<LeviElement> distinguished;
        for (const auto& n : named) distinguished.push_back(n.element);
        rng_.set_distinguished(std::move(distinguished));
    }

    std::vector<VerificationRecord> run() {
        const bool all = opts_.suite == Suite::All;
        if (all || opts_.suite == Suite::Core) core();
        if (all || opts_.suite == Suite::Duality) duality();
        if (all || opts_.suite == Suite::Traces) traces();
        if (opts_.negative_control) negative_control();
        return std::move(records_);
    }

private:
    void record(std::string check, std::size_t samples, bool ok, std::optional<double> tol = std::nullopt) {
        records_.push_back({std::move(check), samples, opts_.seed, ok, tol});
    }

    /// Runs `one` n times and records whether all passed.
    void repeat(const char* check, std::size_t n, const std::function<bool()>& one) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) ok = one() && ok;
        record(check, n, ok);
    }

    std::vector<AdeleCharacter> characters(std::size_t n) {
        std::vector<AdeleCharacter> out{AdeleCharacter::trivial(sys_->dim())};
        while (out.size() < n) out.push_back(rng_.character(sys_->dim()));
        return out;
    }

    void core() {
        const auto& alg = sys_->algebra();
        const std::size_t d = sys_->dim();
        record("algebra_valid", 1, validate(alg).ok() && LeviSystem::check(alg, sys_->one_param_gens(), sys_->central_table()).empty());
        repeat("bch_associativity", 100, [&] {
            const auto x = rng_.vector(d), y = rng_.vector(d), z = rng_.vector(d);
            return alg.bch(alg.bch(x, y), z) == alg.bch(x, alg.bch(y, z));
        });
        repeat("bch_inverse", 100, [&] {
            const auto x = rng_.vector(d);
            return is_zero(alg.bch(x, -x));
        });
        repeat("Ad_homomorphism", 100, [&] {
            const auto x = rng_.vector(d), y = rng_.vector(d);
            return alg.Ad_of_group(alg.bch(x, y)) == alg.Ad_of_group(x) * alg.Ad_of_group(y);
        });
        repeat("group_associativity", 50, [&] {
            const auto a = rng_.element(*sys_), b = rng_.element(*sys_), c = rng_.element(*sys_);
            return sys_->multiply(sys_->multiply(a, b), c) == sys_->multiply(a, sys_->multiply(b, c));
        });
        repeat("group_inverse", 50, [&] {
            const auto a = rng_.element(*sys_);
            return sys_->multiply(a, sys_->inverse(a)) == sys_->identity() &&
                   sys_->multiply(sys_->inverse(a), a) == sys_->identity();
        });
        repeat("adjoint_action", 50, [&] {
            const auto h = rng_.element(*sys_);
            const auto y = rng_.vector(d);
            const auto c = sys_->conjugate(sys_->from_unipotent(y), h);
            return c == sys_->from_unipotent(sys_->adjoint_action(h).apply(y));
        });
        repeat("global_phase_zero", 1000, [&] { return global_phase_zero(rng_.rational()); });
        repeat("eval_additivity", 100, [&] {
            const auto lambda = rng_.character(d);
            const auto x = rng_.vector(d), y = rng_.vector(d);
            return eval(lambda, x + y) == eval(lambda, x) + eval(lambda, y);
        });
        repeat("coadjoint_equivariance", 100, [&] {
            const auto lambda = rng_.character(d);
            const auto ad = sys_->adjoint_action(rng_.element(*sys_));
            const auto x = rng_.vector(d);
            return eval(coadjoint(lambda, ad), ad.apply(x)) == eval(lambda, x);
        });
    }

    void duality() {
        const auto lambdas = characters(opts_.lambdas);
        const auto ops = full_operator_set(*sys_).all();
        bool dual = true, fixed = true, kid = true, kinv = true, coherent = true;
        for (const auto& lambda : lambdas) {
            const Subspace k = compute_k(lambda, *sys_);
            const Subspace p = compute_p(k, *sys_);
            dual = dual && p == annihilator(orbit_direction_V(lambda, *sys_));
            fixed = fixed && p == fixed_center_of_quotient(k, *sys_);
            kid = kid && k == intersect(p, line_triviality_locus(lambda));
            for (const auto& m : ops) kinv = kinv && k.contains(image(m, k));
            kinv = kinv && trivial_on_subspace(lambda, k);
            const auto g = rng_.element(*sys_);
            coherent = coherent && same_quasi_orbit(lambda, coadjoint(lambda, sys_->adjoint_action(g)), *sys_);
        }
        const auto n = lambdas.size();
        record("duality", n, dual);
        record("p_equals_fixed_center", n, fixed);
        record("k_identity", n, kid);
        record("k_invariant", n, kinv);
        record("quasi_orbit_coherence", n, coherent);
    }

    void traces() {
        const std::size_t n_chars = std::max<std::size_t>(2, opts_.lambdas / 5);
        const auto lambdas = characters(n_chars);
        bool normalized = true, central = true, psd = true, ad_inv = true, extension = true, probe = true;
        std::size_t pairs = 0, sets = 0, points = 0;
        for (const auto& lambda : lambdas) {
            const TraceFunction phi = make_character(lambda, ConstantOne{}, sys_);
            normalized = normalized && phi(sys_->identity()).is_one();

            std::vector<std::pair<GroupElement, GroupElement>> conj;
            for (int i = 0; i < 100; ++i) conj.emplace_back(rng_.element(*sys_), rng_.element(*sys_));
            central = central && central_check(phi, conj);
            pairs += conj.size();

            for (int s = 0; s < 4; ++s) {
                const auto r = psd_check(gram_matrix(phi, rng_.elements(*sys_, 8)), kDefaultPsdTolerance, kDefaultPsdBits);
                psd = psd && r.psd;
                ++sets;
            }

            const Subspace k = compute_k(lambda, *sys_);
            const Subspace p = compute_p(k, *sys_);
            TraceFunction psi(sys_, [lambda](const GroupElement& g) { return CharValue::root(eval(lambda, g.uni)); }, "chi");
            const TraceFunction ext = trivial_extension(
                psi, [k, p](const GroupElement& g) { return in_L_lambda(g.levi, k) && p.contains(g.uni); });
            const auto sample = rng_.elements(*sys_, 30);
            for (const auto& g : sample) {
                extension = extension && ext(g) == phi(g);
                const auto x = rng_.vector(sys_->dim());
                const auto ad = sys_->adjoint_action(g);
                ad_inv = ad_inv && phi(sys_->from_unipotent(ad.apply(x))) == phi(sys_->from_unipotent(x));
            }
            points += sample.size();
            probe = probe && projective_kernel_probe(phi, sample).multiplicative;
        }
        record("trace_normalization", lambdas.size(), normalized);
        record("trace_centrality", pairs, central);
        record("trace_gram_psd", sets, psd, kDefaultPsdTolerance);
        record("trace_ad_invariance", points, ad_inv);
        record("trivial_extension_matches", points, extension);
        record("projective_kernel_multiplicative", points, probe);
    }

    // λ evaluated on the unipotent part with no support restriction. For any
    // λ that is not G-invariant this is not a class function.
    void negative_control() {
        AdeleCharacter lambda = AdeleCharacter::trivial(sys_->dim());
        for (int tries = 0; tries < 200; ++tries) {
            auto cand = rng_.character(sys_->dim());
            if (compute_k(cand, *sys_).dim() < sys_->dim()) {
                lambda = std::move(cand);
                break;
            }
        }
        TraceFunction broken(sys_, [lambda](const GroupElement& g) { return CharValue::root(eval(lambda, g.uni)); },
                             "unrestricted");
        std::vector<std::pair<GroupElement, GroupElement>> conj;
        for (int i = 0; i < 200; ++i) conj.emplace_back(rng_.element(*sys_), rng_.element(*sys_));
        record("negative_control_centrality", conj.size(), central_check(broken, conj));
    }

    std::shared_ptr<const LeviSystem> sys_;
    VerifyOptions opts_;
    Sampler rng_;
    std::vector<VerificationRecord> records_;
};

}  // namespace

Suite parse_suite(const std::string& name) {
    if (name == "core") return Suite::Core;
    if (name == "traces") return Suite::Traces;
    if (name == "duality") return Suite::Duality;
    if (name == "all") return Suite::All;
    throw ParseError("unknown suite '" + name + "' (expected core, traces, duality or all)");
}

std::vector<VerificationRecord> run_verification(const LeviSystem& system,
                                                 const std::vector<NamedLeviElement>& named_elements,
                                                 const VerifyOptions& options) {
    return Runner(system, named_elements, options).run();
}

}  // namespace adelic
