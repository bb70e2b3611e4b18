#include "adelic/chars.hpp"

namespace adelic {

namespace {

void require_dim(const AdeleCharacter& lambda, const LeviSystem& system) {
    if (lambda.dim() != system.dim()) {
        throw DimensionError("character on Q^" + std::to_string(lambda.dim()) + " but the Lie algebra has dim " +
                             std::to_string(system.dim()));
    }
}

void push_unique(std::vector<RatMatrix>& ops, RatMatrix m) {
    for (const auto& o : ops) {
        if (o == m) return;
    }
    ops.push_back(std::move(m));
}

}  // namespace

std::vector<RatMatrix> OperatorSet::infinitesimal() const {
    std::vector<RatMatrix> out = levi;
    out.insert(out.end(), adjoint.begin(), adjoint.end());
    return out;
}

std::vector<RatMatrix> OperatorSet::all() const {
    std::vector<RatMatrix> out = infinitesimal();
    out.insert(out.end(), central.begin(), central.end());
    return out;
}

OperatorSet full_operator_set(const LeviSystem& system) {
    OperatorSet ops;
    ops.levi = system.one_param_gens();
    for (std::size_t j = 0; j < system.dim(); ++j) {
        ops.adjoint.push_back(system.algebra().ad_matrix(unit_vector(system.dim(), j)));
    }
    const auto identity = RatMatrix::identity(system.dim());
    for (const auto& a : system.central_table().actions) {
        if (a == identity) continue;
        push_unique(ops.central, a);
        push_unique(ops.central, a.inverse());
    }
    return ops;
}

Subspace line_triviality_locus(const AdeleCharacter& lambda) { return kernel(lambda.constraint_matrix()); }

Subspace compute_k(const AdeleCharacter& lambda, const LeviSystem& system) {
    require_dim(lambda, system);
    const auto ops = full_operator_set(system).all();
    return largest_invariant_in(line_triviality_locus(lambda), ops);
}

Subspace compute_p(const Subspace& k, const LeviSystem& system) {
    if (k.ambient_dim() != system.dim()) throw DimensionError("compute_p: k has the wrong ambient dimension");
    const auto ops = full_operator_set(system);
    Subspace p = Subspace::full(system.dim());
    for (const auto& m : ops.infinitesimal()) p = intersect(p, preimage(m, k));
    const auto identity = RatMatrix::identity(system.dim());
    for (const auto& a : ops.central) p = intersect(p, preimage(a - identity, k));
    return p;
}

Subspace compute_p(const AdeleCharacter& lambda, const LeviSystem& system) {
    return compute_p(compute_k(lambda, system), system);
}

Subspace fixed_center_of_quotient(const Subspace& k, const LeviSystem& system) {
    const std::size_t d = system.dim();
    if (k.ambient_dim() != d) throw DimensionError("fixed_center_of_quotient: k has the wrong ambient dimension");

    // Quotient coordinates: the non-pivot coordinates of k's RREF basis span a
    // complement; projection reduces modulo k and keeps those coordinates.
    std::vector<bool> pivot(d, false);
    for (auto c : k.pivots()) pivot[c] = true;
    std::vector<std::size_t> coords;
    for (std::size_t j = 0; j < d; ++j) {
        if (!pivot[j]) coords.push_back(j);
    }
    const std::size_t m = coords.size();
    if (m == 0) return Subspace::full(d);

    auto project = [&](const RatVector& x) {
        const RatVector r = k.reduce(x);
        RatVector out(m);
        for (std::size_t a = 0; a < m; ++a) out[a] = r[coords[a]];
        return out;
    };
    auto quotient_op = [&](auto&& apply) {
        RatMatrix q(m, m);
        for (std::size_t a = 0; a < m; ++a) {
            const RatVector col = project(apply(unit_vector(d, coords[a])));
            for (std::size_t b = 0; b < m; ++b) q(b, a) = col[b];
        }
        return q;
    };

    std::vector<RatMatrix> constraints;
    const auto& alg = system.algebra();
    for (std::size_t b = 0; b < m; ++b) {
        const RatVector eb = unit_vector(d, coords[b]);
        constraints.push_back(quotient_op([&](const RatVector& x) { return alg.bracket(x, eb); }));
    }
    for (const auto& n : system.one_param_gens()) {
        constraints.push_back(quotient_op([&](const RatVector& x) { return n.apply(x); }));
    }
    for (const auto& a : system.central_table().actions) {
        constraints.push_back(quotient_op([&](const RatVector& x) { return a.apply(x) - x; }));
    }
    const Subspace fixed_center = kernel(vstack(constraints, m));

    std::vector<RatVector> lifts = k.basis_vectors();
    for (const auto& v : fixed_center.basis_vectors()) {
        RatVector x = zero_vector(d);
        for (std::size_t a = 0; a < m; ++a) x[coords[a]] = v[a];
        lifts.push_back(std::move(x));
    }
    return Subspace::span(d, lifts);
}

Subspace fixed_center_of_quotient(const AdeleCharacter& lambda, const LeviSystem& system) {
    return fixed_center_of_quotient(compute_k(lambda, system), system);
}

bool in_L_lambda(const LeviElement& l, const Subspace& k) {
    const std::size_t d = k.ambient_dim();
    if (l.action.rows() != d || l.action.cols() != d) throw DimensionError("in_L_lambda: action has wrong shape");
    for (std::size_t j = 0; j < d; ++j) {
        RatVector col = l.action.column(j);
        col[j] -= 1;
        if (!k.contains(col)) return false;
    }
    return true;
}

Phase chi_lambda(const AdeleCharacter& lambda, const LieVector& x, const Subspace& p) {
    if (lambda.dim() != p.ambient_dim()) throw DimensionError("chi_lambda: dimension mismatch");
    if (!p.contains(x)) throw DomainError("chi_lambda: " + format_vector(x) + " is not in p_lambda");
    return eval(lambda, x);
}

Subspace orbit_direction_V(const AdeleCharacter& lambda, const LeviSystem& system) {
    require_dim(lambda, system);
    const auto ops = full_operator_set(system);
    const auto identity = RatMatrix::identity(system.dim());
    std::vector<RatVector> seeds;
    std::vector<RatMatrix> transposed;
    for (const auto& m : ops.infinitesimal()) {
        const RatMatrix mt = m.transpose();
        for (const auto& [place, a] : lambda.components()) seeds.push_back(mt.apply(a));
        transposed.push_back(mt);
    }
    for (const auto& c : ops.central) {
        const RatMatrix ct = c.transpose();
        const RatMatrix diff = ct - identity;
        for (const auto& [place, a] : lambda.components()) seeds.push_back(diff.apply(a));
        transposed.push_back(ct);
    }
    return smallest_invariant_containing(system.dim(), seeds, transposed);
}

bool duality_check(const AdeleCharacter& lambda, const LeviSystem& system) {
    return compute_p(lambda, system) == annihilator(orbit_direction_V(lambda, system));
}

QuasiOrbitKey quasi_orbit_key(const AdeleCharacter& lambda, const LeviSystem& system) {
    QuasiOrbitKey key;
    key.p = compute_p(lambda, system);
    for (const auto& b : key.p.basis_vectors()) key.chi_values.push_back(eval(lambda, b));
    key.restriction = pullback(lambda, key.p.basis().transpose());
    return key;
}

bool same_quasi_orbit(const AdeleCharacter& a, const AdeleCharacter& b, const LeviSystem& system) {
    require_dim(a, system);
    require_dim(b, system);
    const Subspace pa = compute_p(a, system);
    if (pa != compute_p(b, system)) return false;
    return trivial_on_subspace(a - b, pa);
}

CharValue TildeCentralCharacter::operator()(const LeviElement& l) const {
    for (const auto& e : support) {
        if (e.label == l.label && e.action == l.action) return CharValue::root(e.value);
    }
    return CharValue::zero();
}

std::string check_tilde_character(const TildeCentralCharacter& phi, const Subspace& k, const LeviSystem& system) {
    const auto& table = system.central_table();
    const std::size_t d = system.dim();
    if (phi.support.empty()) return "support is empty";
    bool has_identity = false;
    for (const auto& e : phi.support) {
        if (e.label >= table.size()) return "support label out of range";
        if (e.action.rows() != d || e.action.cols() != d) return "support action has wrong shape";
        for (const auto& n : system.one_param_gens()) {
            if (e.action * n != n * e.action) return "support element '" + table.labels[e.label] + "' is not central";
        }
        if (!in_L_lambda(LeviElement{e.label, e.action, {}}, k)) {
            return "support element '" + table.labels[e.label] + "' with action " + format_matrix(e.action) +
                   " is not in L_lambda";
        }
        if (e.label == table.identity() && e.action == RatMatrix::identity(d)) {
            has_identity = true;
            if (!e.value.is_zero()) return "value at the identity is not 1";
        }
    }
    if (!has_identity) return "support does not contain the identity";
    for (const auto& a : phi.support)
        for (const auto& b : phi.support) {
            const LeviElement prod{table.table[a.label][b.label], a.action * b.action, {}};
            const CharValue v = phi(prod);
            if (v.is_zero()) return "support is not closed under multiplication";
            if (!(v.phase() == a.value + b.value)) return "values are not a homomorphism";
        }
    return {};
}

TraceFunction make_character(const AdeleCharacter& lambda, const LeviCharacter& phi,
                             std::shared_ptr<const LeviSystem> system) {
    require_dim(lambda, *system);
    Subspace k = compute_k(lambda, *system);
    Subspace p = compute_p(k, *system);

    std::function<CharValue(const LeviElement&)> levi_value;
    std::string phi_name;
    if (std::holds_alternative<ConstantOne>(phi)) {
        levi_value = [](const LeviElement&) { return CharValue::one(); };
        phi_name = "1";
    } else if (const auto* tilde = std::get_if<TildeCentralCharacter>(&phi)) {
        if (auto problem = check_tilde_character(*tilde, k, *system); !problem.empty()) {
            throw DomainError("make_character: " + problem);
        }
        levi_value = [t = *tilde](const LeviElement& l) { return t(l); };
        phi_name = "tilde-central";
    } else {
        const auto& plugin = std::get<PluginCharacter>(phi);
        levi_value = plugin.eval;
        phi_name = plugin.name;
    }

    auto eval_fn = [lambda, k = std::move(k), p = std::move(p), levi_value](const GroupElement& g) {
        if (!in_L_lambda(g.levi, k) || !p.contains(g.uni)) return CharValue::zero();
        const CharValue phi_l = levi_value(g.levi);
        if (phi_l.is_zero()) return phi_l;
        return phi_l * CharValue::root(eval(lambda, g.uni));
    };
    return TraceFunction(std::move(system), std::move(eval_fn), "Phi(" + lambda.str() + ", " + phi_name + ")");
}

ClassificationReport classify(const AdeleCharacter& lambda, const LeviSystem& system,
                              const std::vector<NamedLeviElement>& samples) {
    require_dim(lambda, system);
    ClassificationReport r;
    r.lambda = lambda;
    r.k = compute_k(lambda, system);
    r.p = compute_p(r.k, system);
    for (const auto& b : r.p.basis_vectors()) r.chi_on_p_basis.push_back(eval(lambda, b));
    r.orbit_V = orbit_direction_V(lambda, system);
    r.duality_ok = r.p == annihilator(r.orbit_V);
    for (const auto& s : samples) r.l_lambda_samples.push_back({s.name, in_L_lambda(s.element, r.k)});
    return r;
}

}  // namespace adelic
