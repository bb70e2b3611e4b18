#include "adelic/group.hpp"

#include <optional>
#include <set>

namespace adelic {

CentralTable CentralTable::trivial(std::size_t dim) {
    return CentralTable{{"e"}, {RatMatrix::identity(dim)}, {{0}}};
}

std::size_t CentralTable::identity() const {
    for (std::size_t e = 0; e < size(); ++e) {
        bool ok = table.size() == size();
        for (std::size_t x = 0; ok && x < size(); ++x) {
            ok = table[e].size() == size() && table[x].size() == size() && table[e][x] == x && table[x][e] == x;
        }
        if (ok) return e;
    }
    throw ValidationError("central table has no identity element");
}

std::size_t CentralTable::inverse(std::size_t label) const {
    const std::size_t e = identity();
    for (std::size_t y = 0; y < size(); ++y) {
        if (table.at(label).at(y) == e) return y;
    }
    throw ValidationError("central label '" + labels.at(label) + "' has no inverse");
}

std::size_t CentralTable::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return i;
    }
    throw ValidationError("unknown central label '" + label + "'");
}

std::vector<SystemViolation> LeviSystem::check(const LieAlgebra& algebra, const std::vector<RatMatrix>& gens,
                                               const CentralTable& central) {
    std::vector<SystemViolation> out;
    for (const auto& v : validate(algebra).violations) out.push_back({"algebra", v.message});

    const std::size_t d = algebra.dim();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& n = gens[i];
        const std::string name = "generator " + std::to_string(i);
        if (n.rows() != d || n.cols() != d) {
            out.push_back({"generator-shape", name + " is not " + std::to_string(d) + "x" + std::to_string(d)});
            continue;
        }
        if (!is_nilpotent_matrix(n)) out.push_back({"generator-nilpotent", name + " is not nilpotent"});
        if (!is_derivation(n, algebra)) out.push_back({"generator-derivation", name + " is not a derivation"});
    }

    const std::size_t m = central.size();
    if (m == 0) {
        out.push_back({"central-table", "central table is empty"});
        return out;
    }
    if (central.actions.size() != m || central.table.size() != m) {
        out.push_back({"central-table", "labels, actions and table rows must have equal length"});
        return out;
    }
    if (std::set<std::string>(central.labels.begin(), central.labels.end()).size() != m) {
        out.push_back({"central-table", "central labels are not unique"});
    }
    for (std::size_t a = 0; a < m; ++a) {
        if (central.table[a].size() != m) {
            out.push_back({"central-closure", "table row '" + central.labels[a] + "' has wrong length"});
            return out;
        }
        for (auto c : central.table[a]) {
            if (c >= m) {
                out.push_back({"central-closure", "table entry out of range in row '" + central.labels[a] + "'"});
                return out;
            }
        }
    }
    bool shapes_ok = true;
    for (std::size_t a = 0; a < m; ++a) {
        const auto& act = central.actions[a];
        const std::string name = "central action '" + central.labels[a] + "'";
        if (act.rows() != d || act.cols() != d) {
            out.push_back({"central-action", name + " has wrong shape"});
            shapes_ok = false;
            continue;
        }
        try {
            (void)act.inverse();
        } catch (const DomainError&) {
            out.push_back({"central-action", name + " is singular"});
        }
        if (!preserves_bracket(act, algebra)) {
            out.push_back({"central-automorphism", name + " does not preserve the bracket"});
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].rows() == d && gens[i].cols() == d && act * gens[i] != gens[i] * act) {
                out.push_back(
                    {"central-commutes", name + " does not commute with generator " + std::to_string(i)});
            }
        }
    }

    std::optional<std::size_t> e;
    try {
        e = central.identity();
    } catch (const ValidationError& err) {
        out.push_back({"central-identity", err.what()});
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (central.table[a][b] != central.table[b][a]) {
                out.push_back({"central-abelian",
                               "labels '" + central.labels[a] + "' and '" + central.labels[b] + "' do not commute"});
            }
            for (std::size_t c = 0; c < m; ++c) {
                if (central.table[central.table[a][b]][c] != central.table[a][central.table[b][c]]) {
                    out.push_back({"central-associativity", "table is not associative at ('" + central.labels[a] +
                                                                "', '" + central.labels[b] + "', '" +
                                                                central.labels[c] + "')"});
                }
            }
            if (shapes_ok &&
                central.actions[central.table[a][b]] != central.actions[a] * central.actions[b]) {
                out.push_back({"central-homomorphism", "action of '" + central.labels[a] + "'*'" +
                                                           central.labels[b] + "' is not the product of actions"});
            }
        }
    if (e) {
        for (std::size_t a = 0; a < m; ++a) {
            bool has_inverse = false;
            for (std::size_t b = 0; b < m; ++b) has_inverse = has_inverse || central.table[a][b] == *e;
            if (!has_inverse) out.push_back({"central-inverse", "label '" + central.labels[a] + "' has no inverse"});
        }
    }
    return out;
}

LeviSystem::LeviSystem(LieAlgebra algebra, std::vector<RatMatrix> one_param_gens, CentralTable central,
                       std::vector<std::string> basis_names)
    : algebra_(std::move(algebra)),
      gens_(std::move(one_param_gens)),
      central_(std::move(central)),
      basis_names_(std::move(basis_names)) {
    const auto violations = check(algebra_, gens_, central_);
    if (!violations.empty()) {
        std::string msg = "invalid Levi system:";
        for (const auto& v : violations) msg += "\n  [" + v.check + "] " + v.message;
        throw ValidationError(msg);
    }
    if (basis_names_.empty()) {
        for (std::size_t i = 0; i < dim(); ++i) basis_names_.push_back("e" + std::to_string(i));
    }
    if (basis_names_.size() != dim()) throw ValidationError("basis_names must have one entry per basis vector");
}

void LeviSystem::require(const LieVector& x) const {
    if (x.size() != dim()) {
        throw DimensionError("unipotent part of length " + std::to_string(x.size()) + " in system of dim " +
                             std::to_string(dim()));
    }
}

void LeviSystem::require(const LeviElement& l) const {
    if (l.label >= central_.size()) throw DimensionError("Levi element label out of range");
    if (l.action.rows() != dim() || l.action.cols() != dim()) {
        throw DimensionError("Levi element action has wrong shape for this system");
    }
}

LeviElement LeviSystem::levi_identity() const { return central(central_.identity()); }

LeviElement LeviSystem::central(std::size_t label) const {
    if (label >= central_.size()) throw DimensionError("central label index out of range");
    return LeviElement{label, central_.actions[label], {}};
}

LeviElement LeviSystem::one_param(std::size_t i, const Rational& t) const {
    if (i >= gens_.size()) {
        throw DimensionError("one-parameter generator index " + std::to_string(i) + " out of range (" +
                             std::to_string(gens_.size()) + " generators)");
    }
    LeviElement l{central_.identity(), exp_nilpotent(gens_[i], t), {}};
    if (sgn(t) != 0) l.word.push_back({i, t});
    return l;
}

LeviElement LeviSystem::word(const std::vector<WordLetter>& letters) const {
    LeviElement l = levi_identity();
    for (const auto& w : letters) l = levi_multiply(l, one_param(w.generator, w.t));
    return l;
}

LeviElement LeviSystem::levi_multiply(const LeviElement& a, const LeviElement& b) const {
    require(a);
    require(b);
    LeviElement c{central_.table[a.label][b.label], a.action * b.action, a.word};
    c.word.insert(c.word.end(), b.word.begin(), b.word.end());
    return c;
}

LeviElement LeviSystem::levi_inverse(const LeviElement& a) const {
    require(a);
    LeviElement inv{central_.inverse(a.label), a.action.inverse(), {}};
    for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) inv.word.push_back({it->generator, -it->t});
    return inv;
}

GroupElement LeviSystem::identity() const { return from_levi(levi_identity()); }

GroupElement LeviSystem::from_unipotent(const LieVector& x) const {
    require(x);
    return {levi_identity(), x};
}

GroupElement LeviSystem::multiply(const GroupElement& a, const GroupElement& b) const {
    require(a.uni);
    require(b.uni);
    LeviElement l = levi_multiply(a.levi, b.levi);
    const LieVector moved = b.levi.action.inverse().apply(a.uni);
    return {std::move(l), algebra_.bch(moved, b.uni)};
}

GroupElement LeviSystem::inverse(const GroupElement& a) const {
    require(a.uni);
    return {levi_inverse(a.levi), -a.levi.action.apply(a.uni)};
}

GroupElement LeviSystem::conjugate(const GroupElement& a, const GroupElement& h) const {
    return multiply(multiply(h, a), inverse(h));
}

GroupElement LeviSystem::commutator(const GroupElement& a, const GroupElement& b) const {
    return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

RatMatrix LeviSystem::adjoint_action(const GroupElement& g) const {
    require(g.uni);
    return g.levi.action * algebra_.Ad_of_group(g.uni);
}

std::string LeviSystem::describe(const LeviElement& l) const {
    std::string out = central_.labels.at(l.label);
    for (const auto& w : l.word) out += " exp(" + pretty_rational(w.t) + "*N" + std::to_string(w.generator) + ")";
    return out;
}

std::string LeviSystem::describe(const GroupElement& g) const {
    return describe(g.levi) + " exp" + format_vector(g.uni);
}

namespace {

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

RatMatrix sub_block(const RatMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    RatMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
    return out;
}

}  // namespace

DirectSum direct_sum(const LeviSystem& a, const LeviSystem& b) {
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<RatMatrix> gens;
    for (const auto& n : a.one_param_gens()) gens.push_back(block_diag(n, RatMatrix(db, db)));
    for (const auto& n : b.one_param_gens()) gens.push_back(block_diag(RatMatrix(da, da), n));

    const auto& ta = a.central_table();
    const auto& tb = b.central_table();
    const std::size_t na = ta.size(), nb = tb.size();
    CentralTable t;
    t.table.assign(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            t.labels.push_back("(" + ta.labels[i] + "," + tb.labels[j] + ")");
            t.actions.push_back(block_diag(ta.actions[i], tb.actions[j]));
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l) t.table[i * nb + j][k * nb + l] = ta.table[i][k] * nb + tb.table[j][l];
        }

    std::vector<std::string> names = a.basis_names();
    names.insert(names.end(), b.basis_names().begin(), b.basis_names().end());

    DirectSum out;
    out.system = LeviSystem(direct_sum(a.algebra(), b.algebra()), std::move(gens), std::move(t), std::move(names));
    out.first_dim = da;
    out.second_dim = db;
    out.first_gens = a.one_param_gens().size();
    out.first_identity = ta.identity();
    out.second_identity = tb.identity();
    out.second_table_size = nb;
    return out;
}

GroupElement DirectSum::embed_first(const GroupElement& g) const {
    GroupElement out;
    out.levi.label = g.levi.label * second_table_size + second_identity;
    out.levi.action = block_diag(g.levi.action, RatMatrix::identity(second_dim));
    out.levi.word = g.levi.word;
    out.uni = g.uni;
    out.uni.resize(first_dim + second_dim, Rational(0));
    return out;
}

GroupElement DirectSum::embed_second(const GroupElement& g) const {
    GroupElement out;
    out.levi.label = first_identity * second_table_size + g.levi.label;
    out.levi.action = block_diag(RatMatrix::identity(first_dim), g.levi.action);
    for (const auto& w : g.levi.word) out.levi.word.push_back({w.generator + first_gens, w.t});
    out.uni = zero_vector(first_dim);
    out.uni.insert(out.uni.end(), g.uni.begin(), g.uni.end());
    return out;
}

std::pair<GroupElement, GroupElement> DirectSum::split(const GroupElement& g) const {
    const std::size_t d = first_dim + second_dim;
    if (g.uni.size() != d || g.levi.action.rows() != d || g.levi.action.cols() != d) {
        throw DimensionError("split: element does not belong to the direct sum");
    }
    if (!sub_block(g.levi.action, 0, first_dim, first_dim, second_dim).is_zero() ||
        !sub_block(g.levi.action, first_dim, 0, second_dim, first_dim).is_zero()) {
        throw DomainError("split: action is not block diagonal");
    }
    GroupElement first, second;
    first.levi.label = g.levi.label / second_table_size;
    second.levi.label = g.levi.label % second_table_size;
    first.levi.action = sub_block(g.levi.action, 0, 0, first_dim, first_dim);
    second.levi.action = sub_block(g.levi.action, first_dim, first_dim, second_dim, second_dim);
    for (const auto& w : g.levi.word) {
        if (w.generator < first_gens) {
            first.levi.word.push_back(w);
        } else {
            second.levi.word.push_back({w.generator - first_gens, w.t});
        }
    }
    first.uni.assign(g.uni.begin(), g.uni.begin() + static_cast<std::ptrdiff_t>(first_dim));
    second.uni.assign(g.uni.begin() + static_cast<std::ptrdiff_t>(first_dim), g.uni.end());
    return {std::move(first), std::move(second)};
}

}  // namespace adelic
