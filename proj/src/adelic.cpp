#include "adelic/adelic.hpp"

namespace adelic {

Place Place::prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("place " + std::to_string(p) + " is not a prime");
    return Place(p);
}

std::string Place::str() const { return is_infinity() ? "inf" : std::to_string(p_); }

AdeleCharacter::AdeleCharacter(std::size_t dim, Components comps) : dim_(dim), comps_(std::move(comps)) {
    for (const auto& [place, vec] : comps_) {
        if (vec.size() != dim_) {
            throw DimensionError("adele component at place " + place.str() + " has length " +
                                 std::to_string(vec.size()) + ", expected " + std::to_string(dim_));
        }
    }
    canonicalize();
}

AdeleCharacter AdeleCharacter::archimedean(const RatVector& a) {
    return AdeleCharacter(a.size(), {{Place::infinity(), a}});
}

AdeleCharacter AdeleCharacter::at_prime(std::uint64_t p, const RatVector& a) {
    return AdeleCharacter(a.size(), {{Place::prime(p), a}});
}

void AdeleCharacter::canonicalize() {
    for (auto it = comps_.begin(); it != comps_.end();) {
        for (auto& q : it->second) q.canonicalize();
        if (is_zero(it->second)) {
            it = comps_.erase(it);
        } else {
            ++it;
        }
    }
}

RatMatrix AdeleCharacter::constraint_matrix() const {
    std::vector<RatVector> rows;
    for (const auto& [place, vec] : comps_) rows.push_back(vec);
    return RatMatrix::from_rows(rows, dim_);
}

namespace {

AdeleCharacter combine(const AdeleCharacter& a, const AdeleCharacter& b, int sign) {
    if (a.dim() != b.dim()) throw DimensionError("adele characters of different dimension");
    auto comps = a.components();
    for (const auto& [place, vec] : b.components()) {
        auto [it, inserted] = comps.try_emplace(place, zero_vector(a.dim()));
        it->second = sign > 0 ? it->second + vec : it->second - vec;
    }
    return AdeleCharacter(a.dim(), std::move(comps));
}

void require_dim(const AdeleCharacter& lambda, std::size_t n, const char* what) {
    if (lambda.dim() != n) {
        throw DimensionError(std::string(what) + ": character on Q^" + std::to_string(lambda.dim()) +
                             " applied to Q^" + std::to_string(n));
    }
}

}  // namespace

AdeleCharacter operator-(const AdeleCharacter& a, const AdeleCharacter& b) { return combine(a, b, -1); }
AdeleCharacter operator+(const AdeleCharacter& a, const AdeleCharacter& b) { return combine(a, b, +1); }

std::string AdeleCharacter::str() const {
    if (comps_.empty()) return "0";
    std::string out;
    for (const auto& [place, vec] : comps_) {
        if (!out.empty()) out += ", ";
        out += place.str() + " -> " + format_vector(vec);
    }
    return out;
}

Phase eval(const AdeleCharacter& lambda, const RatVector& q) {
    require_dim(lambda, q.size(), "eval");
    Rational total = 0;
    for (const auto& [place, vec] : lambda.components()) {
        const Rational pairing = dot(vec, q);
        if (place.is_infinity()) {
            total += pairing;
        } else {
            total -= frac_p(pairing, place.p());
        }
    }
    return Phase(total);
}

bool line_trivial(const AdeleCharacter& lambda, const RatVector& x) {
    require_dim(lambda, x.size(), "line_trivial");
    for (const auto& [place, vec] : lambda.components()) {
        if (sgn(dot(vec, x)) != 0) return false;
    }
    return true;
}

bool trivial_on_subspace(const AdeleCharacter& lambda, const Subspace& s) {
    require_dim(lambda, s.ambient_dim(), "trivial_on_subspace");
    for (const auto& v : s.basis_vectors()) {
        if (!line_trivial(lambda, v)) return false;
    }
    return true;
}

AdeleCharacter pullback(const AdeleCharacter& lambda, const RatMatrix& m) {
    if (m.rows() != lambda.dim()) throw DimensionError("pullback: matrix rows must equal character dimension");
    const RatMatrix mt = m.transpose();
    AdeleCharacter::Components comps;
    for (const auto& [place, vec] : lambda.components()) comps.emplace(place, mt.apply(vec));
    return AdeleCharacter(m.cols(), std::move(comps));
}

AdeleCharacter coadjoint(const AdeleCharacter& lambda, const RatMatrix& g_action) {
    if (!g_action.is_square() || g_action.rows() != lambda.dim()) {
        throw DimensionError("coadjoint: action must be a square matrix of side " + std::to_string(lambda.dim()));
    }
    return pullback(lambda, g_action.inverse());
}

}  // namespace adelic
