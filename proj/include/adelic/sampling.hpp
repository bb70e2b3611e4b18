#pragma once

#include "adelic/adelic.hpp"
#include "adelic/group.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace adelic {

/// Seeded generators for random algebra, group and character data.
///
/// Rationals are n/d with |n| <= max_num and 1 <= d <= max_den. Levi words
/// have up to max_word letters; a fraction of Levi samples are replaced by the
/// distinguished elements (central labels and anything passed to
/// set_distinguished) so that rare elements such as -I actually show up.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long max_num = 6;
    long max_den = 20;
    std::size_t max_word = 4;

    std::mt19937_64& engine() { return rng_; }

    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Rational rational() {
        const long n = std::uniform_int_distribution<long>(-max_num, max_num)(rng_);
        const long d = std::uniform_int_distribution<long>(1, max_den)(rng_);
        Rational q(n, d);
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational() {
        Rational q;
        do {
            q = rational();
        } while (sgn(q) == 0);
        return q;
    }

    RatVector vector(std::size_t dim) {
        RatVector v(dim);
        for (auto& x : v) x = rational();
        return v;
    }

    /// Random vector whose support is a random subset of the coordinates.
    RatVector sparse_vector(std::size_t dim) {
        RatVector v(dim);
        for (auto& x : v) {
            if (coin()) x = rational();
        }
        return v;
    }

    /// λ with components at a random subset of {∞, 2, 3, 5}.
    AdeleCharacter character(std::size_t dim) {
        static const std::uint64_t places[] = {0, 2, 3, 5};
        AdeleCharacter::Components comps;
        for (auto p : places) {
            if (!coin()) continue;
            comps[p == 0 ? Place::infinity() : Place::prime(p)] = sparse_vector(dim);
        }
        return AdeleCharacter(dim, std::move(comps));
    }

    std::vector<WordLetter> word(std::size_t num_gens) {
        std::vector<WordLetter> w;
        if (num_gens == 0) return w;
        const std::size_t len = index(max_word + 1);
        for (std::size_t i = 0; i < len; ++i) w.push_back({index(num_gens), nonzero_rational()});
        return w;
    }

    void set_distinguished(std::vector<LeviElement> elems) { distinguished_ = std::move(elems); }

    LeviElement levi(const LeviSystem& sys) {
        const auto& table = sys.central_table();
        if (coin(0.25)) {
            const std::size_t extra = table.size() + distinguished_.size();
            const std::size_t i = index(extra);
            return i < table.size() ? sys.central(i) : distinguished_[i - table.size()];
        }
        LeviElement l = sys.word(word(sys.one_param_gens().size()));
        if (table.size() > 1 && coin(0.25)) l = sys.levi_multiply(l, sys.central(index(table.size())));
        return l;
    }

    GroupElement element(const LeviSystem& sys) {
        LeviElement l = coin(0.2) ? sys.levi_identity() : levi(sys);
        LieVector x = coin(0.2) ? zero_vector(sys.dim()) : sparse_vector(sys.dim());
        return {std::move(l), std::move(x)};
    }

    std::vector<GroupElement> elements(const LeviSystem& sys, std::size_t n) {
        std::vector<GroupElement> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(element(sys));
        return out;
    }

private:
    std::mt19937_64 rng_;
    std::vector<LeviElement> distinguished_;
};

}  // namespace adelic
