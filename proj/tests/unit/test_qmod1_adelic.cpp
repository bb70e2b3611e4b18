#include "fixtures.hpp"

#include <doctest.h>

using namespace fixtures;

namespace {

// Brute force: the f = a / p^k in [0, 1) with x - f free of p in the
// denominator, where p^k is the p-part of den(x).
Rational frac_p_oracle(const Rational& x, unsigned long p) {
    Integer den = x.get_den();
    Integer pk = 1;
    while (den % p == 0) den /= p, pk *= p;
    for (Integer a = 0; a < pk; ++a) {
        Rational f(a, pk);
        f.canonicalize();
        Rational diff = x - f;
        if (Integer(diff.get_den() % p) != 0) return f;
    }
    FAIL("no oracle value");
    return 0;
}

}  // namespace

TEST_CASE("phase arithmetic") {
    CHECK(phase_add(Phase(q(1, 3)), Phase(q(2, 3))).is_zero());
    CHECK(phase_neg(Phase(q(1, 4))) == Phase(q(3, 4)));
    CHECK(Phase(q(-1, 4)).value() == q(3, 4));
    CHECK(Phase(q(7, 3)).value() == q(1, 3));
    CHECK(cv_mul(CharValue::zero(), CharValue::root(Phase(q(1, 2)))).is_zero());
    CHECK(cv_mul(CharValue::one(), CharValue::root(Phase(q(1, 5)))) == CharValue::root(Phase(q(1, 5))));
    CHECK(CharValue::root(Phase(q(1, 5))).conj() == CharValue::root(Phase(q(4, 5))));

    Sampler rng(31);
    for (int i = 0; i < 200; ++i) {
        const Phase a(rng.rational()), b(rng.rational()), c(rng.rational());
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a + -a).is_zero());
        CHECK(sgn(a.value()) >= 0);
        CHECK(a.value() < 1);
    }
}

TEST_CASE("frac_p examples and oracle") {
    CHECK(frac_p(q(3, 4), 2) == q(3, 4));
    CHECK(frac_p(q(3, 4), 3) == 0);
    CHECK(frac_p(q(1, 6), 2) == q(1, 2));
    CHECK_THROWS_AS(frac_p(q(1, 6), 4), DomainError);

    Sampler rng(32);
    rng.max_num = 200;
    rng.max_den = 360;
    for (int i = 0; i < 300; ++i) {
        const Rational x = rng.rational();
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
            const Rational f = frac_p(x, p);
            CHECK(f == frac_p_oracle(x, p));
            CHECK(frac_p(x + rng.index(20), p) == f);
        }
    }
}

TEST_CASE("global phase zero") {
    CHECK(global_phase_zero(q(5, 6)));
    CHECK(global_phase_zero(q(7)));
    CHECK(global_phase_zero(q(-1, 4)));
    CHECK(frac(q(-1, 4)) == q(3, 4));
    Sampler rng(33);
    rng.max_num = 1000000;
    rng.max_den = 1000000;
    for (int i = 0; i < 1000; ++i) CHECK(global_phase_zero(rng.rational()));
}

TEST_CASE("eval examples") {
    CHECK(eval(AdeleCharacter::trivial(2), vec({3, 5})).is_zero());
    const RatVector third{q(1, 3)};
    CHECK(eval(AdeleCharacter::archimedean(third), vec({1})) == Phase(q(1, 3)));
    const RatVector half{q(1, 2)};
    CHECK(eval(AdeleCharacter::at_prime(2, half), vec({1})) == Phase(q(1, 2)));
    CHECK_THROWS_AS(Place::prime(6), DomainError);
    CHECK_THROWS_AS(eval(AdeleCharacter::trivial(2), vec({1})), DimensionError);
}

TEST_CASE("line triviality") {
    CHECK(line_trivial(AdeleCharacter::trivial(2), vec({1, 1})));
    const auto l = AdeleCharacter::archimedean(vec({1, 0}));
    CHECK(line_trivial(l, vec({0, 1})));
    CHECK_FALSE(line_trivial(l, vec({1, 0})));

    const auto one = AdeleCharacter::archimedean(vec({1}));
    CHECK_FALSE(eval(one, RatVector{q(1, 2)}).is_zero());
    CHECK_FALSE(line_trivial(one, vec({1})));

    const auto z = AdeleCharacter::archimedean(vec({0, 0, 1}));
    CHECK(trivial_on_subspace(z, Subspace::zero(3)));
    CHECK(trivial_on_subspace(z, span(3, {vec({1, 0, 0}), vec({0, 1, 0})})));
    CHECK_FALSE(trivial_on_subspace(z, span(3, {vec({0, 0, 1})})));
}

TEST_CASE("property: sampled evaluations never contradict line_trivial") {
    Sampler rng(34);
    const Rational ts[] = {1, q(1, 2), q(1, 3), q(1, 6), q(1, 30)};
    for (int i = 0; i < 300; ++i) {
        const std::size_t d = 1 + rng.index(4);
        const auto lambda = rng.character(d);
        const auto x = rng.sparse_vector(d);
        bool all_zero = true;
        for (const auto& t : ts) all_zero = all_zero && eval(lambda, t * x).is_zero();
        if (line_trivial(lambda, x)) CHECK(all_zero);
        CHECK(eval(lambda, x + x) == eval(lambda, x) + eval(lambda, x));
    }
}

TEST_CASE("coadjoint") {
    const auto l = AdeleCharacter::archimedean(vec({1, 0}));
    const auto g = mat({{1, 1}, {0, 1}});
    CHECK(coadjoint(l, RatMatrix::identity(2)) == l);
    const auto moved = coadjoint(l, g);
    CHECK(moved == AdeleCharacter::archimedean(vec({1, -1})));
    for (const auto& e : {vec({1, 0}), vec({0, 1})}) CHECK(eval(moved, e) == eval(l, g.inverse().apply(e)));

    Sampler rng(35);
    for (int i = 0; i < 200; ++i) {
        const auto lambda = rng.character(3);
        RatMatrix m(3, 3);
        do {
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) m(a, b) = rng.rational();
        } while (rref(m).rank != 3);
        const auto x = rng.vector(3);
        CHECK(eval(coadjoint(lambda, m), x) == eval(lambda, m.inverse().apply(x)));
        CHECK(coadjoint(coadjoint(lambda, m), m.inverse()) == lambda);
    }
}

TEST_CASE("property: distinct canonical characters are separated by some q") {
    Sampler rng(36);
    for (int i = 0; i < 150; ++i) {
        const std::size_t d = 1 + rng.index(3);
        const auto a = rng.character(d), b = rng.character(d);
        if (a == b) continue;
        // Search scaled basis vectors t e_j, t = 1/m for m up to 60 times
        // small primes.
        bool separated = false;
        for (std::size_t j = 0; j < d && !separated; ++j)
            for (long m = 1; m <= 60 * 7 && !separated; ++m) {
                const RatVector x = Rational(1, m) * unit_vector(d, j);
                separated = !(eval(a, x) == eval(b, x));
            }
        CHECK(separated);
    }
}
