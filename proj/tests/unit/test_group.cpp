#include "fixtures.hpp"

#include <doctest.h>

using namespace fixtures;

TEST_CASE("multiply and inverse in the Heisenberg system") {
    const auto sys = heisenberg_system(1).system;
    const auto x = vec({1, 2, 0}), y = vec({3, -1, 5});
    const auto g = sys->multiply(sys->from_unipotent(x), sys->from_unipotent(y));
    CHECK(g.uni == x + y + Rational(1, 2) * sys->algebra().bracket(x, y));

    const auto a = sys->from_unipotent(x);
    CHECK(sys->multiply(a, sys->identity()) == a);
    CHECK(sys->inverse(sys->identity()) == sys->identity());
    CHECK(sys->inverse(a).uni == -x);

    const auto X = sys->from_unipotent(vec({1, 0, 0})), Y = sys->from_unipotent(vec({0, 1, 0}));
    CHECK(sys->commutator(X, Y) == sys->from_unipotent(vec({0, 0, 1})));
    CHECK(sys->commutator(a, a) == sys->identity());
    CHECK(sys->conjugate(a, sys->identity()) == a);
}

TEST_CASE("conjugation by L acts by alpha") {
    Sampler rng(41);
    for (const auto& name : catalog_names()) {
        const auto fx = catalog_fixture(name);
        const auto& sys = *fx.system;
        for (int i = 0; i < 40; ++i) {
            const auto l = rng.levi(sys);
            const auto x = rng.vector(sys.dim());
            const auto c = sys.conjugate(sys.from_unipotent(x), sys.from_levi(l));
            CHECK(c == sys.from_unipotent(l.action.apply(x)));
        }
    }
}

TEST_CASE("one-parameter subgroups") {
    const auto sys = sl2_standard();
    CHECK(sys->one_param(0, 0) == sys->levi_identity());
    CHECK(sys->levi_multiply(sys->one_param(1, q(2, 3)), sys->one_param(1, q(-1, 5))) == sys->one_param(1, q(7, 15)));
    CHECK(sys->one_param(0, 1).action == mat({{1, 1}, {0, 1}}));
    CHECK_THROWS_AS(sys->one_param(5, 1), DimensionError);
}

TEST_CASE("minus identity as a word") {
    const auto fx = abelian_radical_system(Sl2Rep::Standard);
    const auto& minus = fx.element("-I");
    CHECK(minus.element.action == Rational(-1) * RatMatrix::identity(2));
    CHECK(minus.element.label == fx.system->central_table().identity());

    const auto h2 = heisenberg_system(2);
    auto expected = Rational(-1) * RatMatrix::identity(5);
    expected(4, 4) = 1;
    CHECK(h2.element("-I").element.action == expected);
}

TEST_CASE("property: group laws on catalog systems") {
    Sampler rng(42);
    for (const auto& name : catalog_names()) {
        const auto fx = catalog_fixture(name);
        const auto& sys = *fx.system;
        std::vector<LeviElement> dist;
        for (const auto& n : fx.named_elements) dist.push_back(n.element);
        rng.set_distinguished(dist);
        for (int i = 0; i < 300; ++i) {
            const auto a = rng.element(sys), b = rng.element(sys), c = rng.element(sys);
            CHECK(sys.multiply(sys.multiply(a, b), c) == sys.multiply(a, sys.multiply(b, c)));
            if (i < 100) {
                CHECK(sys.multiply(sys.inverse(a), a) == sys.identity());
                const auto w1 = rng.word(sys.one_param_gens().size()), w2 = rng.word(sys.one_param_gens().size());
                auto w12 = w1;
                w12.insert(w12.end(), w2.begin(), w2.end());
                CHECK(sys.word(w12).action == sys.word(w1).action * sys.word(w2).action);
                const auto y = rng.vector(sys.dim());
                CHECK(sys.conjugate(sys.from_unipotent(y), a) == sys.from_unipotent(sys.adjoint_action(a).apply(y)));
            }
        }
    }
}

TEST_CASE("system validation reports violations") {
    const auto h = h3();
    // diag(1,0,0) is not a derivation of h3.
    const auto bad_gen = mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    const auto v = LeviSystem::check(h, {bad_gen}, CentralTable::trivial(3));
    CHECK_FALSE(v.empty());
    CHECK_THROWS_AS(LeviSystem(h, {bad_gen}, CentralTable::trivial(3)), ValidationError);

    // A central action that does not commute with the Levi generator.
    const auto n1 = mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    auto flip = mat({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
    CentralTable ct{{"e", "s"}, {RatMatrix::identity(3), flip}, {{0, 1}, {1, 0}}};
    CHECK_FALSE(LeviSystem::check(h, {n1}, ct).empty());

    // Table that is not a group.
    CentralTable broken{{"e", "a"}, {RatMatrix::identity(3), RatMatrix::identity(3)}, {{0, 1}, {1, 1}}};
    CHECK_FALSE(LeviSystem::check(h, {}, broken).empty());

    for (const auto& name : catalog_names()) CHECK(LeviSystem::check(catalog_fixture(name).system->algebra(),
                                                                     catalog_fixture(name).system->one_param_gens(),
                                                                     catalog_fixture(name).system->central_table())
                                                       .empty());
}

TEST_CASE("direct sum systems") {
    const auto a = abelian_radical_system(Sl2Rep::Standard).system;
    const auto b = heisenberg_system(1).system;
    const auto ds = direct_sum(*a, *b);
    CHECK(ds.system.dim() == 5);
    CHECK(LeviSystem::check(ds.system.algebra(), ds.system.one_param_gens(), ds.system.central_table()).empty());
    CHECK(is_zero(ds.system.algebra().bracket(unit_vector(5, 0), unit_vector(5, 2))));

    Sampler rng(43);
    for (int i = 0; i < 50; ++i) {
        const auto g1 = rng.element(*a), g2 = rng.element(*b);
        const auto g = ds.system.multiply(ds.embed_first(g1), ds.embed_second(g2));
        const auto [s1, s2] = ds.split(g);
        CHECK(s1 == g1);
        CHECK(s2 == g2);
        const auto h1 = rng.element(*a), h2 = rng.element(*b);
        const auto h = ds.system.multiply(ds.embed_first(h1), ds.embed_second(h2));
        const auto [p1, p2] = ds.split(ds.system.multiply(g, h));
        CHECK(p1 == a->multiply(g1, h1));
        CHECK(p2 == b->multiply(g2, h2));
    }

    const auto trivial = LeviSystem(LieAlgebra::abelian(0), {}, CentralTable::trivial(0));
    const auto t = direct_sum(trivial, *b);
    CHECK(t.system.dim() == b->dim());
    CHECK(t.system.algebra() == b->algebra());
}
