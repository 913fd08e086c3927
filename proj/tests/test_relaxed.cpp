#include "nwvoa/relaxed.hpp"

#include <doctest.h>

using namespace nwvoa;
using namespace nwvoa::relaxed;

TEST_CASE("closed-form weights and casimir values") {
    CHECK(sug_weight({Rational(0), Rational(0), 0, Rational(0)}) == Rational(0));
    for (auto lam : {Rational(0), Rational(1, 3), Rational(-2)})
        CHECK(sug_weight({Rational(0), Rational(0), 1, lam}) == Rational(-1, 2));
    CHECK(omega_eigen({Rational(3), Rational(2), 1, Rational(0)}) == Rational(4));
    // r = 1 weights are constant across layers; other r are not
    RelaxedModuleSpec s1{Rational(2), Rational(1), 1, Rational(1, 5)};
    CHECK(sug_weight(s1, 3) == sug_weight(s1, -3));
    RelaxedModuleSpec s0{Rational(2), Rational(1), 0, Rational(1, 5)};
    CHECK(!(sug_weight(s0, 1) == sug_weight(s0, 0)));
}

TEST_CASE("top actions") {
    RelaxedModuleSpec spec{Rational(2), Rational(1), 1, Rational(1, 2)};
    TopAction e = top_action(nw::Gen::E, spec, 0);
    CHECK(e.coeff == Rational(1));
    CHECK(e.shift == 1);
    TopAction f = top_action(nw::Gen::F, spec, 0);
    CHECK(f.coeff == Rational(1, 2)); // y - lambda (x-1) = 1 - 1/2
    CHECK(f.shift == -1);
    CHECK(top_action(nw::Gen::I, spec, 0).coeff == Rational(1));
    CHECK(top_action(nw::Gen::J, spec, 2).coeff ==
          (Rational(2) + Rational(1) + Rational(2) * (Rational(1, 2) + Rational(2))) /
              Rational(2));
    RelaxedModuleSpec bad{Rational(2), Rational(1), 0, Rational(0)};
    CHECK_THROWS_AS(top_action(nw::Gen::E, bad, 0), std::invalid_argument);
}

TEST_CASE("classification") {
    auto c1 = classify(Rational(3), Rational(2), Rational(1, 3));
    CHECK(c1.irreducible);
    CHECK(c1.label == "Ehat{2,[1/3],4}");

    auto c2 = classify(Rational(1), Rational(5), Rational(9, 7));
    CHECK(c2.irreducible);
    CHECK(c2.label == "Rhat{0,[2/7],5}");

    auto c3 = classify(Rational(3), Rational(2), Rational(0));
    CHECK(!c3.irreducible);
    REQUIRE(c3.lw_index.has_value());
    CHECK(*c3.lw_index == 1); // lambda - y/(x-1) = -1, so F(0) Z_1 = 0

    auto c4 = classify(Rational(1), Rational(0), Rational(1, 4));
    CHECK(!c4.irreducible);
}

TEST_CASE("tensor components: vacuum pair dimensions") {
    TensorModule mod({Rational(0), Rational(0), 0, Rational(0)});
    CHECK(mod.component(Rational(0), Rational(0)).size() == 1);
    CHECK(mod.component(Rational(1), Rational(1)).size() == 1); // e^c
    CHECK(mod.component(Rational(1), Rational(0)).size() == 3); // c(-1), d(-1), I(-1)
    CHECK(mod.component(Rational(1), Rational(1, 2)).empty());
}

TEST_CASE("tensor action reproduces the closed forms") {
    RelaxedModuleSpec spec{Rational(2), Rational(1), 1, Rational(1, 2)};
    TensorModule mod(spec);
    for (long i = -2; i <= 2; ++i) {
        TVec z = mod.top_vector(i);
        for (nw::Gen g : nw::kGens) {
            TVec got = mod.apply(g, 0, z);
            TopAction want = top_action(g, spec, i);
            TVec expect;
            if (!want.coeff.is_zero())
                expect.emplace(TKey{i + want.shift, 0, 0, {}}, want.coeff);
            CHECK(got == expect);
        }
        // sug L(0) through the realization
        TVec l0 = mod.sug_l0(z);
        TVec expect;
        Rational w = sug_weight(spec, i);
        if (!w.is_zero()) expect.emplace(TKey{i, 0, 0, {}}, w);
        CHECK(l0 == expect);
    }
}

TEST_CASE("positive modes kill the top (relaxed highest weight)") {
    RelaxedModuleSpec spec{Rational(3), Rational(2), 1, Rational(1, 3)};
    TensorModule mod(spec);
    TVec z = mod.top_vector(0);
    for (nw::Gen g : nw::kGens)
        for (long n = 1; n <= 2; ++n) CHECK(mod.apply(g, n, z).empty());
}

TEST_CASE("spectral flow displays") {
    auto s = spectral_flow(FlowKind::Sigma, Rational(1), {nw::Gen::E, 0});
    CHECK(s.modes.at({nw::Gen::E, -1}) == Rational(1));
    CHECK(s.central.is_zero());

    s = spectral_flow(FlowKind::Sigma, Rational(2), {nw::Gen::F, 1});
    CHECK(s.modes.at({nw::Gen::F, 3}) == Rational(1));

    s = spectral_flow(FlowKind::G, Rational(1), {nw::Gen::I, 0});
    CHECK(s.modes.at({nw::Gen::I, 0}) == Rational(1));
    CHECK(s.central == Rational(-1));

    s = spectral_flow(FlowKind::G, Rational(1), {nw::Gen::J, 0});
    CHECK(s.central == Rational(1, 2));

    s = spectral_flow(FlowKind::Shift, Rational(1, 3), {nw::Gen::J, 0});
    CHECK(s.central == Rational(-1, 3));

    for (nw::Gen g : nw::kGens)
        for (long n = -2; n <= 2; ++n)
            for (long l = -2; l <= 2; ++l)
                CHECK(spectral_flow(FlowKind::G, Rational(l), {g, n}) ==
                      spectral_flow(FlowKind::Rho, Rational(l), {g, n}));
}

TEST_CASE("g-twist bidegree relabeling is invertible") {
    Rational iota(2);
    auto [h1, j1] = g_twist_bidegree(1, iota, Rational(3), Rational(1, 2));
    auto [h0, j0] = g_twist_bidegree(-1, iota - Rational(1), h1, j1);
    CHECK(h0 == Rational(3));
    CHECK(j0 == Rational(1, 2));
}

TEST_CASE("submodule growth: strict chain inside the (1,0) module") {
    RelaxedModuleSpec spec{Rational(1), Rational(0), 1, Rational(2, 5)};
    TensorModule mod(spec);
    auto g1 = submodule_growth(mod, mod.top_vector(1), 2, 4, 2);
    auto g0 = submodule_growth(mod, mod.top_vector(0), 2, 4, 2);
    CHECK(g0.contains(mod, mod.top_vector(1)));
    CHECK(!g1.contains(mod, mod.top_vector(0)));
}

TEST_CASE("cyclic vector of the vacuum-type module") {
    // spec (0, -lambda, 0, lambda): the module is generated by
    // v_{0,-lambda} (x) e^{(lambda-1)c} at the checked bidegrees
    Rational lam(1, 3);
    RelaxedModuleSpec spec{Rational(0), -lam, 0, lam};
    TensorModule mod(spec);
    auto grown = submodule_growth(mod, mod.top_vector(-1), 3, 2, 2);
    // interior bidegrees: layers -2..0, weights at most 1 above their tops
    auto dim_at = [&](const Rational& h, const Rational& j) -> std::size_t {
        auto it = grown.dims.find({h, j});
        return it == grown.dims.end() ? 0 : it->second;
    };
    for (long i = -2; i <= 0; ++i) {
        Rational j = top_charge(spec, i);
        for (Rational h = sug_weight(spec, i), stop = sug_weight(spec, i) + Rational(1);
             h <= stop; h += Rational(1)) {
            CHECK(dim_at(h, j) == mod.component(h, j).size());
        }
    }
}
