#include "nwvoa/nw.hpp"

#include "nwvoa/frame.hpp"

#include <doctest.h>

using namespace nwvoa;
using namespace nwvoa::nw;

TEST_CASE("affine bracket table") {
    // [E(1), F(-1)] = I(0) + K
    AffineSum b = affine_bracket({Gen::E, 1}, {Gen::F, -1});
    CHECK(b.modes.at({Gen::I, 0}) == Rational(1));
    CHECK(b.central == Rational(1));

    // [J(0), E(n)] = E(n), no central term
    for (long n = -2; n <= 2; ++n) {
        b = affine_bracket({Gen::J, 0}, {Gen::E, n});
        CHECK(b.modes.at({Gen::E, n}) == Rational(1));
        CHECK(b.central.is_zero());
    }

    // [I(n), I(m)] = 0
    b = affine_bracket({Gen::I, 2}, {Gen::I, -2});
    CHECK(b.modes.empty());
    CHECK(b.central.is_zero());

    // [J(1), F(-1)] = -F(0) + K (J, F) = -F(0) + 0... (J,F) = 0
    b = affine_bracket({Gen::J, 1}, {Gen::F, -1});
    CHECK(b.modes.at({Gen::F, 0}) == Rational(-1));
    CHECK(b.central.is_zero());
}

TEST_CASE("casimir is central in U(h4)") {
    CHECK(casimir_check());
    // spot expansions: [Omega, E] = [FE, E] + [IJ, E] = -IE + IE
    UH4 omega = UH4::casimir();
    UH4 e = UH4::generator(Gen::E);
    CHECK(((omega * e) - (e * omega)).is_zero());
}

TEST_CASE("pbw character rows") {
    BigradedSeries s = pbw_character(3);
    CHECK(s.coeff(0, 0) == 1);
    CHECK(s.coeff(1, -1) == 1);
    CHECK(s.coeff(1, 0) == 2);
    CHECK(s.coeff(1, 1) == 1);
    CHECK(s.coeff(2, 0) == 6);
    CHECK(s.coeff_q(2) == 14); // four-colored partitions of 2
    CHECK(s.coeff_q(3) == 40);
}

TEST_CASE("wakimoto images match the displayed expansions") {
    Frame f = nw_frame();
    NWVectors v = nw_vectors(f);
    H4Realization r = wakimoto_map(f);

    CHECK(r.image(Gen::I) == FockState::heis(f, v.p, -1));

    // J -> (p/2 + q - beta)(-1) 1
    LatticePoint jdir(f.size(), Rational(0));
    jdir[1] = Rational(-1);
    jdir[2] = Rational(1, 2);
    jdir[3] = Rational(1);
    CHECK(r.image(Gen::J) == FockState::heis(f, jdir, -1));

    // F -> (alpha(-1)(alpha + beta - p)(-1) - alpha(-2)) e^{-alpha-beta}
    LatticePoint mc(f.size(), Rational(0));
    mc[0] = Rational(-1);
    mc[1] = Rational(-1);
    FockState emc = FockState::exponential(f, mc);
    FockState expect = emc.prepend(v.c1, -1).prepend(v.alpha, -1) -
                       emc.prepend(v.alpha, -2);
    CHECK(r.image(Gen::F) == expect);
}

TEST_CASE("inverse reduction images and the image coincidence") {
    Frame f = nw_frame();
    NWVectors v = nw_vectors(f);
    H4Realization inv = inverse_qhr_map(f);
    H4Realization wak = wakimoto_map(f);

    CHECK(inv.image(Gen::E) == FockState::exponential(f, v.c));
    // I -> c(-1)1 + I_HVir with I_HVir = -c1(-1)1 = (p - ... ): equals p(-1)1
    CHECK(inv.image(Gen::I) == FockState::heis(f, v.p, -1));

    for (Gen g : kGens) CHECK(inv.image(g) == wak.image(g));
}

TEST_CASE("sugawara image equals the closed form") {
    Frame f = nw_frame();
    H4Realization inv = inverse_qhr_map(f);
    CHECK(sugawara_state(inv) == expr_sug1_state(f));
    // and the frame conformal is the same state
    CHECK(sugawara_state(inv) == *f.data().conformal);

    // L(-1) acts as translation on images
    FockState e = inv.image(Gen::E);
    CHECK(mode_apply(sugawara_state(inv), Rational(0), e) == translate(e));
    // L(0) kills the vacuum
    CHECK(mode_apply(sugawara_state(inv), Rational(1), FockState::vacuum(f)).is_zero());
}

TEST_CASE("sugawara central charge, computed then frozen") {
    // the paper does not state this number; the engine computed 4 and the
    // value is pinned here as a regression
    CHECK(sugawara_central_charge(nw_frame()) == Rational(4));
}

TEST_CASE("embedding verification at mode bound 1") {
    Frame f = nw_frame();
    for (auto r : {wakimoto_map(f), inverse_qhr_map(f)}) {
        EmbeddingReport rep = verify_embedding(r, 1);
        CHECK(rep.pass());
        CHECK(rep.checks > 0);
    }
}
