#include "nwvoa/fock.hpp"
#include "nwvoa/frame.hpp"
#include "nwvoa/nw.hpp"

#include <doctest.h>

#include <random>

using namespace nwvoa;

namespace {

LatticePoint scale_pt(const LatticePoint& v, const Rational& c) {
    LatticePoint out = v;
    for (auto& x : out) x *= c;
    return out;
}

LatticePoint add_pt(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

/* random low-weight homogeneous states with integral exponents */
FockState random_state(std::mt19937& rng, const Frame& f, bool allow_phi) {
    std::uniform_int_distribution<int> expc(-1, 1), nmodes(0, 2), gen(0, (int)f.size() - 1),
        mode(-2, -1), coef(1, 3);
    NWVectors v = nw_vectors(f);
    LatticePoint e = scale_pt(v.c, Rational(expc(rng)));
    if (allow_phi && f.size() == 5 && expc(rng) == 1) e = add_pt(e, v.phi);
    FockState s = FockState::exponential(f, e);
    int k = nmodes(rng);
    for (int t = 0; t < k; ++t) {
        int g = gen(rng);
        if (!allow_phi && g == 4) g = 0;
        LatticePoint dir(f.size(), Rational(0));
        dir[g] = Rational(1);
        s = s.prepend(dir, mode(rng));
    }
    return Rational(coef(rng)) * s;
}

} // namespace

TEST_CASE("heisenberg zero mode pairs against the exponent") {
    // h(-1)1 generates the field h(z) = sum h(n) z^{-n-1}; its zero mode is
    // the n = 0 coefficient under the uniform indexing
    Frame f = nw_frame();
    NWVectors v = nw_vectors(f);
    FockState h = FockState::heis(f, v.alpha, -1);
    FockState ea = FockState::exponential(f, v.alpha);
    CHECK(mode_apply(h, Rational(0), ea) == ea); // <alpha, alpha> = 1
    FockState eb = FockState::exponential(f, v.beta);
    CHECK(mode_apply(FockState::heis(f, v.beta, -1), Rational(0), eb) ==
          Rational(-1) * eb);
}

TEST_CASE("(e^c)_{-1} e^{-c} recovers the vacuum") {
    Frame f = nw_frame();
    NWVectors v = nw_vectors(f);
    FockState ec = FockState::exponential(f, v.c);
    FockState emc = FockState::exponential(f, scale_pt(v.c, Rational(-1)));
    CHECK(mode_apply(ec, Rational(-1), emc) == FockState::vacuum(f));
}

TEST_CASE("(e^alpha)_n e^alpha vanishes for n >= -1") {
    Frame f = nw_frame();
    NWVectors v = nw_vectors(f);
    FockState ea = FockState::exponential(f, v.alpha);
    for (long n = -1; n <= 2; ++n) CHECK(mode_apply(ea, Rational(n), ea).is_zero());
    CHECK(!mode_apply(ea, Rational(-2), ea).is_zero());
}

TEST_CASE("translation operator rules") {
    Frame f = nw_frame();
    NWVectors v = nw_vectors(f);
    CHECK(translate(FockState::vacuum(f)).is_zero());

    LatticePoint mc = scale_pt(v.c, Rational(-1));
    FockState emc = FockState::exponential(f, mc);
    FockState expect = emc.prepend(mc, -1);
    CHECK(translate(emc) == expect);

    FockState a1 = FockState::heis(f, v.alpha, -1);
    CHECK(translate(a1) == FockState::heis(f, v.alpha, -2));
}

TEST_CASE("translation covariance (T A)_n = -n A_{n-1}") {
    std::mt19937 rng(42);
    Frame f = nw_frame();
    for (int trial = 0; trial < 12; ++trial) {
        FockState a = random_state(rng, f, false);
        FockState b = random_state(rng, f, false);
        for (long n = -2; n <= 2; ++n) {
            FockState lhs = mode_apply(translate(a), Rational(n), b);
            FockState rhs = Rational(-n) * mode_apply(a, Rational(n - 1), b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("heisenberg relations reproduce the gram matrix") {
    Frame f = nw_frame();
    std::mt19937 rng(43);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            LatticePoint ui(f.size(), Rational(0)), uj(f.size(), Rational(0));
            ui[i] = Rational(1);
            uj[j] = Rational(1);
            FockState ai = FockState::heis(f, ui, -1);
            FockState aj = FockState::heis(f, uj, -1);
            FockState t = random_state(rng, f, false);
            for (long m = -2; m <= 2; ++m) {
                for (long n = -2; n <= 2; ++n) {
                    FockState lhs = bracket_modes(ai, m, aj, n, t);
                    FockState rhs(f);
                    if (m + n == 0) rhs = Rational(m) * f.data().gram[i][j] * t;
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("skew-symmetry coefficientwise") {
    // A_n B = (-1)^{|A||B|} sum_i (-1)^{n+i+1} T^i (B_{n+i} A) / i!
    std::mt19937 rng(44);
    Frame f = nw_brst_frame();
    for (int trial = 0; trial < 10; ++trial) {
        FockState a = random_state(rng, f, true);
        FockState b = random_state(rng, f, true);
        int sign = (a.parity() && b.parity()) ? -1 : 1;
        for (long n = -3; n <= 3; ++n) {
            FockState lhs = mode_apply(a, Rational(n), b);
            FockState rhs(f);
            Rational fact(1);
            for (long i = 0;; ++i) {
                if (i > 0) fact *= Rational(i);
                if (n + i > max_nonzero_mode(b, a) && i > 0) break;
                FockState bna = mode_apply(b, Rational(n + i), a);
                if (!bna.is_zero()) {
                    Rational c = Rational((n + i + 1) % 2 == 0 ? 1 : -1) / fact;
                    rhs += c * translate_pow(bna, i);
                }
            }
            if (sign == -1) rhs *= Rational(-1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("commutator via the Borcherds sum equals the double application") {
    std::mt19937 rng(45);
    Frame f = nw_frame();
    for (int trial = 0; trial < 10; ++trial) {
        FockState a = random_state(rng, f, false);
        FockState b = random_state(rng, f, false);
        FockState t = random_state(rng, f, false);
        for (long m = -2; m <= 2; ++m)
            for (long n = -1; n <= 1; ++n)
                CHECK(bracket_modes(a, m, b, n, t) == bracket_modes_sum(a, m, b, n, t));
    }
}

TEST_CASE("weight grading of modes") {
    std::mt19937 rng(46);
    Frame f = nw_frame();
    for (int trial = 0; trial < 10; ++trial) {
        FockState a = random_state(rng, f, false);
        FockState b = random_state(rng, f, false);
        Rational wa = weight_of(a), wb = weight_of(b);
        for (long n = -2; n <= 1; ++n) {
            FockState ab = mode_apply(a, Rational(n), b);
            if (ab.is_zero()) continue;
            CHECK(weight_of(ab) == wa + wb - Rational(n) - Rational(1));
            LatticePoint esum = add_pt(a.exponent(), b.exponent());
            CHECK(ab.exponent() == esum);
        }
    }
}

TEST_CASE("weyl pair relations through the embedding") {
    Frame f = nw_frame();
    auto [ap, am] = nw::weyl_pair(f);
    std::mt19937 rng(47);
    for (int trial = 0; trial < 6; ++trial) {
        FockState t = random_state(rng, f, false);
        // paper convention a^-(n) is the internal (a^-)_{n-1}
        for (long m = -2; m <= 2; ++m) {
            for (long n = -2; n <= 2; ++n) {
                FockState lhs = bracket_modes(ap, m, am, n - 1, t);
                FockState rhs = (m + n == 0) ? t : FockState(f);
                CHECK(lhs == rhs);
                CHECK(bracket_modes(ap, m, ap, n - 1, t).is_zero());
                CHECK(bracket_modes(am, m, am, n - 1, t).is_zero());
            }
        }
    }
}

TEST_CASE("clifford anticommutators in the fermionic sector") {
    Frame f = nw_brst_frame();
    NWVectors v = nw_vectors(f);
    FockState psi_p = FockState::exponential(f, scale_pt(v.phi, Rational(-1)));
    FockState psi_m = FockState::exponential(f, v.phi);
    CHECK(psi_p.parity() == 1);
    std::mt19937 rng(48);
    for (int trial = 0; trial < 4; ++trial) {
        FockState t = random_state(rng, f, true);
        for (long m = -1; m <= 1; ++m) {
            for (long n = -1; n <= 2; ++n) {
                // [Psi+(m), Psi-(n)]_+ = d_{m+n,0}; Psi-(n) = (e^phi)_{n-1}
                FockState got = bracket_modes(psi_p, m, psi_m, n - 1, t);
                FockState want = (m + n == 0) ? t : FockState(f);
                CHECK(got == want);
                CHECK(bracket_modes(psi_p, m, psi_p, n, t).is_zero());
                CHECK(bracket_modes(psi_m, m, psi_m, n, t).is_zero());
            }
        }
    }
}

TEST_CASE("cocycle signs are trivial on the even half-lattice") {
    Frame f = nw_frame();
    NWVectors v = nw_vectors(f);
    for (auto& a : {v.c, v.d}) {
        for (auto& b : {v.c, v.d}) {
            CHECK(f.cocycle_sign(a, b) == Rational(1));
        }
    }
    // and the screening witness needs eps(alpha, -c) = +1
    CHECK(f.cocycle_sign(v.alpha, scale_pt(v.c, Rational(-1))) == Rational(1));
}

TEST_CASE("weights and charges of module ground states") {
    Frame pi = pi_frame();
    PiVectors pv = pi_vectors(pi);
    // weight of e^{lambda c} is lambda
    for (auto lam : {Rational(3, 2), Rational(-1, 3), Rational(0)}) {
        FockState s = FockState::exponential(pi, scale_pt(pv.c, lam));
        CHECK(weight_of(s) == lam);
    }
    // r = 1 layer: weight of e^{mu + lambda c} is -1/2 for every lambda
    for (auto lam : {Rational(0), Rational(2, 7), Rational(-5)}) {
        FockState s = FockState::exponential(pi, add_pt(pv.mu, scale_pt(pv.c, lam)));
        CHECK(weight_of(s) == Rational(-1, 2));
    }
    CHECK(weight_of(FockState::vacuum(pi)) == Rational(0));

    Frame f = nw_frame();
    NWVectors v = nw_vectors(f);
    CHECK(charge_of(FockState::exponential(f, v.c)) == Rational(1));
    CHECK(weight_of(FockState::exponential(f, v.c)) == Rational(1));
}

TEST_CASE("frame and lattice guards") {
    Frame f = nw_frame();
    Frame pi = pi_frame();
    FockState a = FockState::vacuum(f);
    FockState b = FockState::vacuum(pi);
    CHECK_THROWS_AS(mode_apply(a, Rational(0), b), std::invalid_argument);

    FrameBuilder fb;
    fb.generators({"u", "v"}).gram({{Rational(0), Rational(2)}, {Rational(2), Rational(0)}});
    fb.lattice({{Rational(1), Rational(0)}}); // only u may be exponentiated
    Frame restricted = fb.build();
    CHECK_THROWS_AS(FockState::exponential(restricted, {Rational(0), Rational(1)}),
                    std::invalid_argument);
    CHECK_NOTHROW(FockState::exponential(restricted, {Rational(1, 2), Rational(0)}));
    CHECK_NOTHROW(FockState::heis(restricted, {Rational(0), Rational(1)}, -1));
}

TEST_CASE("zero states are absorbing") {
    Frame f = nw_frame();
    FockState zero(f);
    FockState vac = FockState::vacuum(f);
    CHECK(mode_apply(zero, Rational(0), vac).is_zero());
    CHECK(mode_apply(vac, Rational(5), zero).is_zero());
    CHECK((Rational(0) * vac).is_zero());
}
