#include "nwvoa/screening.hpp"

#include "nwvoa/frame.hpp"
#include "nwvoa/nw.hpp"

#include <doctest.h>

using namespace nwvoa;
using namespace nwvoa::screening;

TEST_CASE("fusion data") {
    CHECK(fusion_delta(2, Rational(5)) == Rational(15));
    auto t = hvir_fusion_target(Rational(3), Rational(2));
    REQUIRE(t.has_value());
    CHECK(t->first == Rational(2));
    CHECK(t->second == Rational(1));
    CHECK(!hvir_fusion_target(Rational(1), Rational(5)).has_value());
    CHECK_THROWS_AS(hvir_fusion_target(Rational(1), Rational(0)), std::invalid_argument);
    CHECK(fusion_rules().size() == 4);
}

TEST_CASE("module compatibility congruence") {
    CHECK(vmodule_compatible(Rational(3), Rational(2), Rational(0), 1).ok);
    auto bad = vmodule_compatible(Rational(3), Rational(2), Rational(1, 3), 1);
    CHECK(!bad.ok);
    CHECK(bad.obstruction == Rational(1, 3));
    CHECK(vmodule_compatible(Rational(1), Rational(0), Rational(7, 4), 1).ok);
    CHECK_THROWS_AS(vmodule_compatible(Rational(1, 2), Rational(0), Rational(0), 1),
                    std::invalid_argument);
}

TEST_CASE("the screening witness S e^{-alpha-beta} = e^{-beta}") {
    Frame f = nw_frame();
    LatticePoint mb(f.size(), Rational(0));
    mb[1] = Rational(-1);
    CHECK(screening_witness() == FockState::exponential(f, mb));
}

TEST_CASE("kernel profile against the PBW character, small window") {
    auto table = kernel_profile(2, 2);
    BigradedSeries pbw = nw::pbw_character(2);
    for (auto& [key, cell] : table) {
        CHECK(Int(cell.dim_ker) == pbw.coeff(key.first, key.second));
        CHECK(cell.dim_source == cell.rank + cell.dim_ker);
    }
    CHECK(table.at({0, 0}).dim_ker == 1);
    CHECK(table.at({1, 1}).dim_ker == 1);
    CHECK(table.at({1, 0}).dim_ker == 2);
    CHECK(table.at({2, 0}).dim_ker == 6);
}

TEST_CASE("intertwiner: vacuum pair, abstract route agrees with the lattice") {
    relaxed::RelaxedModuleSpec vac{Rational(0), Rational(0), 0, Rational(0)};
    TensorScreening s(vac, {Rational(-1), Rational(0)});
    auto lattice = kernel_profile(2, 2);
    for (long h = 0; h <= 2; ++h) {
        for (long j = -2; j <= 2; ++j) {
            MatrixQ m = s.matrix(Rational(h), Rational(j));
            auto& cell = lattice.at({h, j});
            CHECK(m.cols() == cell.dim_source);
            CHECK(m.rank() == cell.rank);
        }
    }
}

TEST_CASE("intertwiner kills the source singular vector") {
    // vacuum pair: source L[0,0] has its singular vector at degree 1
    HVirIntertwiner iv(Rational(0), Rational(0), Rational(-1), Rational(0));
    CHECK(iv.annihilates_singular(3));
    // the (3,2) log pair
    HVirIntertwiner iv2(Rational(3), Rational(2), Rational(2), Rational(1));
    CHECK(iv2.annihilates_singular(3));
}

TEST_CASE("deformed L(0): block structure") {
    LogModuleSpec spec{Rational(3), Rational(2), Rational(0), 1};
    relaxed::RelaxedModuleSpec src{spec.x, spec.y, spec.r, spec.lambda};
    TensorScreening s(src, *hvir_fusion_target(spec.x, spec.y));
    // the quotient-layer generator Z_0 sits one layer below the F(0) kernel
    Rational h = relaxed::sug_weight(src, 0);
    Rational j = relaxed::top_charge(src, 0);
    DeformedL0 d = deformed_L0(s, h, j);
    CHECK(d.dim_source >= 1);
    CHECK(d.dim_target >= 1);
    CHECK((d.nilpotent * d.nilpotent).is_zero());
    for (std::size_t i = 0; i < d.dim_source + d.dim_target; ++i)
        CHECK(d.semisimple.at(i, i) == h);
}

TEST_CASE("P1(lambda) witnesses: S Z1_{-1} = nu Z2_{-1}, S Z1_i = 0 for i >= 0") {
    Rational lam(2, 5);
    relaxed::RelaxedModuleSpec src{Rational(1), Rational(0), 1, lam};
    TensorScreening s(src, {Rational(0), -lam});
    relaxed::TVec img = s.apply(s.source().top_vector(-1));
    REQUIRE(img.size() == 1);
    CHECK(img.begin()->first == s.target().top_vector(0).begin()->first);
    CHECK(!img.begin()->second.is_zero());
    for (long i = 0; i <= 2; ++i) CHECK(s.apply(s.source().top_vector(i)).empty());
}
