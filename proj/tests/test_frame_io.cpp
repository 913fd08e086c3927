#include "nwvoa/frame.hpp"

#include <doctest.h>

#include <sstream>

using namespace nwvoa;

TEST_CASE("frame config round trip is the identity") {
    for (Frame f : {nw_frame(), nw_brst_frame(), pi_frame()}) {
        std::ostringstream out;
        save_frame(f, out);
        std::istringstream in(out.str());
        Frame g = load_frame(in);
        CHECK(f.same_definition(g));

        // and a second round trip is byte-identical
        std::ostringstream out2;
        save_frame(g, out2);
        CHECK(out.str() == out2.str());
    }
}

TEST_CASE("state expressions parse and serialize exactly") {
    Frame f = pi_frame();
    FockState omega = *f.data().conformal;
    std::string expr = serialize_state_expr(omega);
    CHECK(parse_state_expr(f, expr) == omega);

    FockState sum = parse_state_expr(f, "(add (scale 1/2 (mode c -1 (vac))) (exp 0 2))");
    CHECK(sum.term_count() == 2);
    CHECK_THROWS_AS(parse_state_expr(f, "(mode c 1 (vac))"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_expr(f, "(bogus)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state_expr(f, "(vac) junk"), std::invalid_argument);
}

TEST_CASE("builder validates gram symmetry and the cocycle rule") {
    FrameBuilder b;
    b.generators({"a", "b"});
    b.gram({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}});
    CHECK_THROWS_AS(b.build(), std::invalid_argument);

    FrameBuilder b2;
    b2.generators({"a"}).gram({{Rational(1)}});
    // <a,a> = 1 is odd, so eps(a,a)/eps(a,a) = 1 must equal (-1)^{1+1} = 1: fine
    CHECK_NOTHROW(b2.build());

    FrameBuilder b3;
    b3.generators({"a", "b"}).gram({{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}});
    b3.cocycle({{1, 1}, {1, 1}}); // violates the odd-pair rule
    CHECK_THROWS_AS(b3.build(), std::invalid_argument);
}

TEST_CASE("missing files and unknown keys are reported") {
    CHECK_THROWS(load_frame_file("/nonexistent/frame.cfg"));
    std::istringstream in("wibble 1 2 3\n");
    CHECK_THROWS_AS(load_frame(in), std::invalid_argument);
}
