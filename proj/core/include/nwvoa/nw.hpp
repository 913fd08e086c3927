#ifndef NWVOA_NW_HPP
#define NWVOA_NW_HPP

#include "nwvoa/fock.hpp"
#include "nwvoa/frame.hpp"
#include "nwvoa/series.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace nwvoa::nw {

/* The four-dimensional Lie algebra with [E,F] = I, [J,E] = E, [J,F] = -F,
 * I central; invariant form (E,F) = (I,J) = 1, (I,I) = 0. */
enum class Gen { E, F, I, J };

constexpr std::array<Gen, 4> kGens = {Gen::E, Gen::F, Gen::I, Gen::J};
const char* gen_name(Gen g);

/* [a, b] as a coefficient on a single generator (the bracket table is that
 * sparse), or nullopt for zero. */
std::optional<std::pair<Rational, Gen>> h4_bracket(Gen a, Gen b);
Rational h4_form(Gen a, Gen b);

struct AffineMode {
    Gen g;
    long n;
    friend auto operator<=>(const AffineMode&, const AffineMode&) = default;
};

/* Linear combination of affine modes plus a central multiple of K. */
struct AffineSum {
    std::map<AffineMode, Rational> modes;
    Rational central;
    void add(const AffineMode& m, const Rational& c);
    friend bool operator==(const AffineSum&, const AffineSum&) = default;
};

/* [x(n), y(m)] = [x,y](n+m) + n (x,y) d_{n+m,0} K. */
AffineSum affine_bracket(const AffineMode& a, const AffineMode& b);

/* PBW monomials F^a E^b I^c J^d in U(h4) (Zhu-algebra arithmetic). */
struct UH4 {
    std::map<std::array<long, 4>, Rational> terms; // exponents of (F, E, I, J)
    static UH4 generator(Gen g);
    static UH4 casimir(); // FE + IJ
    UH4 operator*(const UH4& o) const;
    UH4 operator-(const UH4& o) const;
    UH4& operator+=(const UH4& o);
    bool is_zero() const { return terms.empty(); }
};

/* [Omega, X] = 0 for all generators, by PBW reduction. */
bool casimir_check();

/* Counts PBW monomials in E(-n),F(-n),I(-n),J(-n), n >= 1, by (weight,
 * charge); charge +1 for E, -1 for F. */
BigradedSeries pbw_character(long max_h);

struct H4Realization {
    Frame target;
    std::map<Gen, FockState> images;
    std::string name;
    const FockState& image(Gen g) const { return images.at(g); }
};

/* E -> a+, F -> da- + p(-1)a-, I -> p(-1)1, J -> p(-1)/2 + q(-1) - a+(-1)a-,
 * with a+ = e^{alpha+beta}, a- = -alpha(-1)e^{-alpha-beta}. */
H4Realization wakimoto_map(const Frame& frame);

/* E -> e^c, F -> (T(-2) - nu(-1) I - nu(-2)) e^{-c}, I -> c(-1)1 + I_HVir,
 * J -> d(-1)/2 + I_HVir/2, all expanded into the ambient generators. */
H4Realization inverse_qhr_map(const Frame& frame);

/* The Weyl pair (a+, a-) used by both realizations. */
std::pair<FockState, FockState> weyl_pair(const Frame& frame);

/* Image of the Sugawara vector
 * (E(-1)F(-1) + I(-1)J(-1) - I(-2)/2 - I(-1)^2/2) 1 under the realization. */
FockState sugawara_state(const H4Realization& r);

/* Right side of the closed-form Sugawara image:
 * T_HVir - I_HVir(-2)/2 + c(-1)d(-1)/2 - (c(-2)+d(-2))/2. */
FockState expr_sug1_state(const Frame& frame);

/* Central charge of the Sugawara Virasoro, read off the central term of
 * [L(m), L(-m)] on the vacuum at m = 2 and cross-checked at m = 3. */
Rational sugawara_central_charge(const Frame& frame);

struct CheckFailure {
    std::string what;
};

struct EmbeddingReport {
    long checks = 0;
    std::vector<CheckFailure> failures;
    bool pass() const { return failures.empty(); }
};

/* For all generator pairs and |m|,|n| <= mode_bound, verifies
 *   [X(m), Y(n)] t = ([X,Y](m+n) + m (X,Y) d_{m+n,0}) t
 * through the realization, on a spanning family of states with word degree
 * <= 2 over e^{mc}, m in {-1,0,1}. */
EmbeddingReport verify_embedding(const H4Realization& r, long mode_bound);

} // namespace nwvoa::nw

#endif
