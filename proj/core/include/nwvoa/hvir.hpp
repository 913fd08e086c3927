#ifndef NWVOA_HVIR_HPP
#define NWVOA_HVIR_HPP

#include "nwvoa/fock.hpp"
#include "nwvoa/matrix.hpp"
#include "nwvoa/series.hpp"

#include <map>
#include <vector>

namespace nwvoa::hvir {

/* Twisted Heisenberg-Virasoro algebra at (c_L, c_I, c_LI) = (2, 0, 1):
 *   [T(n),T(m)] = (n-m)T(n+m) + d_{n,-m} (n^3-n)/12 c_L
 *   [T(n),I(m)] = -m I(n+m) - d_{n,-m} (n^2+n) c_LI
 *   [I(n),I(m)] = n d_{n,-m} c_I                                        */

inline const Rational kCL = Rational(2);
inline const Rational kCI = Rational(0);
inline const Rational kCLI = Rational(1);

enum class Kind { T, I };

struct HVirMode {
    Kind kind;
    long n;
    friend auto operator<=>(const HVirMode&, const HVirMode&) = default;
};

/* Formal linear combination of modes plus a central scalar. */
struct ModeSum {
    std::map<HVirMode, Rational> modes;
    Rational central;
    void add(const HVirMode& m, const Rational& c);
};

ModeSum hvir_bracket(const HVirMode& a, const HVirMode& b);
ModeSum hvir_bracket(const ModeSum& a, const ModeSum& b);

/* PBW word T(-k1)...T(-ka) I(-l1)...I(-lb) v, indices descending. */
struct VermaWord {
    std::vector<long> t; // descending, entries >= 1
    std::vector<long> i;
    long degree() const;
    friend auto operator<=>(const VermaWord&, const VermaWord&) = default;
};

using VermaVec = std::map<VermaWord, Rational>;

/* Verma module V^HVir[x, y]: I(0) v = x v, T(0) v = y v. */
class VermaModule {
public:
    VermaModule(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {}

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    /* Exact action of T(n) or I(n), any n, PBW-reduced. */
    VermaVec apply(Kind k, long n, const VermaVec& v) const;
    VermaVec apply_word(const VermaWord& w, const VermaVec& v) const;

    static std::vector<VermaWord> basis(long degree);
    static VectorQ coords(const VermaVec& v, const std::vector<VermaWord>& basis);

private:
    VermaVec apply_one(Kind k, long n, const VermaWord& w, const Rational& c) const;
    Rational x_, y_;
};

/* Joint kernel of all raising operators on the degree-d component. */
std::vector<VermaVec> singular_space(const Rational& x, const Rational& y, long degree);

/* Billig character of L^HVir[x,y]: offset y - 1/12; partition-pair series,
 * times (1 - q^p), p = |x-1|, when x is an integer other than 1. */
BigradedSeries hvir_character(const Rational& x, const Rational& y, long max_h);

/* Graded components of the irreducible quotient L^HVir[x,y], with the mode
 * action transported from the Verma module.  For x in Z\{1} the singular
 * vector of degree p = |x-1| is found exactly and the submodule it generates
 * is eliminated level by level. */
class IrrepComponents {
public:
    IrrepComponents(Rational x, Rational y);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    long singular_degree() const { return p_; } // 0 if the Verma is simple

    std::size_t dim(long degree);
    /* coords of a Verma vector in the level-d quotient basis */
    VectorQ reduce(long degree, const VermaVec& v);
    /* representative Verma vector of a quotient basis element */
    VermaVec lift(long degree, std::size_t idx);
    /* quotient-to-quotient matrix of T(n)/I(n) from degree d to d-n */
    VectorQ apply(Kind k, long n, long degree, const VectorQ& coords);

private:
    struct Level {
        std::vector<VermaWord> basis;
        std::vector<VectorQ> sub_rref;       // reduced echelon rows of the submodule
        std::vector<std::size_t> pivots;     // pivot column per row
        std::vector<std::size_t> free_cols;  // quotient representatives
    };
    Level& level(long degree);
    const MatrixQ& action_matrix(Kind k, long n, long degree);

    Rational x_, y_;
    long p_ = 0;
    VermaVec singular_;
    VermaModule verma_;
    std::map<long, Level> levels_;
    std::map<std::tuple<int, long, long>, MatrixQ> action_cache_;
};

/* Free-field realization inside the ambient frame:
 * T = (1/2) c1(-1) d1(-1) 1 - (1/2) d1(-2) 1,  I = -c1(-1) 1. */
struct FreeFieldHVir {
    FockState T_state;
    FockState I_state;
};
FreeFieldHVir free_field_hvir(const Frame& frame);

/* Basis of the weight-h part of Ker(Q) in the Fock sector over e^{k d1/2},
 * Q = Res_z Y(e^{c1}, z).  Reachable labels are (x, y) = (-k, 0), k >= 0;
 * anything else throws (callers fall back to the Verma quotient). */
std::vector<FockState> hvir_module_component(const Rational& x, long h, const Frame& frame);

} // namespace nwvoa::hvir

#endif
