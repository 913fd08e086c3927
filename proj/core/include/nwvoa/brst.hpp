#ifndef NWVOA_BRST_HPP
#define NWVOA_BRST_HPP

#include "nwvoa/fock.hpp"
#include "nwvoa/frame.hpp"
#include "nwvoa/rational.hpp"

#include <string>
#include <vector>

namespace nwvoa::brst {

/* The reduction complex V^1(h4) (x) F^ch in the ambient frame extended by
 * the fermionic direction phi.  The differential is the zero mode of
 * (E(-1)1 + 1) (x) e^{phi} = e^{c+phi} + e^{phi}; the affine factor is
 * represented through its realized image (Ker S states). */
class BRSTComplex {
public:
    BRSTComplex();

    const Frame& frame() const { return frame_; }
    const FockState& d_state() const { return d_state_; }
    const FockState& Lhat() const { return lhat_; }
    const FockState& Ihat() const { return ihat_; }

    FockState d0(const FockState& a) const { return mode_apply(d_state_, Rational(0), a); }

    /* fermionic charge sector: the phi coordinate of the exponent */
    Rational phi_charge(const FockState& a) const;

private:
    Frame frame_;
    FockState d_state_, lhat_, ihat_;
};

struct Report {
    long checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/* d0(d0 A) = 0 on V1-component states tensored with fermionic words, for
 * affine weight <= max_weight and fermionic charge in [-2, 2]; also checks
 * the state identity (d_state)_0 d_state = 0. */
Report d0_square_check(const BRSTComplex& c, long max_weight);

/* d0 Lhat = d0 Ihat = 0, exactly. */
Report closedness_check(const BRSTComplex& c);

/* (Lhat, Ihat) satisfy the Heisenberg-Virasoro relations at
 * (c_L, c_I, c_LI) = (2, 0, 1) for |m|, |n| <= mode_bound, on a spanning
 * family of low-weight states. */
Report reduced_structure_check(const BRSTComplex& c, long mode_bound);

/* Windowed low-degree cohomology Euler numbers per Lhat(0)-weight, against
 * the vacuum character of the reduced algebra. */
struct EulerRow {
    long h;
    Int euler;
    Int expected;
};
std::vector<EulerRow> euler_profile(const BRSTComplex& c, long max_h);

} // namespace nwvoa::brst

#endif
