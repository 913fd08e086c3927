#ifndef NWVOA_FRAME_HPP
#define NWVOA_FRAME_HPP

#include "nwvoa/fock.hpp"

#include <iosfwd>
#include <string>

namespace nwvoa {

/* State expressions, prefix grammar (see docs/frame-format.md):
 *   (vac) | (exp r1 ... rN) | (mode GEN N expr) | (scale RAT expr)
 *   (add expr expr ...) | (translate expr)
 * Modes must be negative (creation).  parse/serialize round-trip exactly. */
FockState parse_state_expr(const Frame& f, const std::string& expr);
std::string serialize_state_expr(const FockState& s);

/* Declarative frame config: generators, gram rows, cocycle rows, lattice
 * rows, optional charge row and conformal expression.  frame -> file -> frame
 * is the identity on definitions. */
Frame load_frame(std::istream& in);
Frame load_frame_file(const std::string& path);
void save_frame(const Frame& f, std::ostream& out);
void save_frame_file(const Frame& f, const std::string& path);

/* Named lattice points of the ambient free-field frame in generator
 * coordinates (alpha, beta, p, q [, phi]). */
struct NWVectors {
    LatticePoint alpha, beta, p, q;
    LatticePoint c, d, c1, d1, nu, mu;
    LatticePoint phi; // empty unless the frame has the fermionic direction
};

/* Ambient frame of the two free-field realizations: generators
 * (alpha,beta,p,q), Gram <a,a>=1, <b,b>=-1, <p,q>=1; conformal state is the
 * image of the Sugawara vector, charge direction is the J(0) image. */
Frame nw_frame();

/* Same with the fermionic direction phi (<phi,phi> = 1) appended; conformal
 * is the reduced Virasoro state, charge direction is phi. */
Frame nw_brst_frame();

/* Half-lattice frame: generators (c,d) with <c,d> = 2, trivial cocycle,
 * conformal (1/2)c(-1)d(-1) - (1/2)(c(-2)+d(-2)), charge (1/2)d. */
Frame pi_frame();

NWVectors nw_vectors(const Frame& f);

/* c, d coordinates inside pi_frame. */
struct PiVectors {
    LatticePoint c, d, nu, mu;
};
PiVectors pi_vectors(const Frame& f);

} // namespace nwvoa

#endif
