#ifndef NWVOA_SCREENING_HPP
#define NWVOA_SCREENING_HPP

#include "nwvoa/fock.hpp"
#include "nwvoa/matrix.hpp"
#include "nwvoa/relaxed.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nwvoa::screening {

/* Fusion data consumed as a table:
 *   L[-1,0] x L[x,y]   = L[x-1, (x-2)/(x-1) y]        (x in Z \ {1})
 *   L[-1,0] x L[1,y]   = 0                            (y != 0)
 *   L[-1,0] x L[1,0]   = sum_y L[0,y]                 (one operator per y)
 *   Pi_{r1}(l1) x Pi_{r2}(l2) = Pi_{r1+r2}(l1+l2)
 * with the weight parametrization Delta_{r,s} = (r+1) s.                 */
Rational fusion_delta(long r, const Rational& s);

struct FusionRuleEntry {
    std::string kind; // "hvir", "hvir-zero", "hvir-spread", "pi"
    std::string rule;
};
const std::vector<FusionRuleEntry>& fusion_rules();

/* Target HVir label for L[-1,0] x L[x,y]; nullopt when the fusion vanishes
 * (x = 1, y != 0).  The x = 1, y = 0 spread case needs a chosen y3 and is
 * handled by the log-module assembly. */
std::optional<std::pair<Rational, Rational>> hvir_fusion_target(const Rational& x,
                                                                const Rational& y);

struct Compat {
    bool ok;
    Rational obstruction; // fractional part of the weight congruence
};

/* U[x,y,lambda,r] is a module for the extended algebra iff all conformal
 * weights are congruent mod Z: lambda = y/(x-1) mod Z for x in Z\{1};
 * lambda = -y mod Z on the x = 1 branch. */
Compat vmodule_compatible(const Rational& x, const Rational& y, const Rational& lambda,
                          long r);

/* Modes of the intertwining operator Y(v_{-1,0}, z): L[x2,y2] -> L[x3,y3],
 * normalized by v_(m0) v2 = v3 with m0 = y2 - y3 - 1.  All deeper matrix
 * coefficients are forced by
 *   [T(m), v_(n)] = -(m+n+1) v_(m+n),   [I(m), v_(n)] = -v_(m+n)
 * and the vanishing of joint raising kernels in the simple target. */
class HVirIntertwiner {
public:
    HVirIntertwiner(Rational x2, Rational y2, Rational x3, Rational y3);

    const Rational& m0() const { return m0_; }
    hvir::IrrepComponents& source() { return *m2_; }
    hvir::IrrepComponents& target() { return *m3_; }

    /* v_(n) applied to the source quotient basis vector (degree d, index
     * idx); coordinates in the target component of degree d + (m0 - n). */
    VectorQ apply(const Rational& n, long d, std::size_t idx);

    /* The operator must kill the source singular vector for the quotient
     * action to be well defined; checked at target degrees <= max_degree. */
    bool annihilates_singular(long max_degree);

private:
    VectorQ tower(long e);
    VectorQ apply_word(long offset, const hvir::VermaWord& w);

    Rational m0_;
    std::shared_ptr<hvir::IrrepComponents> m2_, m3_;
    std::map<long, VectorQ> towers_;
    std::map<std::pair<long, hvir::VermaWord>, VectorQ> memo_;
};

/* S = Res_z Y(s, z), s = v_{-1,0} (x) e^{nu}, acting between tensor modules
 * L[x,y] (x) Pi_r(lambda)  ->  L[x3,y3] (x) Pi_{r-1}(lambda). */
class TensorScreening {
public:
    TensorScreening(relaxed::RelaxedModuleSpec source,
                    std::pair<Rational, Rational> target_xy);

    relaxed::TensorModule& source() { return src_; }
    relaxed::TensorModule& target() { return tgt_; }

    relaxed::TVec apply_basis(const relaxed::TKey& k);
    relaxed::TVec apply(const relaxed::TVec& v);

    /* Exact matrix of S between the (h, j) components, rows indexed by the
     * target component basis. */
    MatrixQ matrix(const Rational& h, const Rational& j);

private:
    relaxed::TensorModule src_, tgt_;
    HVirIntertwiner iv_;
    Frame pi_;
    FockState nu_op_;
};

/* Vacuum pair L^HVir (x) Pi -> L^HVir[-1,0] (x) Pi_{-1}(0) through the
 * lattice operator S = Res_z Y(e^alpha, z) in the ambient frame. */
struct KernelCell {
    std::size_t dim_source = 0;
    std::size_t rank = 0;
    std::size_t dim_ker = 0;
};
std::map<std::pair<long, long>, KernelCell> kernel_profile(long max_h, long charge_window);

/* Basis of the (L^sug(0), J(0)) = (h, j) component of Ker S inside
 * L^HVir (x) Pi, as explicit states of the given ambient frame (the BRST
 * frame works too; the extra fermionic direction is inert here). */
std::vector<FockState> v1_component(const Frame& frame, long h, long j);

/* S e^{-alpha-beta} (= e^{-beta}, the nonvanishing witness). */
FockState screening_witness();

/* Deformation data of L~(0) = L(0) + S on U[x,y,lambda,r]. */
struct LogModuleSpec {
    Rational x, y, lambda;
    long r = 1;
};

struct DeformedL0 {
    std::size_t dim_source = 0, dim_target = 0;
    MatrixQ semisimple; // h Id on both layers
    MatrixQ nilpotent;  // S in the lower-left block
};
DeformedL0 deformed_L0(TensorScreening& s, const Rational& h, const Rational& j);

struct RankTwoReport {
    bool compatible = false;
    bool nilpotent_nonzero = false;
    bool square_zero = true;
    bool nonsplit_witness = false;
    bool layer_dims_checked = false; // (iv); false when skipped
    bool layer_dims_match = false;
    bool skipped_infinite_length = false; // x = 2 flag
    std::optional<Rational> nu;           // S Z^(1)_{-1} coefficient, x = 1 branch
    std::vector<std::string> failures;
    long cells_scanned = 0;
    bool pass() const { return failures.empty(); }
};

/* Certifies, on bidegrees with weight <= max_weight: the nilpotent part of
 * L~(0) is nonzero somewhere and squares to zero everywhere; a lift of a
 * quotient-layer generator maps onto a nonzero sub-layer vector; and (for
 * x not in {1,2}) the layer composition-factor dimensions agree with the
 * g-twist relabeling between the quotient of the top layer and the
 * submodule of the bottom layer. */
RankTwoReport rank_two_certificate(const LogModuleSpec& spec, const Rational& max_weight);

} // namespace nwvoa::screening

#endif
