#ifndef NWVOA_RELAXED_HPP
#define NWVOA_RELAXED_HPP

#include "nwvoa/fock.hpp"
#include "nwvoa/frame.hpp"
#include "nwvoa/hvir.hpp"
#include "nwvoa/nw.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nwvoa::relaxed {

/* Parameters of the tensor module L^HVir[x,y] (x) Pi_r(lambda):
 * HVir highest weight (x, y), mu-shift r, c-shift lambda. */
struct RelaxedModuleSpec {
    Rational x, y;
    long r = 1;
    Rational lambda;
};

/* L^sug(0) eigenvalue on v_{x,y} (x) e^{r mu + (lambda+i) c}:
 *   y + x/2 + (1-r)(r+2(lambda+i))/2 - r/2.                      */
Rational sug_weight(const RelaxedModuleSpec& s, long i = 0);

/* Omega = (y + (x-1)^2/2) Id on the top of the r = 1 module. */
Rational omega_eigen(const RelaxedModuleSpec& s);

/* J(0) eigenvalue of the i-th top vector: (x+r)/2 + lambda + i. */
Rational top_charge(const RelaxedModuleSpec& s, long i);

/* Closed-form zero-mode actions on Z_i = v_{x,y} (x) e^{mu+(lambda+i)c}
 * (r = 1 only): E(0)Z_i = Z_{i+1}, F(0)Z_i = (y - (lambda+i)(x-1)) Z_{i-1},
 * I(0)Z_i = (x-1) Z_i, J(0)Z_i = (x+1+2(lambda+i))/2 Z_i.  Returns the
 * scalar and the layer shift. */
struct TopAction {
    Rational coeff;
    long shift;
};
TopAction top_action(nw::Gen g, const RelaxedModuleSpec& s, long i);

enum class TopClass { VermaHW, VermaLW, OneDim, RelaxedIrr, RelaxedHWSub, RelaxedLWSub };

struct Classification {
    bool irreducible;
    TopClass cls;
    std::string label;
    std::optional<long> lw_index; // j with F(0)Z_j = 0 in the reducible x != 1 case
};

/* Irreducible iff (x = 1, y != 0) or (x != 1 and lambda != y/(x-1) mod Z). */
Classification classify(const Rational& x, const Rational& y, const Rational& lambda);

enum class FlowKind { Sigma, Shift, G, Rho };

/* Spectral flow images of affine modes: sigma^l, s_t, g^l = (sigma s_{-1/2})^l,
 * and the Delta(l h, z) twist rho_l (equal to g^l on modes). */
nw::AffineSum spectral_flow(FlowKind kind, const Rational& param, const nw::AffineMode& m);

/* Bigrading relabeling of the g^l twist: a vector with (L(0), J(0)) = (h, j)
 * on a module with constant I(0) = iota acquires
 *   h' = h + l (iota/2 - j) - l^2/2,   j' = j + l/2. */
std::pair<Rational, Rational> g_twist_bidegree(long ell, const Rational& iota,
                                               const Rational& h, const Rational& j);

/* Basis element of the tensor module: layer i, HVir quotient index a at
 * internal degree dv, and a (c,d)-word on the Pi side. */
struct TKey {
    long i;
    long dv;
    std::size_t a;
    Word w;
    friend auto operator<=>(const TKey&, const TKey&) = default;
};

using TVec = std::map<TKey, Rational>;

/* The module L^HVir[x,y] (x) Pi_r(lambda) with the h4 action transported
 * through the free-field realization: E acts by e^c, F by the three tensor
 * pieces of (T(-2) - nu(-1)I - nu(-2))e^{-c}, I by I_H + c, J by d/2 + I_H/2. */
class TensorModule {
public:
    explicit TensorModule(RelaxedModuleSpec spec);

    const RelaxedModuleSpec& spec() const { return spec_; }

    Rational weight(const TKey& k) const; // L^sug(0) eigenvalue
    Rational charge(const TKey& k) const; // J(0) eigenvalue

    /* Basis of the (weight, charge) component; empty when the bidegree is
     * incompatible with the grading. */
    std::vector<TKey> component(const Rational& h, const Rational& j);

    TVec apply(nw::Gen g, long n, const TVec& v);
    TVec top_vector(long i) const; // Z_i (top layer must be 1-dimensional)

    /* L^sug(0) through the realization: T(0) + I(0)/2 on the HVir factor
     * plus the lattice weight on the Pi factor.  Independent of the
     * closed-form sug_weight, which it must reproduce. */
    TVec sug_l0(const TVec& v);

    FockState pi_state(const TKey& k) const; // Pi-side Fock state
    hvir::IrrepComponents& hvir() { return *hvir_; }

    /* Decompose a (HVir coords at degree dv) x (Pi Fock state) pair into
     * basis coordinates. */
    void accumulate(TVec& out, long dv, const VectorQ& hcoords, const FockState& pi,
                    const Rational& scale) const;

private:
    RelaxedModuleSpec spec_;
    Frame pi_;
    PiVectors vec_;
    std::shared_ptr<hvir::IrrepComponents> hvir_;
    FockState e_op_, f1_op_, f2_op_, f3_op_; // e^c, e^{-c}, nu(-1)e^{-c}, nu(-2)e^{-c}
    LatticePoint layer_exp(long i) const;
    long layer_of(const LatticePoint& e) const;
};

/* Bigraded dimensions of the submodule generated by `start`, saturated with
 * generator modes X(n), |n| <= depth, inside the window of layers
 * |i - i0| <= layer_window and weights <= h_top + depth_weight. */
struct GrowthTable {
    std::map<std::pair<Rational, Rational>, std::size_t> dims; // (h, j) -> dim
    std::map<std::pair<Rational, Rational>, std::vector<VectorQ>> echelons;
    std::map<std::pair<Rational, Rational>, std::vector<TKey>> bases;
    bool contains(TensorModule& mod, const TVec& v) const;
};
GrowthTable submodule_growth(TensorModule& mod, const TVec& start, long depth,
                             long layer_window, long weight_window);

} // namespace nwvoa::relaxed

#endif
