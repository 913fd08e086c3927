#ifndef NWVOA_FOCK_HPP
#define NWVOA_FOCK_HPP

#include "nwvoa/matrix.hpp"
#include "nwvoa/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nwvoa {

class FockState;

/* Exponent of a lattice exponential e^gamma, as rational coordinates in the
 * frame's generator basis. */
using LatticePoint = std::vector<Rational>;

/* One Heisenberg creation mode a_gen(n), n < 0. */
struct Mode {
    int gen;
    long n;
    friend auto operator<=>(const Mode&, const Mode&) = default;
};

/* Normally ordered multiset of creation modes, kept sorted. */
using Word = std::vector<Mode>;

struct FockKey {
    Word word;
    LatticePoint exp;
    friend bool operator==(const FockKey&, const FockKey&) = default;
    friend std::strong_ordering operator<=>(const FockKey& a, const FockKey& b);
};

/* The ambient data every state lives over: Heisenberg generators with an
 * exact Gram matrix, the sign table of a bimultiplicative 2-cocycle on the
 * generator basis, allowed exponent directions, and optionally a conformal
 * state and a charge direction.  Immutable once built. */
struct FrameData {
    std::vector<std::string> generators;
    std::vector<std::vector<Rational>> gram;
    std::vector<std::vector<int>> cocycle; // entries +-1
    std::vector<LatticePoint> lattice_basis;
    std::optional<LatticePoint> charge_vector;
    std::shared_ptr<const FockState> conformal;   // set by FrameBuilder
    std::string conformal_expr;                   // prefix-grammar source, for round-trips
    std::vector<std::pair<int, int>> neg_cocycle; // positions of the -1 entries
};

class Frame {
public:
    Frame() = default;
    explicit Frame(std::shared_ptr<const FrameData> d) : data_(std::move(d)) {}

    bool valid() const { return static_cast<bool>(data_); }
    const FrameData& data() const { return *data_; }
    std::size_t size() const { return data_->generators.size(); }
    int index_of(const std::string& name) const;

    /* <gamma, delta> through the Gram matrix. */
    Rational pairing(const LatticePoint& a, const LatticePoint& b) const;

    /* Bimultiplicative extension of the sign table; throws if a -1 entry is
     * raised to a non-integral power. */
    Rational cocycle_sign(const LatticePoint& a, const LatticePoint& b) const;

    /* norm mod 2; parity of e^gamma. Throws on non-integral norm. */
    int parity(const LatticePoint& g) const;

    bool in_lattice_span(const LatticePoint& g) const;

    bool same(const Frame& o) const { return data_ == o.data_; }
    /* Structural comparison, used by the config round-trip contract. */
    bool same_definition(const Frame& o) const;

    const std::shared_ptr<const FrameData>& ptr() const { return data_; }

private:
    std::shared_ptr<const FrameData> data_;
};

class FrameBuilder {
public:
    FrameBuilder& generators(std::vector<std::string> names);
    FrameBuilder& gram(std::vector<std::vector<Rational>> g);
    FrameBuilder& cocycle(std::vector<std::vector<int>> eps);
    FrameBuilder& lattice(std::vector<LatticePoint> basis);
    FrameBuilder& charge(LatticePoint v);
    /* Prefix expression, parsed against the frame under construction. */
    FrameBuilder& conformal(const std::string& expr);
    Frame build();

private:
    std::shared_ptr<FrameData> d_ = std::make_shared<FrameData>();
    std::string conformal_expr_;
};

/* A finite linear combination of normally ordered creation words applied to
 * lattice exponentials.  The universal state representation. */
class FockState {
public:
    FockState() = default;
    explicit FockState(Frame f) : frame_(std::move(f)) {}

    static FockState vacuum(const Frame& f);
    static FockState exponential(const Frame& f, LatticePoint gamma);
    /* gamma(n) |0>, n < 0, for a direction gamma. */
    static FockState heis(const Frame& f, const LatticePoint& gamma, long n);

    const Frame& frame() const { return frame_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<FockKey, Rational>& terms() const { return terms_; }

    void add_term(const Word& w, const LatticePoint& e, const Rational& c);
    void add_term_sorted(Word&& w, const LatticePoint& e, Rational c);

    FockState& operator+=(const FockState& o);
    FockState& operator-=(const FockState& o);
    FockState& operator*=(const Rational& c);
    friend FockState operator+(FockState a, const FockState& b) { return a += b; }
    friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
    friend FockState operator*(const Rational& c, FockState s) { return s *= c; }
    friend bool operator==(const FockState& a, const FockState& b) {
        return a.terms_ == b.terms_;
    }

    /* Creation operator gamma(n), n < 0, applied termwise (commuting modes,
     * plain prepend). */
    FockState prepend(const LatticePoint& gamma, long n) const;

    /* Pointwise product of commuting creation words: (u e^a)(v e^b) =
     * (u v) e^{a+b}.  Used to assemble tensor bases inside one frame. */
    friend FockState word_product(const FockState& a, const FockState& b);

    /* Common exponent of all terms; throws unless homogeneous. */
    const LatticePoint& exponent() const;
    int parity() const;

    std::string str() const;

private:
    Frame frame_;
    std::map<FockKey, Rational> terms_;
    friend FockState mode_apply(const FockState&, const Rational&, const FockState&);
};

/* A_n B: the coefficient of z^{-n-1} in Y(A,z)B, per the standard lattice
 * vertex operator expansion.  Exact; n may be rational when the exponents
 * pair non-integrally (intertwiner modes); returns zero when -n-1 is not
 * among the powers of z. */
FockState mode_apply(const FockState& A, const Rational& n, const FockState& B);

/* Translation operator: T e^g = g(-1)e^g, derivation on words. */
FockState translate(const FockState& A);
FockState translate_pow(FockState A, int i); // T^i A

/* [A_m, B_n]_{+-} target, computed as the literal double application
 * A_m (B_n t) - (-1)^{|A||B|} B_n (A_m t). */
FockState bracket_modes(const FockState& A, long m, const FockState& B, long n,
                        const FockState& target);

/* Same bracket through the Borcherds sum  sum_j C(m,j) (A_j B)_{m+n-j};
 * equality with bracket_modes is a test invariant. */
FockState bracket_modes_sum(const FockState& A, long m, const FockState& B, long n,
                            const FockState& target);

/* Eigenvalue of (conformal)_1 on A; throws if A is not an eigenvector or the
 * frame has no conformal state. */
Rational weight_of(const FockState& A);

/* Eigenvalue of the frame's charge direction zero mode. */
Rational charge_of(const FockState& A);

/* Largest n with A_n B possibly nonzero (from the z-power lower bound). */
long max_nonzero_mode(const FockState& A, const FockState& B);

/* Coordinates of states in the canonical (word, exponent) monomial basis;
 * used to build exact matrices of operators between components. */
class FockIndexer {
public:
    std::size_t intern(const FockKey& k);
    std::optional<std::size_t> lookup(const FockKey& k) const;
    std::size_t size() const { return keys_.size(); }
    VectorQ coords(const FockState& s); // interns unseen keys
    std::optional<VectorQ> coords_if_known(const FockState& s) const;

private:
    std::map<FockKey, std::size_t> index_;
    std::vector<FockKey> keys_;
};

} // namespace nwvoa

#endif
