#include "nwvoa/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nwvoa {

std::strong_ordering operator<=>(const FockKey& a, const FockKey& b) {
    if (auto c = a.word <=> b.word; c != 0) return c;
    if (auto c = a.exp.size() <=> b.exp.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.exp.size(); ++i)
        if (auto c = a.exp[i] <=> b.exp[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Frame

int Frame::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < data_->generators.size(); ++i)
        if (data_->generators[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("Frame: unknown generator '" + name + "'");
}

Rational Frame::pairing(const LatticePoint& a, const LatticePoint& b) const {
    Rational out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out += a[i] * data_->gram[i][j] * b[j];
        }
    }
    return out;
}

Rational Frame::cocycle_sign(const LatticePoint& a, const LatticePoint& b) const {
    int sign = 1;
    for (auto& [i, j] : data_->neg_cocycle) {
        if (a[i].is_zero() || b[j].is_zero()) continue;
        Rational e = a[i] * b[j];
        if (!e.is_integer())
            throw std::domain_error(
                "Frame: cocycle sign undefined for non-integral exponent pair");
        if (e.num() % 2 != 0) sign = -sign;
    }
    return Rational(sign);
}

int Frame::parity(const LatticePoint& g) const {
    Rational norm = pairing(g, g);
    if (!norm.is_integer())
        throw std::domain_error("Frame: parity undefined for non-integral norm");
    Int r = norm.num() % 2;
    return r == 0 ? 0 : 1;
}

bool Frame::in_lattice_span(const LatticePoint& g) const {
    bool zero = true;
    for (auto& x : g)
        if (!x.is_zero()) { zero = false; break; }
    if (zero) return true;
    const auto& basis = data_->lattice_basis;
    if (basis.empty()) return false;
    MatrixQ m(size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < size(); ++r) m.at(r, c) = basis[c][r];
    return m.solve(g).has_value();
}

bool Frame::same_definition(const Frame& o) const {
    const FrameData& x = *data_;
    const FrameData& y = *o.data_;
    if (x.generators != y.generators || x.gram != y.gram || x.cocycle != y.cocycle ||
        x.lattice_basis != y.lattice_basis || x.charge_vector != y.charge_vector)
        return false;
    if (static_cast<bool>(x.conformal) != static_cast<bool>(y.conformal)) return false;
    if (x.conformal && !(x.conformal->terms() == y.conformal->terms())) return false;
    return true;
}

// ---------------------------------------------------------------- FockState

FockState FockState::vacuum(const Frame& f) {
    FockState s(f);
    s.add_term({}, LatticePoint(f.size(), Rational(0)), Rational(1));
    return s;
}

FockState FockState::exponential(const Frame& f, LatticePoint gamma) {
    if (gamma.size() != f.size())
        throw std::invalid_argument("FockState: exponent dimension mismatch");
    if (!f.in_lattice_span(gamma))
        throw std::invalid_argument("FockState: exponent outside the frame's lattice directions");
    FockState s(f);
    s.add_term({}, std::move(gamma), Rational(1));
    return s;
}

FockState FockState::heis(const Frame& f, const LatticePoint& gamma, long n) {
    return FockState::vacuum(f).prepend(gamma, n);
}

void FockState::add_term(const Word& w, const LatticePoint& e, const Rational& c) {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    add_term_sorted(std::move(sorted), e, c);
}

void FockState::add_term_sorted(Word&& w, const LatticePoint& e, Rational c) {
    if (c.is_zero()) return;
    FockKey k{std::move(w), e};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockState& FockState::operator+=(const FockState& o) {
    if (!frame_.valid()) frame_ = o.frame_;
    else if (o.frame_.valid() && !frame_.same(o.frame_))
        throw std::invalid_argument("FockState: frame mismatch in addition");
    for (auto& [k, c] : o.terms_) add_term(k.word, k.exp, c);
    return *this;
}

FockState& FockState::operator-=(const FockState& o) {
    if (!frame_.valid()) frame_ = o.frame_;
    else if (o.frame_.valid() && !frame_.same(o.frame_))
        throw std::invalid_argument("FockState: frame mismatch in subtraction");
    for (auto& [k, c] : o.terms_) add_term(k.word, k.exp, -c);
    return *this;
}

FockState& FockState::operator*=(const Rational& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

FockState FockState::prepend(const LatticePoint& gamma, long n) const {
    if (n >= 0) throw std::invalid_argument("FockState::prepend: mode must be negative");
    FockState out(frame_);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i].is_zero()) continue;
        for (auto& [k, c] : terms_) {
            Word w = k.word;
            w.push_back({static_cast<int>(i), n});
            out.add_term(w, k.exp, c * gamma[i]);
        }
    }
    return out;
}

FockState word_product(const FockState& a, const FockState& b) {
    if (!a.frame().same(b.frame()))
        throw std::invalid_argument("word_product: frame mismatch");
    FockState out(a.frame());
    for (auto& [ka, ca] : a.terms()) {
        for (auto& [kb, cb] : b.terms()) {
            Word w = ka.word;
            w.insert(w.end(), kb.word.begin(), kb.word.end());
            LatticePoint e = ka.exp;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += kb.exp[i];
            out.add_term(w, e, ca * cb);
        }
    }
    return out;
}

const LatticePoint& FockState::exponent() const {
    if (terms_.empty()) throw std::logic_error("FockState: zero state has no exponent");
    const LatticePoint& e = terms_.begin()->first.exp;
    for (auto& [k, c] : terms_)
        if (!(k.exp == e)) throw std::logic_error("FockState: not exponent-homogeneous");
    return e;
}

int FockState::parity() const {
    if (terms_.empty()) return 0;
    int p = frame_.parity(terms_.begin()->first.exp);
    for (auto& [k, c] : terms_)
        if (frame_.parity(k.exp) != p) throw std::logic_error("FockState: mixed parity");
    return p;
}

std::string FockState::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (auto& m : k.word)
            os << "*" << frame_.data().generators[m.gen] << "(" << m.n << ")";
        bool has_exp = false;
        for (auto& x : k.exp)
            if (!x.is_zero()) { has_exp = true; break; }
        if (has_exp) {
            os << "*e^{";
            bool f2 = true;
            for (std::size_t i = 0; i < k.exp.size(); ++i) {
                if (k.exp[i].is_zero()) continue;
                if (!f2) os << ",";
                f2 = false;
                os << frame_.data().generators[i] << ":" << k.exp[i].str();
            }
            os << "}";
        }
    }
    return os.str();
}

// ------------------------------------------------------------- mode_apply

namespace {

using EminusOptions = std::vector<std::pair<Word, Rational>>;

struct ApplyCtx {
    const Frame& frame;
    const LatticePoint* ea;
    const LatticePoint* eb;
    LatticePoint esum;
    long t_target; // required integer part of the z-power
    FockState* out;
    Rational base; // coefA * coefB * cocycle sign
    // hoisted pairing tables for the current term pair
    std::vector<Rational> eplus_pair; // <gamma, b_gen> per B-word position
    std::vector<Rational> zero_pair;  // <a_gen, delta> per A-word position
    // per-A-term data: exponent directions and cached E^- expansions per budget
    const std::vector<std::pair<int, Rational>>* gamma_dirs = nullptr;
    std::vector<std::optional<EminusOptions>>* eminus_cache = nullptr;
    // feasibility bounds: largest budget gain available from the remaining
    // B removals (suffix sums of mode sizes) and from the remaining A modes
    std::vector<long> b_gain;
    std::vector<long> a_gain;
    // contributions of one term pair share the exponent; merge by word first
    std::map<Word, Rational> local;
};

void eminus_enumerate(const std::vector<std::pair<int, Rational>>& dirs, std::size_t dir_idx,
                      long m, long rest, Word& w, const Rational& f, EminusOptions& out) {
    if (rest == 0) {
        out.emplace_back(w, f);
        return;
    }
    if (m > rest) return;
    if (dir_idx == dirs.size()) {
        eminus_enumerate(dirs, 0, m + 1, rest, w, f, out);
        return;
    }
    Rational gm = dirs[dir_idx].second / Rational(m);
    Rational acc = f;
    for (long cnt = 0; cnt * m <= rest; ++cnt) {
        if (cnt > 0) acc *= gm / Rational(cnt); // builds gm^cnt / cnt!
        for (long c2 = 0; c2 < cnt; ++c2) w.push_back({dirs[dir_idx].first, -m});
        eminus_enumerate(dirs, dir_idx + 1, m, rest - cnt * m, w, acc, out);
        for (long c2 = 0; c2 < cnt; ++c2) w.pop_back();
    }
}

const EminusOptions& eminus_options(ApplyCtx& ctx, long budget) {
    auto& cache = *ctx.eminus_cache;
    if (static_cast<long>(cache.size()) <= budget) cache.resize(budget + 1);
    auto& slot = cache[budget];
    if (!slot) {
        EminusOptions opts;
        Word w;
        eminus_enumerate(*ctx.gamma_dirs, 0, 1, budget, w, Rational(1), opts);
        slot = std::move(opts);
    }
    return *slot;
}

/* Creation slots of the A-word plus the cached E^- expansions.  slots[s]
 * carries p_s; budget = t_target - zfix + sum(p_s) is written as sum of t_s
 * (t_s >= p_s) plus an E^- partition. */
void enumerate_tail(ApplyCtx& ctx, const std::vector<long>& slot_p,
                    const std::vector<Mode>& slot_gen_mode, std::size_t slot_idx, long budget,
                    Word& word, const Rational& factor) {
    if (slot_idx < slot_p.size()) {
        long p = slot_p[slot_idx];
        for (long t = p; t <= budget; ++t) {
            Rational f = factor * Rational(binomial(Int(t), p));
            if (f.is_zero()) continue;
            word.push_back({slot_gen_mode[slot_idx].gen, -1 - t});
            enumerate_tail(ctx, slot_p, slot_gen_mode, slot_idx + 1, budget - t, word, f);
            word.pop_back();
        }
        return;
    }
    for (auto& [ew, ec] : eminus_options(ctx, budget)) {
        Word full = word;
        full.insert(full.end(), ew.begin(), ew.end());
        std::sort(full.begin(), full.end());
        auto it = ctx.local.find(full);
        if (it == ctx.local.end()) ctx.local.emplace(std::move(full), factor * ec);
        else it->second += factor * ec;
    }
}

// Phase B: walk the A-word deciding contraction / zero mode / creation.
void enumerate_a_word(ApplyCtx& ctx, const Word& wa, std::size_t ai,
                      std::vector<Mode>& kept_b, long zfix,
                      std::vector<long>& slot_p, std::vector<Mode>& slot_gen,
                      const Rational& factor) {
    long budget = ctx.t_target - zfix;
    for (long p : slot_p) budget += p;
    if (budget + ctx.a_gain[ai] < 0) return; // cannot climb back to the residue
    if (ai == wa.size()) {
        Word word = kept_b;
        enumerate_tail(ctx, slot_p, slot_gen, 0, budget, word, factor);
        return;
    }
    const Mode& am = wa[ai];
    long p = -am.n - 1;
    const auto& gram = ctx.frame.data().gram;

    // (i) contract with a surviving B mode of equal index
    for (std::size_t bi = 0; bi < kept_b.size(); ++bi) {
        if (bi > 0 && kept_b[bi] == kept_b[bi - 1]) continue; // identical slots once, weighted
        long m = -kept_b[bi].n;
        const Rational& pair = gram[am.gen][kept_b[bi].gen];
        if (pair.is_zero()) continue;
        long mult = 0;
        for (auto& km : kept_b)
            if (km == kept_b[bi]) ++mult;
        Rational f = factor * Rational(mult) * Rational(m) * pair *
                     Rational(binomial(Int(-m - 1), p));
        std::vector<Mode> next = kept_b;
        next.erase(next.begin() + bi);
        enumerate_a_word(ctx, wa, ai + 1, next, zfix - m - 1 - p, slot_p, slot_gen, f);
    }
    // (ii) zero mode against e^{delta}
    if (!ctx.zero_pair[ai].is_zero()) {
        Rational f = factor * ctx.zero_pair[ai];
        if (p % 2 != 0) f = -f; // binom(-1, p) = (-1)^p
        enumerate_a_word(ctx, wa, ai + 1, kept_b, zfix - 1 - p, slot_p, slot_gen, f);
    }
    // (iii) creation slot, index fixed later
    slot_p.push_back(p);
    slot_gen.push_back(am);
    enumerate_a_word(ctx, wa, ai + 1, kept_b, zfix, slot_p, slot_gen, factor);
    slot_p.pop_back();
    slot_gen.pop_back();
}

// Phase A: every B mode either survives or is eaten by E^+(gamma, z).
void enumerate_b_word(ApplyCtx& ctx, const Word& wa, const Word& wb, std::size_t bi,
                      std::vector<Mode>& kept, long zfix, const Rational& factor) {
    if (ctx.t_target - zfix + ctx.b_gain[bi] + ctx.a_gain[0] < 0) return;
    if (bi == wb.size()) {
        std::vector<long> slot_p;
        std::vector<Mode> slot_gen;
        enumerate_a_word(ctx, wa, 0, kept, zfix, slot_p, slot_gen, factor);
        return;
    }
    kept.push_back(wb[bi]);
    enumerate_b_word(ctx, wa, wb, bi + 1, kept, zfix, factor);
    kept.pop_back();

    const Rational& pair = ctx.eplus_pair[bi];
    if (!pair.is_zero()) {
        long m = -wb[bi].n;
        enumerate_b_word(ctx, wa, wb, bi + 1, kept, zfix - m, factor * (-pair));
    }
}

} // namespace

FockState mode_apply(const FockState& A, const Rational& n, const FockState& B) {
    if (A.is_zero() || B.is_zero())
        return FockState(A.frame().valid() ? A.frame() : B.frame());
    if (!A.frame().same(B.frame()))
        throw std::invalid_argument("mode_apply: frame mismatch");
    const Frame& fr = A.frame();
    FockState out(fr);

    // consecutive term pairs usually share exponents; cache their data
    struct ExpCache {
        Rational t; // -n-1 - <gamma,delta>
        Rational sign;
        bool integral;
    };
    const LatticePoint* last_ea = nullptr;
    const LatticePoint* last_eb = nullptr;
    ExpCache cache;

    for (auto& [ka, ca] : A.terms()) {
        std::vector<std::pair<int, Rational>> gamma_dirs;
        for (std::size_t i = 0; i < ka.exp.size(); ++i)
            if (!ka.exp[i].is_zero()) gamma_dirs.emplace_back(static_cast<int>(i), ka.exp[i]);
        std::vector<std::optional<EminusOptions>> eminus_cache;

        for (auto& [kb, cb] : B.terms()) {
            if (last_ea != &ka.exp || last_eb == nullptr || !(*last_eb == kb.exp)) {
                Rational P = fr.pairing(ka.exp, kb.exp);
                cache.t = -n - Rational(1) - P;
                cache.integral = cache.t.is_integer();
                cache.sign = cache.integral ? fr.cocycle_sign(ka.exp, kb.exp) : Rational(0);
                last_ea = &ka.exp;
                last_eb = &kb.exp;
            }
            if (!cache.integral) continue; // -n-1 not among the powers of z

            ApplyCtx ctx{fr, &ka.exp, &kb.exp, {}, 0, &out, Rational(0), {}, {}, nullptr,
                         nullptr};
            ctx.esum = ka.exp;
            for (std::size_t i = 0; i < ctx.esum.size(); ++i) ctx.esum[i] += kb.exp[i];
            ctx.t_target = to_long(cache.t.num());
            ctx.base = ca * cb * cache.sign;
            ctx.gamma_dirs = &gamma_dirs;
            ctx.eminus_cache = &eminus_cache;

            const auto& gram = fr.data().gram;
            ctx.eplus_pair.resize(kb.word.size());
            for (std::size_t bi = 0; bi < kb.word.size(); ++bi) {
                Rational pr;
                for (auto& [gi, gc] : gamma_dirs) pr += gc * gram[gi][kb.word[bi].gen];
                ctx.eplus_pair[bi] = pr;
            }
            ctx.zero_pair.resize(ka.word.size());
            for (std::size_t ai = 0; ai < ka.word.size(); ++ai) {
                Rational pr;
                for (std::size_t j = 0; j < kb.exp.size(); ++j)
                    if (!kb.exp[j].is_zero()) pr += gram[ka.word[ai].gen][j] * kb.exp[j];
                ctx.zero_pair[ai] = pr;
            }

            long maxb = 0;
            ctx.b_gain.assign(kb.word.size() + 1, 0);
            for (std::size_t bi = kb.word.size(); bi-- > 0;) {
                ctx.b_gain[bi] = ctx.b_gain[bi + 1] + (-kb.word[bi].n);
                maxb = std::max(maxb, -kb.word[bi].n);
            }
            ctx.a_gain.assign(ka.word.size() + 1, 0);
            for (std::size_t ai = ka.word.size(); ai-- > 0;)
                ctx.a_gain[ai] = ctx.a_gain[ai + 1] + (maxb + 1 + (-ka.word[ai].n - 1));

            std::vector<Mode> kept;
            enumerate_b_word(ctx, ka.word, kb.word, 0, kept, 0, ctx.base);
            for (auto& [w, c] : ctx.local)
                out.add_term_sorted(Word(w), ctx.esum, std::move(c));
        }
    }
    return out;
}

FockState translate(const FockState& A) {
    FockState out(A.frame());
    for (auto& [k, c] : A.terms()) {
        for (std::size_t i = 0; i < k.word.size(); ++i) {
            Word w = k.word;
            Rational f = c * Rational(-w[i].n);
            w[i].n -= 1;
            out.add_term(w, k.exp, f);
        }
        for (std::size_t g = 0; g < k.exp.size(); ++g) {
            if (k.exp[g].is_zero()) continue;
            Word w = k.word;
            w.push_back({static_cast<int>(g), -1});
            out.add_term(w, k.exp, c * k.exp[g]);
        }
    }
    return out;
}

FockState translate_pow(FockState A, int i) {
    for (int s = 0; s < i; ++s) A = translate(A);
    return A;
}

FockState bracket_modes(const FockState& A, long m, const FockState& B, long n,
                        const FockState& target) {
    int sgn = (A.parity() * B.parity()) % 2;
    FockState first = mode_apply(A, Rational(m), mode_apply(B, Rational(n), target));
    FockState second = mode_apply(B, Rational(n), mode_apply(A, Rational(m), target));
    return sgn ? first + second : first - second;
}

FockState bracket_modes_sum(const FockState& A, long m, const FockState& B, long n,
                            const FockState& target) {
    long jmax = max_nonzero_mode(A, B);
    FockState out(A.frame());
    for (long j = 0; j <= jmax; ++j) {
        Int coef = binomial(Int(m), j);
        if (coef == 0) continue;
        FockState AjB = mode_apply(A, Rational(j), B);
        if (AjB.is_zero()) continue;
        out += Rational(coef) * mode_apply(AjB, Rational(m + n - j), target);
    }
    return out;
}

long max_nonzero_mode(const FockState& A, const FockState& B) {
    if (A.is_zero() || B.is_zero()) return -1;
    const Frame& fr = A.frame();
    Rational best; // minimal possible z-power across term pairs
    bool init = false;
    for (auto& [ka, ca] : A.terms()) {
        for (auto& [kb, cb] : B.terms()) {
            long wdB = 0;
            for (auto& md : kb.word) wdB += -md.n;
            long drop = wdB;
            for (auto& md : ka.word) drop += wdB + (-md.n);
            Rational low = fr.pairing(ka.exp, kb.exp) - Rational(drop);
            if (!init || low < best) { best = low; init = true; }
        }
    }
    // A_n B = 0 once -n-1 < best, i.e. n > -1-best
    Rational bound = -best - Rational(1);
    return to_long(bound.floor());
}

Rational weight_of(const FockState& A) {
    if (!A.frame().valid() || !A.frame().data().conformal)
        throw std::logic_error("weight_of: frame has no conformal state");
    if (A.is_zero()) return Rational(0);
    FockState w = mode_apply(*A.frame().data().conformal, Rational(1), A);
    if (w.is_zero()) return Rational(0);
    const auto& [k0, c0] = *w.terms().begin();
    auto it = A.terms().find(k0);
    if (it == A.terms().end())
        throw std::logic_error("weight_of: not an eigenvector; split the state");
    Rational lambda = c0 / it->second;
    FockState check = A;
    check *= lambda;
    if (!(check == w))
        throw std::logic_error("weight_of: not an eigenvector; split the state");
    return lambda;
}

Rational charge_of(const FockState& A) {
    if (!A.frame().valid() || !A.frame().data().charge_vector)
        throw std::logic_error("charge_of: frame has no charge direction");
    if (A.is_zero()) return Rational(0);
    const LatticePoint& u = *A.frame().data().charge_vector;
    bool init = false;
    Rational q;
    for (auto& [k, c] : A.terms()) {
        Rational qt = A.frame().pairing(u, k.exp);
        if (!init) { q = qt; init = true; }
        else if (!(q == qt))
            throw std::logic_error("charge_of: not an eigenvector; split the state");
    }
    return q;
}

// ------------------------------------------------------------- FrameBuilder

FrameBuilder& FrameBuilder::generators(std::vector<std::string> names) {
    d_->generators = std::move(names);
    return *this;
}
FrameBuilder& FrameBuilder::gram(std::vector<std::vector<Rational>> g) {
    d_->gram = std::move(g);
    return *this;
}
FrameBuilder& FrameBuilder::cocycle(std::vector<std::vector<int>> eps) {
    d_->cocycle = std::move(eps);
    return *this;
}
FrameBuilder& FrameBuilder::lattice(std::vector<LatticePoint> basis) {
    d_->lattice_basis = std::move(basis);
    return *this;
}
FrameBuilder& FrameBuilder::charge(LatticePoint v) {
    d_->charge_vector = std::move(v);
    return *this;
}
FrameBuilder& FrameBuilder::conformal(const std::string& expr) {
    conformal_expr_ = expr;
    return *this;
}

FockState parse_state_expr(const Frame& f, const std::string& expr); // frame.cpp

Frame FrameBuilder::build() {
    std::size_t nn = d_->generators.size();
    if (d_->gram.size() != nn)
        throw std::invalid_argument("FrameBuilder: gram size mismatch");
    for (std::size_t i = 0; i < nn; ++i) {
        if (d_->gram[i].size() != nn)
            throw std::invalid_argument("FrameBuilder: gram row size mismatch");
        for (std::size_t j = 0; j < nn; ++j)
            if (!(d_->gram[i][j] == d_->gram[j][i]))
                throw std::invalid_argument("FrameBuilder: gram not symmetric");
    }
    if (d_->cocycle.empty())
        d_->cocycle.assign(nn, std::vector<int>(nn, 1));
    if (d_->cocycle.size() != nn)
        throw std::invalid_argument("FrameBuilder: cocycle size mismatch");
    // commutator condition eps(i,j)/eps(j,i) = (-1)^{<i,j> + <i,i><j,j>}
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = 0; j < nn; ++j) {
            Rational b = d_->gram[i][j] + d_->gram[i][i] * d_->gram[j][j];
            if (!b.is_integer())
                throw std::invalid_argument("FrameBuilder: non-integral basis pairings");
            int want = (b.num() % 2 == 0) ? 1 : -1;
            if (d_->cocycle[i][j] != want * d_->cocycle[j][i])
                throw std::invalid_argument("FrameBuilder: cocycle violates commutator rule");
        }
    }
    if (d_->lattice_basis.empty())
        for (std::size_t i = 0; i < nn; ++i) {
            LatticePoint e(nn, Rational(0));
            e[i] = Rational(1);
            d_->lattice_basis.push_back(std::move(e));
        }
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            if (d_->cocycle[i][j] == -1)
                d_->neg_cocycle.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Frame f(d_);
    if (!conformal_expr_.empty()) {
        FockState omega = parse_state_expr(f, conformal_expr_);
        d_->conformal = std::make_shared<const FockState>(std::move(omega));
        d_->conformal_expr = conformal_expr_;
    }
    return f;
}

// ------------------------------------------------------------- FockIndexer

std::size_t FockIndexer::intern(const FockKey& k) {
    auto it = index_.find(k);
    if (it != index_.end()) return it->second;
    std::size_t id = keys_.size();
    index_.emplace(k, id);
    keys_.push_back(k);
    return id;
}

std::optional<std::size_t> FockIndexer::lookup(const FockKey& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VectorQ FockIndexer::coords(const FockState& s) {
    for (auto& [k, c] : s.terms()) intern(k);
    VectorQ v(keys_.size(), Rational(0));
    for (auto& [k, c] : s.terms()) v[*lookup(k)] = c;
    return v;
}

std::optional<VectorQ> FockIndexer::coords_if_known(const FockState& s) const {
    VectorQ v(keys_.size(), Rational(0));
    for (auto& [k, c] : s.terms()) {
        auto id = lookup(k);
        if (!id) return std::nullopt;
        v[*id] = c;
    }
    return v;
}

} // namespace nwvoa
