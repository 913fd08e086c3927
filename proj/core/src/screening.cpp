#include "nwvoa/screening.hpp"

#include "nwvoa/frame.hpp"
#include "nwvoa/nw.hpp"
#include "nwvoa/parallel.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace nwvoa::screening {

Rational fusion_delta(long r, const Rational& s) { return Rational(r + 1) * s; }

const std::vector<FusionRuleEntry>& fusion_rules() {
    static const std::vector<FusionRuleEntry> rules = {
        {"hvir", "L[-1,0] x L[x,y] = L[x-1,(x-2)/(x-1)y] for x in Z\\{1}"},
        {"hvir-zero", "L[-1,0] x L[1,y] = 0 for y != 0"},
        {"hvir-spread", "L[-1,0] x L[1,0] = sum_y L[0,y]"},
        {"pi", "Pi_r1(l1) x Pi_r2(l2) = Pi_{r1+r2}(l1+l2)"},
    };
    return rules;
}

std::optional<std::pair<Rational, Rational>> hvir_fusion_target(const Rational& x,
                                                                const Rational& y) {
    if (!x.is_integer()) throw std::invalid_argument("hvir_fusion_target: x must be integral");
    if (x == Rational(1)) {
        if (y == Rational(0))
            throw std::invalid_argument("hvir_fusion_target: spread case needs a chosen y3");
        return std::nullopt;
    }
    return std::make_pair(x - Rational(1), (x - Rational(2)) / (x - Rational(1)) * y);
}

Compat vmodule_compatible(const Rational& x, const Rational& y, const Rational& lambda,
                          long /*r*/) {
    if (!x.is_integer()) throw std::invalid_argument("vmodule_compatible: x must be integral");
    Compat out;
    if (x == Rational(1)) {
        // the partner layer carries L[0, y3] with lambda = -y3 mod Z; for the
        // source label (1, 0) the choice y3 = -lambda always works, while the
        // fusion with L[-1,0] vanishes for y != 0
        out.ok = y == Rational(0);
        out.obstruction = y.frac();
        return out;
    }
    Rational diff = lambda - y / (x - Rational(1));
    out.obstruction = diff.frac();
    out.ok = out.obstruction.is_zero();
    return out;
}

// -------------------------------------------------------- HVirIntertwiner

HVirIntertwiner::HVirIntertwiner(Rational x2, Rational y2, Rational x3, Rational y3)
    : m0_(y2 - y3 - Rational(1)),
      m2_(std::make_shared<hvir::IrrepComponents>(std::move(x2), std::move(y2))),
      m3_(std::make_shared<hvir::IrrepComponents>(std::move(x3), std::move(y3))) {}

VectorQ HVirIntertwiner::tower(long e) {
    if (e < 0) return {};
    auto it = towers_.find(e);
    if (it != towers_.end()) return it->second;

    VectorQ xi;
    std::size_t dim = m3_->dim(e);
    if (e == 0) {
        xi.assign(dim, Rational(0));
        if (dim != 1) throw std::logic_error("HVirIntertwiner: target top not 1-dim");
        xi[0] = Rational(1); // normalization C0 = 1
    } else {
        // solve T(k) xi = -(k + n + 1) xi_{n+k}, I(k) xi = -xi_{n+k}, n = m0 - e
        MatrixQ lhs;
        VectorQ rhs;
        for (long k = 1; k <= e; ++k) {
            VectorQ xik = tower(e - k);
            std::size_t tdim = m3_->dim(e - k);
            Rational tcoef = -(Rational(k) + m0_ - Rational(e) + Rational(1));
            for (hvir::Kind kind : {hvir::Kind::T, hvir::Kind::I}) {
                // rows of the raising matrix
                std::vector<VectorQ> cols;
                for (std::size_t a = 0; a < dim; ++a) {
                    VectorQ unit(dim, Rational(0));
                    unit[a] = Rational(1);
                    cols.push_back(m3_->apply(kind, k, e, unit));
                }
                Rational scale = kind == hvir::Kind::T ? tcoef : Rational(-1);
                for (std::size_t row = 0; row < tdim; ++row) {
                    VectorQ mrow(dim, Rational(0));
                    for (std::size_t a = 0; a < dim; ++a) mrow[a] = cols[a][row];
                    lhs.append_row(mrow);
                    rhs.push_back(xik.empty() ? Rational(0) : scale * xik[row]);
                }
            }
        }
        if (lhs.rows() == 0) {
            xi.assign(dim, Rational(0));
        } else {
            auto sol = lhs.solve(rhs);
            if (!sol)
                throw std::logic_error("HVirIntertwiner: inconsistent matrix-coefficient system");
            xi = *sol;
        }
    }
    towers_.emplace(e, xi);
    return xi;
}

VectorQ HVirIntertwiner::apply_word(long offset, const hvir::VermaWord& w) {
    // offset = m0 - n; the result lives in M3[degree(w) + offset]
    long target_deg = w.degree() + offset;
    if (target_deg < 0) return {};
    auto key = std::make_pair(offset, w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    VectorQ out;
    if (w.t.empty() && w.i.empty()) {
        out = tower(offset);
    } else {
        hvir::Kind lead = w.t.empty() ? hvir::Kind::I : hvir::Kind::T;
        long k = w.t.empty() ? w.i.front() : w.t.front();
        hvir::VermaWord rest = w;
        if (lead == hvir::Kind::T) rest.t.erase(rest.t.begin());
        else rest.i.erase(rest.i.begin());

        out.assign(m3_->dim(target_deg), Rational(0));
        // lead(-k) (v_(n) rest)
        VectorQ inner = apply_word(offset, rest);
        if (!inner.empty()) {
            VectorQ lifted = m3_->apply(lead, -k, rest.degree() + offset, inner);
            for (std::size_t a = 0; a < out.size(); ++a) out[a] += lifted[a];
        }
        // commutator part: v_(n-k) rest with the T/I coefficient
        VectorQ comm = apply_word(offset + k, rest);
        if (!comm.empty()) {
            // n = m0 - offset; [T(-k), v_(n)] = -(n-k+1) v_(n-k)
            Rational coef = lead == hvir::Kind::T
                                ? m0_ - Rational(offset) - Rational(k) + Rational(1)
                                : Rational(1);
            for (std::size_t a = 0; a < out.size(); ++a) out[a] += coef * comm[a];
        }
    }
    memo_.emplace(key, out);
    return out;
}

VectorQ HVirIntertwiner::apply(const Rational& n, long d, std::size_t idx) {
    Rational off = m0_ - n;
    if (!off.is_integer())
        throw std::invalid_argument("HVirIntertwiner: mode outside m0 + Z");
    long offset = to_long(off.num());
    hvir::VermaVec rep = m2_->lift(d, idx);
    long target_deg = d + offset;
    if (target_deg < 0) return {};
    VectorQ out(m3_->dim(target_deg), Rational(0));
    for (auto& [w, c] : rep) {
        VectorQ part = apply_word(offset, w);
        for (std::size_t a = 0; a < out.size(); ++a)
            if (!part.empty()) out[a] += c * part[a];
    }
    return out;
}

bool HVirIntertwiner::annihilates_singular(long max_degree) {
    long p = m2_->singular_degree();
    if (p == 0) return true;
    auto sing = hvir::singular_space(m2_->x(), m2_->y(), p);
    if (sing.size() != 1) return false;
    for (long dtgt = 0; dtgt <= max_degree; ++dtgt) {
        long offset = dtgt - p;
        VectorQ acc(m3_->dim(dtgt), Rational(0));
        for (auto& [w, c] : sing[0]) {
            VectorQ part = apply_word(offset, w);
            for (std::size_t a = 0; a < acc.size(); ++a)
                if (!part.empty()) acc[a] += c * part[a];
        }
        for (auto& e : acc)
            if (!e.is_zero()) return false;
    }
    return true;
}

// -------------------------------------------------------- TensorScreening

TensorScreening::TensorScreening(relaxed::RelaxedModuleSpec source,
                                 std::pair<Rational, Rational> target_xy)
    : src_(source),
      tgt_(relaxed::RelaxedModuleSpec{target_xy.first, target_xy.second, source.r - 1,
                                      source.lambda}),
      iv_(source.x, source.y, target_xy.first, target_xy.second),
      pi_(pi_frame()) {
    // m0 consistency: y2 - y3 - 1 with (x1,y1) = (-1,0)
    Rational expect = source.y - target_xy.second - Rational(1);
    if (!(iv_.m0() == expect)) throw std::logic_error("TensorScreening: m0 mismatch");
    nu_op_ = FockState::exponential(pi_, pi_vectors(pi_).nu);
}

relaxed::TVec TensorScreening::apply_basis(const relaxed::TKey& k) {
    relaxed::TVec out;
    FockState pi_part = src_.pi_state(k);
    Rational h = src_.weight(k);
    Rational j = src_.charge(k);
    // target layer is k.i + 1; its top weight bounds the HVir budget
    Rational budget = h - relaxed::sug_weight(tgt_.spec(), k.i + 1);
    if (!budget.is_integer()) return out;
    long n3 = to_long(budget.num());
    (void)j;
    for (long dtgt = 0; dtgt <= n3; ++dtgt) {
        long offset = dtgt - k.dv;
        Rational n = iv_.m0() - Rational(offset);
        VectorQ hpart = iv_.apply(n, k.dv, k.a);
        if (hpart.empty()) continue;
        bool nz = false;
        for (auto& e : hpart)
            if (!e.is_zero()) { nz = true; break; }
        if (!nz) continue;
        FockState ppart = mode_apply(nu_op_, -n - Rational(1), pi_part);
        if (ppart.is_zero()) continue;
        tgt_.accumulate(out, dtgt, hpart, ppart, Rational(1));
    }
    return out;
}

relaxed::TVec TensorScreening::apply(const relaxed::TVec& v) {
    relaxed::TVec out;
    for (auto& [k, c] : v) {
        relaxed::TVec part = apply_basis(k);
        for (auto& [pk, pc] : part) {
            auto it = out.find(pk);
            if (it == out.end()) {
                out.emplace(pk, c * pc);
            } else {
                it->second += c * pc;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

MatrixQ TensorScreening::matrix(const Rational& h, const Rational& j) {
    auto sbasis = src_.component(h, j);
    auto tbasis = tgt_.component(h, j);
    MatrixQ m(tbasis.size(), sbasis.size());
    for (std::size_t c = 0; c < sbasis.size(); ++c) {
        relaxed::TVec img = apply_basis(sbasis[c]);
        for (auto& [k, coef] : img) {
            auto it = std::lower_bound(tbasis.begin(), tbasis.end(), k);
            if (it == tbasis.end() || !(*it == k))
                throw std::logic_error("TensorScreening: image leaves the target component");
            m.at(it - tbasis.begin(), c) = coef;
        }
    }
    return m;
}

// ------------------------------------------------------- vacuum lattice S

namespace {

/* All c/d-words of the given degree over e^{j c} in the ambient frame. */
std::vector<FockState> cd_words_over(const Frame& frame, long degree, long jc) {
    NWVectors v = nw_vectors(frame);
    LatticePoint ground(frame.size(), Rational(0));
    for (std::size_t t = 0; t < frame.size(); ++t) ground[t] = Rational(jc) * v.c[t];
    FockState base = FockState::exponential(frame, ground);

    std::vector<FockState> out;
    std::function<void(long, long, const FockState&)> gen_d = [&](long n, long mx,
                                                                  const FockState& s) {
        if (n == 0) { out.push_back(s); return; }
        for (long p = std::min(n, mx); p >= 1; --p) gen_d(n - p, p, s.prepend(v.d, -p));
    };
    std::function<void(long, long, const FockState&)> gen_c = [&](long n, long mx,
                                                                  const FockState& s) {
        gen_d(n, n == 0 ? 1 : n, s);
        for (long p = std::min(n, mx); p >= 1; --p) gen_c(n - p, p, s.prepend(v.c, -p));
    };
    gen_c(degree, degree == 0 ? 1 : degree, base);
    return out;
}

} // namespace

namespace {

/* Monomial basis of the (h, j) component of L^HVir (x) Pi in the ambient
 * frame: Ker Q words in (c1, d1) tensored with (c, d)-words over e^{jc}. */
std::vector<FockState> vacuum_pair_basis(const Frame& frame, long h, long j) {
    long budget = h - j;
    std::vector<FockState> basis;
    if (budget < 0) return basis;
    for (long a = 0; a <= budget; ++a) {
        auto kqa = hvir::hvir_module_component(Rational(0), a, frame);
        if (kqa.empty()) continue;
        auto cds = cd_words_over(frame, budget - a, j);
        for (auto& kstate : kqa)
            for (auto& cd : cds) basis.push_back(word_product(kstate, cd));
    }
    return basis;
}

std::mutex screen_mutex;
std::map<std::tuple<const FrameData*, long, long>, std::pair<std::size_t, std::vector<FockState>>>
    screen_cache;

std::pair<std::size_t, std::vector<FockState>> screen_kernel(const Frame& frame, long h, long j) {
    auto cache_key = std::make_tuple(frame.ptr().get(), h, j);
    {
        std::lock_guard<std::mutex> lock(screen_mutex);
        auto it = screen_cache.find(cache_key);
        if (it != screen_cache.end()) return it->second;
    }
    NWVectors v = nw_vectors(frame);
    FockState salpha = FockState::exponential(frame, v.alpha);
    std::vector<FockState> basis = vacuum_pair_basis(frame, h, j);

    FockIndexer idx;
    std::vector<VectorQ> images;
    for (auto& b : basis) images.push_back(idx.coords(mode_apply(salpha, Rational(0), b)));
    MatrixQ m(idx.size(), basis.size());
    for (std::size_t c = 0; c < images.size(); ++c)
        for (std::size_t r2 = 0; r2 < images[c].size(); ++r2) m.at(r2, c) = images[c][r2];

    std::vector<FockState> kernel;
    for (auto& kvec : m.kernel_basis()) {
        FockState s(frame);
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (!kvec[c].is_zero()) s += kvec[c] * basis[c];
        kernel.push_back(std::move(s));
    }
    std::pair<std::size_t, std::vector<FockState>> result{basis.size(), std::move(kernel)};
    {
        std::lock_guard<std::mutex> lock(screen_mutex);
        screen_cache.emplace(cache_key, result);
    }
    return result;
}

} // namespace

std::vector<FockState> v1_component(const Frame& frame, long h, long j) {
    return screen_kernel(frame, h, j).second;
}

std::map<std::pair<long, long>, KernelCell> kernel_profile(long max_h, long charge_window) {
    Frame frame = nw_frame();
    std::vector<std::pair<long, long>> cells;
    for (long h = 0; h <= max_h; ++h)
        for (long j = -charge_window; j <= charge_window; ++j) cells.emplace_back(h, j);
    std::vector<KernelCell> results(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        auto [src, kernel] = screen_kernel(frame, cells[i].first, cells[i].second);
        results[i].dim_source = src;
        results[i].dim_ker = kernel.size();
        results[i].rank = src - kernel.size();
    });
    std::map<std::pair<long, long>, KernelCell> table;
    for (std::size_t i = 0; i < cells.size(); ++i) table.emplace(cells[i], results[i]);
    return table;
}

FockState screening_witness() {
    Frame frame = nw_frame();
    NWVectors v = nw_vectors(frame);
    LatticePoint mc(frame.size(), Rational(0));
    for (std::size_t i = 0; i < frame.size(); ++i) mc[i] = -v.c[i];
    return mode_apply(FockState::exponential(frame, v.alpha), Rational(0),
                      FockState::exponential(frame, mc));
}

// ------------------------------------------------------------ log modules

DeformedL0 deformed_L0(TensorScreening& s, const Rational& h, const Rational& j) {
    DeformedL0 out;
    auto sb = s.source().component(h, j);
    auto tb = s.target().component(h, j);
    out.dim_source = sb.size();
    out.dim_target = tb.size();
    std::size_t n = sb.size() + tb.size();
    out.semisimple = MatrixQ(n, n);
    for (std::size_t i = 0; i < n; ++i) out.semisimple.at(i, i) = h;
    out.nilpotent = MatrixQ(n, n);
    MatrixQ block = s.matrix(h, j);
    for (std::size_t r = 0; r < tb.size(); ++r)
        for (std::size_t c = 0; c < sb.size(); ++c)
            out.nilpotent.at(sb.size() + r, c) = block.at(r, c);
    return out;
}

RankTwoReport rank_two_certificate(const LogModuleSpec& spec, const Rational& max_weight) {
    RankTwoReport rep;
    Compat comp = vmodule_compatible(spec.x, spec.y, spec.lambda, spec.r);
    rep.compatible = comp.ok;
    if (!comp.ok) {
        rep.failures.push_back("U[x,y,lambda,r] is not a module for the extended algebra");
        return rep;
    }

    std::pair<Rational, Rational> tgt_xy;
    bool x1_branch = spec.x == Rational(1);
    if (x1_branch) {
        tgt_xy = {Rational(0), -spec.lambda};
    } else {
        auto t = hvir_fusion_target(spec.x, spec.y);
        if (!t) {
            rep.failures.push_back("fusion with L[-1,0] vanishes");
            return rep;
        }
        tgt_xy = *t;
    }

    relaxed::RelaxedModuleSpec src{spec.x, spec.y, spec.r, spec.lambda};
    TensorScreening S(src, tgt_xy);

    // distinguished layer: F(0) Z_j = 0 at j* = y/(x-1) - lambda (x != 1)
    long center = 0;
    if (!x1_branch) {
        Rational jstar = spec.y / (spec.x - Rational(1)) - spec.lambda;
        center = to_long(jstar.num());
    }

    // scan bidegrees of the source with weight <= max_weight
    long layer_win = 3;
    bool nonzero = false;
    for (long i = center - layer_win; i <= center + layer_win; ++i) {
        Rational top = relaxed::sug_weight(src, i);
        for (Rational h = top; h <= max_weight; h += Rational(1)) {
            Rational j = relaxed::top_charge(src, i);
            DeformedL0 d = deformed_L0(S, h, j);
            ++rep.cells_scanned;
            if (!d.nilpotent.is_zero()) nonzero = true;
            if (!(d.nilpotent * d.nilpotent).is_zero()) {
                rep.square_zero = false;
                rep.failures.push_back("nilpotent part does not square to zero");
            }
        }
    }
    rep.nilpotent_nonzero = nonzero;
    if (!nonzero) rep.failures.push_back("nilpotent part vanished on the scanned window");

    // non-splitness: a top vector of the quotient layer maps onto the sub layer
    for (long i = center - layer_win; i <= center + layer_win && !rep.nonsplit_witness; ++i) {
        relaxed::TVec z = S.source().top_vector(i);
        if (!S.apply(z).empty()) rep.nonsplit_witness = true;
    }
    if (!rep.nonsplit_witness)
        rep.failures.push_back("no top-level vector maps onto the sub layer");

    if (x1_branch) {
        // S Z^(1)_{-1} = nu Z^(2)_{-1} and S Z^(1)_i = 0 for i >= 0
        relaxed::TVec img = S.apply(S.source().top_vector(-1));
        relaxed::TVec expect = S.target().top_vector(0); // Z^(2)_{-1} = layer 0 of Pi_0
        if (img.size() == 1 && img.begin()->first == expect.begin()->first) {
            rep.nu = img.begin()->second;
            if (rep.nu->is_zero()) rep.failures.push_back("nu vanished");
        } else {
            rep.failures.push_back("S Z^(1)_{-1} is not a multiple of Z^(2)_{-1}");
        }
        for (long i = 0; i <= 2; ++i)
            if (!S.apply(S.source().top_vector(i)).empty())
                rep.failures.push_back("S Z^(1)_i != 0 at i = " + std::to_string(i));
    } else if (spec.x == Rational(2)) {
        rep.skipped_infinite_length = true; // bottom layer contains L[1,0] (x) Pi
    } else {
        // (iv): quotient factors of the top layer match the g-twist of the
        // sub factors of the bottom layer, at dimension level.
        rep.layer_dims_checked = true;
        long depth = 3, lwin = 3, wwin = 4;
        relaxed::TensorModule& top_mod = S.source();
        relaxed::TVec zsub = top_mod.top_vector(center);
        auto sub1 = relaxed::submodule_growth(top_mod, zsub, depth, lwin, wwin);

        relaxed::TensorModule& bot_mod = S.target();
        Rational j2star = tgt_xy.second / (tgt_xy.first - Rational(1)) - spec.lambda;
        long center2 = to_long(j2star.num());
        auto sub2 =
            relaxed::submodule_growth(bot_mod, bot_mod.top_vector(center2), depth, lwin, wwin);

        Rational iota = spec.x - Rational(spec.r); // I(0) on the top layer
        rep.layer_dims_match = true;
        long checked = 0;
        for (long i = center - 1; i <= center + 1; ++i) {
            Rational top = relaxed::sug_weight(src, i);
            Rational j = relaxed::top_charge(src, i);
            for (Rational h = top; h <= max_weight; h += Rational(1)) {
                std::size_t total = top_mod.component(h, j).size();
                std::size_t s1 = 0;
                if (auto it = sub1.dims.find({h, j}); it != sub1.dims.end()) s1 = it->second;
                std::size_t quot = total - s1;
                auto [h2, j2] = relaxed::g_twist_bidegree(1, iota, h, j);
                std::size_t s2 = 0;
                if (auto it = sub2.dims.find({h2, j2}); it != sub2.dims.end()) s2 = it->second;
                ++checked;
                if (quot != s2) {
                    rep.layer_dims_match = false;
                    std::ostringstream os;
                    os << "layer factor dims mismatch at (h,j)=(" << h.str() << "," << j.str()
                       << "): quot=" << quot << " vs twisted sub=" << s2;
                    rep.failures.push_back(os.str());
                }
            }
        }
        if (checked == 0) rep.failures.push_back("layer dimension check scanned nothing");
    }
    return rep;
}

} // namespace nwvoa::screening
