#include "nwvoa/relaxed.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nwvoa::relaxed {

Rational sug_weight(const RelaxedModuleSpec& s, long i) {
    Rational lam = s.lambda + Rational(i);
    Rational r(s.r);
    return s.y + s.x / Rational(2) +
           (Rational(1) - r) * (r + Rational(2) * lam) / Rational(2) - r / Rational(2);
}

Rational omega_eigen(const RelaxedModuleSpec& s) {
    Rational d = s.x - Rational(1);
    return s.y + d * d / Rational(2);
}

Rational top_charge(const RelaxedModuleSpec& s, long i) {
    return (s.x + Rational(s.r)) / Rational(2) + s.lambda + Rational(i);
}

TopAction top_action(nw::Gen g, const RelaxedModuleSpec& s, long i) {
    if (s.r != 1) throw std::invalid_argument("top_action: defined for r = 1 (use spectral_flow)");
    Rational lam = s.lambda + Rational(i);
    switch (g) {
        case nw::Gen::E: return {Rational(1), +1};
        case nw::Gen::F: return {s.y - lam * (s.x - Rational(1)), -1};
        case nw::Gen::I: return {s.x - Rational(1), 0};
        case nw::Gen::J:
            return {(s.x + Rational(1) + Rational(2) * lam) / Rational(2), 0};
    }
    throw std::logic_error("top_action: bad generator");
}

namespace {
std::string bracket_rep(const Rational& lam) { return "[" + lam.frac().str() + "]"; }
} // namespace

Classification classify(const Rational& x, const Rational& y, const Rational& lambda) {
    Classification out;
    Rational omega;
    {
        Rational d = x - Rational(1);
        omega = y + d * d / Rational(2);
    }
    if (x == Rational(1)) {
        out.irreducible = !(y == Rational(0));
        out.cls = TopClass::RelaxedIrr;
        out.label = "Rhat{0," + bracket_rep(lambda) + "," + y.str() + "}";
        return out;
    }
    Rational ratio = y / (x - Rational(1));
    Rational diff = lambda - ratio;
    if (!diff.is_integer()) {
        out.irreducible = true;
        out.cls = TopClass::RelaxedIrr;
        out.label = "Ehat{" + (x - Rational(1)).str() + "," + bracket_rep(lambda) + "," +
                    omega.str() + "}";
        return out;
    }
    out.irreducible = false;
    out.cls = TopClass::RelaxedLWSub;
    out.label = "Ehat-{" + (x - Rational(1)).str() + "," + omega.str() + "}";
    out.lw_index = to_long((-diff).num()); // j = y/(x-1) - lambda
    return out;
}

nw::AffineSum spectral_flow(FlowKind kind, const Rational& param, const nw::AffineMode& m) {
    using nw::Gen;
    nw::AffineSum out;
    switch (kind) {
        case FlowKind::Sigma: {
            if (!param.is_integer()) throw std::invalid_argument("sigma^l needs integer l");
            long l = to_long(param.num());
            switch (m.g) {
                case Gen::E: out.add({Gen::E, m.n - l}, Rational(1)); break;
                case Gen::F: out.add({Gen::F, m.n + l}, Rational(1)); break;
                case Gen::J: out.add({Gen::J, m.n}, Rational(1)); break;
                case Gen::I:
                    out.add({Gen::I, m.n}, Rational(1));
                    if (m.n == 0) out.central -= Rational(l);
                    break;
            }
            return out;
        }
        case FlowKind::Shift: {
            out.add(m, Rational(1));
            if (m.g == Gen::J && m.n == 0) out.central -= param;
            return out;
        }
        case FlowKind::G:
        case FlowKind::Rho: {
            if (!param.is_integer()) throw std::invalid_argument("g^l needs integer l");
            // g^l = sigma^l o s_{-l/2}
            nw::AffineSum mid = spectral_flow(FlowKind::Shift, -param / Rational(2), m);
            for (auto& [mm, c] : mid.modes) {
                nw::AffineSum fin = spectral_flow(FlowKind::Sigma, param, mm);
                for (auto& [fm, fc] : fin.modes) out.add(fm, c * fc);
                out.central += c * fin.central;
            }
            out.central += mid.central;
            return out;
        }
    }
    throw std::logic_error("spectral_flow: bad kind");
}

std::pair<Rational, Rational> g_twist_bidegree(long ell, const Rational& iota,
                                               const Rational& h, const Rational& j) {
    Rational l(ell);
    Rational h2 = h + l * (iota / Rational(2) - j) - l * l / Rational(2);
    Rational j2 = j + l / Rational(2);
    return {h2, j2};
}

// ------------------------------------------------------------ TensorModule

TensorModule::TensorModule(RelaxedModuleSpec spec)
    : spec_(std::move(spec)), pi_(pi_frame()), vec_(pi_vectors(pi_)),
      hvir_(std::make_shared<hvir::IrrepComponents>(spec_.x, spec_.y)) {
    LatticePoint c = vec_.c, mc = {Rational(-1), Rational(0)};
    e_op_ = FockState::exponential(pi_, c);
    f1_op_ = FockState::exponential(pi_, mc);
    f2_op_ = f1_op_.prepend(vec_.nu, -1);
    f3_op_ = f1_op_.prepend(vec_.nu, -2);
}

LatticePoint TensorModule::layer_exp(long i) const {
    // r mu + (lambda+i) c in (c,d) coordinates, mu = (1/2, -1/2)
    Rational r(spec_.r);
    return {r / Rational(2) + spec_.lambda + Rational(i), -r / Rational(2)};
}

long TensorModule::layer_of(const LatticePoint& e) const {
    Rational i = e[0] - Rational(spec_.r) / Rational(2) - spec_.lambda;
    if (!i.is_integer()) throw std::logic_error("TensorModule: exponent off the layer grid");
    return to_long(i.num());
}

Rational TensorModule::weight(const TKey& k) const {
    long dw = 0;
    for (auto& m : k.w) dw += -m.n;
    return sug_weight(spec_, k.i) + Rational(k.dv) + Rational(dw);
}

Rational TensorModule::charge(const TKey& k) const { return top_charge(spec_, k.i); }

std::vector<TKey> TensorModule::component(const Rational& h, const Rational& j) {
    std::vector<TKey> out;
    Rational iq = j - (spec_.x + Rational(spec_.r)) / Rational(2) - spec_.lambda;
    if (!iq.is_integer()) return out;
    long i = to_long(iq.num());
    Rational budget = h - sug_weight(spec_, i);
    if (!budget.is_integer() || budget.is_negative()) return out;
    long n = to_long(budget.num());

    std::function<void(long, long, std::vector<long>&, std::vector<std::vector<long>>&)> parts =
        [&](long nn, long mx, std::vector<long>& cur, std::vector<std::vector<long>>& res) {
            if (nn == 0) { res.push_back(cur); return; }
            for (long p = std::min(nn, mx); p >= 1; --p) {
                cur.push_back(p);
                parts(nn - p, p, cur, res);
                cur.pop_back();
            }
        };

    for (long dv = 0; dv <= n; ++dv) {
        std::size_t hd = hvir_->dim(dv);
        if (hd == 0) continue;
        long dw = n - dv;
        std::vector<std::vector<long>> cparts, dparts;
        std::vector<long> cur;
        for (long dc = 0; dc <= dw; ++dc) {
            cparts.clear();
            dparts.clear();
            parts(dc, dc == 0 ? 1 : dc, cur, cparts);
            parts(dw - dc, dw - dc == 0 ? 1 : dw - dc, cur, dparts);
            for (auto& cp : cparts)
                for (auto& dp : dparts) {
                    Word w;
                    for (long mval : cp) w.push_back({0, -mval});
                    for (long mval : dp) w.push_back({1, -mval});
                    std::sort(w.begin(), w.end());
                    for (std::size_t a = 0; a < hd; ++a) out.push_back(TKey{i, dv, a, w});
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FockState TensorModule::pi_state(const TKey& k) const {
    FockState s = FockState::exponential(pi_, layer_exp(k.i));
    for (auto& m : k.w) {
        LatticePoint dir(2, Rational(0));
        dir[m.gen] = Rational(1);
        s = s.prepend(dir, m.n);
    }
    return s;
}

void TensorModule::accumulate(TVec& out, long dv, const VectorQ& hcoords, const FockState& pi,
                              const Rational& scale) const {
    if (scale.is_zero()) return;
    for (auto& [pk, pc] : pi.terms()) {
        long i = layer_of(pk.exp);
        for (std::size_t a = 0; a < hcoords.size(); ++a) {
            if (hcoords[a].is_zero()) continue;
            TKey key{i, dv, a, pk.word};
            Rational val = scale * hcoords[a] * pc;
            auto it = out.find(key);
            if (it == out.end()) {
                out.emplace(std::move(key), val);
            } else {
                it->second += val;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
}

TVec TensorModule::apply(nw::Gen g, long n, const TVec& v) {
    TVec out;
    for (auto& [k, c] : v) {
        FockState pi = pi_state(k);
        std::size_t hd = hvir_->dim(k.dv);
        VectorQ unit(hd, Rational(0));
        unit[k.a] = Rational(1);

        switch (g) {
            case nw::Gen::E: {
                accumulate(out, k.dv, unit, mode_apply(e_op_, Rational(n), pi), c);
                break;
            }
            case nw::Gen::I: {
                VectorQ hi = hvir_->apply(hvir::Kind::I, n, k.dv, unit);
                if (!hi.empty()) accumulate(out, k.dv - n, hi, pi, c);
                FockState cs = FockState::heis(pi_, vec_.c, -1);
                accumulate(out, k.dv, unit, mode_apply(cs, Rational(n), pi), c);
                break;
            }
            case nw::Gen::J: {
                VectorQ hi = hvir_->apply(hvir::Kind::I, n, k.dv, unit);
                if (!hi.empty()) accumulate(out, k.dv - n, hi, pi, c / Rational(2));
                FockState ds = FockState::heis(pi_, vec_.d, -1);
                accumulate(out, k.dv, unit, mode_apply(ds, Rational(n), pi), c / Rational(2));
                break;
            }
            case nw::Gen::F: {
                // omega (x) e^{-c}
                long lo1 = n - 1 - max_nonzero_mode(f1_op_, pi);
                for (long kk = lo1; kk <= k.dv + 1; ++kk) {
                    FockState ppart = mode_apply(f1_op_, Rational(n - 1 - kk), pi);
                    if (ppart.is_zero()) continue;
                    VectorQ ht = hvir_->apply(hvir::Kind::T, kk - 1, k.dv, unit);
                    if (!ht.empty()) accumulate(out, k.dv - (kk - 1), ht, ppart, c);
                }
                // - I-state (x) nu(-1)e^{-c}
                long lo2 = n - 1 - max_nonzero_mode(f2_op_, pi);
                for (long kk = lo2; kk <= k.dv; ++kk) {
                    FockState ppart = mode_apply(f2_op_, Rational(n - 1 - kk), pi);
                    if (ppart.is_zero()) continue;
                    VectorQ hi = hvir_->apply(hvir::Kind::I, kk, k.dv, unit);
                    if (!hi.empty()) accumulate(out, k.dv - kk, hi, ppart, -c);
                }
                // - 1 (x) nu(-2)e^{-c}
                accumulate(out, k.dv, unit, mode_apply(f3_op_, Rational(n), pi), -c);
                break;
            }
        }
    }
    return out;
}

TVec TensorModule::top_vector(long i) const {
    if (hvir_->dim(0) != 1) throw std::logic_error("TensorModule: top is not 1-dimensional");
    return TVec{{TKey{i, 0, 0, {}}, Rational(1)}};
}

TVec TensorModule::sug_l0(const TVec& v) {
    TVec out;
    for (auto& [k, c] : v) {
        FockState pi = pi_state(k);
        std::size_t hd = hvir_->dim(k.dv);
        VectorQ unit(hd, Rational(0));
        unit[k.a] = Rational(1);
        // T(0) and (1/2) I(0) on the HVir factor
        VectorQ ht = hvir_->apply(hvir::Kind::T, 0, k.dv, unit);
        accumulate(out, k.dv, ht, pi, c);
        VectorQ hi = hvir_->apply(hvir::Kind::I, 0, k.dv, unit);
        accumulate(out, k.dv, hi, pi, c / Rational(2));
        // lattice weight of the Pi factor, through the pi-frame conformal
        Rational w = weight_of(pi);
        accumulate(out, k.dv, unit, pi, c * w);
    }
    return out;
}

// -------------------------------------------------------- submodule growth

namespace {

struct ComponentEchelon {
    std::vector<TKey> basis;
    std::vector<VectorQ> rows; // reduced rows
    std::vector<std::size_t> pivots;

    VectorQ coords(const TVec& v) const {
        VectorQ x(basis.size(), Rational(0));
        for (auto& [k, c] : v) {
            auto it = std::lower_bound(basis.begin(), basis.end(), k);
            if (it == basis.end() || !(*it == k))
                throw std::logic_error("submodule_growth: vector leaves the component");
            x[it - basis.begin()] = c;
        }
        return x;
    }

    VectorQ reduce(VectorQ x) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (x[pivots[r]].is_zero()) continue;
            Rational f = x[pivots[r]];
            for (std::size_t c2 = 0; c2 < x.size(); ++c2) x[c2] -= f * rows[r][c2];
        }
        return x;
    }

    bool insert(const TVec& v) {
        VectorQ x = reduce(coords(v));
        std::size_t p = 0;
        while (p < x.size() && x[p].is_zero()) ++p;
        if (p == x.size()) return false;
        Rational inv = x[p].inverse();
        for (auto& e : x) e *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][p].is_zero()) continue;
            Rational f = rows[r][p];
            for (std::size_t c2 = 0; c2 < x.size(); ++c2) rows[r][c2] -= f * x[c2];
        }
        rows.push_back(std::move(x));
        pivots.push_back(p);
        return true;
    }
};

} // namespace

bool GrowthTable::contains(TensorModule& mod, const TVec& v) const {
    if (v.empty()) return true;
    Rational h = mod.weight(v.begin()->first);
    Rational j = mod.charge(v.begin()->first);
    auto it = echelons.find({h, j});
    if (it == echelons.end()) return false;
    auto bit = bases.find({h, j});
    VectorQ x(bit->second.size(), Rational(0));
    for (auto& [k, c] : v) {
        auto pos = std::lower_bound(bit->second.begin(), bit->second.end(), k);
        if (pos == bit->second.end() || !(*pos == k)) return false;
        x[pos - bit->second.begin()] = c;
    }
    const auto& rows = it->second;
    // reduce against the stored rows (pivot = first nonzero of each row)
    for (auto& row : rows) {
        std::size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (p == row.size() || x[p].is_zero()) continue;
        Rational f = x[p];
        for (std::size_t c2 = 0; c2 < x.size(); ++c2) x[c2] -= f * row[c2];
    }
    for (auto& e : x)
        if (!e.is_zero()) return false;
    return true;
}

GrowthTable submodule_growth(TensorModule& mod, const TVec& start, long depth,
                             long layer_window, long weight_window) {
    GrowthTable table;
    if (start.empty()) return table;

    long i0 = start.begin()->first.i;
    Rational h0 = mod.weight(start.begin()->first);

    std::map<std::pair<Rational, Rational>, ComponentEchelon> ech;
    auto ensure = [&](const Rational& h, const Rational& j) -> ComponentEchelon& {
        auto key = std::make_pair(h, j);
        auto it = ech.find(key);
        if (it == ech.end()) {
            ComponentEchelon ce;
            ce.basis = mod.component(h, j);
            it = ech.emplace(key, std::move(ce)).first;
        }
        return it->second;
    };

    // explore weight_window above the highest top inside the layer window
    Rational h_top = h0;
    for (long i = i0 - layer_window; i <= i0 + layer_window; ++i) {
        Rational w = sug_weight(mod.spec(), i);
        if (w > h_top) h_top = w;
    }
    Rational h_max = h_top + Rational(weight_window);

    std::deque<TVec> queue;
    auto offer = [&](const TVec& v) {
        if (v.empty()) return;
        const TKey& k = v.begin()->first;
        if (std::abs(k.i - i0) > layer_window) return;
        Rational h = mod.weight(k), j = mod.charge(k);
        if (h > h_max) return;
        if (ensure(h, j).insert(v)) queue.push_back(v);
    };

    offer(start);
    while (!queue.empty()) {
        TVec v = std::move(queue.front());
        queue.pop_front();
        for (nw::Gen g : nw::kGens)
            for (long n = -depth; n <= depth; ++n) offer(mod.apply(g, n, v));
    }

    for (auto& [key, ce] : ech) {
        if (ce.rows.empty()) continue;
        table.dims[key] = ce.rows.size();
        table.echelons[key] = ce.rows;
        table.bases[key] = ce.basis;
    }
    return table;
}

} // namespace nwvoa::relaxed
