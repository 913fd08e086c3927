#include "nwvoa/hvir.hpp"

#include "nwvoa/frame.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace nwvoa::hvir {

void ModeSum::add(const HVirMode& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = modes.find(m);
    if (it == modes.end()) {
        modes.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) modes.erase(it);
    }
}

ModeSum hvir_bracket(const HVirMode& a, const HVirMode& b) {
    ModeSum out;
    long n = a.n, m = b.n;
    if (a.kind == Kind::T && b.kind == Kind::T) {
        out.add({Kind::T, n + m}, Rational(n - m));
        if (n == -m) out.central += Rational(Int(n) * n * n - n, 12) * kCL;
    } else if (a.kind == Kind::T && b.kind == Kind::I) {
        out.add({Kind::I, n + m}, Rational(-m));
        if (n == -m) out.central -= Rational(Int(n) * n + n) * kCLI;
    } else if (a.kind == Kind::I && b.kind == Kind::T) {
        // antisymmetry of the T,I bracket
        out.add({Kind::I, n + m}, Rational(n));
        if (n == -m) out.central += Rational(Int(m) * m + m) * kCLI;
    } else {
        if (n == -m) out.central += Rational(n) * kCI;
    }
    return out;
}

ModeSum hvir_bracket(const ModeSum& a, const ModeSum& b) {
    ModeSum out;
    for (auto& [ma, ca] : a.modes)
        for (auto& [mb, cb] : b.modes) {
            ModeSum part = hvir_bracket(ma, mb);
            for (auto& [m, c] : part.modes) out.add(m, ca * cb * c);
            out.central += ca * cb * part.central;
        }
    return out;
}

long VermaWord::degree() const {
    long d = 0;
    for (long k : t) d += k;
    for (long k : i) d += k;
    return d;
}

namespace {

using Seq = std::vector<std::pair<Kind, long>>; // creation indices, entries >= 1

void add_to(VermaVec& out, const VermaWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = out.find(w);
    if (it == out.end()) {
        out.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

bool in_order(const std::pair<Kind, long>& a, const std::pair<Kind, long>& b) {
    if (a.first != b.first) return a.first == Kind::T; // T class left of I class
    return a.second >= b.second;                       // indices descending
}

/* PBW straightening of a product of creation modes.  Swapping adjacent
 * out-of-order factors inserts the commutator:
 *   [T(-a),T(-b)] = (b-a) T(-a-b),   [T(-a),I(-b)] = b I(-a-b),
 *   [I(-a),I(-b)] = 0  (no central terms between creations).          */
void straighten(Seq& seq, const Rational& coeff, VermaVec& out) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (in_order(seq[k], seq[k + 1])) continue;
        auto a = seq[k], b = seq[k + 1];
        std::swap(seq[k], seq[k + 1]);
        Rational comm_c;
        Kind comm_kind = Kind::I;
        if (a.first == Kind::T && b.first == Kind::T) {
            comm_c = Rational(b.second - a.second);
            comm_kind = Kind::T;
        } else if (a.first == Kind::T && b.first == Kind::I) {
            comm_c = Rational(b.second);
            comm_kind = Kind::I;
        } else if (a.first == Kind::I && b.first == Kind::T) {
            comm_c = Rational(-a.second);
            comm_kind = Kind::I;
        }
        if (!comm_c.is_zero()) {
            Seq merged;
            merged.reserve(seq.size() - 1);
            merged.insert(merged.end(), seq.begin(), seq.begin() + k);
            merged.push_back({comm_kind, a.second + b.second});
            merged.insert(merged.end(), seq.begin() + k + 2, seq.end());
            straighten(merged, coeff * comm_c, out);
        }
        straighten(seq, coeff, out);
        return;
    }
    VermaWord w;
    for (auto& [kind, idx] : seq)
        (kind == Kind::T ? w.t : w.i).push_back(idx);
    add_to(out, w, coeff);
}

Seq word_to_seq(const VermaWord& w) {
    Seq s;
    for (long k : w.t) s.push_back({Kind::T, k});
    for (long k : w.i) s.push_back({Kind::I, k});
    return s;
}

} // namespace

VermaVec VermaModule::apply_one(Kind k, long n, const VermaWord& w, const Rational& c) const {
    VermaVec out;
    if (n < 0) {
        Seq seq = word_to_seq(w);
        seq.insert(seq.begin(), {k, -n});
        straighten(seq, c, out);
        return out;
    }
    if (w.t.empty() && w.i.empty()) {
        if (n == 0) add_to(out, w, c * (k == Kind::T ? y_ : x_));
        return out;
    }
    // peel the leading creation factor and commute K(n) past it
    Kind lead_kind = w.t.empty() ? Kind::I : Kind::T;
    long a = w.t.empty() ? w.i.front() : w.t.front();
    VermaWord rest = w;
    if (lead_kind == Kind::T) rest.t.erase(rest.t.begin());
    else rest.i.erase(rest.i.begin());

    // lead * (K(n) rest)
    for (auto& [rw, rc] : apply_one(k, n, rest, c)) {
        Seq seq = word_to_seq(rw);
        seq.insert(seq.begin(), {lead_kind, a});
        straighten(seq, rc, out);
    }
    // [K(n), lead(-a)] rest
    ModeSum br = hvir_bracket({k, n}, {lead_kind, -a});
    for (auto& [m, bc] : br.modes)
        for (auto& [rw, rc] : apply_one(m.kind, m.n, rest, c * bc)) add_to(out, rw, rc);
    if (!br.central.is_zero()) add_to(out, rest, c * br.central);
    return out;
}

VermaVec VermaModule::apply(Kind k, long n, const VermaVec& v) const {
    VermaVec out;
    for (auto& [w, c] : v)
        for (auto& [rw, rc] : apply_one(k, n, w, c)) add_to(out, rw, rc);
    return out;
}

VermaVec VermaModule::apply_word(const VermaWord& w, const VermaVec& v) const {
    VermaVec out;
    Seq prefix = word_to_seq(w);
    for (auto& [vw, vc] : v) {
        Seq seq = prefix;
        Seq tail = word_to_seq(vw);
        seq.insert(seq.end(), tail.begin(), tail.end());
        straighten(seq, vc, out);
    }
    return out;
}

namespace {
void partitions_desc(long n, long max_part, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out) {
    if (n == 0) { out.push_back(cur); return; }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_desc(n - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<VermaWord> VermaModule::basis(long degree) {
    std::vector<VermaWord> out;
    for (long dt = degree; dt >= 0; --dt) {
        std::vector<std::vector<long>> tparts, iparts;
        std::vector<long> cur;
        partitions_desc(dt, dt == 0 ? 1 : dt, cur, tparts);
        partitions_desc(degree - dt, degree - dt == 0 ? 1 : degree - dt, cur, iparts);
        for (auto& tp : tparts)
            for (auto& ip : iparts) out.push_back(VermaWord{tp, ip});
    }
    std::sort(out.begin(), out.end());
    return out;
}

VectorQ VermaModule::coords(const VermaVec& v, const std::vector<VermaWord>& basis) {
    VectorQ out(basis.size(), Rational(0));
    for (auto& [w, c] : v) {
        auto it = std::lower_bound(basis.begin(), basis.end(), w);
        if (it == basis.end() || !(*it == w))
            throw std::logic_error("VermaModule::coords: vector leaves the component");
        out[it - basis.begin()] = c;
    }
    return out;
}

std::vector<VermaVec> singular_space(const Rational& x, const Rational& y, long degree) {
    if (degree < 1) throw std::invalid_argument("singular_space: degree must be >= 1");
    VermaModule mod(x, y);
    auto bas = VermaModule::basis(degree);

    std::vector<VectorQ> rows;
    for (long j = 1; j <= degree; ++j) {
        auto target = VermaModule::basis(degree - j);
        for (Kind k : {Kind::T, Kind::I}) {
            // one equation row per target basis element
            std::vector<VectorQ> block(target.size(), VectorQ(bas.size(), Rational(0)));
            for (std::size_t col = 0; col < bas.size(); ++col) {
                VermaVec img = mod.apply(k, j, VermaVec{{bas[col], Rational(1)}});
                VectorQ tc = VermaModule::coords(img, target);
                for (std::size_t r = 0; r < target.size(); ++r) block[r][col] = tc[r];
            }
            for (auto& r : block) rows.push_back(std::move(r));
        }
    }
    MatrixQ m;
    for (auto& r : rows) m.append_row(r);
    if (m.rows() == 0) m = MatrixQ(0, bas.size());

    std::vector<VermaVec> out;
    for (auto& v : m.kernel_basis()) {
        VermaVec vec;
        for (std::size_t c = 0; c < bas.size(); ++c)
            if (!v[c].is_zero()) vec.emplace(bas[c], v[c]);
        out.push_back(std::move(vec));
    }
    return out;
}

BigradedSeries hvir_character(const Rational& x, const Rational& y, long max_h) {
    BigradedSeries s = partition_series(2, max_h);
    if (x.is_integer() && !(x == Rational(1))) {
        Rational pr = x - Rational(1);
        Int p = pr.num() < 0 ? Int(-pr.num()) : pr.num();
        s = times_one_minus_qp(s, to_long(p));
    }
    BigradedSeries out(max_h, y - Rational(1, 12));
    for (auto& [k, c] : s.terms()) out.set(k.first, k.second, c);
    return out;
}

// --------------------------------------------------------- IrrepComponents

IrrepComponents::IrrepComponents(Rational x, Rational y)
    : x_(std::move(x)), y_(std::move(y)), verma_(x_, y_) {
    if (x_.is_integer() && !(x_ == Rational(1))) {
        Rational pr = x_ - Rational(1);
        Int pab = pr.num() < 0 ? Int(-pr.num()) : pr.num();
        p_ = to_long(pab);
        auto sing = singular_space(x_, y_, p_);
        if (sing.size() != 1)
            throw std::logic_error("IrrepComponents: singular space at degree p not 1-dim");
        singular_ = sing[0];
    }
}

IrrepComponents::Level& IrrepComponents::level(long degree) {
    auto it = levels_.find(degree);
    if (it != levels_.end()) return it->second;

    Level lev;
    lev.basis = VermaModule::basis(degree);
    if (p_ > 0 && degree >= p_) {
        MatrixQ span;
        for (auto& w : VermaModule::basis(degree - p_)) {
            VermaVec vec = verma_.apply_word(w, singular_);
            span.append_row(VermaModule::coords(vec, lev.basis));
        }
        // reduced echelon rows of the submodule span
        std::vector<VectorQ> rows(span.rows(), VectorQ(lev.basis.size()));
        for (std::size_t r = 0; r < span.rows(); ++r)
            for (std::size_t c = 0; c < span.cols(); ++c) rows[r][c] = span.at(r, c);
        std::size_t rr = 0;
        for (std::size_t c = 0; c < lev.basis.size() && rr < rows.size(); ++c) {
            std::size_t piv = rr;
            while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rr]);
            Rational inv = rows[rr][c].inverse();
            for (auto& e : rows[rr]) e *= inv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == rr || rows[i][c].is_zero()) continue;
                Rational f = rows[i][c];
                for (std::size_t k2 = 0; k2 < lev.basis.size(); ++k2)
                    rows[i][k2] -= f * rows[rr][k2];
            }
            lev.pivots.push_back(c);
            ++rr;
        }
        rows.resize(rr);
        lev.sub_rref = std::move(rows);
    }
    std::vector<bool> is_piv(lev.basis.size(), false);
    for (auto c : lev.pivots) is_piv[c] = true;
    for (std::size_t c = 0; c < lev.basis.size(); ++c)
        if (!is_piv[c]) lev.free_cols.push_back(c);

    return levels_.emplace(degree, std::move(lev)).first->second;
}

std::size_t IrrepComponents::dim(long degree) {
    if (degree < 0) return 0;
    return level(degree).free_cols.size();
}

VectorQ IrrepComponents::reduce(long degree, const VermaVec& v) {
    Level& lev = level(degree);
    VectorQ x = VermaModule::coords(v, lev.basis);
    for (std::size_t r = 0; r < lev.sub_rref.size(); ++r) {
        std::size_t p = lev.pivots[r];
        if (x[p].is_zero()) continue;
        Rational f = x[p];
        for (std::size_t c = 0; c < x.size(); ++c) x[c] -= f * lev.sub_rref[r][c];
    }
    VectorQ out(lev.free_cols.size(), Rational(0));
    for (std::size_t i = 0; i < lev.free_cols.size(); ++i) out[i] = x[lev.free_cols[i]];
    return out;
}

VermaVec IrrepComponents::lift(long degree, std::size_t idx) {
    Level& lev = level(degree);
    return VermaVec{{lev.basis[lev.free_cols[idx]], Rational(1)}};
}

const MatrixQ& IrrepComponents::action_matrix(Kind k, long n, long degree) {
    auto key = std::make_tuple(k == Kind::T ? 0 : 1, n, degree);
    auto it = action_cache_.find(key);
    if (it != action_cache_.end()) return it->second;

    Level& lev = level(degree);
    long target = degree - n;
    std::size_t tdim = target < 0 ? 0 : level(target).free_cols.size();
    MatrixQ m(tdim, lev.free_cols.size());
    for (std::size_t idx = 0; idx < lev.free_cols.size(); ++idx) {
        VermaVec img = verma_.apply(k, n, VermaVec{{lev.basis[lev.free_cols[idx]], Rational(1)}});
        if (target < 0) {
            if (!img.empty()) throw std::logic_error("IrrepComponents: negative degree image");
            continue;
        }
        VectorQ col = reduce(target, img);
        for (std::size_t r = 0; r < tdim; ++r) m.at(r, idx) = col[r];
    }
    return action_cache_.emplace(key, std::move(m)).first->second;
}

VectorQ IrrepComponents::apply(Kind k, long n, long degree, const VectorQ& coords) {
    long target = degree - n;
    const MatrixQ& m = action_matrix(k, n, degree);
    if (target < 0) return {};
    return m.apply(coords);
}

// ------------------------------------------------------------- free field

FreeFieldHVir free_field_hvir(const Frame& frame) {
    if (frame.size() < 4)
        throw std::invalid_argument("free_field_hvir: frame lacks the ambient generators");
    NWVectors v = nw_vectors(frame);
    if (!(frame.pairing(v.c1, v.c1) == Rational(0)) ||
        !(frame.pairing(v.c1, v.d1) == Rational(2)))
        throw std::invalid_argument("free_field_hvir: c1/d1 pairings are wrong");
    Rational h(1, 2);
    FockState T = h * FockState::heis(frame, v.c1, -1).prepend(v.d1, -1) -
                  h * FockState::heis(frame, v.d1, -2);
    FockState I = Rational(-1) * FockState::heis(frame, v.c1, -1);
    return {std::move(T), std::move(I)};
}

namespace {
std::mutex kerq_mutex;
std::map<std::tuple<const FrameData*, long, long>, std::vector<FockState>> kerq_cache;
} // namespace

std::vector<FockState> hvir_module_component(const Rational& x, long h, const Frame& frame) {
    if (!x.is_integer() || x > Rational(0))
        throw std::invalid_argument(
            "hvir_module_component: label not reachable in the Ker Q realization");
    long k = -to_long(x.num());
    auto cache_key = std::make_tuple(frame.ptr().get(), k, h);
    {
        std::lock_guard<std::mutex> lock(kerq_mutex);
        auto it = kerq_cache.find(cache_key);
        if (it != kerq_cache.end()) return it->second;
    }
    NWVectors v = nw_vectors(frame);

    LatticePoint ground(frame.size(), Rational(0));
    for (std::size_t i = 0; i < frame.size(); ++i)
        ground[i] = Rational(k) * v.d1[i] / Rational(2);

    // partition-pair words in c1, d1 over the ground exponential
    std::vector<FockState> fock_basis;
    for (long dc = 0; dc <= h; ++dc) {
        std::vector<std::vector<long>> cparts, dparts;
        std::vector<long> cur;
        partitions_desc(dc, dc == 0 ? 1 : dc, cur, cparts);
        partitions_desc(h - dc, h - dc == 0 ? 1 : h - dc, cur, dparts);
        for (auto& cp : cparts)
            for (auto& dp : dparts) {
                FockState s = FockState::exponential(frame, ground);
                for (long m : cp) s = s.prepend(v.c1, -m);
                for (long m : dp) s = s.prepend(v.d1, -m);
                fock_basis.push_back(std::move(s));
            }
    }

    FockState screener = FockState::exponential(frame, v.c1);
    FockIndexer idx;
    std::vector<VectorQ> images;
    for (auto& b : fock_basis) images.push_back(idx.coords(mode_apply(screener, Rational(0), b)));

    MatrixQ m(idx.size(), fock_basis.size());
    for (std::size_t c = 0; c < images.size(); ++c)
        for (std::size_t r = 0; r < images[c].size(); ++r) m.at(r, c) = images[c][r];

    std::vector<FockState> out;
    for (auto& kvec : m.kernel_basis()) {
        FockState s(frame);
        for (std::size_t c = 0; c < fock_basis.size(); ++c)
            if (!kvec[c].is_zero()) s += kvec[c] * fock_basis[c];
        out.push_back(std::move(s));
    }
    {
        std::lock_guard<std::mutex> lock(kerq_mutex);
        kerq_cache.emplace(cache_key, out);
    }
    return out;
}

} // namespace nwvoa::hvir
