#include "nwvoa/brst.hpp"

#include "nwvoa/hvir.hpp"
#include "nwvoa/matrix.hpp"
#include "nwvoa/nw.hpp"
#include "nwvoa/parallel.hpp"
#include "nwvoa/screening.hpp"
#include "nwvoa/series.hpp"

#include <atomic>
#include <functional>
#include <sstream>

namespace nwvoa::brst {

BRSTComplex::BRSTComplex() : frame_(nw_brst_frame()) {
    NWVectors v = nw_vectors(frame_);
    LatticePoint cphi(frame_.size(), Rational(0));
    for (std::size_t i = 0; i < frame_.size(); ++i) cphi[i] = v.c[i] + v.phi[i];
    d_state_ = FockState::exponential(frame_, cphi) + FockState::exponential(frame_, v.phi);
    lhat_ = *frame_.data().conformal; // sug image + dJ + fermionic conformal
    ihat_ = FockState::heis(frame_, v.p, -1);
}

Rational BRSTComplex::phi_charge(const FockState& a) const {
    if (a.is_zero()) return Rational(0);
    std::size_t phi_idx = frame_.size() - 1;
    Rational q = a.terms().begin()->first.exp[phi_idx];
    for (auto& [k, c] : a.terms())
        if (!(k.exp[phi_idx] == q)) throw std::logic_error("mixed fermionic charge");
    return q;
}

namespace {

/* phi-words of the given degree over e^{k phi}. */
std::vector<FockState> fermi_states(const Frame& frame, long k, long degree) {
    NWVectors v = nw_vectors(frame);
    LatticePoint g(frame.size(), Rational(0));
    for (std::size_t i = 0; i < frame.size(); ++i) g[i] = Rational(k) * v.phi[i];
    FockState base = FockState::exponential(frame, g);

    std::vector<FockState> out;
    std::function<void(long, long, const FockState&)> gen = [&](long n, long mx,
                                                                const FockState& s) {
        if (n == 0) { out.push_back(s); return; }
        for (long p = std::min(n, mx); p >= 1; --p) gen(n - p, p, s.prepend(v.phi, -p));
    };
    gen(degree, degree == 0 ? 1 : degree, base);
    return out;
}

long fermi_ground_weight(long k) { return (k * k + k) / 2; }

} // namespace

Report d0_square_check(const BRSTComplex& c, long max_weight) {
    Report rep;

    // state-level identity: d0^2 = ((d_state)_0 d_state)_0 / 2 for odd d
    FockState dd = mode_apply(c.d_state(), Rational(0), c.d_state());
    ++rep.checks;
    if (!dd.is_zero()) rep.failures.push_back("(d_state)_0 d_state != 0");

    // assemble the spanning family per affine component, in parallel
    std::vector<std::pair<long, long>> cells;
    for (long hv = 0; hv <= max_weight; ++hv)
        for (long j = -hv; j <= hv; ++j) cells.emplace_back(hv, j);

    std::vector<std::pair<std::string, std::vector<FockState>>> families(cells.size());
    parallel_for(cells.size(), [&](std::size_t idx) {
        auto [hv, j] = cells[idx];
        auto v1 = screening::v1_component(c.frame(), hv, j);
        if (v1.empty()) return;
        std::vector<FockState> states;
        for (long k = -2; k <= 2; ++k) {
            for (long deg = 0;
                 deg + hv + fermi_ground_weight(k) <= max_weight + 2 && deg <= 2; ++deg) {
                for (auto& fer : fermi_states(c.frame(), k, deg))
                    for (auto& a : v1) states.push_back(word_product(a, fer));
            }
        }
        std::ostringstream os;
        os << "(h,j)=(" << hv << "," << j << ")";
        families[idx] = {os.str(), std::move(states)};
    });

    std::vector<std::string> fails(cells.size());
    std::atomic<long> checks{0};
    parallel_for(cells.size(), [&](std::size_t idx) {
        long local = 0;
        for (auto& state : families[idx].second) {
            ++local;
            if (!c.d0(c.d0(state)).is_zero()) fails[idx] = "d0^2 != 0 at " + families[idx].first;
        }
        checks += local;
    });
    rep.checks += checks;
    for (auto& fl : fails)
        if (!fl.empty()) rep.failures.push_back(fl);
    return rep;
}

Report closedness_check(const BRSTComplex& c) {
    Report rep;
    ++rep.checks;
    if (!c.d0(c.Lhat()).is_zero()) rep.failures.push_back("d0 Lhat != 0");
    ++rep.checks;
    if (!c.d0(c.Ihat()).is_zero()) rep.failures.push_back("d0 Ihat != 0");
    return rep;
}

Report reduced_structure_check(const BRSTComplex& c, long mode_bound) {
    Report rep;
    const Frame& f = c.frame();
    NWVectors v = nw_vectors(f);
    const FockState& L = c.Lhat();
    const FockState& I = c.Ihat();

    std::vector<FockState> targets;
    targets.push_back(FockState::vacuum(f));
    targets.push_back(I);
    targets.push_back(L);
    targets.push_back(FockState::exponential(f, v.c));
    {
        LatticePoint mc(f.size(), Rational(0));
        for (std::size_t i2 = 0; i2 < f.size(); ++i2) mc[i2] = -v.c[i2];
        targets.push_back(FockState::exponential(f, mc));
    }
    targets.push_back(FockState::heis(f, v.phi, -1));
    {
        LatticePoint mphi(f.size(), Rational(0));
        mphi[f.size() - 1] = Rational(-1);
        targets.push_back(FockState::exponential(f, mphi));
        targets.push_back(FockState::exponential(f, v.phi));
    }

    auto check = [&](const std::string& name, const FockState& got, const FockState& want) {
        ++rep.checks;
        if (!(got == want)) rep.failures.push_back(name);
    };

    for (long m = -mode_bound; m <= mode_bound; ++m) {
        for (long n = -mode_bound; n <= mode_bound; ++n) {
            for (std::size_t t = 0; t < targets.size(); ++t) {
                const FockState& tgt = targets[t];
                std::string at = " (m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                                 ",t=" + std::to_string(t) + ")";
                // [Lhat(m), Lhat(n)] = (m-n) Lhat(m+n) + d (m^3-m)/12 * 2
                FockState lhs = bracket_modes(L, m + 1, L, n + 1, tgt);
                FockState rhs = Rational(m - n) * mode_apply(L, Rational(m + n + 1), tgt);
                if (m == -n) rhs += Rational(Int(m) * m * m - m, 12) * Rational(2) * tgt;
                check("Virasoro relation" + at, lhs, rhs);

                // [Lhat(m), Ihat(n)] = -n Ihat(m+n) - d (m^2+m) c_LI
                lhs = bracket_modes(L, m + 1, I, n, tgt);
                rhs = Rational(-n) * mode_apply(I, Rational(m + n), tgt);
                if (m == -n) rhs -= Rational(Int(m) * m + m) * tgt;
                check("L-I relation" + at, lhs, rhs);

                // [Ihat(m), Ihat(n)] = 0  (c_I = 0)
                lhs = bracket_modes(I, m, I, n, tgt);
                check("I-I relation" + at, lhs, FockState(f));
            }
        }
    }

    // Lhat(-1) Ihat = dIhat, Lhat(0) Ihat = Ihat, Lhat(1) Ihat = -2 c_LI 1
    check("Lhat(-1)Ihat = dIhat", mode_apply(L, Rational(0), I), translate(I));
    check("Lhat(0)Ihat = Ihat", mode_apply(L, Rational(1), I), I);
    check("Lhat(1)Ihat = -2", mode_apply(L, Rational(2), I),
          Rational(-2) * FockState::vacuum(f));
    return rep;
}

std::vector<EulerRow> euler_profile(const BRSTComplex& c, long max_h) {
    const Frame& f = c.frame();
    BigradedSeries expected = hvir::hvir_character(Rational(0), Rational(0), max_h);

    std::map<std::pair<long, long>, std::vector<FockState>> v1_cache;
    auto v1_at = [&](long hv, long m) -> const std::vector<FockState>& {
        auto key = std::make_pair(hv, m);
        auto it = v1_cache.find(key);
        if (it == v1_cache.end())
            it = v1_cache.emplace(key, screening::v1_component(f, hv, m)).first;
        return it->second;
    };

    std::vector<EulerRow> rows;
    for (long H = 0; H <= max_h; ++H) {
        // slice basis per fermionic charge k; the Pi-charge window widens by
        // one per charge step so images of one slice span into the next
        auto slice = [&](long k, long mbase) {
            std::vector<FockState> states;
            long mmax = mbase + k;
            for (long m = -H - 2; m <= mmax; ++m) {
                long base = H + m - fermi_ground_weight(k);
                for (long deg = 0; base - deg >= std::abs(m); ++deg) {
                    long hv = base - deg;
                    const auto& v1 = v1_at(hv, m);
                    if (v1.empty()) continue;
                    for (auto& fer : fermi_states(f, k, deg))
                        for (auto& a : v1) states.push_back(word_product(a, fer));
                }
            }
            return states;
        };

        const long mbase = 2;
        std::vector<std::pair<std::size_t, std::size_t>> dr(6); // k+3 -> (dim, rank)
        std::vector<std::vector<FockState>> slices(6);
        for (long k = -3; k <= 2; ++k) slices[k + 3] = slice(k, mbase);
        parallel_for(6, [&](std::size_t si) {
            auto& states = slices[si];
            FockIndexer idx;
            std::vector<VectorQ> images;
            for (auto& s : states) images.push_back(idx.coords(c.d0(s)));
            MatrixQ m(idx.size(), states.size());
            for (std::size_t col = 0; col < images.size(); ++col)
                for (std::size_t r2 = 0; r2 < images[col].size(); ++r2)
                    m.at(r2, col) = images[col][r2];
            dr[si] = {states.size(), m.rank()};
        });
        std::map<long, std::pair<std::size_t, std::size_t>> dims_rank;
        for (long k = -3; k <= 2; ++k) dims_rank[k] = dr[k + 3];

        Int euler = 0;
        for (long k = -2; k <= 2; ++k) {
            Int hk = Int(dims_rank[k].first) - Int(dims_rank[k].second) -
                     Int(dims_rank[k - 1].second);
            euler += (k % 2 == 0 ? hk : -hk);
        }
        rows.push_back({H, euler, expected.coeff_q(H)});
    }
    return rows;
}

} // namespace nwvoa::brst
