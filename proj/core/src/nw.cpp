#include "nwvoa/nw.hpp"

#include "nwvoa/hvir.hpp"
#include "nwvoa/parallel.hpp"

#include <atomic>
#include <stdexcept>

namespace nwvoa::nw {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::E: return "E";
        case Gen::F: return "F";
        case Gen::I: return "I";
        case Gen::J: return "J";
    }
    return "?";
}

std::optional<std::pair<Rational, Gen>> h4_bracket(Gen a, Gen b) {
    if (a == Gen::E && b == Gen::F) return {{Rational(1), Gen::I}};
    if (a == Gen::F && b == Gen::E) return {{Rational(-1), Gen::I}};
    if (a == Gen::J && b == Gen::E) return {{Rational(1), Gen::E}};
    if (a == Gen::E && b == Gen::J) return {{Rational(-1), Gen::E}};
    if (a == Gen::J && b == Gen::F) return {{Rational(-1), Gen::F}};
    if (a == Gen::F && b == Gen::J) return {{Rational(1), Gen::F}};
    return std::nullopt;
}

Rational h4_form(Gen a, Gen b) {
    if ((a == Gen::E && b == Gen::F) || (a == Gen::F && b == Gen::E)) return Rational(1);
    if ((a == Gen::I && b == Gen::J) || (a == Gen::J && b == Gen::I)) return Rational(1);
    return Rational(0);
}

void AffineSum::add(const AffineMode& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = modes.find(m);
    if (it == modes.end()) {
        modes.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) modes.erase(it);
    }
}

AffineSum affine_bracket(const AffineMode& a, const AffineMode& b) {
    AffineSum out;
    if (auto br = h4_bracket(a.g, b.g)) out.add({br->second, a.n + b.n}, br->first);
    if (a.n + b.n == 0) out.central += Rational(a.n) * h4_form(a.g, b.g);
    return out;
}

// ------------------------------------------------------------------ U(h4)

namespace {

// canonical generator order F < E < I < J
int slot(Gen g) {
    switch (g) {
        case Gen::F: return 0;
        case Gen::E: return 1;
        case Gen::I: return 2;
        case Gen::J: return 3;
    }
    return -1;
}
Gen slot_gen(int s) {
    static constexpr Gen gs[4] = {Gen::F, Gen::E, Gen::I, Gen::J};
    return gs[s];
}

void uh4_add(std::map<std::array<long, 4>, Rational>& m, const std::array<long, 4>& k,
             const Rational& c) {
    if (c.is_zero()) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

/* Straighten a product of generators into F^a E^b I^c J^d. */
void uh4_straighten(std::vector<int>& seq, const Rational& coeff,
                    std::map<std::array<long, 4>, Rational>& out) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (seq[k] <= seq[k + 1]) continue;
        int a = seq[k], b = seq[k + 1];
        std::swap(seq[k], seq[k + 1]);
        if (auto br = h4_bracket(slot_gen(a), slot_gen(b))) {
            std::vector<int> merged;
            merged.insert(merged.end(), seq.begin(), seq.begin() + k);
            merged.push_back(slot(br->second));
            merged.insert(merged.end(), seq.begin() + k + 2, seq.end());
            uh4_straighten(merged, coeff * br->first, out);
        }
        uh4_straighten(seq, coeff, out);
        return;
    }
    std::array<long, 4> key = {0, 0, 0, 0};
    for (int s : seq) ++key[s];
    uh4_add(out, key, coeff);
}

std::vector<int> key_to_seq(const std::array<long, 4>& k) {
    std::vector<int> seq;
    for (int s = 0; s < 4; ++s)
        for (long c = 0; c < k[s]; ++c) seq.push_back(s);
    return seq;
}

} // namespace

UH4 UH4::generator(Gen g) {
    UH4 u;
    std::array<long, 4> k = {0, 0, 0, 0};
    k[slot(g)] = 1;
    u.terms.emplace(k, Rational(1));
    return u;
}

UH4 UH4::casimir() {
    // FE + IJ, already PBW ordered
    UH4 u;
    u.terms.emplace(std::array<long, 4>{1, 1, 0, 0}, Rational(1));
    u.terms.emplace(std::array<long, 4>{0, 0, 1, 1}, Rational(1));
    return u;
}

UH4 UH4::operator*(const UH4& o) const {
    UH4 out;
    for (auto& [ka, ca] : terms)
        for (auto& [kb, cb] : o.terms) {
            std::vector<int> seq = key_to_seq(ka);
            std::vector<int> tail = key_to_seq(kb);
            seq.insert(seq.end(), tail.begin(), tail.end());
            uh4_straighten(seq, ca * cb, out.terms);
        }
    return out;
}

UH4 UH4::operator-(const UH4& o) const {
    UH4 out = *this;
    for (auto& [k, c] : o.terms) uh4_add(out.terms, k, -c);
    return out;
}

UH4& UH4::operator+=(const UH4& o) {
    for (auto& [k, c] : o.terms) uh4_add(terms, k, c);
    return *this;
}

bool casimir_check() {
    UH4 omega = UH4::casimir();
    for (Gen g : kGens) {
        UH4 x = UH4::generator(g);
        if (!((omega * x) - (x * omega)).is_zero()) return false;
    }
    return true;
}

BigradedSeries pbw_character(long max_h) {
    BigradedSeries s = BigradedSeries::one(max_h);
    for (long n = 1; n <= max_h; ++n) {
        // geometric factors for E(-n) (charge +1), F(-n) (charge -1), I, J
        for (int kind = 0; kind < 4; ++kind) {
            long charge = kind == 0 ? 1 : kind == 1 ? -1 : 0;
            BigradedSeries geo(max_h);
            for (long k = 0; n * k <= max_h; ++k) geo.set(n * k, charge * k, 1);
            s = s * geo;
        }
    }
    return s;
}

// ------------------------------------------------------------ realizations

std::pair<FockState, FockState> weyl_pair(const Frame& frame) {
    NWVectors v = nw_vectors(frame);
    LatticePoint mc(frame.size(), Rational(0));
    for (std::size_t i = 0; i < frame.size(); ++i) mc[i] = -v.c[i];
    FockState aplus = FockState::exponential(frame, v.c);
    FockState aminus = Rational(-1) * FockState::exponential(frame, mc).prepend(v.alpha, -1);
    return {std::move(aplus), std::move(aminus)};
}

H4Realization wakimoto_map(const Frame& frame) {
    NWVectors v = nw_vectors(frame);
    auto [aplus, aminus] = weyl_pair(frame);

    H4Realization r;
    r.target = frame;
    r.name = "wakimoto";
    r.images.emplace(Gen::E, aplus);
    r.images.emplace(Gen::F, translate(aminus) + aminus.prepend(v.p, -1));
    r.images.emplace(Gen::I, FockState::heis(frame, v.p, -1));
    FockState j = Rational(1, 2) * FockState::heis(frame, v.p, -1) +
                  FockState::heis(frame, v.q, -1) - mode_apply(aplus, Rational(-1), aminus);
    r.images.emplace(Gen::J, std::move(j));
    return r;
}

H4Realization inverse_qhr_map(const Frame& frame) {
    NWVectors v = nw_vectors(frame);
    hvir::FreeFieldHVir ff = hvir::free_field_hvir(frame);

    LatticePoint mc(frame.size(), Rational(0));
    for (std::size_t i = 0; i < frame.size(); ++i) mc[i] = -v.c[i];
    FockState emc = FockState::exponential(frame, mc);

    H4Realization r;
    r.target = frame;
    r.name = "inverse_qhr";
    r.images.emplace(Gen::E, FockState::exponential(frame, v.c));
    // F = T(-2) e^{-c} - nu(-1) I(-1) e^{-c} - nu(-2) e^{-c}; the HVir modes
    // act through their free-field states, I(-1) = -c1(-1)
    FockState f = mode_apply(ff.T_state, Rational(-1), emc);
    f += emc.prepend(v.c1, -1).prepend(v.nu, -1); // -nu(-1)(-c1(-1)) e^{-c}
    f -= emc.prepend(v.nu, -2);
    r.images.emplace(Gen::F, std::move(f));
    r.images.emplace(Gen::I, FockState::heis(frame, v.c, -1) + ff.I_state);
    r.images.emplace(Gen::J, Rational(1, 2) * FockState::heis(frame, v.d, -1) +
                                 Rational(1, 2) * ff.I_state);
    return r;
}

FockState sugawara_state(const H4Realization& r) {
    const FockState& e = r.image(Gen::E);
    const FockState& f = r.image(Gen::F);
    const FockState& i = r.image(Gen::I);
    const FockState& j = r.image(Gen::J);
    FockState s = mode_apply(e, Rational(-1), f);
    s += mode_apply(i, Rational(-1), j);
    s -= Rational(1, 2) * translate(i);
    s -= Rational(1, 2) * mode_apply(i, Rational(-1), i);
    return s;
}

FockState expr_sug1_state(const Frame& frame) {
    NWVectors v = nw_vectors(frame);
    hvir::FreeFieldHVir ff = hvir::free_field_hvir(frame);
    Rational h(1, 2);
    FockState s = ff.T_state;
    s -= h * translate(ff.I_state);
    s += h * FockState::heis(frame, v.c, -1).prepend(v.d, -1);
    s -= h * FockState::heis(frame, v.c, -2);
    s -= h * FockState::heis(frame, v.d, -2);
    return s;
}

Rational sugawara_central_charge(const Frame& frame) {
    if (!frame.data().conformal) throw std::logic_error("frame has no conformal state");
    const FockState& omega = *frame.data().conformal;
    FockState vac = FockState::vacuum(frame);
    // [L(m), L(-m)] 1 = (m^3-m)/12 c 1 at vanishing L(0)
    auto central = [&](long m) {
        FockState b = bracket_modes(omega, m + 1, omega, -m + 1, vac);
        if (b.is_zero()) return Rational(0);
        auto it = b.terms().begin();
        if (b.terms().size() != 1 || !it->first.word.empty())
            throw std::logic_error("central term is not a vacuum multiple");
        return it->second / Rational(Int(m) * m * m - m, 12);
    };
    Rational c2 = central(2), c3 = central(3);
    if (!(c2 == c3)) throw std::logic_error("inconsistent central charge readings");
    return c2;
}

EmbeddingReport verify_embedding(const H4Realization& r, long mode_bound) {
    EmbeddingReport report;
    const Frame& frame = r.target;
    NWVectors vt = nw_vectors(frame);

    // spanning family: words of degree <= 2 over e^{mc}, m in {-1, 0, 1}
    std::vector<FockState> targets;
    for (long m = -1; m <= 1; ++m) {
        LatticePoint g(frame.size(), Rational(0));
        for (std::size_t i = 0; i < frame.size(); ++i) g[i] = Rational(m) * vt.c[i];
        FockState ground = FockState::exponential(frame, g);
        targets.push_back(ground);
        std::size_t ngen = 4; // words only over alpha, beta, p, q
        for (std::size_t a = 0; a < ngen; ++a) {
            LatticePoint ua(frame.size(), Rational(0));
            ua[a] = Rational(1);
            targets.push_back(ground.prepend(ua, -1));
            targets.push_back(ground.prepend(ua, -2));
            for (std::size_t b = a; b < ngen; ++b) {
                LatticePoint ub(frame.size(), Rational(0));
                ub[b] = Rational(1);
                targets.push_back(ground.prepend(ua, -1).prepend(ub, -1));
            }
        }
    }

    long modes = 2 * mode_bound + 1;
    std::vector<std::vector<CheckFailure>> failures(targets.size());
    std::atomic<long> checks{0};

    parallel_for(targets.size(), [&](std::size_t t) {
        const FockState& target = targets[t];
        // first applications X(m) target, shared across all pairs
        std::vector<std::vector<FockState>> first(kGens.size());
        for (std::size_t g = 0; g < kGens.size(); ++g) {
            first[g].reserve(modes);
            for (long m = -mode_bound; m <= mode_bound; ++m)
                first[g].push_back(mode_apply(r.image(kGens[g]), Rational(m), target));
        }
        long local_checks = 0;
        for (std::size_t gi = 0; gi < kGens.size(); ++gi) {
            for (std::size_t gj = gi; gj < kGens.size(); ++gj) {
                Gen X = kGens[gi], Y = kGens[gj];
                int sgn = (r.image(X).parity() * r.image(Y).parity()) % 2;
                for (long m = -mode_bound; m <= mode_bound; ++m) {
                    for (long n = -mode_bound; n <= mode_bound; ++n) {
                        FockState lhs =
                            mode_apply(r.image(X), Rational(m), first[gj][n + mode_bound]);
                        FockState swap =
                            mode_apply(r.image(Y), Rational(n), first[gi][m + mode_bound]);
                        if (sgn) lhs += swap;
                        else lhs -= swap;
                        FockState rhs(frame);
                        if (auto br = h4_bracket(X, Y))
                            rhs += br->first *
                                   mode_apply(r.image(br->second), Rational(m + n), target);
                        if (m + n == 0) {
                            Rational kterm = Rational(m) * h4_form(X, Y);
                            if (!kterm.is_zero()) rhs += kterm * target;
                        }
                        ++local_checks;
                        if (!(lhs == rhs))
                            failures[t].push_back(
                                {std::string("[") + gen_name(X) + "(" + std::to_string(m) +
                                 "), " + gen_name(Y) + "(" + std::to_string(n) +
                                 ")] mismatch on target #" + std::to_string(t)});
                    }
                }
            }
        }
        checks += local_checks;
    });

    report.checks = checks;
    for (auto& fl : failures)
        report.failures.insert(report.failures.end(), fl.begin(), fl.end());
    return report;
}

} // namespace nwvoa::nw
