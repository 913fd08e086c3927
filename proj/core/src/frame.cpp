#include "nwvoa/frame.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nwvoa {

// ----------------------------------------------------------- expressions

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == ')') {
            if (!cur.empty()) { toks.push_back(cur); cur.clear(); }
            toks.push_back(std::string(1, ch));
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) { toks.push_back(cur); cur.clear(); }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

struct ExprParser {
    const Frame& f;
    const std::vector<std::string>& toks;
    std::size_t pos = 0;

    const std::string& next() {
        if (pos >= toks.size()) throw std::invalid_argument("state expr: unexpected end");
        return toks[pos++];
    }
    void expect(const std::string& t) {
        if (next() != t) throw std::invalid_argument("state expr: expected '" + t + "'");
    }

    FockState parse() {
        expect("(");
        const std::string& head = next();
        FockState out;
        if (head == "vac") {
            out = FockState::vacuum(f);
        } else if (head == "exp") {
            LatticePoint g;
            for (std::size_t i = 0; i < f.size(); ++i) g.push_back(Rational::parse(next()));
            out = FockState::exponential(f, std::move(g));
        } else if (head == "mode") {
            int gen = f.index_of(next());
            long n = std::stol(next());
            if (n >= 0) throw std::invalid_argument("state expr: mode must be negative");
            FockState inner = parse();
            LatticePoint dir(f.size(), Rational(0));
            dir[gen] = Rational(1);
            out = inner.prepend(dir, n);
        } else if (head == "scale") {
            Rational c = Rational::parse(next());
            out = c * parse();
        } else if (head == "add") {
            out = FockState(f);
            while (toks[pos] != ")") out += parse();
        } else if (head == "translate") {
            out = translate(parse());
        } else {
            throw std::invalid_argument("state expr: unknown head '" + head + "'");
        }
        expect(")");
        return out;
    }
};

} // namespace

FockState parse_state_expr(const Frame& f, const std::string& expr) {
    auto toks = tokenize(expr);
    ExprParser p{f, toks};
    FockState s = p.parse();
    if (p.pos != toks.size()) throw std::invalid_argument("state expr: trailing tokens");
    return s;
}

std::string serialize_state_expr(const FockState& s) {
    if (s.is_zero()) return "(scale 0 (vac))";
    const Frame& f = s.frame();
    std::ostringstream os;
    bool wrap = s.terms().size() > 1;
    if (wrap) os << "(add ";
    bool first = true;
    for (auto& [k, c] : s.terms()) {
        if (!first) os << " ";
        first = false;
        os << "(scale " << c.str() << " ";
        for (auto& m : k.word)
            os << "(mode " << f.data().generators[m.gen] << " " << m.n << " ";
        bool has_exp = false;
        for (auto& x : k.exp)
            if (!x.is_zero()) { has_exp = true; break; }
        if (has_exp) {
            os << "(exp";
            for (auto& x : k.exp) os << " " << x.str();
            os << ")";
        } else {
            os << "(vac)";
        }
        for (std::size_t i = 0; i < k.word.size(); ++i) os << ")";
        os << ")";
    }
    if (wrap) os << ")";
    return os.str();
}

// ----------------------------------------------------------- frame files

Frame load_frame(std::istream& in) {
    std::vector<std::string> generators;
    std::vector<std::vector<Rational>> gram;
    std::vector<std::vector<int>> cocycle;
    std::vector<LatticePoint> lattice;
    std::optional<LatticePoint> charge;
    std::string conformal;

    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "generators") {
            std::string name;
            while (ls >> name) generators.push_back(name);
        } else if (key == "gram" || key == "lattice" || key == "charge") {
            std::vector<Rational> row;
            std::string tok;
            while (ls >> tok) row.push_back(Rational::parse(tok));
            if (key == "gram") gram.push_back(std::move(row));
            else if (key == "lattice") lattice.push_back(std::move(row));
            else charge = std::move(row);
        } else if (key == "cocycle") {
            std::vector<int> row;
            int v;
            while (ls >> v) row.push_back(v);
            cocycle.push_back(std::move(row));
        } else if (key == "conformal") {
            std::getline(ls, conformal);
        } else {
            throw std::invalid_argument("frame file: unknown key '" + key + "'");
        }
    }
    FrameBuilder b;
    b.generators(std::move(generators)).gram(std::move(gram));
    if (!cocycle.empty()) b.cocycle(std::move(cocycle));
    if (!lattice.empty()) b.lattice(std::move(lattice));
    if (charge) b.charge(std::move(*charge));
    if (!conformal.empty()) b.conformal(conformal);
    return b.build();
}

Frame load_frame_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open frame file: " + path);
    return load_frame(in);
}

void save_frame(const Frame& f, std::ostream& out) {
    const FrameData& d = f.data();
    out << "generators";
    for (auto& g : d.generators) out << " " << g;
    out << "\n";
    for (auto& row : d.gram) {
        out << "gram";
        for (auto& x : row) out << " " << x.str();
        out << "\n";
    }
    for (auto& row : d.cocycle) {
        out << "cocycle";
        for (int x : row) out << " " << x;
        out << "\n";
    }
    for (auto& row : d.lattice_basis) {
        out << "lattice";
        for (auto& x : row) out << " " << x.str();
        out << "\n";
    }
    if (d.charge_vector) {
        out << "charge";
        for (auto& x : *d.charge_vector) out << " " << x.str();
        out << "\n";
    }
    if (d.conformal) out << "conformal " << serialize_state_expr(*d.conformal) << "\n";
}

void save_frame_file(const Frame& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write frame file: " + path);
    save_frame(f, out);
}

// ----------------------------------------------------------- built-ins

namespace {

LatticePoint pt(std::initializer_list<Rational> xs) { return LatticePoint(xs); }

/* Off-diagonal rule eps(a_i,a_j) = 1 for i < j and
 * eps(a_j,a_i) = (-1)^{<i,j> + <i,i><j,j>}; diagonal chosen so that
 * eps(c,c) = +1 on c = alpha+beta (Weyl relation sign). */
std::vector<std::vector<int>> ambient_cocycle(bool with_phi) {
    std::size_t n = with_phi ? 5 : 4;
    std::vector<std::vector<int>> eps(n, std::vector<int>(n, 1));
    auto drop = [&](std::size_t i, std::size_t j) { eps[i][j] = -1; };
    drop(1, 0);            // eps(beta, alpha)
    drop(1, 1);            // diagonal fix, see above
    drop(3, 2);            // eps(q, p)
    if (with_phi) { drop(4, 0); drop(4, 1); } // eps(phi, alpha), eps(phi, beta)
    return eps;
}

std::vector<std::vector<Rational>> ambient_gram(bool with_phi) {
    std::size_t n = with_phi ? 5 : 4;
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    g[0][0] = Rational(1);
    g[1][1] = Rational(-1);
    g[2][3] = g[3][2] = Rational(1);
    if (with_phi) g[4][4] = Rational(1);
    return g;
}

NWVectors ambient_vectors(std::size_t n) {
    auto unit = [&](std::size_t i) {
        LatticePoint v(n, Rational(0));
        v[i] = Rational(1);
        return v;
    };
    auto combo = [&](std::initializer_list<std::pair<std::size_t, Rational>> parts) {
        LatticePoint v(n, Rational(0));
        for (auto& [i, c] : parts) v[i] = c;
        return v;
    };
    NWVectors vs;
    vs.alpha = unit(0);
    vs.beta = unit(1);
    vs.p = unit(2);
    vs.q = unit(3);
    vs.c = combo({{0, 1}, {1, 1}});
    vs.d = combo({{0, 1}, {1, -1}, {3, 2}});
    vs.c1 = combo({{0, 1}, {1, 1}, {2, -1}});
    vs.d1 = combo({{3, -2}});
    vs.nu = combo({{0, 1}, {3, 1}});
    vs.mu = combo({{1, 1}, {3, -1}});
    if (n == 5) vs.phi = unit(4);
    return vs;
}

FockState quad(const Frame& f, const LatticePoint& u, long m, const LatticePoint& v, long n) {
    return FockState::heis(f, u, m).prepend(v, n);
}

/* rho(omega^sug) = T_HVir - (1/2) I_HVir(-2)1 + (1/2) c(-1)d(-1)1
 *                  - (1/2)(c(-2)+d(-2))1, with
 * T_HVir = (1/2) c1(-1)d1(-1)1 - (1/2) d1(-2)1 and I_HVir = -c1(-1)1. */
FockState sugawara_image_state(const Frame& f) {
    NWVectors v = ambient_vectors(f.size());
    Rational h(1, 2);
    FockState s = h * quad(f, v.c1, -1, v.d1, -1);
    s -= h * FockState::heis(f, v.d1, -2);
    s += h * FockState::heis(f, v.c1, -2); // -(1/2) I(-2)1 with I = -c1(-1)1
    s += h * quad(f, v.c, -1, v.d, -1);
    s -= h * FockState::heis(f, v.c, -2);
    s -= h * FockState::heis(f, v.d, -2);
    return s;
}

FockState fermi_conformal(const Frame& f, const LatticePoint& phi) {
    Rational h(1, 2);
    return h * quad(f, phi, -1, phi, -1) - h * FockState::heis(f, phi, -2);
}

Frame build_ambient(bool with_phi) {
    FrameBuilder pass1;
    std::vector<std::string> names = {"alpha", "beta", "p", "q"};
    if (with_phi) names.push_back("phi");
    pass1.generators(names).gram(ambient_gram(with_phi)).cocycle(ambient_cocycle(with_phi));
    Frame f0 = pass1.build();

    NWVectors v = ambient_vectors(f0.size());
    FockState omega = sugawara_image_state(f0);
    LatticePoint charge;
    if (with_phi) {
        // reduced Virasoro state: sug image + dJ + fermionic conformal
        LatticePoint jvec(f0.size(), Rational(0));
        jvec[2] = Rational(1, 2);
        jvec[3] = Rational(1);
        jvec[1] = Rational(-1);
        omega += translate(FockState::heis(f0, jvec, -1));
        omega += fermi_conformal(f0, v.phi);
        charge = v.phi;
    } else {
        // J(0) image direction: (1/2) d - (1/2) c1
        charge = LatticePoint(f0.size(), Rational(0));
        for (std::size_t i = 0; i < f0.size(); ++i)
            charge[i] = Rational(1, 2) * (v.d[i] - v.c1[i]);
    }

    FrameBuilder pass2;
    pass2.generators(names).gram(ambient_gram(with_phi)).cocycle(ambient_cocycle(with_phi));
    pass2.charge(charge).conformal(serialize_state_expr(omega));
    return pass2.build();
}

} // namespace

Frame nw_frame() {
    static Frame f = build_ambient(false);
    return f;
}

Frame nw_brst_frame() {
    static Frame f = build_ambient(true);
    return f;
}

Frame pi_frame() {
    static Frame f = [] {
        FrameBuilder pass1;
        pass1.generators({"c", "d"});
        pass1.gram({{Rational(0), Rational(2)}, {Rational(2), Rational(0)}});
        Frame f0 = pass1.build();
        LatticePoint c = pt({Rational(1), Rational(0)});
        LatticePoint d = pt({Rational(0), Rational(1)});
        Rational h(1, 2);
        FockState omega = h * quad(f0, c, -1, d, -1) - h * FockState::heis(f0, c, -2) -
                          h * FockState::heis(f0, d, -2);
        FrameBuilder pass2;
        pass2.generators({"c", "d"});
        pass2.gram({{Rational(0), Rational(2)}, {Rational(2), Rational(0)}});
        pass2.charge(pt({Rational(0), Rational(1, 2)}));
        pass2.conformal(serialize_state_expr(omega));
        return pass2.build();
    }();
    return f;
}

NWVectors nw_vectors(const Frame& f) { return ambient_vectors(f.size()); }

PiVectors pi_vectors(const Frame&) {
    PiVectors v;
    v.c = pt({Rational(1), Rational(0)});
    v.d = pt({Rational(0), Rational(1)});
    v.nu = pt({Rational(1, 2), Rational(1, 2)});
    v.mu = pt({Rational(1, 2), Rational(-1, 2)});
    return v;
}

} // namespace nwvoa
