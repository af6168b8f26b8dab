#include "modcheck/cubic.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcheck::cubic {

std::string stratum_name(Stratum s) {
    switch (s) {
        case Stratum::Smooth: return "Smooth";
        case Stratum::A1: return "A1";
        case Stratum::A1Sq: return "A1^2";
        case Stratum::A1Cube: return "A1^3";
        case Stratum::A1Four: return "A1^4";
        case Stratum::N: return "N";
        case Stratum::A1N: return "A1-N";
        case Stratum::A1SqN: return "A1^2-N";
        case Stratum::A1CubeN: return "A1^3-N";
    }
    return "?";
}

Stratum parse_stratum(const std::string& name) {
    std::string n;
    for (char ch : name)
        if (ch != '(' && ch != ')' && ch != ' ') n += ch == ',' ? '-' : ch;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::tolower(ch); });
    for (Stratum s : all_strata()) {
        std::string k = stratum_name(s);
        std::transform(k.begin(), k.end(), k.begin(), [](unsigned char ch) { return std::tolower(ch); });
        if (n == k) return s;
    }
    if (n == "a1^1") return Stratum::A1;
    throw StratumError("unknown stratum '" + name + "' (expected Smooth, A1, A1^2, A1^3, A1^4, N, A1-N, A1^2-N, A1^3-N)");
}

const std::vector<Stratum>& all_strata() {
    static const std::vector<Stratum> v = {Stratum::Smooth, Stratum::A1,  Stratum::A1Sq,  Stratum::A1Cube, Stratum::A1Four,
                                           Stratum::N,      Stratum::A1N, Stratum::A1SqN, Stratum::A1CubeN};
    return v;
}

bool is_three_planes(Stratum s) {
    return s == Stratum::N || s == Stratum::A1N || s == Stratum::A1SqN || s == Stratum::A1CubeN;
}

NarukiParams default_params(Stratum s) {
    switch (s) {
        case Stratum::Smooth: return {2, 3, 5, 7};
        case Stratum::A1: return {2, 3, 5, 1};
        case Stratum::A1Sq: return {2, 3, Rational(1, 3), 1};
        case Stratum::A1Cube: return {Rational(1, 2), Rational(1, 2), 2, 1};
        case Stratum::A1Four: return {0, 0, 0, 0};
        case Stratum::N: return {2, 3, 5, 0};
        case Stratum::A1N: return {0, 3, 5, 0};
        case Stratum::A1SqN: return {0, 0, 5, 0};
        case Stratum::A1CubeN: return {0, 0, 0, 0};
    }
    return {};
}

namespace {

// Three planes: the printed limit lines specialised, coincident lines merged.
PairConfig three_planes_config(Stratum s, const NarukiParams& p) {
    if (p.rho != 0) throw StratumError("three-plane strata need rho = 0");
    int zeros = (p.lambda == 0) + (p.mu == 0) + (p.nu == 0);
    for (const Rational* v : {&p.lambda, &p.mu, &p.nu})
        if (*v == 1) throw StratumError("parameters equal to 1 are outside the stratum dictionary");
    int want = s == Stratum::N ? 0 : s == Stratum::A1N ? 1 : s == Stratum::A1SqN ? 2 : 3;
    if (zeros != want)
        throw StratumError(stratum_name(s) + " needs exactly " + std::to_string(want) + " of lambda, mu, nu equal to 0");
    PairConfig cfg;
    cfg.stratum = s;
    cfg.kind = SurfaceKind::ThreePlanes;
    cfg.surface = naruki_cubic(p);
    for (const auto& l : limit_lines(p)) {
        auto it = std::find_if(cfg.lines.begin(), cfg.lines.end(),
                               [&](const WeightedLine& w) { return w.plane == l.plane && w.line.same_as(l.line); });
        if (it != cfg.lines.end()) {
            ++it->multiplicity;
            it->label += "=" + l.label;
        } else {
            cfg.lines.push_back({l.label, l.line, 1, l.plane});
        }
    }
    return cfg;
}

using P2 = Point2;

Point lift(const P2& x, const Rational& h) { return {x[0], x[1], x[2], h}; }

bool same_p2(const P2& a, const P2& b) {
    return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

// One-nodal family member at rho = 1: x3 * q(x0,x1,x2) + x0 x1 x2.
PairConfig nodal_config(Stratum s, const NarukiParams& p) {
    if (p.rho != 1) throw StratumError("A1-type strata are realised at rho = 1");
    const Rational &l = p.lambda, &m = p.mu, &n = p.nu;
    if (l == 0 || m == 0 || n == 0) throw StratumError("A1-type strata need lambda, mu, nu nonzero");
    int tangencies = (m * n == 1) + (l * n == 1) + (l * m == 1);
    int want = s == Stratum::A1 ? 0 : s == Stratum::A1Sq ? 1 : 2;
    if (tangencies != want)
        throw StratumError(stratum_name(s) + " needs exactly " + std::to_string(want) +
                           " of mu*nu, lambda*nu, lambda*mu equal to 1");
    PairConfig cfg;
    cfg.stratum = s;
    cfg.kind = SurfaceKind::IrreducibleCubic;
    cfg.surface = naruki_cubic(p);
    Poly q = cfg.surface.derivative(3);
    // q restricted to each side of the triangle factors into two linear forms
    std::vector<std::pair<int, P2>> feet = {
        {0, {0, 1, -m}}, {0, {0, -n, 1}}, {1, {1, 0, -l}}, {1, {-n, 0, 1}}, {2, {1, -l, 0}}, {2, {-m, 1, 0}}};
    std::vector<std::pair<int, P2>> distinct;
    for (const auto& f : feet) {
        bool dup = false;
        for (const auto& d : distinct) dup = dup || (d.first == f.first && same_p2(d.second, f.second));
        if (!dup) distinct.push_back(f);
    }
    auto qv = [&](const P2& x) { return q.evaluate({x[0], x[1], x[2], 0}); };
    for (const auto& d : distinct)
        if (qv(d.second) != 0) throw std::logic_error("conic foot not on the conic");
    auto bil = [&](const P2& a, const P2& b) -> Rational {
        P2 c{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
        return (qv(c) - qv(a) - qv(b)) / 2;
    };
    const Point node{0, 0, 0, 1};
    std::vector<std::pair<std::string, Line3>> lines;
    for (std::size_t i = 0; i < distinct.size(); ++i)
        lines.push_back({"E" + std::to_string(i + 1), Line3::through(node, lift(distinct[i].second, 0))});
    for (int k = 0; k < 3; ++k) lines.push_back({"T" + std::to_string(k), Line3::from_forms(Poly::var(k), Poly::var(3))});
    for (std::size_t i = 0; i < distinct.size(); ++i)
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            if (distinct[i].first == distinct[j].first) continue;
            const P2 &a = distinct[i].second, &b = distinct[j].second;
            Rational bb = bil(a, b);
            if (bb == 0) throw StratumError("degenerate parameters: conic feet are conjugate");
            // x0 x1 x2 on s*a + t*b equals s*t*(s*g1 + t*g2)
            auto cub = [&](const Rational& s, const Rational& t) -> Rational {
                return (s * a[0] + t * b[0]) * (s * a[1] + t * b[1]) * (s * a[2] + t * b[2]);
            };
            // at (1,1): g1 + g2; at (2,1): 2 (2 g1 + g2)
            Rational v11 = cub(1, 1), v21 = cub(2, 1);
            Rational g1 = v21 / 2 - v11;
            Rational g2 = v11 - g1;
            lines.push_back({"X" + std::to_string(i + 1) + std::to_string(j + 1),
                             Line3::through(lift(a, -g1 / (2 * bb)), lift(b, -g2 / (2 * bb)))});
        }
    std::vector<Point> nodes;
    std::vector<int> node_count;
    for (const auto& [name, line] : lines) {
        auto sp = singular_points_on_line(cfg.surface, line);
        node_count.push_back(static_cast<int>(sp.size()));
        for (const auto& x : sp) {
            bool dup = false;
            for (const auto& y : nodes) dup = dup || same_point(x, y);
            if (!dup) nodes.push_back(normalize(x));
        }
    }
    std::size_t want_nodes = static_cast<std::size_t>(want + 1);
    if (nodes.size() != want_nodes)
        throw StratumError("expected " + std::to_string(want_nodes) + " nodes, found " + std::to_string(nodes.size()));
    for (const auto& x : nodes)
        if (hessian_rank(cfg.surface, x) != 3) throw StratumError("singular point " + point_string(x) + " is not an A1 point");
    cfg.singular_points = nodes;
    for (std::size_t i = 0; i < lines.size(); ++i)
        cfg.lines.push_back({lines[i].first, lines[i].second, 1 << node_count[i], -1});
    return cfg;
}

PairConfig cayley_config() {
    PairConfig cfg;
    cfg.stratum = Stratum::A1Four;
    cfg.kind = SurfaceKind::IrreducibleCubic;
    cfg.surface = cayley_cubic();
    for (int i = 0; i < 4; ++i) {
        Point e{0, 0, 0, 0};
        e[i] = 1;
        cfg.singular_points.push_back(e);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            cfg.lines.push_back({"E" + std::to_string(i) + std::to_string(j),
                                 Line3::from_forms(Poly::var(i), Poly::var(j)), 4, -1});
    const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairs)
        cfg.lines.push_back({"F" + std::to_string(pr[0]) + std::to_string(pr[1]),
                             Line3::from_forms(Poly::var(pr[0]) + Poly::var(pr[1]), Poly::var(pr[2]) + Poly::var(pr[3])),
                             1, -1});
    return cfg;
}

// degree-d monomials in three variables, fixed order
std::vector<poly::Monomial> monomials3(int d) {
    std::vector<poly::Monomial> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
            poly::Monomial mon;
            mon.exp[0] = static_cast<uint16_t>(a);
            mon.exp[1] = static_cast<uint16_t>(b);
            mon.exp[2] = static_cast<uint16_t>(d - a - b);
            out.push_back(mon);
        }
    return out;
}

Rational eval_mono(const poly::Monomial& mon, const P2& x) {
    Rational r = 1;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < mon.exp[i]; ++k) r *= x[i];
    return r;
}

Rational det3(const P2& a, const P2& b, const P2& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// forms of degree d through the given points
std::vector<Poly> forms_through(const std::vector<P2>& pts, int d) {
    auto mons = monomials3(d);
    linalg::Rows rows;
    for (const auto& x : pts) {
        std::vector<Rational> r;
        for (const auto& mon : mons) r.push_back(eval_mono(mon, x));
        rows.push_back(r);
    }
    std::vector<Poly> out;
    for (const auto& k : linalg::kernel(rows, mons.size())) {
        Poly f;
        for (std::size_t i = 0; i < mons.size(); ++i)
            if (k[i] != 0) f += Poly::term(k[i], mons[i]);
        out.push_back(f);
    }
    return out;
}

}  // namespace

std::array<Point2, 6> default_six_points() {
    return {P2{1, 0, 0}, P2{0, 1, 0}, P2{0, 0, 1}, P2{1, 1, 1}, P2{1, 2, 3}, P2{1, -1, 2}};
}

BlowUpModel blow_up_model(const std::array<Point2, 6>& pts) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                if (det3(pts[i], pts[j], pts[k]) == 0) throw StratumError("three of the six points are collinear");
    std::vector<P2> all(pts.begin(), pts.end());
    if (!forms_through(all, 2).empty()) throw StratumError("the six points lie on a conic");
    BlowUpModel model;
    model.points = pts;
    auto cubics = forms_through(all, 3);
    if (cubics.size() != 4) throw std::logic_error("cubic system through six points should have dimension 4");
    for (int i = 0; i < 4; ++i) model.cubics[i] = cubics[i];
    auto phi = [&](const P2& x) {
        Point y;
        for (int i = 0; i < 4; ++i) y[i] = model.cubics[i].evaluate({x[0], x[1], x[2]});
        return y;
    };

    // implicit equation: cubic forms in four variables vanishing on the image
    std::vector<poly::Monomial> mons4;
    for (int a = 3; a >= 0; --a)
        for (int b = 3 - a; b >= 0; --b)
            for (int c = 3 - a - b; c >= 0; --c) {
                poly::Monomial mon;
                mon.exp = {};
                mon.exp[0] = static_cast<uint16_t>(a);
                mon.exp[1] = static_cast<uint16_t>(b);
                mon.exp[2] = static_cast<uint16_t>(c);
                mon.exp[3] = static_cast<uint16_t>(3 - a - b - c);
                mons4.push_back(mon);
            }
    std::vector<Poly> images;
    for (const auto& mon : mons4) {
        Poly t(1);
        for (int i = 0; i < 4; ++i) t = t * model.cubics[i].pow(mon.exp[i]);
        images.push_back(t);
    }
    auto mons9 = monomials3(9);
    linalg::Rows rows;
    for (const auto& mon : mons9) {
        std::vector<Rational> r;
        for (const auto& t : images) r.push_back(t.coefficient(mon));
        rows.push_back(r);
    }
    auto k = linalg::kernel(rows, mons4.size());
    if (k.size() != 1) throw std::logic_error("image of the cubic system is not a unique cubic surface");
    Poly surface;
    for (std::size_t i = 0; i < mons4.size(); ++i)
        if (k[0][i] != 0) surface += Poly::term(k[0][i], mons4[i]);
    model.surface = surface.monic(poly::MonomialOrder{poly::OrderKind::Grevlex, 4});

    auto span = [](const std::vector<Point>& cands, const std::string& what) {
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t j = i + 1; j < cands.size(); ++j) {
                linalg::Rows r{{cands[i].begin(), cands[i].end()}, {cands[j].begin(), cands[j].end()}};
                if (linalg::rank(r, 4) == 2) return Line3::through(cands[i], cands[j]);
            }
        throw std::logic_error("could not span the line " + what);
    };

    for (int i = 0; i < 6; ++i) {
        // exceptional curve: image of the tangent directions at the point
        std::vector<Point> cols;
        for (int v = 0; v < 3; ++v) {
            Point c;
            for (int r = 0; r < 4; ++r) c[r] = model.cubics[r].derivative(v).evaluate({pts[i][0], pts[i][1], pts[i][2]});
            cols.push_back(c);
        }
        model.lines["a" + std::to_string(i + 1)] = span(cols, "a" + std::to_string(i + 1));
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            std::vector<Point> cands;
            for (int t = 1; t <= 4; ++t) {
                P2 x{pts[i][0] + t * pts[j][0], pts[i][1] + t * pts[j][1], pts[i][2] + t * pts[j][2]};
                cands.push_back(phi(x));
            }
            std::string name = "c" + std::to_string(i + 1) + std::to_string(j + 1);
            model.lines[name] = span(cands, name);
        }
    for (int i = 0; i < 6; ++i) {
        std::vector<P2> others;
        for (int j = 0; j < 6; ++j)
            if (j != i) others.push_back(pts[j]);
        auto conic = forms_through(others, 2).at(0);
        auto qv = [&](const P2& x) { return conic.evaluate({x[0], x[1], x[2]}); };
        const P2& base = others[0];
        std::vector<Point> cands;
        for (int k = 1; k <= 24 && cands.size() < 4; ++k) {
            const P2 r{k, 1, k * k + 3};
            Rational qr = qv(r);
            if (qr == 0) continue;
            P2 sum{base[0] + r[0], base[1] + r[1], base[2] + r[2]};
            Rational b = (qv(sum) - qv(base) - qr) / 2;
            Rational t = -2 * b / qr;
            if (t == 0) continue;
            P2 x{base[0] + t * r[0], base[1] + t * r[1], base[2] + t * r[2]};
            bool base_pt = false;
            for (const auto& y : all) base_pt = base_pt || same_p2(x, y);
            if (!base_pt) cands.push_back(phi(x));
        }
        model.lines["b" + std::to_string(i + 1)] = span(cands, "b" + std::to_string(i + 1));
    }
    return model;
}

PairConfig smooth_config(const std::array<Point2, 6>& points) {
    BlowUpModel model = blow_up_model(points);
    PairConfig cfg;
    cfg.stratum = Stratum::Smooth;
    cfg.kind = SurfaceKind::IrreducibleCubic;
    cfg.surface = model.surface;
    for (const auto& label : schlafli_labels()) cfg.lines.push_back({label, model.lines.at(label), 1, -1});
    return cfg;
}

PairConfig stratum_config(Stratum s, const NarukiParams& p) {
    switch (s) {
        case Stratum::Smooth: return smooth_config(default_six_points());
        case Stratum::A1:
        case Stratum::A1Sq:
        case Stratum::A1Cube: return nodal_config(s, p);
        case Stratum::A1Four:
            if (p.rho != 0 || p.lambda != 0 || p.mu != 0 || p.nu != 0)
                throw StratumError("A1^4 is the Cayley cubic and takes no parameters");
            return cayley_config();
        default: return three_planes_config(s, p);
    }
}

PairConfig stratum_config(Stratum s) { return stratum_config(s, default_params(s)); }

}  // namespace modcheck::cubic
