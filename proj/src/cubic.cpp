#include "modcheck/cubic.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace modcheck::cubic {

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
    return s;
}

Poly linear_form(const std::array<Rational, 4>& c) {
    Poly f;
    for (int i = 0; i < 4; ++i) f += c[i] * Poly::var(i);
    return f;
}

std::array<Rational, 4> form_coeffs(const Poly& f) {
    if (!f.is_homogeneous() || f.total_degree() != 1) throw std::invalid_argument("expected a nonzero linear form");
    std::array<Rational, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = f.coefficient(poly::Monomial::var(i));
    if (f.max_var() > 3) throw std::invalid_argument("linear form uses variables beyond x3");
    return c;
}

linalg::Rows rows_of(std::initializer_list<Poly> forms) {
    linalg::Rows rows;
    for (const auto& f : forms) {
        auto c = form_coeffs(f);
        rows.emplace_back(c.begin(), c.end());
    }
    return rows;
}

Point to_point(const std::vector<Rational>& v) { return {v[0], v[1], v[2], v[3]}; }

}  // namespace

Poly parse_param_poly(const std::string& text) {
    std::string s = replace_all(text, "lambda", "x4");
    s = replace_all(s, "rho", "x7");
    s = replace_all(s, "mu", "x5");
    s = replace_all(s, "nu", "x6");
    return poly::parse_poly(s);
}

Poly specialize(const Poly& symbolic, const NarukiParams& p) {
    std::vector<Poly> values{Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3),
                             Poly(p.lambda), Poly(p.mu), Poly(p.nu), Poly(p.rho)};
    return symbolic.substitute(values);
}

Poly naruki_cubic_symbolic() {
    static const Poly f = parse_param_poly(
        "rho*x3*(lambda*x0^2 + mu*x1^2 + nu*x2^2 + (rho-1)^2*(lambda*mu*nu*rho-1)^2*x3^2"
        " + (mu*nu+1)*x1*x2 + (lambda*nu+1)*x0*x2 + (lambda*mu+1)*x0*x1"
        " - (rho-1)*(lambda*mu*nu*rho-1)*x3*((lambda+1)*x0 + (mu+1)*x1 + (nu+1)*x2)) + x0*x1*x2");
    return f;
}

Poly naruki_cubic(const NarukiParams& p) { return specialize(naruki_cubic_symbolic(), p); }

Tritangent parse_tritangent(const std::string& name) {
    if (name == "(p,)" || name == "p," || name == "p") return Tritangent::PComma;
    if (name == "(theta)" || name == "theta" || name == "(θ)") return Tritangent::Theta;
    throw std::invalid_argument("unknown tritangent '" + name + "'; only (p,) and (theta) are displayed");
}

std::string tritangent_name(Tritangent t) { return t == Tritangent::PComma ? "(p,)" : "(theta)"; }

Poly tritangent_symbolic(Tritangent t) {
    // transcribed as printed, including the repeated "- mu - mu" factor
    static const Poly p_comma =
        parse_param_poly("x0 + mu*rho*x1 + nu*rho*x2 - rho*(rho-1)*(lambda*mu*nu*rho + mu*nu - mu - mu)*x3");
    static const Poly theta = parse_param_poly(
        "lambda*x0 + mu*x1 + nu*x2 - ((rho-1)*(lambda*mu*nu*rho-1) - rho*(lambda-1)*(mu-1)*(nu-1))*x3");
    return t == Tritangent::PComma ? p_comma : theta;
}

Poly tritangent_equation(Tritangent t, const NarukiParams& p) { return specialize(tritangent_symbolic(t), p); }

Poly tritangent_limit(Tritangent t, const NarukiParams& p) {
    NarukiParams q = p;
    q.rho = 0;
    return tritangent_equation(t, q);
}

Point normalize(const Point& p) {
    for (int i = 0; i < 4; ++i)
        if (p[i] != 0) {
            Point r;
            for (int k = 0; k < 4; ++k) r[k] = p[k] / p[i];
            return r;
        }
    throw std::invalid_argument("zero vector is not a projective point");
}

std::string point_string(const Point& p) {
    Point n = normalize(p);
    std::string s = "[";
    for (int i = 0; i < 4; ++i) s += (i ? ":" : "") + exact::to_string(n[i]);
    return s + "]";
}

bool same_point(const Point& a, const Point& b) { return normalize(a) == normalize(b); }

Rational evaluate_form(const Poly& f, const Point& x) { return f.evaluate({x[0], x[1], x[2], x[3]}); }

Line3 Line3::from_forms(const Poly& f1, const Poly& f2) {
    auto k = linalg::kernel(rows_of({f1, f2}), 4);
    if (k.size() != 2) throw std::invalid_argument("linear forms do not cut out a line");
    Line3 l;
    l.form1 = f1;
    l.form2 = f2;
    l.p = to_point(k[0]);
    l.q = to_point(k[1]);
    return l;
}

Line3 Line3::through(const Point& a, const Point& b) {
    linalg::Rows rows{{a.begin(), a.end()}, {b.begin(), b.end()}};
    if (linalg::rank(rows, 4) != 2) throw std::invalid_argument("points do not span a line");
    auto k = linalg::kernel(rows, 4);
    Line3 l;
    l.form1 = linear_form({k[0][0], k[0][1], k[0][2], k[0][3]});
    l.form2 = linear_form({k[1][0], k[1][1], k[1][2], k[1][3]});
    l.p = a;
    l.q = b;
    return l;
}

bool Line3::contains(const Point& x) const { return evaluate_form(form1, x) == 0 && evaluate_form(form2, x) == 0; }

bool Line3::consistent() const {
    linalg::Rows pts{{p.begin(), p.end()}, {q.begin(), q.end()}};
    return contains(p) && contains(q) && linalg::rank(pts, 4) == 2 && linalg::rank(rows_of({form1, form2}), 4) == 2;
}

bool Line3::same_as(const Line3& o) const { return contains(o.p) && contains(o.q); }

bool Line3::lies_on(const Poly& surface) const {
    // a form of degree d vanishing at d+1 distinct points of a line vanishes on it
    int d = std::max(surface.total_degree(), 0);
    for (int k = 0; k <= d; ++k) {
        Point x;
        for (int i = 0; i < 4; ++i) x[i] = p[i] + Rational(k) * q[i];
        if (evaluate_form(surface, x) != 0) return false;
    }
    return evaluate_form(surface, q) == 0;
}

std::optional<Point> intersect(const Line3& a, const Line3& b) {
    auto k = linalg::kernel(rows_of({a.form1, a.form2, b.form1, b.form2}), 4);
    if (k.size() == 1) return normalize(to_point(k[0]));
    if (k.size() == 0) return std::nullopt;
    throw std::invalid_argument("lines coincide");
}

Point point_a(int i, const NarukiParams& p) {
    const Rational w[3] = {0, 1, p.lambda};
    return {1, 0, 0, w[i - 1]};
}
Point point_b(int j, const NarukiParams& p) {
    const Rational w[3] = {0, 1, p.mu};
    return {0, 1, 0, w[j - 1]};
}
Point point_c(int k, const NarukiParams& p) {
    const Rational w[3] = {0, 1, p.nu};
    return {0, 0, 1, w[k - 1]};
}

namespace {

struct TableEntry {
    const char* label;
    int plane;
    const char* form;
};

// Limit lines on the three planes as printed (in-plane equation next to x_plane = 0).
const TableEntry kLimitTable[27] = {
    {"B1C1", 0, "x3"},          {"B1C2", 0, "-x2+x3"},          {"B1C3", 0, "-nu*x2+x3"},
    {"B2C1", 0, "-x1+x3"},      {"B2C2", 0, "-x1-x2+x3"},       {"B2C3", 0, "-x1-nu*x2+x3"},
    {"B3C1", 0, "-mu*x1+x3"},   {"B3C2", 0, "-mu*x1-x2+x3"},    {"B3C3", 0, "-mu*x1-nu*x2+x3"},
    {"A1C1", 1, "x3"},          {"A1C2", 1, "-x2+x3"},          {"A1C3", 1, "-nu*x2+x3"},
    {"A2C1", 1, "-x0+x3"},      {"A2C2", 1, "-x0-x2+x3"},       {"A2C3", 1, "-x0-nu*x2+x3"},
    {"A3C1", 1, "-lambda*x0+x3"}, {"A3C2", 1, "-lambda*x0-x2+x3"}, {"A3C3", 1, "-lambda*x0-nu*x2+x3"},
    {"A1B1", 2, "x3"},          {"A1B2", 2, "-x1+x3"},          {"A1B3", 2, "-mu*x1+x3"},
    {"A2B1", 2, "-x0+x3"},      {"A2B2", 2, "-x0-x1+x3"},       {"A2B3", 2, "-x0-mu*x1+x3"},
    {"A3B1", 2, "-lambda*x0+x3"}, {"A3B2", 2, "-lambda*x0-x1+x3"}, {"A3B3", 2, "-lambda*x0-mu*x1+x3"},
};

Point named_point(char letter, int idx, const NarukiParams& p) {
    if (letter == 'A') return point_a(idx, p);
    if (letter == 'B') return point_b(idx, p);
    return point_c(idx, p);
}

}  // namespace

std::vector<LimitLine> limit_lines(const NarukiParams& p) {
    std::vector<LimitLine> out;
    for (const auto& e : kLimitTable) {
        LimitLine l;
        l.label = e.label;
        l.plane = e.plane;
        l.form_text = e.form;
        Poly in_plane = specialize(parse_param_poly(e.form), p);
        l.line = Line3::from_forms(Poly::var(e.plane), in_plane);
        l.defining_points = {named_point(e.label[0], e.label[1] - '0', p), named_point(e.label[2], e.label[3] - '0', p)};
        out.push_back(std::move(l));
    }
    return out;
}

const std::vector<std::pair<std::string, std::string>>& cayley_limit_table() {
    static const std::vector<std::pair<std::string, std::string>> t = {
        {"a1", "B1C1"}, {"b1", "A1C1"}, {"c1", "A1B1"}, {"a2", "B3C3"}, {"b2", "A3C3"}, {"c2", "A3B3"},
        {"a3", "B2C2"}, {"b3", "A2C2"}, {"c3", "A2B2"}, {"a4", "B3C2"}, {"b4", "A2C3"}, {"c4", "A3B2"},
        {"a5", "B2C3"}, {"b5", "A3C2"}, {"c5", "A2B3"}, {"a6", "A2B1"}, {"b6", "B2C1"}, {"c6", "A1C2"},
        {"a7", "A2C1"}, {"b7", "A1B2"}, {"c7", "B1C2"}, {"a8", "A3C1"}, {"b8", "A1B3"}, {"c8", "B1C3"},
        {"a9", "A3B1"}, {"b9", "B3C1"}, {"c9", "A1C3"},
    };
    return t;
}

const std::vector<TritangentTriple>& tritangent_partition() {
    static const std::vector<TritangentTriple> t = {
        {"(w)", "(16)", {"a1", "b6", "c16"}},
        {"(theta)", "(12,34,56)", {"c12", "c34", "c56"}},
        {"(theta-bar)", "(52)", {"a5", "b2", "c25"}},
        {"(l-bar)", "(64)", {"a6", "b4", "c46"}},
        {"(m-bar)", "(15,24,36)", {"c15", "c24", "c36"}},
        {"(n-bar)", "(23)", {"a2", "b3", "c23"}},
        {"(l)", "(45)", {"a4", "b5", "c45"}},
        {"(m)", "(14,26,35)", {"c14", "c26", "c35"}},
        {"(n)", "(31)", {"a3", "b1", "c13"}},
    };
    return t;
}

std::vector<std::string> schlafli_labels() {
    std::vector<std::string> out;
    for (int i = 1; i <= 6; ++i) out.push_back("a" + std::to_string(i));
    for (int i = 1; i <= 6; ++i) out.push_back("b" + std::to_string(i));
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) out.push_back("c" + std::to_string(i) + std::to_string(j));
    return out;
}

Rational cross_ratio(const Point& p1, const Point& p2, const Point& p3, const Point& p4, bool second_chart) {
    const Point* pts[4] = {&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (same_point(*pts[i], *pts[j])) throw std::invalid_argument("cross_ratio: coincident points");
    linalg::Rows all;
    for (auto* p : pts) all.emplace_back(p->begin(), p->end());
    if (linalg::rank(all, 4) != 2) throw std::invalid_argument("cross_ratio: points are not collinear");
    const Point& u = second_chart ? p3 : p1;
    const Point& v = second_chart ? p4 : p2;
    // coordinates (alpha, beta) with p = alpha*u + beta*v
    auto coords = [&](const Point& p) {
        linalg::Rows sys;
        for (int i = 0; i < 4; ++i) sys.push_back({u[i], v[i], -p[i]});
        auto k = linalg::kernel(sys, 3);
        // one-dimensional; scale so the p-coefficient is 1
        const auto& s = k.at(0);
        return std::array<Rational, 2>{s[0] / s[2], s[1] / s[2]};
    };
    std::array<std::array<Rational, 2>, 4> z;
    for (int i = 0; i < 4; ++i) z[i] = coords(*pts[i]);
    auto det = [&](int i, int j) -> Rational { return z[i][0] * z[j][1] - z[j][0] * z[i][1]; };
    return (det(2, 0) * det(3, 1)) / (det(2, 1) * det(3, 0));
}

LCEntry lc_at_smooth_point(const std::vector<EpsValue>& coeffs) {
    LCEntry e;
    e.coefficients = coeffs;
    for (const auto& c : coeffs) e.sum += c;
    e.discrepancy = EpsValue(1) - e.sum;
    e.ok = e.sum <= EpsValue(2);
    for (const auto& c : coeffs)
        if (c > EpsValue(1)) {
            e.ok = false;
            e.note = "branch coefficient exceeds 1";
        }
    return e;
}

LCEntry lc_at_A1(const std::vector<EpsValue>& coeffs) {
    LCEntry e;
    e.coefficients = coeffs;
    e.singular = true;
    for (const auto& c : coeffs) e.sum += c;
    e.discrepancy = Rational(-1, 2) * e.sum;
    e.ok = e.sum <= EpsValue(2);
    for (const auto& c : coeffs)
        if (c > EpsValue(1)) {
            e.ok = false;
            e.note = "branch coefficient exceeds 1";
        }
    return e;
}

int PairConfig::multiplicity_sum() const {
    int s = 0;
    for (const auto& l : lines) s += l.multiplicity;
    return s;
}

std::map<int, int> PairConfig::multiplicity_census() const {
    std::map<int, int> c;
    for (const auto& l : lines) ++c[l.multiplicity];
    return c;
}

namespace {

struct Branch {
    std::string label;
    Line3 line;
    EpsValue coef;
};

void add_unique(std::vector<Point>& pts, const Point& p) {
    for (const auto& q : pts)
        if (same_point(p, q)) return;
    pts.push_back(normalize(p));
}

// lc entries at every point where two or more branches meet, plus the given extra points
std::vector<LCEntry> lc_entries(const std::vector<Branch>& branches, const std::vector<Point>& singular,
                                std::vector<Point> extra) {
    std::vector<Point> pts = std::move(extra);
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            if (branches[i].line.same_as(branches[j].line))
                throw std::invalid_argument("incidence data lists the line " + branches[i].label + " twice");
            auto x = intersect(branches[i].line, branches[j].line);
            if (x) add_unique(pts, *x);
        }
    std::vector<LCEntry> out;
    for (const auto& x : pts) {
        std::vector<EpsValue> coeffs;
        std::vector<std::string> names;
        for (const auto& b : branches)
            if (b.line.contains(x)) {
                coeffs.push_back(b.coef);
                names.push_back(b.label);
            }
        bool sing = false;
        for (const auto& s : singular)
            if (same_point(s, x)) sing = true;
        LCEntry e = sing ? lc_at_A1(coeffs) : lc_at_smooth_point(coeffs);
        e.point = x;
        e.branches = names;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const LCEntry& a, const LCEntry& b) { return a.point < b.point; });
    return out;
}

}  // namespace

StabilityReport check_stable_pair(const PairConfig& cfg) {
    StabilityReport r;
    const EpsValue c = cfg.coefficient;
    r.multiplicity_sum = cfg.multiplicity_sum();
    r.census_ok = r.multiplicity_sum == 27;
    if (!r.census_ok) r.failures.push_back("multiplicity sum " + std::to_string(r.multiplicity_sum) + " != 27");
    for (const auto& l : cfg.lines) {
        if (!l.line.consistent()) throw std::invalid_argument("inconsistent line data for " + l.label);
        if (l.multiplicity < 1) throw std::invalid_argument("non-positive multiplicity on " + l.label);
        if (!l.line.lies_on(cfg.surface)) throw std::invalid_argument("line " + l.label + " is not on the surface");
    }
    for (const auto& s : cfg.singular_points) {
        if (evaluate_form(cfg.surface, s) != 0) throw std::invalid_argument("singular point " + point_string(s) + " is not on the surface");
        if (!is_singular_point(cfg.surface, s)) throw std::invalid_argument("listed point " + point_string(s) + " is not singular");
    }

    if (cfg.kind == SurfaceKind::IrreducibleCubic) {
        std::vector<Branch> branches;
        for (const auto& l : cfg.lines) branches.push_back({l.label, l.line, Rational(l.multiplicity) * c});
        r.lc_points = lc_entries(branches, cfg.singular_points, cfg.singular_points);
        // B ~ (sum of multiplicities / 3) H, K ~ -H
        r.ampleness.push_back(Rational(r.multiplicity_sum) / 3 * c - EpsValue(1));
    } else {
        for (int a = 0; a < 3; ++a) {
            std::vector<Branch> branches;
            int sum = 0;
            for (const auto& l : cfg.lines) {
                if (l.plane != a) continue;
                if (evaluate_form(Poly::var(a), l.line.p) != 0 || evaluate_form(Poly::var(a), l.line.q) != 0)
                    throw std::invalid_argument("line " + l.label + " is not in its plane");
                branches.push_back({l.label, l.line, Rational(l.multiplicity) * c});
                sum += l.multiplicity;
            }
            for (int b = 0; b < 3; ++b) {
                if (b == a) continue;
                branches.push_back({"D" + std::to_string(a) + std::to_string(b),
                                    Line3::from_forms(Poly::var(a), Poly::var(b)), EpsValue(1)});
            }
            r.plane_sums.push_back(sum);
            if (sum != 9) {
                r.census_ok = false;
                r.failures.push_back("plane H" + std::to_string(a) + " carries multiplicity " + std::to_string(sum) + " != 9");
            }
            auto entries = lc_entries(branches, {}, {});
            int multiple = 0;
            for (const auto& e : entries)
                if (e.branches.size() >= 3) ++multiple;
            r.multiple_points.push_back(multiple);
            r.lc_points.insert(r.lc_points.end(), entries.begin(), entries.end());
            // K_H + D + c * sum(lines) ~ (-3 + 2 + c * sum) l
            r.ampleness.push_back(EpsValue(-1) + Rational(sum) * c);
        }
    }
    r.lc_ok = true;
    bool first = true;
    for (const auto& e : r.lc_points) {
        if (first || e.sum > r.worst_sum) r.worst_sum = e.sum;
        first = false;
        if (!e.ok) {
            r.lc_ok = false;
            r.failures.push_back("not log canonical at " + point_string(e.point) + " (sum " + exact::to_string(e.sum) +
                                 (e.note.empty() ? "" : ", " + e.note) + ")");
        }
    }
    r.ample_ok = true;
    for (const auto& a : r.ampleness)
        if (!(a > EpsValue(0))) {
            r.ample_ok = false;
            r.failures.push_back("log canonical divisor not ample (coefficient " + exact::to_string(a) + ")");
        }
    r.stable = r.census_ok && r.lc_ok && r.ample_ok;
    return r;
}

Poly cayley_cubic() { return poly::parse_poly("x0*x1*x2+x0*x1*x3+x0*x2*x3+x1*x2*x3"); }

namespace {

Ideal ideal_of(std::initializer_list<const char*> gens) {
    Ideal i;
    i.nvars = 4;
    for (const char* g : gens) i.generators.push_back(poly::parse_poly(g));
    return i;
}

}  // namespace

Ideal script_ideal_three_planes() {
    using poly::ideal_intersect;
    Ideal ia = ideal_intersect({ideal_of({"x0", "x3^4"}), ideal_of({"x1", "x3^4"}), ideal_of({"x2", "x3^4"})});
    Ideal ib = ideal_intersect({ideal_of({"x0", "x1+x2-x3"}), ideal_of({"x1", "x0+x2-x3"}), ideal_of({"x2", "x0+x1-x3"})});
    Ideal ic = ideal_intersect({ideal_of({"x0", "(x1-x3)^2"}), ideal_of({"x1", "(x2-x3)^2"}), ideal_of({"x2", "(x0-x3)^2"})});
    Ideal id = ideal_intersect({ideal_of({"x0", "(x2-x3)^2"}), ideal_of({"x1", "(x0-x3)^2"}), ideal_of({"x2", "(x1-x3)^2"})});
    return ideal_intersect({ia, ib, ic, id});
}

Ideal script_ideal_cayley() {
    using poly::ideal_intersect;
    using poly::ideal_sum;
    Ideal ih = ideal_intersect({ideal_of({"x0^2"}), ideal_of({"x1^2"}), ideal_of({"x2^2"}), ideal_of({"x3^2"})});
    Ideal is = ideal_of({"x0*x1*x2+x0*x1*x3+x0*x2*x3+x1*x2*x3"});
    Ideal idd = ideal_sum(is, ideal_of({"x0+x1+x2+x3"}));
    return ideal_intersect(ideal_sum(is, ih), idd);
}

Ideal config_ideal(const PairConfig& cfg) {
    if (cfg.stratum == Stratum::A1CubeN) return script_ideal_three_planes();
    if (cfg.stratum == Stratum::A1Four) return script_ideal_cayley();
    throw std::invalid_argument("config_ideal supports only the (A1^3,N) and A1^4 configurations, not " + stratum_name(cfg.stratum));
}

Ideal reduced_lines_ideal(const PairConfig& cfg) {
    std::vector<Ideal> parts;
    for (const auto& l : cfg.lines) {
        Ideal i;
        i.nvars = 4;
        i.generators = {l.line.form1, l.line.form2};
        parts.push_back(i);
    }
    return poly::ideal_intersect(parts);
}

Ideal weighted_lines_ideal(const PairConfig& cfg) {
    if (cfg.kind != SurfaceKind::ThreePlanes) throw std::invalid_argument("weighted_lines_ideal expects a three-plane configuration");
    std::vector<Ideal> parts;
    for (const auto& l : cfg.lines) {
        // in-plane form: whichever defining form is not the plane itself
        Poly plane = Poly::var(l.plane);
        Poly other = l.line.form1 == plane ? l.line.form2 : l.line.form1;
        // remove the plane variable from the in-plane form
        other = other - other.coefficient(poly::Monomial::var(l.plane)) * plane;
        Ideal i;
        i.nvars = 4;
        i.generators = {plane, other.pow(static_cast<unsigned>(l.multiplicity))};
        parts.push_back(i);
    }
    return poly::ideal_intersect(parts);
}


bool is_singular_point(const Poly& surface, const Point& x) {
    if (evaluate_form(surface, x) != 0) return false;
    for (int i = 0; i < 4; ++i)
        if (evaluate_form(surface.derivative(i), x) != 0) return false;
    return true;
}

int hessian_rank(const Poly& surface, const Point& x) {
    linalg::Rows h(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h[i][j] = evaluate_form(surface.derivative(i).derivative(j), x);
    return static_cast<int>(linalg::rank(h, 4));
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    exact::Integer n = v.get_num(), d = v.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Rational(exact::Integer(sqrt(n)), exact::Integer(sqrt(d)));
}

// rational roots [s:t] of a*s^2 + b*s*t + c*t^2, nullopt when identically zero
std::optional<std::vector<std::pair<Rational, Rational>>> binary_quadratic_roots(const Rational& a, const Rational& b,
                                                                                  const Rational& c) {
    std::vector<std::pair<Rational, Rational>> roots;
    if (a == 0 && b == 0 && c == 0) return std::nullopt;
    if (a == 0) {
        roots.push_back({1, 0});
        if (b != 0) roots.push_back({-c, b});
        return roots;
    }
    auto r = rational_sqrt(b * b - 4 * a * c);
    if (!r) return roots;
    roots.push_back({(-b + *r) / (2 * a), 1});
    if (*r != 0) roots.push_back({(-b - *r) / (2 * a), 1});
    return roots;
}

}  // namespace

std::vector<Point> singular_points_on_line(const Poly& surface, const Line3& line) {
    if (surface.total_degree() > 3) throw std::invalid_argument("singular_points_on_line supports surfaces of degree at most 3");
    auto at = [&](const Rational& s, const Rational& t) {
        Point x;
        for (int i = 0; i < 4; ++i) x[i] = s * line.p[i] + t * line.q[i];
        return x;
    };
    std::vector<Point> candidates;
    bool found_form = false;
    for (int k = 0; k < 4 && !found_form; ++k) {
        Poly g = surface.derivative(k);
        Rational a = evaluate_form(g, at(1, 0)), c = evaluate_form(g, at(0, 1));
        Rational b = evaluate_form(g, at(1, 1)) - a - c;
        auto roots = binary_quadratic_roots(a, b, c);
        if (!roots) continue;
        found_form = true;
        for (const auto& [s, t] : *roots) candidates.push_back(at(s, t));
    }
    if (!found_form) throw std::invalid_argument("surface is singular along the whole line");
    std::vector<Point> out;
    for (const auto& x : candidates)
        if (is_singular_point(surface, x)) add_unique(out, x);
    return out;
}

}  // namespace modcheck::cubic
