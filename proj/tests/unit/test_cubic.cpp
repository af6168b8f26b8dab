#include "modcheck/cubic.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace modcheck;
using namespace modcheck::cubic;
using poly::parse_poly;

namespace {

const NarukiParams kGeneric{2, 3, 5, 7};
const EpsValue kNinth{Rational(1, 9), 1};

Point pt(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

std::map<int, int> expected_census(Stratum s) {
    switch (s) {
        case Stratum::Smooth:
        case Stratum::N: return {{1, 27}};
        case Stratum::A1:
        case Stratum::A1N: return {{1, 15}, {2, 6}};
        case Stratum::A1Sq:
        case Stratum::A1SqN: return {{1, 7}, {2, 8}, {4, 1}};
        case Stratum::A1Cube:
        case Stratum::A1CubeN: return {{1, 3}, {2, 6}, {4, 3}};
        case Stratum::A1Four: return {{1, 3}, {4, 6}};
    }
    return {};
}

std::vector<std::pair<std::string, Point>> named_points(const NarukiParams& p) {
    std::vector<std::pair<std::string, Point>> out;
    for (int i = 1; i <= 3; ++i) out.emplace_back("A" + std::to_string(i), point_a(i, p));
    for (int i = 1; i <= 3; ++i) out.emplace_back("B" + std::to_string(i), point_b(i, p));
    for (int i = 1; i <= 3; ++i) out.emplace_back("C" + std::to_string(i), point_c(i, p));
    return out;
}

}  // namespace

TEST_SUITE("cubic") {

TEST_CASE("Naruki family") {
    CHECK(naruki_cubic({2, 3, 5, 0}) == parse_poly("x0*x1*x2"));
    // rho = 0 kills every other term identically in lambda, mu, nu
    std::vector<Poly> sub;
    for (int i = 0; i < 7; ++i) sub.push_back(Poly::var(i));
    sub.push_back(Poly());
    CHECK(naruki_cubic_symbolic().substitute(sub) == parse_poly("x0*x1*x2"));
    auto f = naruki_cubic(kGeneric);
    CHECK(f.is_homogeneous());
    CHECK(f.total_degree() == 3);
    CHECK(poly::jacobian_smoothness(f));
    CHECK(parse_param_poly("lambda*mu - rho") == parse_poly("x4*x5 - x7"));
}

TEST_CASE("tritangent limits") {
    CHECK(tritangent_limit(Tritangent::PComma, {2, 3, 5, 7}) == parse_poly("x0"));
    CHECK(tritangent_limit(Tritangent::Theta, {2, 3, 5, 7}) == parse_poly("2*x0 + 3*x1 + 5*x2 - x3"));
    NarukiParams p{2, 3, 5, 0};
    for (const auto& x : {point_b(3, p), point_c(3, p)}) {
        CHECK(evaluate_form(tritangent_limit(Tritangent::PComma, p), x) == 0);
        CHECK(evaluate_form(tritangent_limit(Tritangent::Theta, p), x) == 0);
    }
    CHECK(same_point(point_b(3, p), pt(0, 1, 0, 3)));
    CHECK(same_point(point_c(3, p), pt(0, 0, 1, 5)));
    CHECK(parse_tritangent("(θ)") == Tritangent::Theta);
    CHECK(parse_tritangent("(p,)") == Tritangent::PComma);
    CHECK_THROWS(parse_tritangent("(w)"));
}

TEST_CASE("Line3 basics") {
    auto l = Line3::from_forms(parse_poly("x0"), parse_poly("x3"));
    CHECK(l.consistent());
    CHECK(l.contains(pt(0, 1, 7, 0)));
    CHECK_FALSE(l.contains(pt(0, 1, 7, 1)));
    CHECK(l.same_as(Line3::through(pt(0, 1, 0, 0), pt(0, 1, 1, 0))));
    CHECK_THROWS(Line3::from_forms(parse_poly("x0"), parse_poly("2*x0")));
    CHECK_THROWS(Line3::through(pt(1, 2, 3, 4), pt(2, 4, 6, 8)));
    auto m = Line3::from_forms(parse_poly("x1"), parse_poly("x3"));
    auto x = intersect(l, m);
    REQUIRE(x);
    CHECK(same_point(*x, pt(0, 0, 1, 0)));
    CHECK_FALSE(intersect(l, Line3::from_forms(parse_poly("x1"), parse_poly("x2"))));
    CHECK_THROWS(intersect(l, l));
    CHECK(l.lies_on(parse_poly("x0*x1*x2 + x3^3")));
    CHECK_FALSE(l.lies_on(parse_poly("x1^3 + x0*x3^2")));
    CHECK(point_string(pt(2, 4, 0, -2)) == "[1:2:0:-1]");
    CHECK_THROWS(normalize(pt(0, 0, 0, 0)));
}

TEST_CASE("limit lines match the printed table") {
    NarukiParams p{2, 3, 5, 0};
    auto lines = limit_lines(p);
    REQUIRE(lines.size() == 27);
    std::map<std::string, const LimitLine*> by_label;
    for (const auto& l : lines) by_label[l.label] = &l;
    REQUIRE(by_label.count("B1C1"));
    CHECK(by_label["B1C1"]->plane == 0);
    CHECK(by_label["B1C1"]->line.same_as(Line3::from_forms(parse_poly("x0"), parse_poly("x3"))));
    REQUIRE(by_label.count("A3B3"));
    CHECK(by_label["A3B3"]->plane == 2);
    CHECK(by_label["A3B3"]->line.same_as(Line3::from_forms(parse_poly("x2"), parse_poly("-2*x0 - 3*x1 + x3"))));
    std::array<int, 3> per_plane{};
    for (const auto& l : lines) ++per_plane[l.plane];
    CHECK(per_plane == std::array<int, 3>{9, 9, 9});
}

TEST_CASE("limit lines contain exactly their two defining points") {
    std::mt19937_64 rng(59);
    std::vector<NarukiParams> params{{2, 3, 5, 0}};
    for (int k = 0; k < 6; ++k) {
        NarukiParams p;
        p.lambda = oracle::random_rational(rng, 9);
        p.mu = oracle::random_rational(rng, 9);
        p.nu = oracle::random_rational(rng, 9);
        if (p.lambda == 0 || p.mu == 0 || p.nu == 0 || p.lambda == 1 || p.mu == 1 || p.nu == 1) continue;
        params.push_back(p);
    }
    for (const auto& p : params) {
        auto lines = limit_lines(p);
        auto pts = named_points(p);
        for (const auto& l : lines) {
            CHECK(l.line.consistent());
            CHECK(evaluate_form(Poly::var(l.plane), l.line.p) == 0);
            CHECK(evaluate_form(Poly::var(l.plane), l.line.q) == 0);
            std::set<std::string> on;
            for (const auto& [name, x] : pts)
                if (l.line.contains(x)) on.insert(name);
            CHECK(on == std::set<std::string>{l.label.substr(0, 2), l.label.substr(2, 2)});
            for (const auto& d : l.defining_points) CHECK(l.line.contains(d));
        }
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                std::string shared;
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        if (lines[i].label.substr(2 * a, 2) == lines[j].label.substr(2 * b, 2)) shared = lines[i].label.substr(2 * a, 2);
                if (shared.empty() || lines[i].line.same_as(lines[j].line)) continue;
                auto x = intersect(lines[i].line, lines[j].line);
                REQUIRE(x);
                for (const auto& [name, y] : pts)
                    if (name == shared) CHECK(same_point(*x, y));
            }
    }
}

TEST_CASE("Cayley table and tritangent partition") {
    const auto& table = cayley_limit_table();
    CHECK(table.size() == 27);
    std::set<std::string> cay, lim;
    for (const auto& [c, l] : table) {
        cay.insert(c);
        lim.insert(l);
    }
    CHECK(cay.size() == 27);
    CHECK(lim.size() == 27);
    const auto& part = tritangent_partition();
    REQUIRE(part.size() == 9);
    CHECK(part[0].cayley == "(w)");
    CHECK(part[0].lines == std::array<std::string, 3>{"a1", "b6", "c16"});
    bool theta_found = false;
    std::multiset<std::string> all;
    for (const auto& t : part) {
        all.insert(t.lines.begin(), t.lines.end());
        if (t.cayley == "(theta)") {
            theta_found = true;
            CHECK(t.lines == std::array<std::string, 3>{"c12", "c34", "c56"});
        }
    }
    CHECK(theta_found);
    auto labels = schlafli_labels();
    CHECK(labels.size() == 27);
    CHECK(all == std::multiset<std::string>(labels.begin(), labels.end()));
}

TEST_CASE("Cayley cubic") {
    CHECK(cayley_cubic() == parse_poly("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3"));
    for (int i = 0; i < 4; ++i) {
        Point e{0, 0, 0, 0};
        e[i] = 1;
        CHECK(is_singular_point(cayley_cubic(), e));
        CHECK(hessian_rank(cayley_cubic(), e) == 3);
    }
    CHECK_FALSE(is_singular_point(cayley_cubic(), pt(1, 1, -1, 1)));
}

TEST_CASE("stratum names") {
    for (auto s : all_strata()) CHECK(parse_stratum(stratum_name(s)) == s);
    CHECK(all_strata().size() == 9);
    CHECK(parse_stratum("(A1^3,N)") == Stratum::A1CubeN);
    CHECK(parse_stratum("a1^2") == Stratum::A1Sq);
    CHECK(parse_stratum("smooth") == Stratum::Smooth);
    CHECK_THROWS_AS(parse_stratum("A1^5"), StratumError);
    CHECK(is_three_planes(Stratum::A1N));
    CHECK_FALSE(is_three_planes(Stratum::A1Four));
}

TEST_CASE("stratum configurations") {
    for (auto s : all_strata()) {
        CAPTURE(stratum_name(s));
        auto cfg = stratum_config(s);
        std::size_t distinct = 0;
        for (const auto& [mult, count] : expected_census(s)) distinct += count;
        CHECK(cfg.lines.size() == distinct);
        CHECK(cfg.multiplicity_sum() == 27);
        CHECK(cfg.multiplicity_census() == expected_census(s));
        for (const auto& l : cfg.lines) CHECK(l.line.lies_on(cfg.surface));
        for (const auto& x : cfg.singular_points) {
            CHECK(is_singular_point(cfg.surface, x));
            CHECK(hessian_rank(cfg.surface, x) == 3);
        }
        auto r = check_stable_pair(cfg);
        CHECK(r.stable);
        CHECK(r.failures.empty());
        if (is_three_planes(s)) {
            CHECK(cfg.kind == SurfaceKind::ThreePlanes);
            CHECK(r.plane_sums == std::vector<int>{9, 9, 9});
            REQUIRE(r.ampleness.size() == 3);
        } else {
            REQUIRE(r.ampleness.size() == 1);
        }
        for (const auto& a : r.ampleness) CHECK(a == EpsValue(0, 9));
    }
    auto a1cube_n = stratum_config(Stratum::A1CubeN);
    for (int plane = 0; plane < 3; ++plane) {
        std::multiset<int> m;
        for (const auto& l : a1cube_n.lines)
            if (l.plane == plane) m.insert(l.multiplicity);
        // merged labels carry their combined multiplicity
        int sum = 0;
        for (int v : m) sum += v;
        CHECK(sum == 9);
    }
    auto n = stratum_config(Stratum::N);
    for (std::size_t i = 0; i < n.lines.size(); ++i)
        for (std::size_t j = i + 1; j < n.lines.size(); ++j) CHECK_FALSE(n.lines[i].line.same_as(n.lines[j].line));
}

TEST_CASE("type N has six multiple points per plane for sampled parameters") {
    std::mt19937_64 rng(61);
    int tried = 0;
    while (tried < 5) {
        NarukiParams p{oracle::random_rational(rng, 7), oracle::random_rational(rng, 7), oracle::random_rational(rng, 7), 0};
        PairConfig cfg;
        try {
            cfg = stratum_config(Stratum::N, p);
        } catch (const StratumError&) {
            continue;
        }
        if (cfg.multiplicity_census() != expected_census(Stratum::N)) continue;  // coincident lines: not generic
        ++tried;
        auto r = check_stable_pair(cfg);
        CHECK(r.stable);
        CHECK(r.multiple_points == std::vector<int>{6, 6, 6});
    }
}

TEST_CASE("stratum parameter errors") {
    CHECK_THROWS_AS(stratum_config(Stratum::N, kGeneric), StratumError);
    CHECK_THROWS_AS(stratum_config(Stratum::N, {1, 3, 5, 0}), StratumError);
    CHECK_THROWS_AS(stratum_config(Stratum::A1N, {2, 3, 5, 0}), StratumError);
    CHECK_THROWS_AS(stratum_config(Stratum::A1, {2, 3, 5, 0}), StratumError);
    CHECK_THROWS_AS(stratum_config(Stratum::A1, {2, 3, 1, 1}), StratumError);
    CHECK_THROWS_AS(stratum_config(Stratum::A1Four, {2, 3, 5, 0}), StratumError);
    CHECK_THROWS_AS(smooth_config({Point2{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {1, 2, 3}, {1, -1, 2}}), StratumError);
}

TEST_CASE("blow-up model") {
    auto m = blow_up_model(default_six_points());
    CHECK(poly::jacobian_smoothness(m.surface));
    CHECK(m.lines.size() == 27);
    std::vector<Line3> ls;
    for (const auto& [name, l] : m.lines) {
        CHECK(l.lies_on(m.surface));
        ls.push_back(l);
    }
    // every line meets exactly ten others; 135 intersection points counted with repetition
    long pairs = 0;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        int meets = 0;
        for (std::size_t j = 0; j < ls.size(); ++j)
            if (i != j && intersect(ls[i], ls[j])) ++meets;
        CHECK(meets == 10);
        pairs += meets;
    }
    CHECK(pairs / 2 == 135);
    CHECK(intersect(m.lines.at("a1"), m.lines.at("b2")));
    CHECK_FALSE(intersect(m.lines.at("a1"), m.lines.at("b1")));
    CHECK(intersect(m.lines.at("a1"), m.lines.at("c12")));
    CHECK_FALSE(intersect(m.lines.at("a1"), m.lines.at("c23")));
}

TEST_CASE("log canonical examples") {
    auto e = lc_at_smooth_point({kNinth, kNinth, kNinth});
    CHECK(e.ok);
    CHECK(e.sum == EpsValue(Rational(1, 3), 3));
    CHECK(e.discrepancy == EpsValue(Rational(2, 3), -3));
    CHECK(lc_at_smooth_point({EpsValue(1), kNinth, kNinth, kNinth}).ok);
    e = lc_at_smooth_point({EpsValue(1), EpsValue(1), kNinth});
    CHECK_FALSE(e.ok);
    CHECK(e.sum == EpsValue(Rational(19, 9), 1));
    e = lc_at_A1(std::vector<EpsValue>(12, kNinth));
    CHECK(e.ok);
    CHECK(e.sum == EpsValue(Rational(4, 3), 12));
    e = lc_at_A1({EpsValue(1), EpsValue(1)});
    CHECK(e.ok);
    CHECK(e.discrepancy == EpsValue(-1));
    e = lc_at_smooth_point({EpsValue(1), EpsValue(1)});
    CHECK(e.ok);
    CHECK(e.discrepancy == EpsValue(-1));
    CHECK_FALSE(lc_at_A1(std::vector<EpsValue>(12, EpsValue(1))).ok);
}

TEST_CASE("coefficient boundaries") {
    auto smooth = stratum_config(Stratum::Smooth);
    smooth.coefficient = EpsValue(Rational(1, 9));
    auto r = check_stable_pair(smooth);
    CHECK_FALSE(r.stable);
    CHECK_FALSE(r.ample_ok);
    CHECK(r.lc_ok);
    auto a1 = stratum_config(Stratum::A1);
    a1.coefficient = EpsValue(1);
    r = check_stable_pair(a1);
    CHECK_FALSE(r.lc_ok);
    bool node_fails = false;
    for (const auto& e : r.lc_points)
        if (e.singular && !e.ok && e.sum == EpsValue(12)) node_fails = true;
    CHECK(node_fails);
}

TEST_CASE("raising any multiplicity breaks log canonicity") {
    for (auto s : all_strata()) {
        auto base = stratum_config(s);
        for (std::size_t i = 0; i < base.lines.size(); ++i) {
            auto cfg = base;
            cfg.lines[i].multiplicity = 18;
            auto r = check_stable_pair(cfg);
            CHECK_FALSE(r.lc_ok);
            CHECK_FALSE(r.stable);
        }
    }
}

TEST_CASE("flatness ideals") {
    auto a1cube_n = stratum_config(Stratum::A1CubeN);
    poly::MonomialOrder ord{poly::OrderKind::Grevlex, 4};
    CHECK(poly::same_ideal(poly::buchberger(config_ideal(a1cube_n), ord), poly::buchberger(script_ideal_three_planes(), ord)));
    CHECK(poly::same_ideal(poly::buchberger(weighted_lines_ideal(a1cube_n), ord),
                           poly::buchberger(script_ideal_three_planes(), ord)));
    CHECK(poly::same_ideal(poly::buchberger(config_ideal(stratum_config(Stratum::A1Four)), ord),
                           poly::buchberger(script_ideal_cayley(), ord)));
    CHECK_THROWS_AS(config_ideal(stratum_config(Stratum::Smooth)), std::invalid_argument);
    // 27 reduced lines with 135 incidences: 27m + 27 - 135
    auto h = poly::hilbert_polynomial(reduced_lines_ideal(stratum_config(Stratum::Smooth)));
    CHECK(poly::to_string(h.polynomial) == "27m-108");
}

TEST_CASE("cross-ratio") {
    Rational t(7, 3);
    Point zero = pt(1, 0, 0, 0), inf = pt(0, 1, 0, 0), one = pt(1, 1, 0, 0), at_t{1, t, 0, 0};
    CHECK(cross_ratio(zero, inf, one, at_t) == 1 / t);
    CHECK(cross_ratio(zero, inf, one, at_t, true) == 1 / t);
    for (long nu = 2; nu < 12; ++nu) {
        Point a = pt(0, 1, 0, 0), b = pt(0, 0, 1, 0), c = pt(0, -1, 1, 0), d = pt(0, -nu, 1, 0);
        CHECK(cross_ratio(a, b, c, d) == Rational(nu));
    }
    CHECK(cross_ratio(pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, -1, 1, 0), pt(0, -3, 1, 0)) !=
          cross_ratio(pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, -1, 1, 0), pt(0, -5, 1, 0)));
    CHECK_THROWS(cross_ratio(zero, inf, one, pt(0, 0, 0, 1)));
    CHECK_THROWS(cross_ratio(zero, zero, one, at_t));
}

TEST_CASE("cross-ratio is projectively invariant") {
    std::mt19937_64 rng(67);
    for (int k = 0; k < 30; ++k) {
        Point p1 = pt(1, 2, 0, -1), p2 = pt(0, 1, 3, 1);
        auto comb = [&](const Rational& s, const Rational& u) -> Point {
            Point r;
            for (int i = 0; i < 4; ++i) r[i] = s * p1[i] + u * p2[i];
            return r;
        };
        Rational s3 = oracle::random_rational(rng, 9), s4 = oracle::random_rational(rng, 9);
        if (s3 == 0 || s4 == 0 || s3 == s4) continue;
        std::array<Point, 4> q{p1, p2, comb(1, s3), comb(1, s4)};
        Rational base = cross_ratio(q[0], q[1], q[2], q[3]);
        CHECK(cross_ratio(q[0], q[1], q[2], q[3], true) == base);
        // random invertible map and random rescaling of representatives
        std::array<std::array<Rational, 4>, 4> g{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g[i][j] = i == j ? Rational(1 + k % 3) : (j > i ? oracle::random_rational(rng, 5) : Rational(0));
        std::array<Point, 4> img;
        for (int v = 0; v < 4; ++v) {
            Rational scale = oracle::random_rational(rng, 5);
            if (scale == 0) scale = 2;
            for (int i = 0; i < 4; ++i) {
                Rational acc = 0;
                for (int j = 0; j < 4; ++j) acc += g[i][j] * q[v][j];
                img[v][i] = scale * acc;
            }
        }
        CHECK(cross_ratio(img[0], img[1], img[2], img[3]) == base);
    }
}

TEST_CASE("singular points on lines") {
    auto cfg = stratum_config(Stratum::A1Four);
    auto e01 = Line3::through(pt(1, 0, 0, 0), pt(0, 1, 0, 0));
    auto sing = singular_points_on_line(cayley_cubic(), e01);
    CHECK(sing.size() == 2);
    auto smooth_line = Line3::from_forms(parse_poly("x0 + x1"), parse_poly("x2 + x3"));
    CHECK(smooth_line.lies_on(cayley_cubic()));
    CHECK(singular_points_on_line(cayley_cubic(), smooth_line).empty());
    CHECK_THROWS(singular_points_on_line(parse_poly("x0^2*x1"), Line3::from_forms(parse_poly("x0"), parse_poly("x2"))));
    CHECK(cfg.singular_points.size() == 4);
}

}
