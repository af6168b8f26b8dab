#include "modcheck/report.hpp"

#include "modcheck/dm.hpp"
#include "modcheck/hassett.hpp"
#include "modcheck/lattice.hpp"

#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace modcheck::report {

using exact::EpsValue;
using exact::Rational;
using nlohmann::json;

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

std::string Report::to_json(bool with_timing) const {
    json j;
    j["schema"] = "1";
    j["suite"] = suite;
    j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skip", count(Status::Skip)}};
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"id", c.id}, {"description", c.description}, {"status", status_name(c.status)}, {"detail", c.detail}});
    j["checks"] = arr;
    if (with_timing) {
        json t = json::object();
        for (const auto& c : checks) t[c.id] = c.seconds;
        j["timing"] = t;
    }
    return j.dump(2) + "\n";
}

namespace {

std::string md_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += "\\|";
        else if (ch == '\n') out += "<br>";
        else out += ch;
    }
    return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Weight-system tables laid out as printed: weights, m, verdict, match.
std::string dm_markdown(const Report& rep) {
    std::map<std::string, const Check*> by_id;
    for (const auto& c : rep.checks) by_id[c.id] = &c;
    std::ostringstream out;
    const auto& rows = dm::builtin_tables();
    for (auto ring : {dm::Ring::Eisenstein, dm::Ring::Gaussian}) {
        out << "\n### " << dm::ring_name(ring) << " weight systems\n\n";
        out << "| Weights | m | Verdict | Match |\n|---|---|---|---|\n";
        int idx = 0;
        for (const auto& row : rows) {
            if (row.ring != ring) continue;
            ++idx;
            char id[64];
            std::snprintf(id, sizeof id, "dm-tables/%s-%02d", dm::ring_name(ring).c_str(), idx);
            auto it = by_id.find(id);
            if (it == by_id.end()) continue;
            std::string m = row.expected.verdict == dm::Verdict::SigmaInt ? std::to_string(row.expected.m) : "";
            out << "| " << md_escape(row.notation) << " | " << m << " | " << md_escape(it->second->detail) << " | "
                << status_name(it->second->status) << " |\n";
        }
    }
    return out.str();
}

}  // namespace

std::string Report::to_markdown() const {
    std::ostringstream out;
    out << "# modcheck report: " << suite << "\n\n";
    out << "schema 1; " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, " << count(Status::Skip)
        << " skip\n\n";
    out << "| Check | Description | Status | Detail |\n|---|---|---|---|\n";
    for (const auto& c : checks)
        out << "| " << c.id << " | " << md_escape(c.description) << " | " << status_name(c.status) << " | "
            << md_escape(c.detail) << " |\n";
    bool has_dm = std::any_of(checks.begin(), checks.end(), [](const Check& c) { return starts_with(c.id, "dm-tables/"); });
    if (has_dm) out << dm_markdown(*this);
    return out.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"dm-tables", "hassett-strata", "cubic-pairs", "hilbert-flatness", "lattice"};
    return names;
}

namespace {

using Outcome = std::pair<Status, std::string>;

Outcome verdict(bool ok, std::string detail) { return {ok ? Status::Pass : Status::Fail, std::move(detail)}; }

std::string pad2(int k) {
    std::string s = std::to_string(k);
    return s.size() < 2 ? "0" + s : s;
}

// ---- dm-tables ----

std::vector<CheckSpec> dm_checks() {
    std::vector<CheckSpec> out;
    std::map<dm::Ring, int> idx;
    for (const auto& row : dm::builtin_tables()) {
        int k = ++idx[row.ring];
        const dm::TableRow* r = &row;
        out.push_back({"dm-tables/" + dm::ring_name(row.ring) + "-" + pad2(k),
                       "classify " + row.notation + " (expected " + dm::verdict_string(row.expected) + ")", [r] {
                           auto got = dm::classify(r->weights);
                           bool ok = got.verdict == r->expected.verdict && got.m == r->expected.m;
                           return verdict(ok, dm::verdict_string(got));
                       }});
    }
    out.push_back({"dm-tables/summary", "all table rows reproduce verdict, m and row constraints", [] {
                       auto rep = dm::verify_tables();
                       return verdict(rep.all_match(), std::to_string(rep.matches) + "/" + std::to_string(rep.rows.size()) +
                                                           " rows match");
                   }});
    return out;
}

// ---- hassett-strata ----

std::vector<CheckSpec> hassett_checks(const RunOptions& opts) {
    using namespace hassett;
    std::vector<CheckSpec> out;
    const int n = opts.n;
    out.push_back({"hassett-strata/census", "codimension-one strata for n = " + std::to_string(n) + " uniform weights", [n] {
                       auto c = codim1_strata_census(n);
                       std::string d = "typeA=" + std::to_string(c.type_a) + ", typeB=" + std::to_string(c.type_b);
                       if (n == 8) return verdict(c.type_a == 28 && c.type_b == 35, d);
                       exact::Integer a, b;
                       mpz_bin_uiui(a.get_mpz_t(), n, 2);
                       mpz_bin_uiui(b.get_mpz_t(), n, n / 2);
                       return verdict(a == c.type_a && b / 2 == c.type_b, d);
                   }});
    const auto w = uniform_weights(8, Rational(1, 4), 1);
    const auto ones = uniform_weights(8, 1, 0);
    out.push_back({"hassett-strata/tail-3-5", "3-point tail contracts under (1/4+eps)^8", [w, ones] {
                       auto cfg = parse_config("A B A-B {1}@A 2@A 3@A 4@B 5@B 6@B 7@B 8@B");
                       auto v = is_weighted_stable(cfg, w);
                       bool underweight = !v.ok && v.violations.size() == 1 &&
                                          v.violations[0].kind == ViolationKind::ComponentUnderweight &&
                                          v.violations[0].location == "A";
                       auto img = reduction_image(cfg, ones, w);
                       auto classes = img.coincidence_classes();
                       bool merged = img.components.size() == 1 &&
                                     std::find(classes.begin(), classes.end(), std::vector<int>{1, 2, 3}) != classes.end();
                       std::string d = "tail weight " + exact::to_string(v.ok ? EpsValue() : v.violations[0].value) +
                                       "; image " + format_config(img);
                       return verdict(is_weighted_stable(cfg, ones).ok && underweight && merged, d);
                   }});
    out.push_back({"hassett-strata/split-4-4", "4+4 splitting is stable under (1/4+eps)^8", [w] {
                       auto cfg = parse_config("A B A-B 1@A 2@A 3@A 4@A 5@B 6@B 7@B 8@B");
                       return verdict(is_weighted_stable(cfg, w).ok, "each side 2+4eps");
                   }});
    out.push_back({"hassett-strata/collide-4", "four coincident points are forbidden under (1/4+eps)^8", [w] {
                       auto cfg = parse_config("A {1,2,3,4}@A 5@A 6@A 7@A 8@A");
                       auto v = is_weighted_stable(cfg, w);
                       bool ok = !v.ok && v.violations[0].kind == ViolationKind::CoincidenceOverweight;
                       return verdict(ok, ok ? "class weight " + exact::to_string(v.violations[0].value) : "accepted");
                   }});
    out.push_back({"hassett-strata/semistable-4-4", "contracting either side of a 4+4 splitting fails", [w] {
                       auto cfg = parse_config("A B A-B 1@A 2@A 3@A 4@A 5@B 6@B 7@B 8@B");
                       int failures = 0;
                       for (int side = 0; side < 2; ++side) {
                           try {
                               contract_tail(cfg, side, w);
                           } catch (const ReductionError& e) {
                               if (e.kind() == ReductionFailure::CoincidenceOverweight) ++failures;
                           }
                       }
                       bool limit_fails = false;
                       try {
                           reduction_image(cfg, w, uniform_weights(8, Rational(1, 4), 0));
                       } catch (const ReductionError&) {
                           limit_fails = true;
                       }
                       return verdict(failures == 2 && limit_fails,
                                      std::to_string(failures) + "/2 contractions rejected; limit weights " +
                                          (limit_fails ? "rejected" : "accepted"));
                   }});
    return out;
}

// ---- cubic-pairs ----

std::string census_string(const cubic::PairConfig& cfg) {
    std::string s;
    auto c = cfg.multiplicity_census();
    for (auto it = c.rbegin(); it != c.rend(); ++it) s += (s.empty() ? "" : " + ") + std::to_string(it->second) + "x" + std::to_string(it->first);
    return s;
}

const std::map<cubic::Stratum, std::map<int, int>>& expected_census() {
    using cubic::Stratum;
    static const std::map<Stratum, std::map<int, int>> m = {
        {Stratum::Smooth, {{1, 27}}},
        {Stratum::A1, {{2, 6}, {1, 15}}},
        {Stratum::A1Sq, {{4, 1}, {2, 8}, {1, 7}}},
        {Stratum::A1Cube, {{4, 3}, {2, 6}, {1, 3}}},
        {Stratum::A1Four, {{4, 6}, {1, 3}}},
        {Stratum::N, {{1, 27}}},
        {Stratum::A1N, {{2, 6}, {1, 15}}},
        {Stratum::A1SqN, {{4, 1}, {2, 8}, {1, 7}}},
        {Stratum::A1CubeN, {{4, 3}, {2, 6}, {1, 3}}},
    };
    return m;
}

std::vector<cubic::Point> b1c1_points(const Rational& nu) {
    using namespace cubic;
    NarukiParams p{2, 3, nu, 0};
    std::map<std::string, Line3> lines;
    for (const auto& l : limit_lines(p)) lines.emplace(l.label, l.line);
    std::vector<Point> pts;
    for (const char* other : {"B1C2", "B2C1", "B2C2", "B2C3"}) pts.push_back(*intersect(lines.at("B1C1"), lines.at(other)));
    return pts;
}

std::vector<CheckSpec> cubic_checks(const RunOptions& opts) {
    using namespace cubic;
    std::vector<CheckSpec> out;
    const bool eps = opts.epsilon_report;
    int k = 0;
    for (Stratum s : all_strata()) {
        ++k;
        out.push_back({"cubic-pairs/stratum-" + pad2(k) + "-" + stratum_name(s),
                       "stable pair with coefficient 1/9+eps on " + stratum_name(s), [s, eps] {
                           auto cfg = stratum_config(s);
                           auto r = check_stable_pair(cfg);
                           bool census = cfg.multiplicity_census() == expected_census().at(s);
                           std::string d = (r.stable ? std::string("stable; ") : "unstable; ") + census_string(cfg);
                           if (eps) {
                               d += "; worst point sum " + exact::to_string(r.worst_sum) + "; ampleness";
                               for (const auto& a : r.ampleness) d += " " + exact::to_string(a);
                           } else {
                               d += "; worst point sum " + exact::to_string(r.worst_sum.c);
                           }
                           for (const auto& f : r.failures) d += "; " + f;
                           bool ample9 = std::all_of(r.ampleness.begin(), r.ampleness.end(),
                                                     [](const EpsValue& a) { return a == EpsValue(0, 9); });
                           return verdict(r.stable && census && ample9 && r.worst_sum <= EpsValue(2), d);
                       }});
        out.push_back({"cubic-pairs/mutation-" + pad2(k) + "-" + stratum_name(s),
                       "raising one multiplicity past a point sum of 2 breaks stability on " + stratum_name(s), [s] {
                           auto cfg = stratum_config(s);
                           int flipped = 0;
                           for (std::size_t i = 0; i < cfg.lines.size(); ++i) {
                               auto bad = cfg;
                               bad.lines[i].multiplicity = 18;
                               auto r = check_stable_pair(bad);
                               if (!r.stable && !r.lc_ok) ++flipped;
                           }
                           return verdict(flipped == static_cast<int>(cfg.lines.size()),
                                          std::to_string(flipped) + "/" + std::to_string(cfg.lines.size()) + " mutations flip");
                       }});
    }
    out.push_back({"cubic-pairs/coefficient-smooth-1-9", "c = 1/9 exactly is not ample on the smooth pair", [] {
                       auto cfg = stratum_config(Stratum::Smooth);
                       cfg.coefficient = EpsValue(Rational(1, 9));
                       auto r = check_stable_pair(cfg);
                       return verdict(!r.stable && !r.ample_ok, "ampleness " + exact::to_string(r.ampleness.at(0)));
                   }});
    out.push_back({"cubic-pairs/coefficient-A1-one", "c = 1 is not log canonical at the node", [] {
                       auto cfg = stratum_config(Stratum::A1);
                       cfg.coefficient = EpsValue(1);
                       auto r = check_stable_pair(cfg);
                       EpsValue node_sum;
                       for (const auto& e : r.lc_points)
                           if (e.singular) node_sum = e.sum;
                       return verdict(!r.lc_ok && node_sum == EpsValue(12), "sum at node " + exact::to_string(node_sum));
                   }});
    out.push_back({"cubic-pairs/naruki-rho0", "the family at rho = 0 is x0*x1*x2", [] {
                       std::vector<Poly> vals;
                       for (int i = 0; i < 7; ++i) vals.push_back(Poly::var(i));
                       vals.push_back(Poly(0));
                       Poly f = naruki_cubic_symbolic().substitute(vals);
                       return verdict(f == poly::parse_poly("x0*x1*x2"), poly::to_string(f));
                   }});
    out.push_back({"cubic-pairs/tritangent-limits", "(p,) -> x0 and (theta) -> lambda x0 + mu x1 + nu x2 - x3", [] {
                       std::vector<Poly> vals;
                       for (int i = 0; i < 7; ++i) vals.push_back(Poly::var(i));
                       vals.push_back(Poly(0));
                       Poly p = tritangent_symbolic(Tritangent::PComma).substitute(vals);
                       Poly t = tritangent_symbolic(Tritangent::Theta).substitute(vals);
                       bool ok = p == Poly::var(0) && t == parse_param_poly("lambda*x0 + mu*x1 + nu*x2 - x3");
                       return verdict(ok, "(p,) -> " + poly::to_string(p) + "; (theta) -> " + poly::to_string(t));
                   }});
    out.push_back({"cubic-pairs/limit-lines", "each limit line contains exactly its two defining points", [] {
                       NarukiParams p{2, 3, 5, 0};
                       std::vector<Point> all;
                       for (int i = 1; i <= 3; ++i) {
                           all.push_back(point_a(i, p));
                           all.push_back(point_b(i, p));
                           all.push_back(point_c(i, p));
                       }
                       int good = 0;
                       auto lines = limit_lines(p);
                       for (const auto& l : lines) {
                           int on = 0;
                           for (const auto& x : all) on += l.line.contains(x);
                           if (on == 2 && l.line.contains(l.defining_points[0]) && l.line.contains(l.defining_points[1])) ++good;
                       }
                       return verdict(good == 27, std::to_string(good) + "/27 lines");
                   }});
    out.push_back({"cubic-pairs/cayley-table", "Cayley labels map bijectively onto limit lines; (p,) and (theta) limits are planar", [] {
                       NarukiParams p{2, 3, 5, 0};
                       std::map<std::string, Line3> lines;
                       for (const auto& l : limit_lines(p)) lines.emplace(l.label, l.line);
                       std::map<std::string, std::string> table(cayley_limit_table().begin(), cayley_limit_table().end());
                       std::set<std::string> images;
                       for (const auto& [c, l] : table) images.insert(l);
                       bool bijective = table.size() == 27 && images.size() == 27 &&
                                        std::all_of(images.begin(), images.end(), [&](const std::string& l) { return lines.count(l) == 1; });
                       auto in_plane = [&](const Poly& plane, std::initializer_list<const char*> labels) {
                           for (const char* lab : labels) {
                               const auto& l = lines.at(table.at(lab));
                               if (evaluate_form(plane, l.p) != 0 || evaluate_form(plane, l.q) != 0) return false;
                           }
                           return true;
                       };
                       bool pc = in_plane(tritangent_limit(Tritangent::PComma, p), {"a2", "b6", "c7"});
                       bool th = in_plane(tritangent_limit(Tritangent::Theta, p), {"a2", "b2", "c2"});
                       return verdict(bijective && pc && th, std::string("bijection ") + (bijective ? "yes" : "no") +
                                                                 ", (p,) " + (pc ? "planar" : "not planar") + ", (theta) " +
                                                                 (th ? "planar" : "not planar"));
                   }});
    out.push_back({"cubic-pairs/tritangent-partition", "nine tritangents cover the 27 lines once", [] {
                       std::multiset<std::string> seen;
                       for (const auto& t : tritangent_partition()) seen.insert(t.lines.begin(), t.lines.end());
                       auto labels = schlafli_labels();
                       bool ok = seen.size() == 27 &&
                                 std::all_of(labels.begin(), labels.end(), [&](const std::string& l) { return seen.count(l) == 1; });
                       return verdict(ok, std::to_string(seen.size()) + " labels");
                   }});
    out.push_back({"cubic-pairs/generic-smooth", "the family member at (2,3,5,7) is smooth", [] {
                       bool ok = poly::jacobian_smoothness(naruki_cubic({2, 3, 5, 7}));
                       return verdict(ok, ok ? "Jacobian ideal is irrelevant" : "singular");
                   }});
    const auto seed = opts.seed;
    out.push_back({"cubic-pairs/cross-ratio", "cross-ratios on B1C1 separate distinct nu", [seed] {
                       std::mt19937_64 rng(seed);
                       std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
                       int distinct = 0, pairs = 0;
                       while (pairs < 10) {
                           Rational a(num(rng), den(rng)), b(num(rng), den(rng));
                           a.canonicalize();
                           b.canonicalize();
                           if (a == b || a == 0 || a == 1 || b == 0 || b == 1) continue;
                           ++pairs;
                           auto pa = b1c1_points(a), pb = b1c1_points(b);
                           if (cross_ratio(pa[0], pa[1], pa[2], pa[3]) != cross_ratio(pb[0], pb[1], pb[2], pb[3])) ++distinct;
                       }
                       return verdict(distinct == 10, std::to_string(distinct) + "/10 pairs separated");
                   }});
    return out;
}

// ---- hilbert-flatness ----

std::vector<CheckSpec> hilbert_checks(const RunOptions& opts) {
    std::vector<CheckSpec> out;
    poly::HilbertOptions ho;
    ho.degree_bound = opts.degree_bound;
    const poly::UniPoly target{{-108, 27}};
    auto describe = [](const poly::HilbertResult& h) {
        return poly::to_string(h.polynomial) + " (stable from " + std::to_string(h.stable_from) + ", checked through " +
               std::to_string(h.checked_through) + ")";
    };
    out.push_back({"hilbert-flatness/three-planes", "Hilbert polynomial of the (A1^3,N) limit lines", [ho, target, describe] {
                       auto h = poly::hilbert_polynomial(cubic::script_ideal_three_planes(), ho);
                       return verdict(h.polynomial == target, describe(h));
                   }});
    out.push_back({"hilbert-flatness/cayley", "Hilbert polynomial of the Cayley configuration", [ho, target, describe] {
                       auto h = poly::hilbert_polynomial(cubic::script_ideal_cayley(), ho);
                       return verdict(h.polynomial == target, describe(h));
                   }});
    out.push_back({"hilbert-flatness/smooth-lines", "Hilbert polynomial of the 27 lines on the smooth cubic", [ho, target, describe] {
                       auto h = poly::hilbert_polynomial(cubic::reduced_lines_ideal(cubic::stratum_config(cubic::Stratum::Smooth)), ho);
                       return verdict(h.polynomial == target, describe(h));
                   }});
    out.push_back({"hilbert-flatness/weighted-lines", "weighted line ideal of (A1^3,N) equals the scripted ideal", [] {
                       poly::MonomialOrder ord{poly::OrderKind::Grevlex, 4};
                       auto a = poly::buchberger(cubic::weighted_lines_ideal(cubic::stratum_config(cubic::Stratum::A1CubeN)), ord);
                       auto b = poly::buchberger(cubic::script_ideal_three_planes(), ord);
                       bool same = poly::same_ideal(a, b);
                       return verdict(same, same ? "same reduced basis (" + std::to_string(a.basis.size()) + " elements)"
                                                 : "ideals differ");
                   }});
    return out;
}

// ---- lattice ----

std::vector<CheckSpec> lattice_checks() {
    using namespace lattice;
    std::vector<CheckSpec> out;
    auto sig_text = [](const Signature& s) {
        return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
    };
    out.push_back({"lattice/dm-form-signature", "the period form has one eigenvalue of one sign and five of the other", [sig_text] {
                       auto s = signature(dm_form_h());
                       bool ok = s.zero == 0 && std::min(s.positive, s.negative) == 1 && std::max(s.positive, s.negative) == 5;
                       return verdict(ok && is_hermitian(dm_form_h()), "signature (pos,neg,zero) = " + sig_text(s));
                   }});
    out.push_back({"lattice/prym-form", "the Prym form is definite with |det| = 2", [sig_text] {
                       auto h = prym_form();
                       auto s = signature(h);
                       auto det = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
                       bool definite = s.zero == 0 && (s.positive == 0 || s.negative == 0);
                       bool ok = definite && det.im == 0 && abs(det.re) == 2;
                       return verdict(ok, "signature " + sig_text(s) + ", det " + exact::to_string(det));
                   }});
    out.push_back({"lattice/intersection-matrix", "the 4x4 intersection form is skew, rho-invariant and induces the Prym form", [] {
                       auto q = intersection_skew();
                       bool ok = is_skew(q) && rho_invariant(q) && hermitian_from_skew(q) == prym_form();
                       bool printed = is_skew(intersection_skew_as_printed());
                       return verdict(ok, std::string(ok ? "skew, invariant, matches" : "mismatch") +
                                              "; printed entry (1,2) = -1 is " + (printed ? "skew" : "not skew"));
                   }});
    out.push_back({"lattice/reflection-group", "alpha, beta, gamma generate a group of order 16 containing {+-I, +-iI}", [] {
                       std::vector<GaussMatrix> gens{reflection_alpha(), reflection_beta(), reflection_gamma()};
                       auto g = generate_group(gens, 1000);
                       auto id = GaussMatrix::identity(2);
                       auto i = id.scaled(GaussianInt::unit_i());
                       bool scalars = g.contains(id) && g.contains(-id) && g.contains(i) && g.contains(-i);
                       bool involutions = true, preserve = true;
                       for (const auto& x : gens) {
                           involutions = involutions && x * x == id && (-x) * (-x) == id;
                           preserve = preserve && preserves_form(x, prym_form(), FormAction::Row);
                       }
                       std::string census;
                       for (const auto& [ord, cnt] : g.order_census) census += " " + std::to_string(ord) + ":" + std::to_string(cnt);
                       bool ok = g.order() == 16 && scalars && involutions && preserve;
                       return verdict(ok, "order " + std::to_string(g.order()) + ", orders" + census + ", center " +
                                              std::to_string(g.center_size));
                   }});
    out.push_back({"lattice/triflections", "triflections have order 3 and preserve their form", [] {
                       using exact::EisensteinInt;
                       EisMatrix form{{EisensteinInt{1, 0}, EisensteinInt{0, 0}}, {EisensteinInt{0, 0}, EisensteinInt{-1, 0}}};
                       const EisensteinInt theta{1, 2};
                       std::vector<std::vector<EisensteinInt>> roots{{EisensteinInt{-3, 0}, theta + theta}, {EisensteinInt{0, 0}, theta}};
                       int good = 0;
                       for (const auto& r : roots) {
                           auto t = triflection(r, form);
                           if (element_order(t) == 3 && preserves_form(t, form)) ++good;
                       }
                       return verdict(good == 2, std::to_string(good) + "/2 fixtures");
                   }});
    return out;
}

}  // namespace

std::vector<CheckSpec> suite_checks(const std::string& suite, const RunOptions& opts) {
    if (suite == "dm-tables") return dm_checks();
    if (suite == "hassett-strata") return hassett_checks(opts);
    if (suite == "cubic-pairs") return cubic_checks(opts);
    if (suite == "hilbert-flatness") return hilbert_checks(opts);
    if (suite == "lattice") return lattice_checks();
    if (suite == "all") {
        std::vector<CheckSpec> all;
        for (const auto& s : suite_names()) {
            auto part = suite_checks(s, opts);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    std::string known;
    for (const auto& s : suite_names()) known += s + ", ";
    throw UnknownSuite("unknown suite '" + suite + "' (expected " + known + "all)");
}

Report run(const std::string& suite, const RunOptions& opts) {
    if (opts.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
    auto specs = suite_checks(suite, opts);
    Report rep;
    rep.suite = suite;
    rep.checks.resize(specs.size());
    const long count = static_cast<long>(specs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.jobs)
    for (long i = 0; i < count; ++i) {
        Check& c = rep.checks[i];
        c.id = specs[i].id;
        c.description = specs[i].description;
        auto start = std::chrono::steady_clock::now();
        try {
            auto [status, detail] = specs[i].body();
            c.status = status;
            c.detail = detail;
        } catch (const std::exception& e) {
            c.status = Status::Fail;
            c.detail = std::string("error: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    std::sort(rep.checks.begin(), rep.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return rep;
}

std::string pair_json(const cubic::PairConfig& cfg, const cubic::StabilityReport& r, bool epsilon_report) {
    auto ev = [&](const EpsValue& v) -> json {
        if (epsilon_report) return {{"constant", exact::to_string(v.c)}, {"eps", exact::to_string(v.e)}};
        return exact::to_string(v.c);
    };
    json j;
    j["stratum"] = cubic::stratum_name(cfg.stratum);
    json census = json::object();
    for (const auto& [m, c] : cfg.multiplicity_census()) census[std::to_string(m)] = c;
    j["census"] = census;
    j["multiplicity_sum"] = r.multiplicity_sum;
    json pts = json::array();
    for (const auto& e : r.lc_points) {
        json p;
        p["point"] = cubic::point_string(e.point);
        p["branches"] = e.branches;
        p["sum"] = ev(e.sum);
        p["discrepancy"] = ev(e.discrepancy);
        p["singular"] = e.singular;
        p["ok"] = e.ok;
        pts.push_back(p);
    }
    j["lc_points"] = pts;
    json amp = json::array();
    for (const auto& a : r.ampleness) amp.push_back(ev(a));
    j["ampleness"] = amp;
    if (!r.plane_sums.empty()) j["plane_sums"] = r.plane_sums;
    j["stable"] = r.stable;
    j["failures"] = r.failures;
    return j.dump(2) + "\n";
}

std::string incidence_ascii(const cubic::PairConfig& cfg) {
    std::ostringstream out;
    out << cubic::stratum_name(cfg.stratum) << ": " << poly::to_string(cfg.surface) << " = 0\n";
    for (const auto& s : cfg.singular_points) out << "  A1 point " << cubic::point_string(s) << "\n";
    auto emit = [&](const cubic::WeightedLine& l) {
        out << "    " << std::string(static_cast<std::size_t>(l.multiplicity), '#')
            << std::string(static_cast<std::size_t>(std::max(0, 5 - l.multiplicity)), ' ') << "x" << l.multiplicity << "  "
            << l.label << "  {" << poly::to_string(l.line.form1) << " = 0, " << poly::to_string(l.line.form2) << " = 0}\n";
    };
    if (cfg.kind == cubic::SurfaceKind::ThreePlanes) {
        for (int a = 0; a < 3; ++a) {
            out << "  plane x" << a << " = 0\n";
            for (const auto& l : cfg.lines)
                if (l.plane == a) emit(l);
        }
    } else {
        for (const auto& l : cfg.lines) emit(l);
    }
    return out.str();
}

}  // namespace modcheck::report
