// modcheck: verification suites and single-object checks.
#include "modcheck/cubic.hpp"
#include "modcheck/dm.hpp"
#include "modcheck/hassett.hpp"
#include "modcheck/lattice.hpp"
#include "modcheck/poly.hpp"
#include "modcheck/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace modcheck;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<exact::EpsValue> parse_eps_weights(const std::string& text) {
    // "1/4+eps" style entries separated by commas, or "w^k" repetition
    std::vector<exact::EpsValue> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        int rep = 1;
        if (auto caret = item.rfind('^'); caret != std::string::npos && item.find(')') < caret) {
            rep = std::stoi(item.substr(caret + 1));
            item = item.substr(0, caret);
        }
        if (!item.empty() && item.front() == '(' && item.back() == ')') item = item.substr(1, item.size() - 2);
        exact::Rational c = 0, e = 0;
        auto eps_pos = item.find("eps");
        if (eps_pos == std::string::npos) {
            c = exact::parse_rational(item);
        } else {
            std::string before = item.substr(0, eps_pos);
            // split constant and eps coefficient at the last sign before "eps"
            auto sign = before.find_last_of("+-");
            std::string coef = sign == std::string::npos ? before : before.substr(sign);
            std::string constant = sign == std::string::npos ? "" : before.substr(0, sign);
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            if (coef.empty() || coef == "+") e = 1;
            else if (coef == "-") e = -1;
            else e = exact::parse_rational(coef.front() == '+' ? coef.substr(1) : coef);
            if (!constant.empty()) c = exact::parse_rational(constant);
        }
        for (int k = 0; k < rep; ++k) out.emplace_back(c, e);
    }
    return out;
}

int emit_report(const report::Report& rep, const std::string& json_path, const std::string& md_path) {
    if (!json_path.empty()) write_file(json_path, rep.to_json());
    if (!md_path.empty()) write_file(md_path, rep.to_markdown());
    for (const auto& c : rep.checks)
        std::cout << (c.status == report::Status::Pass ? "PASS " : c.status == report::Status::Fail ? "FAIL " : "SKIP ")
                  << c.id << "  " << c.detail << "\n";
    std::cout << rep.suite << ": " << rep.count(report::Status::Pass) << " pass, " << rep.count(report::Status::Fail)
              << " fail, " << rep.count(report::Status::Skip) << " skip\n";
    return rep.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modcheck: exact checks for weighted point configurations, ball quotients and cubic surface pairs"};
    app.require_subcommand(1);

    std::string json_path, md_path;
    report::RunOptions opts;
    int degree_bound = -1;

    auto* run = app.add_subcommand("run", "run a verification suite");
    std::string suite;
    run->add_option("suite", suite, "dm-tables, hassett-strata, cubic-pairs, hilbert-flatness, lattice or all")->required();
    run->add_option("--json", json_path, "write the JSON report here");
    run->add_option("--markdown", md_path, "write the markdown report here");
    run->add_option("--degree-bound", degree_bound, "last degree compared when detecting Hilbert polynomial stabilisation")
        ->check(CLI::PositiveNumber);
    run->add_flag("--epsilon-report", opts.epsilon_report, "include epsilon coefficients in details");
    run->add_option("--seed", opts.seed, "seed for randomized sampling");
    run->add_option("--jobs", opts.jobs, "concurrent checks")->check(CLI::Range(1, 256));
    run->add_option("--n", opts.n, "number of marked points for hassett-strata")->check(CLI::Range(6, 64));

    auto* classify = app.add_subcommand("classify", "classify a weight system, e.g. \"(1/6)^6 (1/3)^3\"");
    std::string weights_text;
    classify->add_option("weights", weights_text)->required();
    bool classify_json = false;
    classify->add_flag("--json", classify_json, "print JSON");

    auto* hassett = app.add_subcommand("hassett", "weighted stability of a curve configuration");
    std::string config_text, weights_list, target_list;
    hassett->add_option("config", config_text, "e.g. \"A B A-B 1@A 2@A 3@A 4@B 5@B 6@B 7@B 8@B\"")->required();
    hassett->add_option("--weights", weights_list, "comma list, e.g. \"(1/4+eps)^8\"")->required();
    hassett->add_option("--reduce-to", target_list, "target weights for the reduction morphism");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial of an ideal file");
    std::string ideal_path;
    hilbert->add_option("ideal", ideal_path, "newline-separated generators; builtin:three-planes or builtin:cayley")->required();
    hilbert->add_option("--degree-bound", degree_bound)->check(CLI::PositiveNumber);
    int nvars = 4;
    hilbert->add_option("--nvars", nvars)->check(CLI::Range(1, 10));
    bool hilbert_parallel = false;
    hilbert->add_flag("--parallel", hilbert_parallel, "use the OpenMP standard-monomial counter");

    auto* pair = app.add_subcommand("pair", "stability of the boundary pair of a stratum");
    std::string stratum_text;
    pair->add_option("stratum", stratum_text, "Smooth, A1, A1^2, A1^3, A1^4, N, A1-N, A1^2-N, A1^3-N")->required();
    bool pair_eps = false, pair_ascii = false;
    pair->add_flag("--epsilon-report", pair_eps);
    pair->add_flag("--ascii", pair_ascii, "print an incidence listing instead of JSON");

    auto* group = app.add_subcommand("group", "closure of Gaussian matrices given as JSON");
    std::string group_path;
    group->add_option("matrices", group_path, "JSON file: array of matrices of \"a+bi\" strings, or builtin:R")->required();
    std::size_t cap = 10000;
    group->add_option("--cap", cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }
    if (degree_bound > 0) opts.degree_bound = degree_bound;

    try {
        if (*run) {
            auto rep = report::run(suite, opts);
            return emit_report(rep, json_path, md_path);
        }
        if (*classify) {
            auto ws = dm::parse_weights(weights_text);
            auto c = dm::classify(ws);
            if (classify_json) {
                json j{{"input", weights_text}, {"weights", dm::format_weights(ws)}, {"verdict", dm::verdict_string(c)}};
                if (c.verdict == dm::Verdict::SigmaInt) j["m"] = c.m;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << dm::format_weights(ws) << ": " << dm::verdict_string(c) << "\n";
            }
            return 0;
        }
        if (*hassett) {
            auto cfg = hassett::parse_config(config_text);
            auto w = parse_eps_weights(weights_list);
            auto v = hassett::is_weighted_stable(cfg, w);
            json j{{"config", hassett::format_config(cfg)}, {"stable", v.ok}};
            json viol = json::array();
            for (const auto& x : v.violations)
                viol.push_back({{"kind", hassett::kind_name(x.kind)}, {"location", x.location}, {"value", exact::to_string(x.value)}});
            j["violations"] = viol;
            if (!target_list.empty()) {
                try {
                    j["image"] = hassett::format_config(hassett::reduction_image(cfg, w, parse_eps_weights(target_list)));
                } catch (const hassett::ReductionError& e) {
                    j["reduction_error"] = e.what();
                }
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*hilbert) {
            poly::Ideal ideal;
            if (ideal_path == "builtin:three-planes") ideal = cubic::script_ideal_three_planes();
            else if (ideal_path == "builtin:cayley") ideal = cubic::script_ideal_cayley();
            else ideal = poly::parse_ideal(read_file(ideal_path), nvars);
            poly::HilbertOptions ho;
            ho.degree_bound = opts.degree_bound;
            ho.parallel = hilbert_parallel;
            auto h = poly::hilbert_polynomial(ideal, ho);
            json j{{"polynomial", poly::to_string(h.polynomial)}, {"stable_from", h.stable_from},
                   {"checked_through", h.checked_through}, {"values", h.values}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*pair) {
            auto s = cubic::parse_stratum(stratum_text);
            auto cfg = cubic::stratum_config(s);
            auto r = cubic::check_stable_pair(cfg);
            if (pair_ascii) std::cout << report::incidence_ascii(cfg);
            else std::cout << report::pair_json(cfg, r, pair_eps);
            return r.stable ? 0 : kExitFail;
        }
        if (*group) {
            std::vector<exact::GaussMatrix> gens;
            if (group_path == "builtin:R") {
                gens = {lattice::reflection_alpha(), lattice::reflection_beta(), lattice::reflection_gamma()};
            } else {
                auto arr = json::parse(read_file(group_path));
                if (!arr.is_array()) throw UsageError("expected a JSON array of matrices");
                for (const auto& m : arr) gens.push_back(lattice::parse_gauss_matrix_json(m.dump()));
            }
            auto g = lattice::generate_group(gens, cap);
            auto id = exact::GaussMatrix::identity(gens.at(0).rows());
            auto i = id.scaled(exact::GaussianInt::unit_i());
            json census = json::object();
            for (const auto& [o, c] : g.order_census) census[std::to_string(o)] = c;
            json j{{"order", g.order()},
                   {"order_census", census},
                   {"center_size", g.center_size},
                   {"contains_scalars", g.contains(id) && g.contains(-id) && g.contains(i) && g.contains(-i)}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    } catch (const report::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
