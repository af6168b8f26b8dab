#include "modcheck/hassett.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace modcheck::hassett {

int StableCurveConfig::node_count(int component) const {
    int n = 0;
    for (const auto& [a, b] : nodes) n += (a == component) + (b == component);
    return n;
}

void StableCurveConfig::validate() const {
    const int k = static_cast<int>(components.size());
    if (k == 0) throw std::invalid_argument("configuration has no components");
    for (const auto& [a, b] : nodes) {
        if (a < 0 || b < 0 || a >= k || b >= k) throw std::invalid_argument("node references an unknown component");
        if (a == b) throw std::invalid_argument("self-node on component " + components[a] + " (genus would be positive)");
    }
    if (static_cast<int>(nodes.size()) != k - 1)
        throw std::invalid_argument("dual graph is not a tree: " + std::to_string(k) + " components, " +
                                    std::to_string(nodes.size()) + " nodes");
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : nodes) {
        int ra = find(a), rb = find(b);
        if (ra == rb) throw std::invalid_argument("dual graph has a cycle");
        parent[ra] = rb;
    }
    std::map<int, int> class_home;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (p.component < 0 || p.component >= k)
            throw std::invalid_argument("marked point " + std::to_string(i + 1) + " on unknown component");
        auto [it, fresh] = class_home.emplace(p.coincidence, p.component);
        if (!fresh && it->second != p.component)
            throw std::invalid_argument("coincidence class spans two components");
    }
}

std::vector<std::vector<int>> StableCurveConfig::coincidence_classes() const {
    std::map<int, std::vector<int>> by_id;
    for (std::size_t i = 0; i < points.size(); ++i) by_id[points[i].coincidence].push_back(static_cast<int>(i) + 1);
    std::vector<std::vector<int>> out;
    for (auto& [id, members] : by_id) out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        bool sep = std::isspace(static_cast<unsigned char>(ch)) || ch == ';' || (ch == ',' && depth == 0);
        if (sep) {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isalpha(static_cast<unsigned char>(ch)) && !std::isdigit(static_cast<unsigned char>(ch))) return false;
    return std::isalpha(static_cast<unsigned char>(s[0]));
}

}  // namespace

StableCurveConfig parse_config(const std::string& text) {
    StableCurveConfig cfg;
    std::map<std::string, int> ids;
    auto component = [&](const std::string& name) {
        if (!valid_name(name)) throw std::invalid_argument("bad component name '" + name + "'");
        auto [it, fresh] = ids.emplace(name, static_cast<int>(cfg.components.size()));
        if (fresh) cfg.components.push_back(name);
        return it->second;
    };
    std::map<int, MarkedPoint> assigned;
    int next_class = 0;
    for (const auto& tok : split_tokens(text)) {
        auto at = tok.find('@');
        if (at != std::string::npos) {
            std::string lhs = tok.substr(0, at);
            int comp = component(tok.substr(at + 1));
            std::vector<int> members;
            if (!lhs.empty() && lhs.front() == '{') {
                if (lhs.back() != '}') throw std::invalid_argument("unclosed '{' in '" + tok + "'");
                std::stringstream ss(lhs.substr(1, lhs.size() - 2));
                std::string item;
                while (std::getline(ss, item, ',')) members.push_back(std::stoi(item));
            } else {
                members.push_back(std::stoi(lhs));
            }
            int cls = next_class++;
            for (int idx : members) {
                if (idx < 1) throw std::invalid_argument("marked indices start at 1");
                if (!assigned.emplace(idx, MarkedPoint{comp, cls}).second)
                    throw std::invalid_argument("marked point " + std::to_string(idx) + " assigned twice");
            }
            continue;
        }
        auto dash = tok.find('-');
        if (dash != std::string::npos) {
            int a = component(tok.substr(0, dash));
            int b = component(tok.substr(dash + 1));
            cfg.nodes.emplace_back(a, b);
            continue;
        }
        component(tok);
    }
    int expected = 1;
    for (const auto& [idx, p] : assigned) {
        if (idx != expected) throw std::invalid_argument("marked point " + std::to_string(expected) + " is missing");
        cfg.points.push_back(p);
        ++expected;
    }
    cfg.validate();
    return cfg;
}

std::string format_config(const StableCurveConfig& cfg) {
    std::string out;
    for (const auto& c : cfg.components) out += (out.empty() ? "" : " ") + c;
    for (const auto& [a, b] : cfg.nodes) {
        auto x = cfg.components[a], y = cfg.components[b];
        if (y < x) std::swap(x, y);
        out += " " + x + "-" + y;
    }
    for (const auto& cls : cfg.coincidence_classes()) {
        const std::string& home = cfg.components[cfg.points[cls.front() - 1].component];
        if (cls.size() == 1) {
            out += " " + std::to_string(cls.front()) + "@" + home;
        } else {
            out += " {";
            for (std::size_t k = 0; k < cls.size(); ++k) out += (k ? "," : "") + std::to_string(cls[k]);
            out += "}@" + home;
        }
    }
    return out;
}

std::string kind_name(ViolationKind k) {
    return k == ViolationKind::CoincidenceOverweight ? "CoincidenceOverweight" : "ComponentUnderweight";
}

namespace {

void check_weights(const StableCurveConfig& cfg, const std::vector<EpsValue>& w) {
    if (w.size() != cfg.points.size())
        throw std::invalid_argument("weight count " + std::to_string(w.size()) + " does not match " +
                                    std::to_string(cfg.points.size()) + " marked points");
    for (const auto& b : w)
        if (b <= EpsValue(0) || b > EpsValue(1)) throw std::invalid_argument("weight " + exact::to_string(b) + " outside (0,1]");
}

std::string class_label(const std::vector<int>& cls) {
    std::string s = "{";
    for (std::size_t k = 0; k < cls.size(); ++k) s += (k ? "," : "") + std::to_string(cls[k]);
    return s + "}";
}

EpsValue component_total(const StableCurveConfig& cfg, int c, const std::vector<EpsValue>& w) {
    EpsValue total(cfg.node_count(c));
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        if (cfg.points[i].component == c) total += w[i];
    return total;
}

}  // namespace

StabilityVerdict is_weighted_stable(const StableCurveConfig& cfg, const std::vector<EpsValue>& w) {
    cfg.validate();
    check_weights(cfg, w);
    StabilityVerdict v;
    for (const auto& cls : cfg.coincidence_classes()) {
        if (cls.size() < 2) continue;
        EpsValue s;
        for (int idx : cls) s += w[idx - 1];
        if (s > EpsValue(1)) v.violations.push_back({ViolationKind::CoincidenceOverweight, class_label(cls), s});
    }
    for (int c = 0; c < static_cast<int>(cfg.components.size()); ++c) {
        EpsValue total = component_total(cfg, c, w);
        if (total <= EpsValue(2)) v.violations.push_back({ViolationKind::ComponentUnderweight, cfg.components[c], total});
    }
    v.ok = v.violations.empty();
    return v;
}

namespace {

StableCurveConfig remove_component(const StableCurveConfig& cfg, int gone) {
    StableCurveConfig out;
    for (int c = 0; c < static_cast<int>(cfg.components.size()); ++c)
        if (c != gone) out.components.push_back(cfg.components[c]);
    auto remap = [&](int c) { return c > gone ? c - 1 : c; };
    for (const auto& [a, b] : cfg.nodes)
        if (a != gone && b != gone) out.nodes.emplace_back(remap(a), remap(b));
    for (const auto& p : cfg.points) out.points.push_back({remap(p.component), p.coincidence});
    return out;
}

}  // namespace

StableCurveConfig contract_tail(const StableCurveConfig& cfg, int component, const std::vector<EpsValue>& w) {
    cfg.validate();
    check_weights(cfg, w);
    if (cfg.node_count(component) != 1) throw std::invalid_argument("component " + cfg.components[component] + " is not a leaf");
    int neighbour = -1;
    for (const auto& [a, b] : cfg.nodes) {
        if (a == component) neighbour = b;
        if (b == component) neighbour = a;
    }
    StableCurveConfig moved = cfg;
    int fresh = 0;
    for (const auto& p : cfg.points) fresh = std::max(fresh, p.coincidence + 1);
    std::vector<int> members;
    EpsValue sum;
    for (std::size_t i = 0; i < moved.points.size(); ++i)
        if (moved.points[i].component == component) {
            moved.points[i] = {neighbour, fresh};
            members.push_back(static_cast<int>(i) + 1);
            sum += w[i];
        }
    if (members.size() > 1 && sum > EpsValue(1))
        throw ReductionError(ReductionFailure::CoincidenceOverweight,
                             "contracting " + cfg.components[component] + " collides " + class_label(members) +
                                 " with total weight " + exact::to_string(sum) + " > 1");
    return remove_component(moved, component);
}

StableCurveConfig reduction_image(const StableCurveConfig& cfg, const std::vector<EpsValue>& from,
                                  const std::vector<EpsValue>& to) {
    check_weights(cfg, from);
    check_weights(cfg, to);
    for (std::size_t i = 0; i < to.size(); ++i)
        if (to[i] > from[i]) throw std::invalid_argument("target weights must not exceed source weights");
    auto src = is_weighted_stable(cfg, from);
    if (!src.ok) throw ReductionError(ReductionFailure::NotStableAtSource, "configuration is not stable for the source weights");

    StableCurveConfig cur = cfg;
    for (;;) {
        const int k = static_cast<int>(cur.components.size());
        int leaf = -1, bridge = -1;
        for (int c = 0; c < k; ++c) {
            if (component_total(cur, c, to) > EpsValue(2)) continue;
            int deg = cur.node_count(c);
            if (deg == 0) {
                throw ReductionError(ReductionFailure::TotalWeightAtMostTwo,
                                     "total weight " + exact::to_string(component_total(cur, c, to)) +
                                         " is at most 2; no stable image exists");
            }
            if (deg == 1 && leaf < 0) leaf = c;
            if (deg == 2 && bridge < 0) bridge = c;
        }
        if (leaf >= 0) {
            cur = contract_tail(cur, leaf, to);
            continue;
        }
        if (bridge >= 0) {
            std::vector<int> nb;
            for (const auto& [a, b] : cur.nodes) {
                if (a == bridge) nb.push_back(b);
                if (b == bridge) nb.push_back(a);
            }
            StableCurveConfig joined = cur;
            joined.nodes.emplace_back(nb[0], nb[1]);
            cur = remove_component(joined, bridge);
            continue;
        }
        break;
    }
    auto verdict = is_weighted_stable(cur, to);
    if (!verdict.ok) {
        // only coincidence violations can remain here
        throw ReductionError(ReductionFailure::CoincidenceOverweight,
                             "class " + verdict.violations.front().location + " exceeds weight 1");
    }
    return cur;
}

Census codim1_strata_census(int n) {
    if (n % 2 != 0) throw std::invalid_argument("census needs an even number of points");
    if (n < 6) throw std::invalid_argument("census needs at least 6 points");
    exact::Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), n, 2);
    mpz_bin_uiui(b.get_mpz_t(), n, n / 2);
    b /= 2;
    return {a.get_si(), b.get_si()};
}

std::vector<EpsValue> uniform_weights(int n, const Rational& constant, const Rational& eps_coef) {
    return std::vector<EpsValue>(n, EpsValue(constant, eps_coef));
}

}  // namespace modcheck::hassett
