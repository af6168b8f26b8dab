#include "modcheck/dm.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace modcheck::dm {

Rational WeightSystem::sum() const {
    Rational s = 0;
    for (const auto& w : weights) s += w;
    return s;
}

WeightSystem make_weights(std::vector<Rational> weights) {
    for (const auto& w : weights)
        if (w <= 0 || w >= 1) throw WeightParseError("weight " + exact::to_string(w) + " outside (0,1)");
    std::sort(weights.begin(), weights.end(), [](const Rational& a, const Rational& b) { return a > b; });
    WeightSystem ws{std::move(weights)};
    Rational s = ws.sum();
    if (s != 2) throw WeightParseError("weights sum to " + exact::to_string(s) + ", not 2");
    return ws;
}

WeightSystem parse_weights(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw WeightParseError("empty weight system");
    std::vector<Rational> weights;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(') throw WeightParseError("expected '(' at column " + std::to_string(pos + 1));
        auto close = s.find(')', pos);
        if (close == std::string::npos) throw WeightParseError("unclosed '(' at column " + std::to_string(pos + 1));
        std::string frac = s.substr(pos + 1, close - pos - 1);
        Rational w;
        try {
            w = exact::parse_rational(frac);
        } catch (const std::exception&) {
            throw WeightParseError("malformed fraction '" + frac + "'");
        }
        pos = close + 1;
        long exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
            std::size_t start = ++pos;
            if (pos < s.size() && s[pos] == '-') ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string digits = s.substr(start, pos - start);
            if (digits.empty() || digits == "-") throw WeightParseError("missing exponent after '^'");
            exponent = std::stol(digits);
            if (exponent < 1) throw WeightParseError("exponent " + digits + " is less than 1");
        }
        for (long k = 0; k < exponent; ++k) weights.push_back(w);
    }
    return make_weights(std::move(weights));
}

std::string format_weights(const WeightSystem& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.weights.size();) {
        std::size_t j = i;
        while (j < ws.weights.size() && ws.weights[j] == ws.weights[i]) ++j;
        out += "(" + exact::to_string(ws.weights[i]) + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

AmbiguousSigmaInt::AmbiguousSigmaInt(std::vector<Rational> classes)
    : std::runtime_error([&] {
          std::string s = "ambiguous m: more than one equal-weight class needs the relaxed condition (";
          for (std::size_t k = 0; k < classes.size(); ++k) s += (k ? ", " : "") + exact::to_string(classes[k]);
          return s + ")";
      }()),
      classes_(std::move(classes)) {}

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

Classification classify(const WeightSystem& ws) {
    const auto& w = ws.weights;
    Classification out;
    std::set<Rational> relaxed_classes;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            Rational gap = 1 - w[i] - w[j];
            if (gap <= 0) continue;
            Rational inv = 1 / gap;
            if (is_integer(inv)) continue;
            if (w[i] == w[j] && is_integer(2 * inv)) {
                relaxed_classes.insert(w[i]);
                continue;
            }
            out.witnesses.emplace_back(i, j);
        }
    if (!out.witnesses.empty()) {
        out.verdict = Verdict::Fails;
        return out;
    }
    if (relaxed_classes.empty()) return out;
    if (relaxed_classes.size() > 1) throw AmbiguousSigmaInt({relaxed_classes.rbegin(), relaxed_classes.rend()});
    out.verdict = Verdict::SigmaInt;
    out.m = static_cast<long>(std::count(w.begin(), w.end(), *relaxed_classes.begin()));
    return out;
}

std::string verdict_string(const Classification& c) {
    switch (c.verdict) {
        case Verdict::Int: return "INT";
        case Verdict::SigmaInt: return "SigmaINT(m=" + std::to_string(c.m) + ")";
        case Verdict::Fails: {
            std::string s = "Fails(";
            for (std::size_t k = 0; k < c.witnesses.size(); ++k)
                s += (k ? "," : "") + std::string("{") + std::to_string(c.witnesses[k].first + 1) + "," +
                     std::to_string(c.witnesses[k].second + 1) + "}";
            return s + ")";
        }
    }
    return "?";
}

std::string ring_name(Ring r) { return r == Ring::Eisenstein ? "Eisenstein" : "Gaussian"; }

const std::vector<TableRow>& builtin_tables() {
    static const std::vector<TableRow> rows = [] {
        // m = 0 marks a blank m column (INT)
        const std::vector<std::pair<const char*, long>> eisenstein = {
            {"(1/6)^12", 12},
            {"(1/3)(1/6)^10", 10},
            {"(1/2)(1/6)^9", 9},
            {"(1/3)^2(1/6)^8", 8},
            {"(2/3)(1/6)^8", 8},
            {"(1/2)(1/3)(1/6)^7", 7},
            {"(1/3)^3(1/6)^6", 6},
            {"(1/3)^4(1/6)^4", 4},
            {"(1/2)(1/3)^2(1/6)^5", 5},
            {"(1/2)^2(1/6)^6", 6},
            {"(2/3)(1/3)(1/6)^6", 6},
            {"(5/6)(1/6)^7", 7},
            {"(5/6)(1/3)(1/6)^5", 5},
            {"(2/3)(1/3)^2(1/6)^4", 4},
            {"(2/3)(1/2)(1/6)^5", 5},
            {"(1/2)^2(1/3)(1/6)^4", 4},
            {"(1/2)(1/3)^3(1/6)^3", 3},
            {"(1/3)^5(1/6)^2", 2},
            {"(5/6)(1/2)(1/6)^4", 4},
            {"(5/6)(1/3)^2(1/6)^3", 3},
            {"(2/3)(1/3)^3(1/6)^2", 2},
            {"(2/3)(1/2)(1/3)(1/6)^3", 3},
            {"(2/3)^2(1/6)^4", 4},
            {"(1/2)^3(1/6)^3", 3},
            {"(1/2)^2(1/3)^2(1/6)^2", 2},
            {"(1/2)(1/3)^4(1/6)", 0},
            {"(1/3)^6", 0},
            {"(2/3)(1/3)^4", 0},
            {"(1/2)^2(1/3)^3", 0},
            {"(1/2)^3(1/3)(1/6)", 0},
            {"(2/3)^2(1/3)(1/6)^2", 2},
            {"(2/3)(1/2)^2(1/6)^2", 2},
            {"(2/3)(1/2)(1/3)^2(1/6)", 0},
            {"(5/6)(1/3)^3(1/6)", 0},
            {"(5/6)(1/2)(1/3)(1/6)^2", 2},
            {"(5/6)(2/3)(1/6)^3", 3},
        };
        const std::vector<const char*> gaussian = {
            "(1/4)^8", "(1/2)(1/4)^6", "(3/4)(1/4)^5", "(1/2)^2(1/4)^4", "(3/4)(1/2)(1/4)^3", "(1/2)^3(1/4)^2",
        };
        std::vector<TableRow> out;
        for (const auto& [text, m] : eisenstein) {
            Classification c;
            if (m) {
                c.verdict = Verdict::SigmaInt;
                c.m = m;
            }
            out.push_back({text, parse_weights(text), c, Ring::Eisenstein});
        }
        for (const char* text : gaussian) out.push_back({text, parse_weights(text), Classification{}, Ring::Gaussian});
        return out;
    }();
    return rows;
}

exact::Integer denominator_lcm(const WeightSystem& ws) {
    exact::Integer l = 1;
    for (const auto& w : ws.weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.get_den_mpz_t());
    return l;
}

TableReport verify_tables() {
    TableReport report;
    for (const auto& row : builtin_tables()) {
        RowResult r{&row, {}, false, ""};
        std::vector<std::string> problems;
        try {
            r.got = classify(row.weights);
        } catch (const AmbiguousSigmaInt& e) {
            problems.push_back(e.what());
        }
        if (r.got.verdict != row.expected.verdict || r.got.m != row.expected.m)
            problems.push_back("expected " + verdict_string(row.expected) + ", got " + verdict_string(r.got));
        if (row.weights.n() < 5 || row.weights.n() > 12) problems.push_back("n outside 5..12");
        if (row.weights.sum() != 2) problems.push_back("weights do not sum to 2");
        auto d = denominator_lcm(row.weights);
        bool ring_ok = row.ring == Ring::Eisenstein ? (d == 2 || d == 3 || d == 6) : (d == 2 || d == 4);
        if (!ring_ok) problems.push_back("denominator lcm " + d.get_str() + " inconsistent with " + ring_name(row.ring));
        r.match = problems.empty();
        for (const auto& p : problems) r.detail += (r.detail.empty() ? "" : "; ") + p;
        if (r.match) ++report.matches;
        report.rows.push_back(r);
    }
    return report;
}

std::string TableReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["input"] = r.row->notation;
        j["ring"] = ring_name(r.row->ring);
        j["verdict"] = verdict_string(r.got);
        if (r.got.verdict == Verdict::SigmaInt) j["m"] = r.got.m;
        j["expected"] = verdict_string(r.row->expected);
        j["match"] = r.match;
        arr.push_back(j);
    }
    return arr.dump(2);
}

namespace {

void check_pairing(const std::vector<std::pair<std::size_t, std::size_t>>& pairing, std::size_t size) {
    std::set<std::size_t> seen;
    for (const auto& [a, b] : pairing) {
        if (a >= size || b >= size) throw std::invalid_argument("pair index out of range");
        if (a == b) throw std::invalid_argument("pair joins an index with itself");
        if (!seen.insert(a).second || !seen.insert(b).second) throw std::invalid_argument("pairs are not disjoint");
    }
}

}  // namespace

WeightSystem collide_embed(const WeightSystem& coarse, const std::vector<std::pair<std::size_t, std::size_t>>& pairing) {
    const std::size_t fine_n = coarse.n() + pairing.size();
    check_pairing(pairing, fine_n);
    // slots: one per pair and one per unpaired fine index, ordered by smallest fine index
    std::map<std::size_t, int> slot_kind;  // smallest index -> 2 for a pair, 1 for a single
    std::set<std::size_t> paired;
    for (const auto& [a, b] : pairing) {
        slot_kind[std::min(a, b)] = 2;
        paired.insert(a);
        paired.insert(b);
    }
    for (std::size_t k = 0; k < fine_n; ++k)
        if (!paired.count(k)) slot_kind[k] = 1;
    std::vector<Rational> fine;
    std::size_t next = 0;
    for (const auto& [idx, kind] : slot_kind) {
        const Rational& w = coarse.weights[next++];
        if (kind == 2) {
            fine.push_back(w / 2);
            fine.push_back(w / 2);
        } else {
            fine.push_back(w);
        }
    }
    return make_weights(std::move(fine));
}

WeightSystem collide(const WeightSystem& fine, const std::vector<std::pair<std::size_t, std::size_t>>& pairing) {
    check_pairing(pairing, fine.n());
    std::vector<Rational> out;
    std::set<std::size_t> used;
    for (const auto& [a, b] : pairing) {
        if (fine.weights[a] != fine.weights[b])
            throw std::invalid_argument("unequal weights in pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
        out.push_back(fine.weights[a] + fine.weights[b]);
        used.insert(a);
        used.insert(b);
    }
    for (std::size_t k = 0; k < fine.n(); ++k)
        if (!used.count(k)) out.push_back(fine.weights[k]);
    return make_weights(std::move(out));
}

}  // namespace modcheck::dm
