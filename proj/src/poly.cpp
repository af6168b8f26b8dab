#include "modcheck/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace modcheck::poly {

Monomial Monomial::var(int i, int power) {
    if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
    Monomial m;
    m.exp[i] = static_cast<std::uint16_t>(power);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (exp[i] > m.exp[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] + o.exp[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] - o.exp[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(exp[i], o.exp[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (exp[i] && o.exp[i]) return false;
    return true;
}

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b, int nvars) {
    int da = 0, db = 0;
    for (int i = 0; i < nvars; ++i) {
        da += a.exp[i];
        db += b.exp[i];
    }
    if (da != db) return da > db;
    for (int i = nvars - 1; i >= 0; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    return false;
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::Grevlex:
            return grevlex_greater(a, b, nvars);
        case OrderKind::Lex:
            for (int i = 0; i < nvars; ++i)
                if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
            return false;
        case OrderKind::Elimination: {
            int t = nvars - 1;
            if (a.exp[t] != b.exp[t]) return a.exp[t] > b.exp[t];
            return grevlex_greater(a, b, nvars - 1);
        }
    }
    return false;
}

std::string order_name(OrderKind k) {
    switch (k) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::Elimination: return "elimination";
    }
    return "?";
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(int i) { return term(1, Monomial::var(i)); }

Poly Poly::term(const Rational& c, const Monomial& m) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d < 0) d = m.degree();
        else if (m.degree() != d) return false;
    }
    return true;
}

int Poly::max_var() const {
    int v = -1;
    for (const auto& [m, c] : terms_)
        for (int i = kMaxVars - 1; i > v; --i)
            if (m.exp[i]) {
                v = i;
                break;
            }
    return v;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Poly operator*(const Rational& c, const Poly& p) { return Poly(c) * p; }

Poly Poly::pow(unsigned e) const {
    Poly result(1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::derivative(int var) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.exp[var] == 0) continue;
        Monomial d = m;
        d.exp[var] -= 1;
        r.add_term(d, c * m.exp[var]);
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!m.exp[i]) continue;
            if (i >= static_cast<int>(point.size())) throw std::invalid_argument("evaluation point too short");
            for (int k = 0; k < m.exp[i]; ++k) t *= point[i];
        }
        sum += t;
    }
    return sum;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t(c);
        Monomial rest;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!m.exp[i]) continue;
            if (i < static_cast<int>(values.size())) t = t * values[i].pow(m.exp[i]);
            else rest.exp[i] = m.exp[i];
        }
        r += t * term(1, rest);
    }
    return r;
}

Monomial Poly::leading_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return best->first;
}

Rational Poly::leading_coefficient(const MonomialOrder& ord) const {
    return terms_.at(leading_monomial(ord));
}

Poly Poly::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    Rational lc = leading_coefficient(ord);
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c /= lc;
    return r;
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    // print in descending grevlex over all slots
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    MonomialOrder ord{OrderKind::Grevlex, kMaxVars};
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        bool constant = m.degree() == 0;
        bool star = false;
        if (a != 1 || constant) {
            out += exact::to_string(a);
            star = true;
        }
        for (int i = 0; i < kMaxVars; ++i) {
            if (!m.exp[i]) continue;
            if (star) out += "*";
            out += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
            if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
            star = true;
        }
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what +
                                    " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    Poly expr() {
        Poly acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        Poly t = product();
        acc = neg ? -t : t;
        for (;;) {
            if (eat('+')) acc += product();
            else if (eat('-')) acc -= product();
            else return acc;
        }
    }
    Poly product() {
        Poly acc = power();
        for (;;) {
            skip();
            if (eat('*')) {
                acc = acc * power();
            } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'x')) {
                acc = acc * power();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }
    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            unsigned long e = std::stoul(digits());
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }
    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (ch == 'x') {
            ++pos_;
            if (eat('_')) {}
            int idx = std::stoi(digits());
            if (idx < 0 || idx > 9) fail("variable index must be 0..9");
            return Poly::var(idx);
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num = digits();
            if (eat('/')) return Poly(exact::parse_rational(num + "/" + digits()));
            return Poly(exact::parse_rational(num));
        }
        fail(std::string("unexpected character '") + ch + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

Ideal parse_ideal(std::string_view text, int nvars) {
    Ideal ideal;
    ideal.nvars = nvars;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        Poly p = parse_poly(line);
        if (p.max_var() >= nvars) throw std::invalid_argument("generator uses a variable outside x0..x" + std::to_string(nvars - 1));
        if (!p.is_zero()) ideal.generators.push_back(p);
    }
    return ideal;
}

Rational UniPoly::operator()(const Rational& m) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m + *it;
    return acc;
}

int UniPoly::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i] != 0) return i;
    return -1;
}

bool UniPoly::operator==(const UniPoly& o) const {
    std::size_t n = std::max(coeffs.size(), o.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational a = i < coeffs.size() ? coeffs[i] : Rational(0);
        Rational b = i < o.coeffs.size() ? o.coeffs[i] : Rational(0);
        if (a != b) return false;
    }
    return true;
}

std::string to_string(const UniPoly& p, const std::string& var) {
    int d = p.degree();
    if (d < 0) return "0";
    std::string out;
    for (int i = d; i >= 0; --i) {
        const Rational& c = p.coeffs[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (i == 0 || a != 1) out += exact::to_string(a);
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace modcheck::poly
