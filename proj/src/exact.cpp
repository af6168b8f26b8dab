#include "modcheck/exact.hpp"

#include <algorithm>
#include <cctype>

namespace modcheck::exact {

namespace {

std::string strip(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    return s;
}

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s) {
    if (!is_integer_literal(s)) throw std::invalid_argument("malformed integer '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

Integer floor_q(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool lex_less(const GaussianInt& x, const GaussianInt& y) {
    return x.re < y.re || (x.re == y.re && x.im < y.im);
}
bool lex_less(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
}

// Among the four floor/ceil corners around (u, v), pick the one minimising the
// remainder norm; remainder_norm and quotient_norm are supplied per ring.
template <class R, class MakeQ>
DivResult<R> nearest(const R& x, const R& d, const Rational& u, const Rational& v, MakeQ make) {
    Integer u0 = floor_q(u), v0 = floor_q(v);
    bool have = false;
    DivResult<R> best;
    Integer best_rn, best_qn;
    for (int du = 0; du <= 1; ++du)
        for (int dv = 0; dv <= 1; ++dv) {
            R q = make(u0 + du, v0 + dv);
            R r = x - d * q;
            Integer rn = norm(r), qn = norm(q);
            bool better = !have || rn < best_rn ||
                          (rn == best_rn && (qn < best_qn || (qn == best_qn && lex_less(q, best.quotient))));
            if (better) {
                have = true;
                best = {q, r};
                best_rn = rn;
                best_qn = qn;
            }
        }
    return best;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = strip(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    std::string den_text = s.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '-' || den_text[0] == '+')
        throw std::invalid_argument("malformed fraction '" + s + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int EpsValue::sign() const {
    if (c != 0) return sgn(c);
    return sgn(e);
}

std::string to_string(const EpsValue& v) {
    if (v.e == 0) return to_string(v.c);
    std::string s = v.c == 0 ? "" : to_string(v.c);
    Rational e = v.e;
    if (e < 0) {
        s += "-";
        e = -e;
    } else if (!s.empty()) {
        s += "+";
    }
    if (e != 1) s += to_string(e) + "*";
    return s + "eps";
}

GaussianInt conj(const GaussianInt& z) { return {z.re, -z.im}; }
Integer norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

std::string to_string(const GaussianInt& z) {
    if (z.im == 0) return z.re.get_str();
    std::string im;
    if (z.im == 1) im = "i";
    else if (z.im == -1) im = "-i";
    else im = z.im.get_str() + "i";
    if (z.re == 0) return im;
    return z.re.get_str() + (z.im > 0 ? "+" : "") + im;
}

GaussianInt parse_gaussian(std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty Gaussian integer");
    if (s.back() != 'i') return {parse_integer(s), 0};
    // split at the last sign that is not the leading character
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size() - 1; k > 0; --k)
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = s.substr(split == std::string::npos ? 0 : split, s.size() - 1 - (split == std::string::npos ? 0 : split));
    Integer im;
    if (im_part.empty() || im_part == "+") im = 1;
    else if (im_part == "-") im = -1;
    else im = parse_integer(im_part);
    return {re_part.empty() ? Integer(0) : parse_integer(re_part), im};
}

EisensteinInt conj(const EisensteinInt& z) { return {z.a - z.b, -z.b}; }
Integer norm(const EisensteinInt& z) { return z.a * z.a - z.a * z.b + z.b * z.b; }

std::string to_string(const EisensteinInt& z) {
    if (z.b == 0) return z.a.get_str();
    std::string w;
    if (z.b == 1) w = "w";
    else if (z.b == -1) w = "-w";
    else w = z.b.get_str() + "w";
    if (z.a == 0) return w;
    return z.a.get_str() + (z.b > 0 ? "+" : "") + w;
}

DivResult<GaussianInt> divmod(const GaussianInt& x, const GaussianInt& d) {
    if (d.is_zero()) throw std::domain_error("division by zero Gaussian integer");
    GaussianInt p = x * conj(d);
    Rational n(norm(d));
    Rational u = Rational(p.re) / n, v = Rational(p.im) / n;
    return nearest(x, d, u, v, [](Integer a, Integer b) { return GaussianInt(std::move(a), std::move(b)); });
}

DivResult<EisensteinInt> divmod(const EisensteinInt& x, const EisensteinInt& d) {
    if (d.is_zero()) throw std::domain_error("division by zero Eisenstein integer");
    EisensteinInt p = x * conj(d);
    Rational n(norm(d));
    Rational u = Rational(p.a) / n, v = Rational(p.b) / n;
    return nearest(x, d, u, v, [](Integer a, Integer b) { return EisensteinInt(std::move(a), std::move(b)); });
}

bool gauss_divides(const GaussianInt& d, const GaussianInt& x) {
    if (d.is_zero()) throw std::domain_error("gauss_divides: zero divisor");
    return divmod(x, d).remainder.is_zero();
}

bool eisenstein_divides(const EisensteinInt& d, const EisensteinInt& x) {
    if (d.is_zero()) throw std::domain_error("eisenstein_divides: zero divisor");
    return divmod(x, d).remainder.is_zero();
}

}  // namespace modcheck::exact
