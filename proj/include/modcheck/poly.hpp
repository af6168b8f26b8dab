#pragma once

#include "modcheck/exact.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modcheck::poly {

using exact::Rational;

constexpr int kMaxVars = 12;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};

    static Monomial var(int i, int power = 1);
    int degree() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exp == o.exp; }
    bool operator!=(const Monomial& o) const { return exp != o.exp; }
    // storage order only (plain lexicographic on the exponent array)
    bool operator<(const Monomial& o) const { return exp < o.exp; }
};

enum class OrderKind { Grevlex, Lex, Elimination };

// Elimination: the last variable forms its own block and is compared first,
// the remaining variables are compared by grevlex.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    int nvars = 4;

    // true iff a > b
    bool greater(const Monomial& a, const Monomial& b) const;
};

std::string order_name(OrderKind k);

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    static Poly var(int i);
    static Poly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;
    bool is_homogeneous() const;
    // highest variable index with a nonzero exponent, or -1
    int max_var() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly pow(unsigned e) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return terms_ != o.terms_; }

    Rational coefficient(const Monomial& m) const;
    Poly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    // replace variable i by values[i] for every i < values.size()
    Poly substitute(const std::vector<Poly>& values) const;
    // leading term data under an order; requires nonzero
    Monomial leading_monomial(const MonomialOrder& ord) const;
    Rational leading_coefficient(const MonomialOrder& ord) const;
    Poly monic(const MonomialOrder& ord) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

Poly operator*(const Rational& c, const Poly& p);
std::string to_string(const Poly& p, const std::vector<std::string>& names = {});
// grammar: sums of products of rational constants, variables x0..x9 and
// parenthesised expressions, with ^ for non-negative integer powers
Poly parse_poly(std::string_view text);

struct Ideal {
    std::vector<Poly> generators;
    int nvars = 4;
};

// Newline-separated generators; '#' starts a comment.
Ideal parse_ideal(std::string_view text, int nvars = 4);

struct GroebnerBasis {
    std::vector<Poly> basis;  // reduced, monic, sorted by increasing leading monomial
    MonomialOrder order;

    std::vector<Monomial> leading_monomials() const;
};

struct BuchbergerStats {
    long pairs_considered = 0;
    long pairs_reduced = 0;
    long zero_reductions = 0;
};

// Serial reference: normal strategy with Buchberger's criteria (Gebauer-Moeller update).
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, BuchbergerStats* stats = nullptr);
// Batch-parallel variant: all pairs of minimal lcm degree are reduced concurrently,
// then inserted serially. Produces the same reduced basis.
GroebnerBasis buchberger_parallel(const Ideal& ideal, const MonomialOrder& ord, BuchbergerStats* stats = nullptr);

// Full normal form of f modulo a Groebner basis.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);
bool ideal_member(const Poly& f, const GroebnerBasis& gb);
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const std::vector<Ideal>& ideals);

// Univariate polynomial in m, coefficients low degree first.
struct UniPoly {
    std::vector<Rational> coeffs;

    Rational operator()(const Rational& m) const;
    int degree() const;
    bool operator==(const UniPoly& o) const;
};
std::string to_string(const UniPoly& p, const std::string& var = "m");

long hilbert_function(const Ideal& ideal, int degree);
long hilbert_function(const GroebnerBasis& grevlex_gb, int degree);
// Standard monomial counting over the leading-term ideal; serial and OpenMP versions.
long count_standard_monomials(const std::vector<Monomial>& lead, int nvars, int degree);
long count_standard_monomials_parallel(const std::vector<Monomial>& lead, int nvars, int degree);

struct HilbertResult {
    UniPoly polynomial;
    int stable_from = 0;         // first degree where the function agrees with the polynomial
    int checked_through = 0;     // last degree compared
    std::vector<long> values;    // hilbert_function(0..checked_through)
};

struct HilbertOptions {
    std::optional<int> degree_bound;  // default 4 + 2 * max generator degree
    bool parallel = false;
};

HilbertResult hilbert_polynomial(const Ideal& ideal, const HilbertOptions& opts = {});

bool jacobian_smoothness(const Poly& f, int nvars = 4);

}  // namespace modcheck::poly
