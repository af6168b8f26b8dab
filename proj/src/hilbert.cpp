#include "modcheck/poly.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>

namespace modcheck::poly {

namespace {

// All exponent vectors of the given degree in nvars variables, in a fixed order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            cur.exp[var] = static_cast<std::uint16_t>(left);
            out.push_back(cur);
            cur.exp[var] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur.exp[var] = static_cast<std::uint16_t>(e);
            self(self, var + 1, left - e);
        }
        cur.exp[var] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

bool is_standard(const Monomial& m, const std::vector<Monomial>& lead) {
    for (const auto& l : lead)
        if (l.divides(m)) return false;
    return true;
}

void require_homogeneous(const Ideal& ideal) {
    for (const auto& g : ideal.generators)
        if (!g.is_homogeneous()) throw std::invalid_argument("Hilbert function requires homogeneous generators");
}

}  // namespace

long count_standard_monomials(const std::vector<Monomial>& lead, int nvars, int degree) {
    if (degree < 0) return 0;
    long count = 0;
    for (const auto& m : monomials_of_degree(nvars, degree))
        if (is_standard(m, lead)) ++count;
    return count;
}

long count_standard_monomials_parallel(const std::vector<Monomial>& lead, int nvars, int degree) {
    if (degree < 0) return 0;
    const std::vector<Monomial> all = monomials_of_degree(nvars, degree);
    const long n = static_cast<long>(all.size());
    long count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (long k = 0; k < n; ++k)
        if (is_standard(all[k], lead)) ++count;
    return count;
}

long hilbert_function(const GroebnerBasis& gb, int degree) {
    if (gb.order.kind != OrderKind::Grevlex) throw std::invalid_argument("hilbert_function expects a grevlex basis");
    return count_standard_monomials(gb.leading_monomials(), gb.order.nvars, degree);
}

long hilbert_function(const Ideal& ideal, int degree) {
    require_homogeneous(ideal);
    return hilbert_function(buchberger(ideal, MonomialOrder{OrderKind::Grevlex, ideal.nvars}), degree);
}

namespace {

// Newton interpolation through (x0 + k, values[k]) for k = 0..values.size()-1.
UniPoly interpolate(int x0, const std::vector<long>& values) {
    const std::size_t n = values.size();
    std::vector<Rational> diff(values.begin(), values.end());
    std::vector<Rational> newton;
    for (std::size_t k = 0; k < n; ++k) {
        newton.push_back(diff[0]);
        for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = (diff[j + 1] - diff[j]) / Rational(static_cast<long>(k + 1));
        diff.pop_back();
    }
    // sum newton[k] * prod_{j<k} (m - x0 - j)
    UniPoly result;
    result.coeffs.assign(n, 0);
    std::vector<Rational> basis{1};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) result.coeffs[i] += newton[k] * basis[i];
        std::vector<Rational> next(basis.size() + 1, 0);
        Rational shift = -Rational(x0 + static_cast<long>(k));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] += shift * basis[i];
        }
        basis = std::move(next);
    }
    while (!result.coeffs.empty() && result.coeffs.back() == 0) result.coeffs.pop_back();
    return result;
}

}  // namespace

HilbertResult hilbert_polynomial(const Ideal& ideal, const HilbertOptions& opts) {
    require_homogeneous(ideal);
    int maxdeg = 0;
    for (const auto& g : ideal.generators) maxdeg = std::max(maxdeg, g.total_degree());
    const int bound = opts.degree_bound.value_or(4 + 2 * maxdeg);
    const int n = ideal.nvars;
    GroebnerBasis gb = opts.parallel ? buchberger_parallel(ideal, MonomialOrder{OrderKind::Grevlex, n})
                                     : buchberger(ideal, MonomialOrder{OrderKind::Grevlex, n});
    auto lead = gb.leading_monomials();

    HilbertResult res;
    for (int m = 0; m <= bound; ++m)
        res.values.push_back(opts.parallel ? count_standard_monomials_parallel(lead, n, m)
                                           : count_standard_monomials(lead, n, m));
    // the eventual polynomial has degree < n; a window of n values fixes it,
    // and at least two further degrees must confirm it
    for (int m0 = 0; m0 + n - 1 + 2 <= bound; ++m0) {
        std::vector<long> window(res.values.begin() + m0, res.values.begin() + m0 + n);
        UniPoly p = interpolate(m0, window);
        bool ok = true;
        for (int m = m0 + n; m <= bound && ok; ++m) ok = p(Rational(m)) == Rational(res.values[m]);
        if (ok) {
            res.polynomial = p;
            res.stable_from = m0;
            res.checked_through = bound;
            // earliest degree where the function meets the polynomial
            while (res.stable_from > 0 && p(Rational(res.stable_from - 1)) == Rational(res.values[res.stable_from - 1]))
                --res.stable_from;
            return res;
        }
    }
    std::ostringstream msg;
    msg << "Hilbert polynomial did not stabilise within degree bound " << bound << "; values:";
    for (long v : res.values) msg << ' ' << v;
    throw std::runtime_error(msg.str());
}

}  // namespace modcheck::poly
