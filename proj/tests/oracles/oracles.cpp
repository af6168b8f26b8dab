#include "oracles/oracles.hpp"

#include <map>

namespace oracle {

using modcheck::poly::Monomial;
using modcheck::poly::Poly;

bool gauss_divides_brute(const GaussianInt& d, const GaussianInt& x, long bound) {
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            GaussianInt q(a, b);
            GaussianInt p = d * q;
            if (p.re == x.re && p.im == x.im) return true;
        }
    return false;
}

namespace {

// exponent vectors of total degree d in n variables
void exponents(int n, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur.push_back(k);
        exponents(n, d - k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_exponents(int n, int d) {
    std::vector<std::vector<int>> out;
    if (d < 0) return out;
    std::vector<int> cur;
    exponents(n, d, cur, out);
    return out;
}

Monomial to_monomial(const std::vector<int>& e) {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.exp[i] = static_cast<std::uint16_t>(e[i]);
    return m;
}

std::vector<std::vector<Rational>> slice_rows(const std::vector<Poly>& gens, int degree, int nvars) {
    auto basis = all_exponents(nvars, degree);
    std::map<Monomial, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[to_monomial(basis[i])] = i;
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        for (const auto& m : all_exponents(nvars, degree - g.total_degree())) {
            Poly prod = Poly::term(1, to_monomial(m)) * g;
            std::vector<Rational> row(basis.size());
            for (const auto& [mon, c] : prod.terms()) row.at(column.at(mon)) = c;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace

long rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return static_cast<long>(r);
}

long ideal_slice_dim(const std::vector<Poly>& gens, int degree, int nvars) {
    return rank(slice_rows(gens, degree, nvars));
}

bool in_ideal_linear(const std::vector<Poly>& gens, const Poly& f, int nvars) {
    if (f.is_zero()) return true;
    const int d = f.total_degree();
    auto rows = slice_rows(gens, d, nvars);
    long before = rank(rows);
    auto extended = slice_rows({f}, d, nvars);
    rows.insert(rows.end(), extended.begin(), extended.end());
    return rank(rows) == before;
}

long standard_monomials_brute(const std::vector<std::vector<int>>& lead, int nvars, int degree) {
    long count = 0;
    for (const auto& e : all_exponents(nvars, degree)) {
        bool divisible = false;
        for (const auto& l : lead) {
            bool div = true;
            for (int i = 0; i < nvars; ++i) div = div && l[i] <= e[i];
            divisible = divisible || div;
        }
        if (!divisible) ++count;
    }
    return count;
}

CensusCounts census_brute(int n) {
    // weights 2/n + eps, compared after scaling by n: k points weigh 2k + k*eps (in units of 1/n)
    CensusCounts c;
    auto coincidence_ok = [n](int k) { return 2 * k < n; };              // 2k/n + k eps <= 1
    auto side_ok = [n](int k) { return 2 * k > n || (2 * k == n && k > 0); };  // 1 + 2k/n + k eps > 2
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coincidence_ok(2)) ++c.pair_collisions;
    long ordered = 0;
    for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
        int k = __builtin_popcountl(mask);
        if (k >= 2 && n - k >= 2 && side_ok(k) && side_ok(n - k)) ++ordered;
    }
    c.balanced_splits = ordered / 2;
    return c;
}

Rational random_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

GaussianInt random_gaussian(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    long a = d(rng), b = d(rng);
    return GaussianInt(Integer(a), Integer(b));
}

modcheck::exact::EisensteinInt random_eisenstein(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    long a = d(rng), b = d(rng);
    return modcheck::exact::EisensteinInt{Integer(a), Integer(b)};
}

}  // namespace oracle
