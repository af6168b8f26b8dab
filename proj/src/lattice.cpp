#include "modcheck/lattice.hpp"

#include <json.hpp>

#include <deque>
#include <unordered_map>

namespace modcheck::lattice {

using exact::Rational;

GaussMatrix dm_form_h() {
    GaussMatrix h(6, 6);
    for (std::size_t k = 0; k < 6; ++k) h(k, k) = GaussianInt(-2);
    for (std::size_t k = 0; k + 1 < 6; ++k) {
        h(k, k + 1) = GaussianInt(1, -1);
        h(k + 1, k) = GaussianInt(1, 1);
    }
    return h;
}

GaussMatrix prym_form() {
    return GaussMatrix{{GaussianInt(-2), GaussianInt(1, -1)}, {GaussianInt(1, 1), GaussianInt(-2)}};
}

IntMatrix intersection_skew() {
    return IntMatrix{{0, 1, 2, -1}, {-1, 0, -1, 2}, {-2, 1, 0, 1}, {1, -2, -1, 0}};
}

IntMatrix intersection_skew_as_printed() {
    return IntMatrix{{0, -1, 2, -1}, {-1, 0, -1, 2}, {-2, 1, 0, 1}, {1, -2, -1, 0}};
}

namespace {

// rho on coordinates (a1, a2, b1, b2): a_j -> -b_j, b_j -> a_j
IntMatrix rho_matrix() {
    IntMatrix r(4, 4);
    r(2, 0) = -1;
    r(3, 1) = -1;
    r(0, 2) = 1;
    r(1, 3) = 1;
    return r;
}

Integer bilinear(const IntMatrix& q, const std::vector<Integer>& v, const std::vector<Integer>& w) {
    Integer s = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) s += v[i] * q(i, j) * w[j];
    return s;
}

std::vector<Integer> mat_apply(const IntMatrix& m, const std::vector<Integer>& v) {
    std::vector<Integer> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

std::vector<Integer> unit(std::size_t k) {
    std::vector<Integer> v(4, 0);
    v[k] = 1;
    return v;
}

}  // namespace

GaussMatrix hermitian_from_skew(const IntMatrix& q) {
    if (q.rows() != 4 || q.cols() != 4) throw std::invalid_argument("expected a 4x4 intersection matrix");
    IntMatrix rho = rho_matrix();
    GaussMatrix h(2, 2);
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 2; ++t) {
            auto v = unit(s), w = unit(t);
            h(s, t) = GaussianInt(bilinear(q, v, mat_apply(rho, w)), -bilinear(q, v, w));
        }
    return h;
}

bool rho_invariant(const IntMatrix& q) {
    IntMatrix rho = rho_matrix();
    return rho.transpose() * q * rho == q;
}

GaussMatrix reflection_alpha() {
    return GaussMatrix{{GaussianInt(-1), GaussianInt(-1, 1)}, {GaussianInt(0), GaussianInt(1)}};
}

GaussMatrix reflection_beta() {
    return GaussMatrix{{GaussianInt(1), GaussianInt(0)}, {GaussianInt(-1, -1), GaussianInt(-1)}};
}

GaussMatrix reflection_gamma() {
    return GaussMatrix{{GaussianInt(0, 1), GaussianInt(1, 1)}, {GaussianInt(1, -1), GaussianInt(0, -1)}};
}

bool is_skew(const IntMatrix& m) { return m.square() && m.transpose() == -m; }

Signature real_signature(const QMatrix& input) {
    QMatrix a = input;
    const std::size_t n = a.rows();
    if (!a.square() || !(a.transpose() == a)) throw std::invalid_argument("real_signature expects a symmetric matrix");
    Signature sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!done[i] && a(i, i) != 0) p = i;
        if (p == n) {
            // no usable diagonal pivot: combine two coordinates with a nonzero off-diagonal entry
            std::size_t ii = n, jj = n;
            for (std::size_t i = 0; i < n && ii == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && a(i, j) != 0) {
                        ii = i;
                        jj = j;
                        break;
                    }
            if (ii == n) break;  // remaining block is zero
            // e_ii <- e_ii + e_jj
            for (std::size_t k = 0; k < n; ++k) a(ii, k) += a(jj, k);
            for (std::size_t k = 0; k < n; ++k) a(k, ii) += a(k, jj);
            p = ii;
        }
        done[p] = true;
        Rational piv = a(p, p);
        (piv > 0 ? sig.positive : sig.negative) += 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a(i, p) == 0) continue;
            Rational f = a(i, p) / piv;
            for (std::size_t k = 0; k < n; ++k) a(i, k) -= f * a(p, k);
            for (std::size_t k = 0; k < n; ++k) a(k, i) -= f * a(k, p);
        }
    }
    sig.zero = static_cast<long>(n) - sig.positive - sig.negative;
    return sig;
}

namespace {

// Re(conj(beta_p) * x * beta_q) for real basis beta = (1, i).
Rational real_part_block(const GaussianInt& x, int p, int q) {
    // conj(i^p) x i^q = i^(q-p) x
    GaussianInt y = x;
    int k = ((q - p) % 4 + 4) % 4;
    for (int s = 0; s < k; ++s) y = y * GaussianInt::unit_i();
    return Rational(y.re);
}

// Re(conj(beta_p) * x * beta_q) for beta = (1, w); Re(a + b w) = a - b/2.
Rational real_part_block(const EisensteinInt& x, int p, int q) {
    EisensteinInt w = EisensteinInt::omega();
    EisensteinInt y = x;
    if (p == 1) y = exact::conj(w) * y;
    if (q == 1) y = y * w;
    return Rational(y.a) - Rational(y.b) / 2;
}

template <class R>
Signature complex_signature(const exact::Matrix<R>& h) {
    if (!is_hermitian(h)) throw std::invalid_argument("signature expects a Hermitian matrix");
    const std::size_t n = h.rows();
    QMatrix real(2 * n, 2 * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) real(2 * s + p, 2 * t + q) = real_part_block(h(s, t), p, q);
    Signature r = real_signature(real);
    return {r.positive / 2, r.negative / 2, r.zero / 2};
}

}  // namespace

Signature signature(const GaussMatrix& h) { return complex_signature(h); }
Signature signature(const EisMatrix& h) { return complex_signature(h); }

bool congruence_level(const GaussMatrix& g, const GaussianInt& delta) {
    if (!g.square()) throw std::invalid_argument("congruence_level expects a square matrix");
    GaussMatrix d = g - GaussMatrix::identity(g.rows());
    for (const auto& x : d.entries())
        if (!exact::gauss_divides(delta, x)) return false;
    return true;
}

template <class R>
bool GroupClosure<R>::contains(const exact::Matrix<R>& m) const {
    for (const auto& e : elements)
        if (e == m) return true;
    return false;
}

template struct GroupClosure<GaussianInt>;
template struct GroupClosure<EisensteinInt>;

namespace {

template <class R>
GroupClosure<R> closure(const std::vector<exact::Matrix<R>>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("generate_group needs at least one generator");
    const std::size_t n = gens.front().rows();
    for (const auto& g : gens)
        if (!g.square() || g.rows() != n) throw std::invalid_argument("generators must be square of equal size");
    GroupClosure<R> out;
    std::unordered_map<std::string, std::size_t> seen;
    std::deque<std::size_t> queue;
    auto add = [&](exact::Matrix<R> m) {
        std::string key = exact::to_string(m);
        if (seen.count(key)) return;
        if (out.elements.size() >= cap)
            throw GroupTooLarge("group closure exceeds cap of " + std::to_string(cap) + " elements");
        seen.emplace(std::move(key), out.elements.size());
        queue.push_back(out.elements.size());
        out.elements.push_back(std::move(m));
    };
    add(exact::Matrix<R>::identity(n));
    while (!queue.empty()) {
        std::size_t idx = queue.front();
        queue.pop_front();
        for (const auto& g : gens) add(out.elements[idx] * g);
    }
    for (const auto& e : out.elements) {
        long k = element_order(e, static_cast<long>(cap) + 1);
        ++out.order_census[k];
        bool central = true;
        for (const auto& g : gens)
            if (!(e * g == g * e)) central = false;
        if (central) ++out.center_size;
    }
    return out;
}

}  // namespace

GroupClosure<GaussianInt> generate_group(const std::vector<GaussMatrix>& gens, std::size_t cap) {
    return closure(gens, cap);
}

GroupClosure<EisensteinInt> generate_group(const std::vector<EisMatrix>& gens, std::size_t cap) {
    return closure(gens, cap);
}

EisensteinInt form_value(const std::vector<EisensteinInt>& v, const EisMatrix& form, const std::vector<EisensteinInt>& w) {
    EisensteinInt s(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) s += exact::conj(v[i]) * form(i, j) * w[j];
    return s;
}

EisMatrix triflection(const std::vector<EisensteinInt>& r, const EisMatrix& form) {
    const std::size_t n = r.size();
    if (!form.square() || form.rows() != n) throw std::invalid_argument("triflection: dimension mismatch");
    if (!is_hermitian(form)) throw std::invalid_argument("triflection: form is not Hermitian");
    EisensteinInt rr = form_value(r, form, r);
    if (!(rr == EisensteinInt(-3)))
        throw std::invalid_argument("triflection: r.r = " + exact::to_string(rr) + ", expected -3");
    // x.r = (r^* L) x ; T = I + r (r^* L) / (1 - conj(w)) since -(1-w)/(-3) = 1/(1 - conj(w))
    std::vector<EisensteinInt> row(n, EisensteinInt(0));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s) row[t] += exact::conj(r[s]) * form(s, t);
    const EisensteinInt denom = EisensteinInt(1) - exact::conj(EisensteinInt::omega());
    EisMatrix tm = EisMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto d = exact::divmod(r[i] * row[j], denom);
            if (!d.remainder.is_zero()) throw std::invalid_argument("triflection: matrix is not integral over Z[w]");
            tm(i, j) += d.quotient;
        }
    return tm;
}

GaussMatrix parse_gauss_matrix_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a non-empty array of rows");
    GaussMatrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) throw std::invalid_argument("ragged matrix JSON");
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const auto& e = j[i][k];
            m(i, k) = e.is_string() ? exact::parse_gaussian(e.get<std::string>()) : GaussianInt(e.get<long>());
        }
    }
    return m;
}

}  // namespace modcheck::lattice
