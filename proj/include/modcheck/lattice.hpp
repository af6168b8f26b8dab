#pragma once

#include "modcheck/exact.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace modcheck::lattice {

using exact::EisensteinInt;
using exact::EisMatrix;
using exact::GaussianInt;
using exact::GaussMatrix;
using exact::Integer;
using exact::QMatrix;
using IntMatrix = exact::Matrix<Integer>;

struct Signature {
    long positive = 0;
    long negative = 0;
    long zero = 0;

    bool operator==(const Signature& o) const {
        return positive == o.positive && negative == o.negative && zero == o.zero;
    }
};

// Form on the Gaussian period lattice: -2 on the diagonal, 1-i above, 1+i below.
GaussMatrix dm_form_h();
// 2x2 Hermitian form on the Prym lattice.
GaussMatrix prym_form();
// Intersection form on the basis a1, a2, b1, b2 with the (1,2) entry chosen so
// the matrix is skew; intersection_skew_as_printed() keeps the printed entry.
IntMatrix intersection_skew();
IntMatrix intersection_skew_as_printed();
// Hermitian form Q(v, rho w) - i Q(v, w) on span{a1, a2}, where rho a_j = -b_j, rho b_j = a_j.
GaussMatrix hermitian_from_skew(const IntMatrix& q);
// Q(rho v, rho w) == Q(v, w) for the same rho.
bool rho_invariant(const IntMatrix& q);

GaussMatrix reflection_alpha();
GaussMatrix reflection_beta();
GaussMatrix reflection_gamma();

template <class R>
bool is_hermitian(const exact::Matrix<R>& m) {
    return m.square() && exact::conj_transpose(m) == m;
}
bool is_skew(const IntMatrix& m);

// Inertia of the real symmetric form Re h on the underlying real space,
// divided by two; exact congruence diagonalisation over Q.
Signature signature(const GaussMatrix& h);
Signature signature(const EisMatrix& h);
Signature real_signature(const QMatrix& symmetric);

enum class FormAction {
    Column,  // conj(g)^t H g == H
    Row,     // g H conj(g)^t == H
};

template <class R>
bool preserves_form(const exact::Matrix<R>& g, const exact::Matrix<R>& h, FormAction action = FormAction::Column) {
    if (!g.square() || !h.square() || g.rows() != h.rows()) throw std::invalid_argument("preserves_form: dimension mismatch");
    if (action == FormAction::Column) return exact::conj_transpose(g) * h * g == h;
    return g * h * exact::conj_transpose(g) == h;
}

bool congruence_level(const GaussMatrix& g, const GaussianInt& delta);

template <class R>
struct GroupClosure {
    std::vector<exact::Matrix<R>> elements;  // identity first, then breadth-first order
    std::map<long, long> order_census;       // element order -> count
    std::size_t center_size = 0;

    std::size_t order() const { return elements.size(); }
    bool contains(const exact::Matrix<R>& m) const;
};

class GroupTooLarge : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

GroupClosure<GaussianInt> generate_group(const std::vector<GaussMatrix>& gens, std::size_t cap);
GroupClosure<EisensteinInt> generate_group(const std::vector<EisMatrix>& gens, std::size_t cap);

// Order of g (smallest k >= 1 with g^k = I), or 0 if it exceeds cap.
template <class R>
long element_order(const exact::Matrix<R>& g, long cap = 1000) {
    auto id = exact::Matrix<R>::identity(g.rows());
    auto p = g;
    for (long k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * g;
    }
    return 0;
}

// x -> x - (1 - w) (x.r / r.r) r with x.r = r^* L x; requires r.r = -3.
EisMatrix triflection(const std::vector<EisensteinInt>& r, const EisMatrix& form);
EisensteinInt form_value(const std::vector<EisensteinInt>& v, const EisMatrix& form, const std::vector<EisensteinInt>& w);

// "a+bi" strings in nested JSON arrays.
GaussMatrix parse_gauss_matrix_json(const std::string& json_text);

}  // namespace modcheck::lattice
