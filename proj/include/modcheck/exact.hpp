#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modcheck::exact {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Rational with a symbolic positive infinitesimal: value = c + e*eps.
// Ordering is lexicographic on (c, e), i.e. valid for all small eps > 0.
struct EpsValue {
    Rational c;
    Rational e;

    EpsValue() = default;
    EpsValue(Rational constant, Rational eps_coef = 0) : c(std::move(constant)), e(std::move(eps_coef)) {}
    static EpsValue eps() { return {0, 1}; }

    EpsValue operator+(const EpsValue& o) const { return {c + o.c, e + o.e}; }
    EpsValue operator-(const EpsValue& o) const { return {c - o.c, e - o.e}; }
    EpsValue operator-() const { return {-c, -e}; }
    EpsValue& operator+=(const EpsValue& o) { c += o.c; e += o.e; return *this; }
    friend EpsValue operator*(const Rational& k, const EpsValue& v) { return {k * v.c, k * v.e}; }

    int sign() const;
    bool operator==(const EpsValue& o) const { return c == o.c && e == o.e; }
    bool operator<(const EpsValue& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const EpsValue& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const EpsValue& o) const { return o < *this; }
    bool operator>=(const EpsValue& o) const { return o <= *this; }
};
std::string to_string(const EpsValue& v);

// re + im*i
struct GaussianInt {
    Integer re;
    Integer im;

    GaussianInt() = default;
    GaussianInt(long r) : re(r), im(0) {}
    GaussianInt(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}
    static GaussianInt unit_i() { return {0, 1}; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt& operator+=(const GaussianInt& o) { re += o.re; im += o.im; return *this; }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }
};
GaussianInt conj(const GaussianInt& z);
Integer norm(const GaussianInt& z);
std::string to_string(const GaussianInt& z);
GaussianInt parse_gaussian(std::string_view text);

// a + b*w with w^2 + w + 1 = 0
struct EisensteinInt {
    Integer a;
    Integer b;

    EisensteinInt() = default;
    EisensteinInt(long x) : a(x), b(0) {}
    EisensteinInt(Integer x, Integer y = 0) : a(std::move(x)), b(std::move(y)) {}
    static EisensteinInt omega() { return {0, 1}; }

    EisensteinInt operator+(const EisensteinInt& o) const { return {a + o.a, b + o.b}; }
    EisensteinInt operator-(const EisensteinInt& o) const { return {a - o.a, b - o.b}; }
    EisensteinInt operator-() const { return {-a, -b}; }
    EisensteinInt operator*(const EisensteinInt& o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    EisensteinInt& operator+=(const EisensteinInt& o) { a += o.a; b += o.b; return *this; }
    bool operator==(const EisensteinInt& o) const { return a == o.a && b == o.b; }
    bool is_zero() const { return a == 0 && b == 0; }
};
EisensteinInt conj(const EisensteinInt& z);
Integer norm(const EisensteinInt& z);
std::string to_string(const EisensteinInt& z);

inline Rational conj(const Rational& q) { return q; }
inline Integer conj(const Integer& z) { return z; }
inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Integer& z) { return z == 0; }
inline bool is_zero(const GaussianInt& z) { return z.is_zero(); }
inline bool is_zero(const EisensteinInt& z) { return z.is_zero(); }

template <class R>
struct DivResult {
    R quotient;
    R remainder;
};

// Nearest-lattice-point division: x = d*q + r with norm(r) minimal.
// Ties go to the quotient of smaller norm, then lexicographically smaller components.
DivResult<GaussianInt> divmod(const GaussianInt& x, const GaussianInt& d);
DivResult<EisensteinInt> divmod(const EisensteinInt& x, const EisensteinInt& d);

bool gauss_divides(const GaussianInt& d, const GaussianInt& x);
bool eisenstein_divides(const EisensteinInt& d, const EisensteinInt& x);

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
    Matrix(std::initializer_list<std::initializer_list<R>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<R>& entries() const { return data_; }

    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const R& a = (*this)(i, k);
                if (is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix scaled(const R& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = s * data_[k];
        return r;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix conjugate() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = conj(data_[k]);
        return r;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

template <class R>
Matrix<R> conj_transpose(const Matrix<R>& m) {
    return m.conjugate().transpose();
}

template <class R>
std::string to_string(const Matrix<R>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ",";
            s += to_string(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

using GaussMatrix = Matrix<GaussianInt>;
using EisMatrix = Matrix<EisensteinInt>;
using QMatrix = Matrix<Rational>;

}  // namespace modcheck::exact
