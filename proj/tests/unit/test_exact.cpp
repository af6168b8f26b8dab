#include "modcheck/exact.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

using namespace modcheck::exact;

TEST_SUITE("exact") {

TEST_CASE("rational parsing and normal form") {
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(to_string(parse_rational("6/8")) == "3/4");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        Rational p = oracle::random_rational(rng, 50), q = oracle::random_rational(rng, 50), r = oracle::random_rational(rng, 50);
        CHECK(Rational((p + q) + r) == Rational(p + (q + r)));
        CHECK(Rational(p * (q + r)) == Rational(p * q + p * r));
        Rational s = p;
        s.canonicalize();
        CHECK(s == p);
        CHECK(s.get_den() > 0);
    }
}

TEST_CASE("epsilon values compare lexicographically") {
    EpsValue a(Rational(1, 4), 1);
    CHECK(a > EpsValue(Rational(1, 4)));
    CHECK(Rational(4) * a > EpsValue(1));
    CHECK(Rational(4) * EpsValue(Rational(1, 4), -1) < EpsValue(1));
    CHECK(EpsValue(2) <= EpsValue(2));
    CHECK(EpsValue(Rational(19, 9), -100) > EpsValue(2));
    CHECK(to_string(EpsValue(Rational(1, 3), 3)) == "1/3+3*eps");
    CHECK(to_string(EpsValue(0, 9)) == "9*eps");
}

TEST_CASE("gaussian divisibility") {
    GaussianInt d(1, -1);
    CHECK(gauss_divides(d, GaussianInt(-2)));
    CHECK_FALSE(gauss_divides(d, GaussianInt(1)));
    CHECK_THROWS(gauss_divides(GaussianInt(0), GaussianInt(1)));
    for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
            GaussianInt x{Integer(a), Integer(b)};
            bool brute = oracle::gauss_divides_brute(d, x, 12);
            CHECK(gauss_divides(d, x) == brute);
            CHECK(brute == ((a + b) % 2 == 0));
        }
}

TEST_CASE("gaussian norm is multiplicative") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        auto z = oracle::random_gaussian(rng, 30), w = oracle::random_gaussian(rng, 30);
        CHECK(norm(z * w) == norm(z) * norm(w));
        CHECK(conj(conj(z)) == z);
        CHECK((z * conj(z)).im == 0);
    }
}

TEST_CASE("eisenstein ring axioms") {
    auto w = EisensteinInt::omega();
    CHECK(w * w + w + EisensteinInt(1) == EisensteinInt(0));
    CHECK(conj(w) == EisensteinInt(-1, -1));
    std::mt19937_64 rng(13);
    for (int k = 0; k < 200; ++k) {
        auto x = oracle::random_eisenstein(rng, 30), y = oracle::random_eisenstein(rng, 30), z = oracle::random_eisenstein(rng, 30);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x * conj(x) == EisensteinInt(norm(x)));
        CHECK(norm(x * y) == norm(x) * norm(y));
    }
}

TEST_CASE("division with remainder is euclidean") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
        auto x = oracle::random_gaussian(rng, 40), d = oracle::random_gaussian(rng, 9);
        if (d.is_zero()) continue;
        auto [q, r] = divmod(x, d);
        CHECK(d * q + r == x);
        CHECK(2 * norm(r) <= norm(d));
        auto ex = oracle::random_eisenstein(rng, 40), ed = oracle::random_eisenstein(rng, 9);
        if (ed.is_zero()) continue;
        auto [eq, er] = divmod(ex, ed);
        CHECK(ed * eq + er == ex);
        CHECK(3 * norm(er) <= norm(ed));
    }
}

TEST_CASE("division ties are deterministic") {
    // 1/(1-i) = (1+i)/2 sits on a tie between four lattice points
    auto [q, r] = divmod(GaussianInt(1), GaussianInt(1, -1));
    CHECK(q == GaussianInt(0));
    CHECK(r == GaussianInt(1));
}

TEST_CASE("matrix product matches naive triple loop") {
    std::mt19937_64 rng(19);
    for (int k = 0; k < 20; ++k) {
        GaussMatrix a(4, 4), b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                a(i, j) = oracle::random_gaussian(rng, 5);
                b(i, j) = oracle::random_gaussian(rng, 5);
            }
        CHECK(a * b == oracle::naive_matmul(a, b));
        CHECK(conj_transpose(conj_transpose(a)) == a);
        CHECK(conj_transpose(a * b) == conj_transpose(b) * conj_transpose(a));
    }
}

TEST_CASE("conjugate transpose examples") {
    CHECK(conj_transpose(GaussMatrix::identity(3)) == GaussMatrix::identity(3));
    GaussMatrix i1{{GaussianInt::unit_i()}};
    CHECK(conj_transpose(i1) == GaussMatrix{{GaussianInt(0, -1)}});
    GaussMatrix alpha{{GaussianInt(-1), GaussianInt(-1, 1)}, {GaussianInt(0), GaussianInt(1)}};
    GaussMatrix expect{{GaussianInt(-1), GaussianInt(0)}, {GaussianInt(-1, -1), GaussianInt(1)}};
    CHECK(conj_transpose(alpha) == expect);
}

TEST_CASE("gaussian text form") {
    CHECK(to_string(GaussianInt(1, -1)) == "1-i");
    CHECK(parse_gaussian("1-i") == GaussianInt(1, -1));
    CHECK(parse_gaussian("-2") == GaussianInt(-2));
    CHECK(parse_gaussian("i") == GaussianInt(0, 1));
    CHECK(parse_gaussian("-1+i") == GaussianInt(-1, 1));
    CHECK_THROWS(parse_gaussian("1+x"));
}

}
