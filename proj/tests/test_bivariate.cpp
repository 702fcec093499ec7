#include <doctest.h>

#include <map>
#include <random>

#include "podq/bivariate.hpp"

using namespace podq;

namespace {

BivariateSeries random_table(std::mt19937& rng, i64 order) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    BivariateSeries t(order);
    for (i64 n = 0; n <= order; ++n)
        for (i64 m = -n; m <= n; ++m) t.set_coeff(m, n, coeff(rng));
    return t;
}

}  // namespace

TEST_CASE("triangle bounds") {
    BivariateSeries t(3);
    CHECK(t.coeff(3, 2) == 0);   // outside the triangle but inside the order
    CHECK(t.coeff(-3, 2) == 0);
    CHECK_THROWS_AS(t.coeff(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(t.coeff(0, -1), std::invalid_argument);
    CHECK_THROWS_AS(t.set_coeff(3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(t.add_to_coeff(-2, 1, 1), std::invalid_argument);
    t.set_coeff(-2, 2, 5);
    CHECK(t.coeff(-2, 2) == 5);
}

TEST_CASE("(1 + z q)(1 + q/z) expanded by factor sweeps") {
    BivariateSeries t = BivariateSeries::one(4);
    t.mul_factor(-1, 1, 1);   // multiply by (1 + z q)
    t.mul_factor(-1, -1, 1);  // multiply by (1 + q/z)
    CHECK(t.coeff(0, 0) == 1);
    CHECK(t.coeff(1, 1) == 1);
    CHECK(t.coeff(-1, 1) == 1);
    CHECK(t.coeff(0, 1) == 0);
    CHECK(t.coeff(0, 2) == 1);
    CHECK(t.coeff(2, 2) == 0);
    CHECK(t.coeff(0, 3) == 0);

    Series c = collapse_z1(t);
    CHECK(c.coeff(0) == 1);
    CHECK(c.coeff(1) == 2);
    CHECK(c.coeff(2) == 1);
    CHECK(c.coeff(3) == 0);
}

TEST_CASE("factor preconditions") {
    BivariateSeries t = BivariateSeries::one(4);
    CHECK_THROWS_WITH_AS(t.mul_factor(1, 2, 1), doctest::Contains("triangular"),
                         std::invalid_argument);
    CHECK_THROWS_AS(t.mul_factor(1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(t.mul_factor(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(t.div_factor(1, -3, 2), std::invalid_argument);
    CHECK_THROWS_AS(t.shift_monomial(1, 0), std::invalid_argument);
}

TEST_CASE("mul_factor matches the explicit product") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        i64 order = 2 + static_cast<i64>(rng() % 8);
        i64 dq = 1 + static_cast<i64>(rng() % order);
        i64 dz = static_cast<i64>(rng() % (2 * dq + 1)) - dq;
        int c = rng() % 2 == 0 ? 1 : -1;
        BivariateSeries a = random_table(rng, order);

        BivariateSeries factor = BivariateSeries::one(order);
        if (dq <= order) factor.add_to_coeff(dz, dq, -c);
        BivariateSeries expected = bivar_mul(a, factor);

        BivariateSeries swept = a;
        swept.mul_factor(c, dz, dq);
        CHECK(swept == expected);

        swept.div_factor(c, dz, dq);
        CHECK(swept == a);
    }
}

TEST_CASE("bivar_mul is commutative and collapse is a homomorphism") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        i64 order = 2 + static_cast<i64>(rng() % 6);
        BivariateSeries a = random_table(rng, order);
        BivariateSeries b = random_table(rng, order);
        BivariateSeries ab = bivar_mul(a, b);
        CHECK(ab == bivar_mul(b, a));
        CHECK(bivar_mul(a, BivariateSeries::one(order)) == a);
        CHECK(collapse_z1(ab) == mul(collapse_z1(a), collapse_z1(b)));
    }
}

TEST_CASE("factor sweep collapses to the univariate binomial sweep") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        i64 order = 3 + static_cast<i64>(rng() % 8);
        i64 dq = 1 + static_cast<i64>(rng() % order);
        i64 dz = static_cast<i64>(rng() % (2 * dq + 1)) - dq;
        int c = rng() % 2 == 0 ? 1 : -1;
        BivariateSeries a = random_table(rng, order);
        BivariateSeries swept = a;
        swept.mul_factor(c, dz, dq);
        Series expected = collapse_z1(a);
        expected.mul_binomial(c, dq);
        CHECK(collapse_z1(swept) == expected);
    }
}

TEST_CASE("reflect_z is an involution and preserves the collapse") {
    std::mt19937 rng(109);
    BivariateSeries a = random_table(rng, 6);
    BivariateSeries r = a.reflect_z();
    CHECK(r.reflect_z() == a);
    CHECK(collapse_z1(r) == collapse_z1(a));
    CHECK(r.coeff(2, 5) == a.coeff(-2, 5));
}

TEST_CASE("shift_monomial multiplies by z^dz q^dq") {
    std::mt19937 rng(113);
    for (int trial = 0; trial < 20; ++trial) {
        i64 order = 2 + static_cast<i64>(rng() % 6);
        i64 dq = static_cast<i64>(rng() % (order + 1));
        i64 dz = dq == 0 ? 0 : static_cast<i64>(rng() % (2 * dq + 1)) - dq;
        BivariateSeries a = random_table(rng, order);
        BivariateSeries monomial(order);
        monomial.set_coeff(dz, dq, 1);
        BivariateSeries expected = bivar_mul(a, monomial);
        BivariateSeries shifted = a;
        shifted.shift_monomial(dz, dq);
        CHECK(shifted == expected);
    }
}

TEST_CASE("residue_combine with unit weights equals collapse") {
    std::mt19937 rng(127);
    BivariateSeries a = random_table(rng, 8);
    std::map<i64, i64> ones = {{0, 1}, {1, 1}, {2, 1}};
    CHECK(residue_combine(a, 3, ones) == collapse_z1(a));
}

TEST_CASE("residue_combine separates parity") {
    BivariateSeries t = BivariateSeries::one(3);
    t.mul_factor(-1, 1, 1);
    t.mul_factor(-1, -1, 1);  // (1 + z q)(1 + q/z)
    Series alt = residue_combine(t, 2, {{0, 1}, {1, -1}});
    CHECK(alt.coeff(0) == 1);
    CHECK(alt.coeff(1) == -2);
    CHECK(alt.coeff(2) == 1);
    CHECK(alt.coeff(3) == 0);
}

TEST_CASE("residue_combine validates the weight map") {
    BivariateSeries a = BivariateSeries::one(2);
    CHECK_THROWS_WITH_AS(residue_combine(a, 3, {{0, 1}, {2, 1}}),
                         doctest::Contains("every residue class"), std::invalid_argument);
    CHECK_THROWS_AS(residue_combine(a, 0, {}), std::invalid_argument);
    // Extra keys outside [0, t) are ignored.
    Series s = residue_combine(a, 2, {{0, 2}, {1, 0}, {5, 99}});
    CHECK(s.coeff(0) == 2);
}

TEST_CASE("bivar_mul truncates to the smaller order") {
    BivariateSeries a = BivariateSeries::one(5);
    BivariateSeries b = BivariateSeries::one(3);
    CHECK(bivar_mul(a, b).order() == 3);
}
