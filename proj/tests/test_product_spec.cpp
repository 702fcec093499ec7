#include <doctest.h>

#include "podq/product_spec.hpp"

using namespace podq;

TEST_CASE("parse a two-factor spec") {
    ProductSpec spec = ProductSpec::parse("(-q^1;q^2)^2 * (q^2;q^2)^-2");
    REQUIRE(spec.factors.size() == 2);
    CHECK(spec.factors[0] == PochFactor{-1, 1, 2, 2});
    CHECK(spec.factors[1] == PochFactor{1, 2, 2, -2});
}

TEST_CASE("defaults: bare q means exponent 1") {
    ProductSpec spec = ProductSpec::parse("(q;q)");
    REQUIRE(spec.factors.size() == 1);
    CHECK(spec.factors[0] == PochFactor{1, 1, 1, 1});

    ProductSpec pod = ProductSpec::parse("(-q;q^2)");
    CHECK(pod.factors[0] == PochFactor{-1, 1, 2, 1});
}

TEST_CASE("factors may be juxtaposed or starred") {
    ProductSpec a = ProductSpec::parse("(q;q)(q^2;q^2)");
    ProductSpec b = ProductSpec::parse("(q;q) * (q^2;q^2)");
    CHECK(a == b);
    REQUIRE(a.factors.size() == 2);
    CHECK(a.factors[1].step == 2);
}

TEST_CASE("whitespace is insignificant") {
    ProductSpec a = ProductSpec::parse("  ( - q ^ 3 ; q ^ 4 ) ^ -1  ");
    REQUIRE(a.factors.size() == 1);
    CHECK(a.factors[0] == PochFactor{-1, 3, 4, -1});
    CHECK(a == ProductSpec::parse("(-q^3;q^4)^-1"));
}

TEST_CASE("empty spec is the constant 1") {
    CHECK(ProductSpec::parse("").factors.empty());
    CHECK(ProductSpec::parse("   ").factors.empty());
    CHECK(ProductSpec::parse("").to_string() == "");
}

TEST_CASE("to_string round-trips") {
    const char* samples[] = {
        "(q;q)",
        "(-q;q^2)",
        "(q^8;q^8)^2 * (q;q)^-3 * (q^4;q^4)^-1",
        "(q^2;q^2)^4 * (q^6;q^6)^6 * (q;q)^-6 * (q^4;q^4)^-6",
    };
    for (const char* text : samples) {
        ProductSpec spec = ProductSpec::parse(text);
        CHECK(ProductSpec::parse(spec.to_string()) == spec);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_WITH_AS(ProductSpec::parse("(q;q"),
                         doctest::Contains("position 4"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(ProductSpec::parse("(p;q)"),
                         doctest::Contains("expected 'q'"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(ProductSpec::parse("(q;-q)"),
                         doctest::Contains("nome"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(ProductSpec::parse("(q^0;q)"),
                         doctest::Contains(">= 1"), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec::parse("(q;q)^"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(ProductSpec::parse("(q;q) *"),
                         doctest::Contains("dangling"), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec::parse("q;q"), std::invalid_argument);
}

TEST_CASE("validate rejects hand-built bad factors") {
    ProductSpec spec;
    spec.factors.push_back(PochFactor{2, 1, 1, 1});
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.factors[0] = PochFactor{1, 0, 1, 1};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.factors[0] = PochFactor{1, 1, 0, 1};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.factors[0] = PochFactor{1, 1, 1, 0};  // exponent 0 is allowed
    CHECK_NOTHROW(spec.validate());
}
