#pragma once

// Symbolic description of a product of infinite q-Pochhammer symbols,
//   prod_i (sign_i q^offset_i ; q^step_i)_inf ^ exponent_i,
// together with a small text grammar:
//
//   spec    := factor (('*'|whitespace) factor)*
//   factor  := '(' ['-'|'+'] 'q' ['^' uint] ';' 'q' ['^' uint] ')' ['^' int]
//
// e.g. "(-q^1;q^2)^2 * (q^2;q^2)^-2".  Omitted exponents default to 1.  An
// empty spec denotes the constant 1.

#include <string>
#include <string_view>
#include <vector>

#include "podq/series.hpp"

namespace podq {

struct PochFactor {
    int sign = 1;       // +1 or -1, sign of the base monomial
    i64 offset = 1;     // q-exponent of the base monomial, >= 1
    i64 step = 1;       // q-exponent of the nome, >= 1
    i64 exponent = 1;   // integer power of the whole symbol, may be negative

    friend bool operator==(const PochFactor&, const PochFactor&) = default;
};

struct ProductSpec {
    std::vector<PochFactor> factors;

    static ProductSpec parse(std::string_view text);
    std::string to_string() const;

    // Enforces sign in {+1,-1}, offset >= 1, step >= 1 on every factor.
    void validate() const;

    friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

}  // namespace podq
