#pragma once

// Classical q-series building blocks: infinite and finite Pochhammer
// symbols, the theta functions psi/phi, the general two-parameter theta
// f(a,b) with its triple-product check, and the dissection identities used
// by the congruence scans.  All expansions share the same in-place binomial
// sweep, so a product like (q;q^2)^-2 (q^2;q^2)^-2 at order N costs
// O(N^2 / step) word or limb operations and nothing more.

#include <optional>
#include <vector>

#include "podq/check_report.hpp"
#include "podq/product_spec.hpp"
#include "podq/series.hpp"

namespace podq {

// The monomial sign * q^exponent, used as an argument slot of f(a,b).
struct ThetaArg {
    int sign = 1;
    i64 exponent = 1;
};

// (sign q^offset ; q^step)_inf truncated at the given order.
Series pochhammer(int sign, i64 offset, i64 step, i64 order,
                  std::optional<i64> modulus = std::nullopt);

// (sign q^offset ; q^step)_count, the finite product.
Series pochhammer_finite(int sign, i64 offset, i64 step, i64 count, i64 order,
                         std::optional<i64> modulus = std::nullopt);

// Expand a symbolic product spec; the empty spec gives the constant 1.
Series expand_product(const ProductSpec& spec, i64 order,
                      std::optional<i64> modulus = std::nullopt);

// psi(q) = sum q^{n(n+1)/2}  (triangular-number indicator).
Series psi(i64 order, std::optional<i64> modulus = std::nullopt);

// phi(q) = sum over all integers n of q^{n^2}.
Series phi(i64 order, std::optional<i64> modulus = std::nullopt);

// f(a,b) = sum over all integers n of a^{n(n+1)/2} b^{n(n-1)/2} for monomial
// arguments a, b.  Requires exponent(a) + exponent(b) >= 1.
Series theta_f(ThetaArg a, ThetaArg b, i64 order,
               std::optional<i64> modulus = std::nullopt);

// Verifies f(a,b) = (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf at the given
// order.  The mixed-sign cases need the nome split
// (c; -Q)_inf = (c; Q^2)_inf (-cQ; Q^2)_inf applied factor by factor.
bool jacobi_triple_product_check(ThetaArg a, ThetaArg b, i64 order);
CheckReport jacobi_triple_product_report(i64 order);

// A(q) = (q^2;q^2)(q^3;q^3)^2 / ((q;q)(q^6;q^6)), the bilateral pentagonal
// indicator f(q, q^2) that drives the 3-dissection of 1/psi(-q).
Series a_series(i64 order, std::optional<i64> modulus = std::nullopt);

// Generating functions for partitions (resp. pairs of partitions) with odd
// parts distinct: (-q;q^2)/(q^2;q^2) and its square.
Series pod1_gf(i64 order, std::optional<i64> modulus = std::nullopt);
Series pod2_gf(i64 order, std::optional<i64> modulus = std::nullopt);

// The dissection toolbox behind the arithmetic results, each verified as an
// exact (or mod-p) series identity at the given order:
//   lemma2.1a     1/psi(-q) split by exponent parity
//   lemma2.1b     1/psi(-q) split mod 3 via A(-q^3)
//   psi2split     psi(q) = f(q^6, q^10) + q f(q^2, q^14)
//   lemma3.1a     psi(q) = f(q^3, q^6) + q psi(q^9)
//   lemma3.1b     psi(q^3) = psi(q)^3 (mod 3)
//   psi5pow       psi(q^5) = psi(q)^5 (mod 5)
//   psi5split     q psi(q) psi(q^5) as a 5-dissection
//   psiprod       psi(q) psi(-q) = (q^2;q^2)(q^4;q^4)
// Requires order >= 30 so every branch sees nontrivial coefficients.
std::vector<CheckReport> dissection_lemma_checks(i64 order);

}  // namespace podq
