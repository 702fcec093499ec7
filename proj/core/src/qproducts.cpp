#include "podq/qproducts.hpp"

#include <chrono>
#include <stdexcept>

namespace podq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Multiply s in place by (sign q^offset ; q^step)_inf ^ exponent.
void apply_pochhammer(Series& s, int sign, i64 offset, i64 step, i64 exponent) {
    if (offset < 1 || step < 1)
        throw std::invalid_argument("pochhammer offset and step must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer sign must be +-1");
    if (exponent == 0) return;
    const i64 reps = exponent > 0 ? exponent : -exponent;
    for (i64 j = offset; j <= s.order(); j += step) {
        for (i64 r = 0; r < reps; ++r) {
            if (exponent > 0)
                s.mul_binomial(sign, j);
            else
                s.div_binomial(sign, j);
        }
    }
}

// (base_sign q^offset ; nome_sign q^step)_inf with a possibly negative nome.
// A negative nome alternates the factor sign with the factor index, so split
// the product over even and odd index:
//   (c; -Q)_inf = (c; Q^2)_inf (-cQ; Q^2)_inf.
void apply_pochhammer_signed_nome(Series& s, int base_sign, i64 offset, int nome_sign,
                                  i64 step) {
    if (nome_sign == 1) {
        apply_pochhammer(s, base_sign, offset, step, 1);
    } else {
        apply_pochhammer(s, base_sign, offset, 2 * step, 1);
        apply_pochhammer(s, -base_sign, offset + step, 2 * step, 1);
    }
}

void stamp(CheckReport& rep, i64 order, Clock::time_point t0) {
    rep.order = order;
    rep.ms = ms_since(t0);
}

}  // namespace

Series pochhammer(int sign, i64 offset, i64 step, i64 order, std::optional<i64> modulus) {
    Series s = Series::one(order, modulus);
    apply_pochhammer(s, sign, offset, step, 1);
    return s;
}

Series pochhammer_finite(int sign, i64 offset, i64 step, i64 count, i64 order,
                         std::optional<i64> modulus) {
    if (count < 0) throw std::invalid_argument("finite pochhammer count must be >= 0");
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer sign must be +-1");
    if (offset < 1 || step < 1)
        throw std::invalid_argument("pochhammer offset and step must be >= 1");
    Series s = Series::one(order, modulus);
    for (i64 k = 0; k < count; ++k) {
        i64 j = offset + k * step;
        if (j > order) break;
        s.mul_binomial(sign, j);
    }
    return s;
}

Series expand_product(const ProductSpec& spec, i64 order, std::optional<i64> modulus) {
    spec.validate();
    Series s = Series::one(order, modulus);
    for (const PochFactor& f : spec.factors)
        apply_pochhammer(s, f.sign, f.offset, f.step, f.exponent);
    return s;
}

Series psi(i64 order, std::optional<i64> modulus) {
    Series s = modulus ? Series(order, *modulus) : Series(order);
    for (i64 n = 0;; ++n) {
        i64 e = n * (n + 1) / 2;
        if (e > order) break;
        s.add_to_coeff(e, 1);
    }
    return s;
}

Series phi(i64 order, std::optional<i64> modulus) {
    Series s = modulus ? Series(order, *modulus) : Series(order);
    s.add_to_coeff(0, 1);
    for (i64 n = 1; n * n <= order; ++n) s.add_to_coeff(n * n, 2);
    return s;
}

Series theta_f(ThetaArg a, ThetaArg b, i64 order, std::optional<i64> modulus) {
    if (a.exponent + b.exponent < 1)
        throw std::invalid_argument("theta arguments must have positive combined exponent");
    if (a.exponent < 0 || b.exponent < 0)
        throw std::invalid_argument("theta arguments must be monomials with exponent >= 0");
    if ((a.sign != 1 && a.sign != -1) || (b.sign != 1 && b.sign != -1))
        throw std::invalid_argument("theta argument signs must be +-1");
    Series s = modulus ? Series(order, *modulus) : Series(order);
    // f(a,b) = sum over n of a^{n(n+1)/2} b^{n(n-1)/2}; both triangular
    // indices are >= 0 for every integer n and the total exponent grows
    // quadratically in |n|, so |n| <= order + 2 exhausts the truncation.
    for (i64 n = -(order + 2); n <= order + 2; ++n) {
        i64 ta = n * (n + 1) / 2;
        i64 tb = n * (n - 1) / 2;
        i64 e = a.exponent * ta + b.exponent * tb;
        if (e > order) continue;
        int sgn = 1;
        if (a.sign < 0 && (ta % 2) != 0) sgn = -sgn;
        if (b.sign < 0 && (tb % 2) != 0) sgn = -sgn;
        s.add_to_coeff(e, sgn);
    }
    return s;
}

bool jacobi_triple_product_check(ThetaArg a, ThetaArg b, i64 order) {
    Series lhs = theta_f(a, b, order);
    int ab_sign = a.sign * b.sign;
    i64 ab_exp = a.exponent + b.exponent;
    Series rhs = Series::one(order);
    // (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf
    apply_pochhammer_signed_nome(rhs, -a.sign, a.exponent, ab_sign, ab_exp);
    apply_pochhammer_signed_nome(rhs, -b.sign, b.exponent, ab_sign, ab_exp);
    apply_pochhammer_signed_nome(rhs, ab_sign, ab_exp, ab_sign, ab_exp);
    return lhs == rhs;
}

CheckReport jacobi_triple_product_report(i64 order) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.name = "jtp";
    rep.pass = true;
    i64 combo = 0;
    for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
            for (auto [xa, xb] :
                 {std::pair<i64, i64>{1, 1}, {1, 2}, {1, 3}, {2, 3}}) {
                if (!jacobi_triple_product_check({sa, xa}, {sb, xb}, order)) {
                    rep.pass = false;
                    rep.counterexample =
                        Counterexample{combo, "theta sum equals triple product",
                                       "mismatch for argument combination"};
                    stamp(rep, order, t0);
                    return rep;
                }
                ++combo;
            }
        }
    }
    stamp(rep, order, t0);
    return rep;
}

Series a_series(i64 order, std::optional<i64> modulus) {
    ProductSpec spec;
    spec.factors = {PochFactor{1, 2, 2, 1}, PochFactor{1, 3, 3, 2}, PochFactor{1, 1, 1, -1},
                    PochFactor{1, 6, 6, -1}};
    return expand_product(spec, order, modulus);
}

Series pod1_gf(i64 order, std::optional<i64> modulus) {
    ProductSpec spec;
    spec.factors = {PochFactor{-1, 1, 2, 1}, PochFactor{1, 2, 2, -1}};
    return expand_product(spec, order, modulus);
}

Series pod2_gf(i64 order, std::optional<i64> modulus) {
    ProductSpec spec;
    spec.factors = {PochFactor{-1, 1, 2, 2}, PochFactor{1, 2, 2, -2}};
    return expand_product(spec, order, modulus);
}

std::vector<CheckReport> dissection_lemma_checks(i64 order) {
    if (order < 30)
        throw std::invalid_argument("dissection checks need order >= 30 to be meaningful");
    const i64 N = order;
    std::vector<CheckReport> out;

    Series psi_n = psi(N);
    Series psi_mq = negate_q(psi_n);

    // 1/psi(-q) = (f(q^6,q^10) + q f(q^2,q^14)) / ((q^2;q^2)(q^4;q^4)).
    {
        auto t0 = Clock::now();
        Series lhs = invert(psi_mq);
        Series num = add(theta_f({1, 6}, {1, 10}, N), shift_q(theta_f({1, 2}, {1, 14}, N), 1));
        Series den = mul(pochhammer(1, 2, 2, N), pochhammer(1, 4, 4, N));
        CheckReport rep = compare_series("lemma2.1a", lhs, mul(num, invert(den)));
        stamp(rep, N, t0);
        out.push_back(rep);
    }

    // 1/psi(-q) = psi(-q^9)/psi(-q^3)^4
    //             * (A(-q^3)^2 + q A(-q^3) psi(-q^9) + q^2 psi(-q^9)^2).
    {
        auto t0 = Clock::now();
        Series lhs = invert(psi_mq);
        Series psi_mq9 = substitute_power(psi_mq, 9);
        Series psi_mq3 = substitute_power(psi_mq, 3);
        Series am3 = substitute_power(negate_q(a_series(N)), 3);
        Series bracket = add(add(mul(am3, am3), shift_q(mul(am3, psi_mq9), 1)),
                             shift_q(mul(psi_mq9, psi_mq9), 2));
        Series psi_mq3_4 = mul(mul(psi_mq3, psi_mq3), mul(psi_mq3, psi_mq3));
        Series rhs = mul(mul(psi_mq9, invert(psi_mq3_4)), bracket);
        CheckReport rep = compare_series("lemma2.1b", lhs, rhs);
        stamp(rep, N, t0);
        out.push_back(rep);
    }

    // psi(q) = f(q^6,q^10) + q f(q^2,q^14).
    {
        auto t0 = Clock::now();
        Series rhs = add(theta_f({1, 6}, {1, 10}, N), shift_q(theta_f({1, 2}, {1, 14}, N), 1));
        CheckReport rep = compare_series("psi2split", psi_n, rhs);
        stamp(rep, N, t0);
        out.push_back(rep);
    }

    // psi(q) = f(q^3,q^6) + q psi(q^9).
    {
        auto t0 = Clock::now();
        Series rhs = add(theta_f({1, 3}, {1, 6}, N), shift_q(substitute_power(psi_n, 9), 1));
        CheckReport rep = compare_series("lemma3.1a", psi_n, rhs);
        stamp(rep, N, t0);
        out.push_back(rep);
    }

    // psi(q^3) = psi(q)^3 (mod 3).
    {
        auto t0 = Clock::now();
        Series p = psi(N, 3);
        CheckReport rep = compare_series("lemma3.1b", substitute_power(p, 3), mul(mul(p, p), p));
        stamp(rep, N, t0);
        out.push_back(rep);
    }

    // psi(q^5) = psi(q)^5 (mod 5).
    {
        auto t0 = Clock::now();
        Series p = psi(N, 5);
        Series p5 = mul(mul(mul(mul(p, p), p), p), p);
        CheckReport rep = compare_series("psi5pow", substitute_power(p, 5), p5);
        stamp(rep, N, t0);
        out.push_back(rep);
    }

    // q psi(q) psi(q^5) = psi(q^5) (q f(q^10,q^15) + q^2 f(q^5,q^20)
    //                               + q^4 psi(q^25)).
    {
        auto t0 = Clock::now();
        Series psi5 = substitute_power(psi_n, 5);
        Series lhs = shift_q(mul(psi_n, psi5), 1);
        Series bracket = add(add(shift_q(theta_f({1, 10}, {1, 15}, N), 1),
                                 shift_q(theta_f({1, 5}, {1, 20}, N), 2)),
                             shift_q(substitute_power(psi_n, 25), 4));
        CheckReport rep = compare_series("psi5split", lhs, mul(psi5, bracket));
        stamp(rep, N, t0);
        out.push_back(rep);
    }

    // psi(q) psi(-q) = (q^2;q^2)(q^4;q^4).
    {
        auto t0 = Clock::now();
        Series rhs = mul(pochhammer(1, 2, 2, N), pochhammer(1, 4, 4, N));
        CheckReport rep = compare_series("psiprod", mul(psi_n, psi_mq), rhs);
        stamp(rep, N, t0);
        out.push_back(rep);
    }

    return out;
}

}  // namespace podq
