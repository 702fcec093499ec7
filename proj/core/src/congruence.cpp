#include "podq/congruence.hpp"

#include <chrono>
#include <stdexcept>

#include "podq/qproducts.hpp"

namespace podq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void stamp(CheckReport& rep, i64 order, Clock::time_point t0) {
    rep.order = order;
    rep.ms = ms_since(t0);
}

i64 checked_pow(i64 base, i64 exp) {
    i64 r = 1;
    for (i64 i = 0; i < exp; ++i) {
        if (r > (i64{1} << 60) / base) throw std::invalid_argument("alpha too large");
        r *= base;
    }
    return r;
}

// sum_{n>=0} w(n) q^{5n+r} / (1 - q^{10n+2r}), truncated.
Series lambert_sum(i64 r, const std::function<i64(i64)>& w, i64 order) {
    Series s(order);
    for (i64 n = 0;; ++n) {
        i64 base = 5 * n + r;
        if (base > order) break;
        i64 weight = w(n);
        if (weight == 0) continue;
        i64 period = 10 * n + 2 * r;
        for (i64 e = base; e <= order; e += period) s.add_to_coeff(e, weight);
    }
    return s;
}

// Scan a modular series for zero coefficients on stride*n + offset.
CheckReport progression_scan(std::string name, const Series& s, i64 stride, i64 offset,
                             i64 residue_expected = 0) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.order = s.order();
    rep.pass = true;
    for (i64 idx = offset; idx <= s.order(); idx += stride) {
        if (s.coeff(idx) != residue_expected) {
            rep.pass = false;
            rep.counterexample =
                Counterexample{idx, std::to_string(residue_expected), s.coeff_str(idx)};
            break;
        }
    }
    return rep;
}

}  // namespace

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Thm3_1: return "thm3.1";
        case FamilyTag::Thm3_2a: return "thm3.2a";
        case FamilyTag::Thm3_2b: return "thm3.2b";
        case FamilyTag::Thm4_1a: return "thm4.1a";
        case FamilyTag::Thm4_1b: return "thm4.1b";
    }
    throw std::logic_error("unknown family tag");
}

FamilySpec FamilySpec::make(FamilyTag tag, i64 alpha) {
    i64 alpha_min = tag == FamilyTag::Thm3_1 ? 0 : 1;
    if (alpha < alpha_min)
        throw std::invalid_argument(std::string(family_name(tag)) + " requires alpha >= " +
                                    std::to_string(alpha_min));
    FamilySpec spec;
    spec.tag = tag;
    spec.alpha = alpha;
    i64 num = 0, den = 0;
    switch (tag) {
        case FamilyTag::Thm3_1:
            spec.prime = 3;
            spec.stride = checked_pow(3, 2 * alpha + 1);
            num = 23 * checked_pow(3, 2 * alpha) - 7;
            den = 8;
            break;
        case FamilyTag::Thm3_2a:
            spec.prime = 3;
            spec.stride = checked_pow(3, 2 * alpha + 1);
            num = 7 * checked_pow(3, 2 * alpha) + 1;
            den = 4;
            break;
        case FamilyTag::Thm3_2b:
            spec.prime = 3;
            spec.stride = checked_pow(3, 2 * alpha + 1);
            num = 11 * checked_pow(3, 2 * alpha) + 1;
            den = 4;
            break;
        case FamilyTag::Thm4_1a:
            spec.prime = 5;
            spec.stride = checked_pow(5, alpha + 1);
            num = 11 * checked_pow(5, alpha) + 1;
            den = 4;
            break;
        case FamilyTag::Thm4_1b:
            spec.prime = 5;
            spec.stride = checked_pow(5, alpha + 1);
            num = 19 * checked_pow(5, alpha) + 1;
            den = 4;
            break;
    }
    if (num % den != 0)
        throw std::invalid_argument("family offset numerator not divisible: malformed alpha");
    spec.offset = num / den;
    return spec;
}

std::string FamilySpec::name() const {
    return std::string(family_name(tag)) + "[alpha=" + std::to_string(alpha) + "]";
}

std::pair<CheckReport, CheckReport> theorem_2_1_check(i64 order) {
    const i64 N = order;

    auto t0 = Clock::now();
    Series gf_a = pod2_gf(2 * N + 1);
    Series lhs_a = dissect(gf_a, 2, 1);
    ProductSpec ps_a;
    ps_a.factors = {PochFactor{1, 8, 8, 2}, PochFactor{1, 1, 1, -3}, PochFactor{1, 4, 4, -1}};
    Series rhs_a = scalar_mul(2, expand_product(ps_a, N));
    CheckReport rep_a = compare_series("thm2.1a", lhs_a, rhs_a, N);
    stamp(rep_a, N, t0);

    auto t1 = Clock::now();
    Series gf_b = pod2_gf(3 * N + 2);
    Series lhs_b = dissect(gf_b, 3, 2);
    ProductSpec ps_b;
    ps_b.factors = {PochFactor{1, 2, 2, 4}, PochFactor{1, 6, 6, 6}, PochFactor{1, 1, 1, -6},
                    PochFactor{1, 4, 4, -6}};
    Series rhs_b = scalar_mul(3, expand_product(ps_b, N));
    CheckReport rep_b = compare_series("thm2.1b", lhs_b, rhs_b, N);
    stamp(rep_b, N, t1);

    return {rep_a, rep_b};
}

std::pair<CheckReport, CheckReport> corollary_2_2_scan(i64 order) {
    auto t0 = Clock::now();
    Series mod2 = pod2_gf(order, 2);
    CheckReport rep_a = progression_scan("cor2.2a", mod2, 2, 1);
    stamp(rep_a, order, t0);

    auto t1 = Clock::now();
    Series mod3 = pod2_gf(order, 3);
    CheckReport rep_b = progression_scan("cor2.2b", mod3, 3, 2);
    stamp(rep_b, order, t1);

    return {rep_a, rep_b};
}

CheckReport family_scan(const FamilySpec& spec, i64 order) {
    return family_scan(spec, pod2_gf(order, spec.prime));
}

CheckReport family_scan(const FamilySpec& spec, const Series& pod2_series) {
    auto t0 = Clock::now();
    if (spec.offset > pod2_series.order())
        throw std::invalid_argument("progression offset exceeds the truncation order");
    Series reduced = pod2_series.modulus() == std::optional<i64>(spec.prime)
                         ? pod2_series
                         : reduce_mod(pod2_series, spec.prime);
    CheckReport rep = progression_scan(spec.name(), reduced, spec.stride, spec.offset);
    stamp(rep, pod2_series.order(), t0);
    return rep;
}

i64 divisor_difference(i64 n, i64 j1, i64 j2, i64 k) {
    if (n < 1) throw std::invalid_argument("divisor counts need n >= 1");
    if (k < 1) throw std::invalid_argument("divisor class modulus must be positive");
    i64 diff = 0;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        i64 hi = n / d;
        if (d % k == j1 % k) ++diff;
        if (d % k == j2 % k) --diff;
        if (hi != d) {
            if (hi % k == j1 % k) ++diff;
            if (hi % k == j2 % k) --diff;
        }
    }
    return diff;
}

i64 t2(i64 n) {
    if (n < 0) throw std::invalid_argument("t2 argument must be non-negative");
    return divisor_difference(4 * n + 1, 1, 3, 4);
}

std::vector<i64> t2_table(i64 max_n) {
    if (max_n < 0) throw std::invalid_argument("t2 argument must be non-negative");
    std::vector<i64> out(static_cast<size_t>(max_n + 1));
    for (i64 n = 0; n <= max_n; ++n) out[static_cast<size_t>(n)] = t2(n);
    return out;
}

bool two_squares_criterion(i64 n) {
    if (n < 1) throw std::invalid_argument("two-squares criterion needs n >= 1");
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        i64 e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (p % 4 == 3 && e % 2 == 1) return true;
    }
    // Leftover n > 1 is prime with exponent 1.
    return n > 1 && n % 4 == 3;
}

CheckReport t2_bridge_check(i64 max_n) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.name = "t2bridge";
    rep.pass = true;
    Series psi2 = [&] {
        Series p = psi(max_n);
        return mul(p, p);
    }();
    for (i64 n = 0; n <= max_n; ++n) {
        if (psi2.coeff(n) != t2(n)) {
            rep.pass = false;
            rep.counterexample = Counterexample{n, std::to_string(t2(n)), psi2.coeff_str(n)};
            break;
        }
    }
    stamp(rep, max_n, t0);
    return rep;
}

CheckReport congruence_3n1_check(i64 order) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.name = "cong3n1";
    rep.pass = true;
    Series gf = pod2_gf(order, 3);
    i64 max_n = (order - 1) / 3;
    for (i64 n = 0; n <= max_n; ++n) {
        // pod_{-2}(3n+1) = (-1)^{n+1} t_2(n)  (mod 3)
        i64 expected = ((n % 2 == 0) ? -t2(n) : t2(n)) % 3;
        if (expected < 0) expected += 3;
        if (gf.coeff(3 * n + 1) != expected) {
            rep.pass = false;
            rep.counterexample =
                Counterexample{3 * n + 1, std::to_string(expected), gf.coeff_str(3 * n + 1)};
            break;
        }
    }
    stamp(rep, order, t0);
    return rep;
}

std::pair<CheckReport, CheckReport> descent_relation_checks(i64 order) {
    auto t0 = Clock::now();
    Series mod3 = pod2_gf(order, 3);
    CheckReport rep3;
    rep3.name = "descent3";
    rep3.pass = true;
    for (i64 n = 0; 27 * n + 7 <= order; ++n) {
        if (mod3.coeff(27 * n + 7) != mod3.coeff(3 * n + 1)) {
            rep3.pass = false;
            rep3.counterexample = Counterexample{n, mod3.coeff_str(3 * n + 1),
                                                 mod3.coeff_str(27 * n + 7)};
            break;
        }
    }
    stamp(rep3, order, t0);

    auto t1 = Clock::now();
    Series mod5 = pod2_gf(order, 5);
    CheckReport rep5;
    rep5.name = "descent5";
    rep5.pass = true;
    for (i64 n = 0; 25 * n + 19 <= order; ++n) {
        // pod_{-2}(25n+19) = -pod_{-2}(5n+4)  (mod 5)
        mpz_class sum = (mod5.coeff(25 * n + 19) + mod5.coeff(5 * n + 4)) % 5;
        if (sum != 0) {
            rep5.pass = false;
            rep5.counterexample = Counterexample{
                n, "-" + mod5.coeff_str(5 * n + 4) + " (mod 5)", mod5.coeff_str(25 * n + 19)};
            break;
        }
    }
    stamp(rep5, order, t1);

    return {rep3, rep5};
}

CheckReport thm3_1_structural_check(i64 limit) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.name = "thm3.1-structural";
    rep.pass = true;
    auto fail = [&](i64 where, const std::string& expected, const std::string& actual) {
        rep.pass = false;
        rep.counterexample = Counterexample{where, expected, actual};
    };
    for (i64 alpha : {i64{1}, i64{2}}) {
        FamilySpec spec = FamilySpec::make(FamilyTag::Thm3_1, alpha);
        for (i64 j = spec.offset; j <= limit; j += spec.stride) {
            if ((j - 1) % 3 != 0) {
                fail(j, "progression index = 1 (mod 3)", std::to_string(j % 3));
                break;
            }
            i64 i = (j - 1) / 3;
            i64 s = 4 * i + 1;
            if (s % 3 != 0 || s % 9 == 0) {
                fail(j, "4i+1 divisible by 3, not 9", std::to_string(s));
                break;
            }
            if (!two_squares_criterion(s)) {
                fail(j, "s carries a prime 3 (mod 4) to an odd power", std::to_string(s));
                break;
            }
            if (t2(i) != 0) {
                fail(j, "t2 = 0", std::to_string(t2(i)));
                break;
            }
        }
        if (!rep.pass) break;
    }
    stamp(rep, limit, t0);
    return rep;
}

std::array<CheckReport, 3> theorem_5_1_check(i64 order) {
    const i64 N = order;
    BivariateSeries gf = bivar_gf_from_products(StatTag::BirankB, N);

    std::array<CheckReport, 3> out;

    // (i) z = -1: alternating combine vs phi(-q)/psi(q^2).
    {
        auto t0 = Clock::now();
        Series comb = residue_combine(gf, 2, {{0, 1}, {1, -1}});
        Series rhs = mul(negate_q(phi(N)), invert(substitute_power(psi(N), 2)));
        out[0] = compare_series("thm5.1a", comb, rhs);
        stamp(out[0], N, t0);
    }

    // (ii) cube roots of unity via integer weights: first the symmetry
    // R(1,3,n) = R(2,3,n), then (2,-1,-1)/2 vs psi(-q)/psi(-q^3).
    {
        auto t0 = Clock::now();
        Series r1 = residue_combine(gf, 3, {{0, 0}, {1, 1}, {2, 0}});
        Series r2 = residue_combine(gf, 3, {{0, 0}, {1, 0}, {2, 1}});
        if (auto bad = first_mismatch(r1, r2)) {
            out[1].name = "thm5.1b";
            out[1].pass = false;
            out[1].counterexample = Counterexample{*bad, r2.coeff_str(*bad) + " (symmetry)",
                                                   r1.coeff_str(*bad)};
            stamp(out[1], N, t0);
        } else {
            Series comb = residue_combine(gf, 3, {{0, 2}, {1, -1}, {2, -1}});
            auto halved = try_divide_exact(comb, 2);
            if (!halved) {
                out[1].name = "thm5.1b";
                out[1].pass = false;
                out[1].counterexample = Counterexample{0, "even combined coefficients", "odd"};
                stamp(out[1], N, t0);
            } else {
                Series psi_mq = negate_q(psi(N));
                Series rhs = mul(psi_mq, invert(substitute_power(psi_mq, 3)));
                out[1] = compare_series("thm5.1b", *halved, rhs);
                stamp(out[1], N, t0);
            }
        }
    }

    // (iii) z = i: weights (1,0,-1,0) vs phi(q^2)/psi(q^2), after checking
    // R(1,4,n) = R(3,4,n).
    {
        auto t0 = Clock::now();
        Series r1 = residue_combine(gf, 4, {{0, 0}, {1, 1}, {2, 0}, {3, 0}});
        Series r3 = residue_combine(gf, 4, {{0, 0}, {1, 0}, {2, 0}, {3, 1}});
        if (auto bad = first_mismatch(r1, r3)) {
            out[2].name = "thm5.1c";
            out[2].pass = false;
            out[2].counterexample = Counterexample{*bad, r3.coeff_str(*bad) + " (symmetry)",
                                                   r1.coeff_str(*bad)};
            stamp(out[2], N, t0);
        } else {
            Series comb = residue_combine(gf, 4, {{0, 1}, {1, 0}, {2, -1}, {3, 0}});
            Series rhs = mul(substitute_power(phi(N), 2), invert(substitute_power(psi(N), 2)));
            out[2] = compare_series("thm5.1c", comb, rhs);
            stamp(out[2], N, t0);
        }
    }

    return out;
}

CheckReport equidistribution_check(StatTag tag, i64 max_weight) {
    if (tag == StatTag::RankD)
        throw std::invalid_argument("equidistribution holds for the biranks b and c only");
    auto t0 = Clock::now();
    CheckReport rep;
    rep.name = std::string("equidist-") + stat_name(tag);
    rep.pass = true;
    StatTable table = stat_table(tag, max_weight);
    std::vector<mpz_class> totals = pod2_count_table(max_weight);
    for (i64 n = 2; n <= max_weight && rep.pass; n += 3) {
        // n = 3k+2: the three residue classes must each hold pod2(n)/3.
        std::map<i64, i64> by_class = residue_counts(table, 3, n);
        mpz_class third = totals[static_cast<size_t>(n)] / 3;
        if (totals[static_cast<size_t>(n)] % 3 != 0) {
            rep.pass = false;
            rep.counterexample =
                Counterexample{n, "pod2 divisible by 3", totals[static_cast<size_t>(n)].get_str()};
            break;
        }
        for (i64 r = 0; r < 3; ++r) {
            if (by_class[r] != third) {
                rep.pass = false;
                rep.counterexample = Counterexample{
                    n, third.get_str(), std::to_string(by_class[r]) + " in class " +
                                            std::to_string(r)};
                break;
            }
        }
    }
    stamp(rep, max_weight, t0);
    return rep;
}

std::pair<CheckReport, CheckReport> rank_parity_checks(i64 order) {
    // (i) enumerated parity balance on odd weights.
    auto t0 = Clock::now();
    CheckReport rep_enum;
    rep_enum.name = "rankodd";
    rep_enum.pass = true;
    i64 W = std::min<i64>(order, 31);
    StatTable table = stat_table(StatTag::RankD, W);
    for (i64 n = 1; n <= W; n += 2) {
        std::map<i64, i64> by_class = residue_counts(table, 2, n);
        if (by_class[0] != by_class[1]) {
            rep_enum.pass = false;
            rep_enum.counterexample = Counterexample{n, std::to_string(by_class[0]),
                                                     std::to_string(by_class[1])};
            break;
        }
    }
    stamp(rep_enum, W, t0);

    // (ii) the series forms.
    auto t1 = Clock::now();
    const i64 N = order;
    BivariateSeries gf = bivar_gf_from_products(StatTag::RankD, N);
    Series comb = residue_combine(gf, 2, {{0, 1}, {1, -1}});
    Series rhs = mul(pochhammer(1, 2, 4, N), invert(pochhammer(1, 4, 4, N)));
    CheckReport rep_series = compare_series("rankgf", comb, rhs);
    if (rep_series.pass) {
        // Even-indexed subsequence, sign-twisted, is the one-component gf.
        Series even = negate_q(dissect(comb, 2, 0));
        CheckReport inner = compare_series("rankgf", even, pod1_gf(even.order()));
        rep_series.pass = inner.pass;
        rep_series.counterexample = inner.counterexample;
    }
    stamp(rep_series, N, t1);

    return {rep_enum, rep_series};
}

CheckReport modular_equation_entry8i_check(i64 order) {
    auto t0 = Clock::now();
    const i64 N = order;
    Series p = psi(N);
    Series p5 = substitute_power(p, 5);
    Series lhs = sub(shift_q(mul(mul(mul(p, p), p), p5), 1),
                     scalar_mul(5, shift_q(mul(p, mul(mul(p5, p5), p5)), 2)));
    Series rhs = lambert_sum(1, [](i64 n) { return 5 * n + 1; }, N);
    rhs = sub(rhs, lambert_sum(2, [](i64 n) { return 5 * n + 2; }, N));
    rhs = sub(rhs, lambert_sum(3, [](i64 n) { return 5 * n + 3; }, N));
    rhs = add(rhs, lambert_sum(4, [](i64 n) { return 5 * n + 4; }, N));
    CheckReport rep = compare_series("entry8i", lhs, rhs);
    stamp(rep, N, t0);
    return rep;
}

CheckReport lambert_extraction_check(i64 order) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.name = "lemma4.1";
    rep.pass = true;
    for (i64 r = 1; r <= 4 && rep.pass; ++r) {
        Series big = lambert_sum(r, [](i64) { return 1; }, 5 * order);
        Series extracted = dissect(big, 5, 0);
        Series expected = lambert_sum(r, [](i64) { return 1; }, order);
        CheckReport inner = compare_series("lemma4.1", truncate(extracted, order), expected);
        if (!inner.pass) {
            rep.pass = false;
            rep.counterexample = inner.counterexample;
        }
    }
    stamp(rep, order, t0);
    return rep;
}

}  // namespace podq
