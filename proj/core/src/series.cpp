#include "podq/series.hpp"

#include <stdexcept>

namespace podq {

namespace {

constexpr i64 kMaxModulus = i64{1} << 31;

void check_order(i64 order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

void check_modulus(i64 m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    if (m > kMaxModulus) throw std::invalid_argument("modulus too large for word storage");
}

i64 canon(i64 v, i64 m) {
    i64 r = v % m;
    return r < 0 ? r + m : r;
}

std::optional<i64> merged_modulus(const Series& a, const Series& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
    return a.modulus();
}

}  // namespace

Series::Series(i64 order) : order_(order) {
    check_order(order);
    big_.assign(static_cast<size_t>(order + 1), mpz_class(0));
}

Series::Series(i64 order, i64 modulus) : order_(order), modulus_(modulus) {
    check_order(order);
    check_modulus(modulus);
    word_.assign(static_cast<size_t>(order + 1), 0);
}

Series Series::one(i64 order, std::optional<i64> modulus) {
    Series s = modulus ? Series(order, *modulus) : Series(order);
    s.set_coeff(0, 1);
    return s;
}

Series Series::from_coeffs(std::vector<mpz_class> coeffs, std::optional<i64> modulus) {
    if (coeffs.empty()) throw std::invalid_argument("coefficient list must not be empty");
    i64 order = static_cast<i64>(coeffs.size()) - 1;
    Series s = modulus ? Series(order, *modulus) : Series(order);
    for (i64 n = 0; n <= order; ++n) s.set_coeff(n, coeffs[static_cast<size_t>(n)]);
    return s;
}

void Series::check_index(i64 n) const {
    if (n < 0 || n > order_)
        throw std::invalid_argument("coefficient index outside truncation order");
}

mpz_class Series::coeff(i64 n) const {
    check_index(n);
    if (modulus_) return mpz_class(word_[static_cast<size_t>(n)]);
    return big_[static_cast<size_t>(n)];
}

std::string Series::coeff_str(i64 n) const {
    check_index(n);
    if (modulus_) return std::to_string(word_[static_cast<size_t>(n)]);
    return big_[static_cast<size_t>(n)].get_str();
}

void Series::set_coeff(i64 n, const mpz_class& value) {
    check_index(n);
    if (modulus_) {
        mpz_class r = value % *modulus_;
        i64 v = r.get_si();
        word_[static_cast<size_t>(n)] = canon(v, *modulus_);
    } else {
        big_[static_cast<size_t>(n)] = value;
    }
}

void Series::add_to_coeff(i64 n, i64 delta) {
    check_index(n);
    if (modulus_) {
        i64 m = *modulus_;
        word_[static_cast<size_t>(n)] = canon(word_[static_cast<size_t>(n)] + canon(delta, m), m);
    } else {
        big_[static_cast<size_t>(n)] += delta;
    }
}

bool Series::is_zero() const {
    if (modulus_) {
        for (i64 v : word_)
            if (v != 0) return false;
        return true;
    }
    for (const mpz_class& v : big_)
        if (v != 0) return false;
    return true;
}

void Series::mul_binomial(int c, i64 j) {
    if (c != 1 && c != -1) throw std::invalid_argument("binomial coefficient must be +-1");
    if (j < 1) throw std::invalid_argument("binomial exponent must be positive");
    if (j > order_) return;
    if (modulus_) {
        const i64 m = *modulus_;
        i64* x = word_.data();
        if (c > 0) {
            for (i64 n = order_; n >= j; --n) {
                i64 v = x[n] - x[n - j];
                x[n] = v < 0 ? v + m : v;
            }
        } else {
            for (i64 n = order_; n >= j; --n) {
                i64 v = x[n] + x[n - j];
                x[n] = v >= m ? v - m : v;
            }
        }
    } else {
        mpz_class* x = big_.data();
        if (c > 0) {
            for (i64 n = order_; n >= j; --n) x[n] -= x[n - j];
        } else {
            for (i64 n = order_; n >= j; --n) x[n] += x[n - j];
        }
    }
}

void Series::div_binomial(int c, i64 j) {
    if (c != 1 && c != -1) throw std::invalid_argument("binomial coefficient must be +-1");
    if (j < 1) throw std::invalid_argument("binomial exponent must be positive");
    if (j > order_) return;
    if (modulus_) {
        const i64 m = *modulus_;
        i64* x = word_.data();
        if (c > 0) {
            for (i64 n = j; n <= order_; ++n) {
                i64 v = x[n] + x[n - j];
                x[n] = v >= m ? v - m : v;
            }
        } else {
            for (i64 n = j; n <= order_; ++n) {
                i64 v = x[n] - x[n - j];
                x[n] = v < 0 ? v + m : v;
            }
        }
    } else {
        mpz_class* x = big_.data();
        if (c > 0) {
            for (i64 n = j; n <= order_; ++n) x[n] += x[n - j];
        } else {
            for (i64 n = j; n <= order_; ++n) x[n] -= x[n - j];
        }
    }
}

bool operator==(const Series& a, const Series& b) {
    if (a.order_ != b.order_) return false;
    for (i64 n = 0; n <= a.order_; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

std::optional<i64> first_mismatch(const Series& a, const Series& b) {
    i64 upto = std::min(a.order(), b.order());
    for (i64 n = 0; n <= upto; ++n)
        if (a.coeff(n) != b.coeff(n)) return n;
    return std::nullopt;
}

Series add(const Series& a, const Series& b) {
    auto m = merged_modulus(a, b);
    i64 order = std::min(a.order_, b.order_);
    if (m) {
        Series r(order, *m);
        const i64 mm = *m;
        for (i64 n = 0; n <= order; ++n) {
            i64 v = a.word_[static_cast<size_t>(n)] + b.word_[static_cast<size_t>(n)];
            r.word_[static_cast<size_t>(n)] = v >= mm ? v - mm : v;
        }
        return r;
    }
    Series r(order);
    for (i64 n = 0; n <= order; ++n)
        r.big_[static_cast<size_t>(n)] = a.big_[static_cast<size_t>(n)] + b.big_[static_cast<size_t>(n)];
    return r;
}

Series sub(const Series& a, const Series& b) {
    auto m = merged_modulus(a, b);
    i64 order = std::min(a.order_, b.order_);
    if (m) {
        Series r(order, *m);
        const i64 mm = *m;
        for (i64 n = 0; n <= order; ++n) {
            i64 v = a.word_[static_cast<size_t>(n)] - b.word_[static_cast<size_t>(n)];
            r.word_[static_cast<size_t>(n)] = v < 0 ? v + mm : v;
        }
        return r;
    }
    Series r(order);
    for (i64 n = 0; n <= order; ++n)
        r.big_[static_cast<size_t>(n)] = a.big_[static_cast<size_t>(n)] - b.big_[static_cast<size_t>(n)];
    return r;
}

Series mul(const Series& a, const Series& b) {
    auto m = merged_modulus(a, b);
    i64 order = std::min(a.order_, b.order_);
    if (m) {
        const i64 mm = *m;
        std::vector<unsigned __int128> acc(static_cast<size_t>(order + 1), 0);
        for (i64 i = 0; i <= order; ++i) {
            i64 ai = a.word_[static_cast<size_t>(i)];
            if (ai == 0) continue;
            i64 hi = order - i;
            for (i64 j = 0; j <= hi; ++j) {
                i64 bj = b.word_[static_cast<size_t>(j)];
                if (bj == 0) continue;
                acc[static_cast<size_t>(i + j)] +=
                    static_cast<unsigned __int128>(static_cast<std::uint64_t>(ai)) *
                    static_cast<std::uint64_t>(bj);
            }
        }
        Series r(order, mm);
        for (i64 n = 0; n <= order; ++n)
            r.word_[static_cast<size_t>(n)] =
                static_cast<i64>(acc[static_cast<size_t>(n)] % static_cast<std::uint64_t>(mm));
        return r;
    }
    Series r(order);
    for (i64 i = 0; i <= order; ++i) {
        const mpz_class& ai = a.big_[static_cast<size_t>(i)];
        if (ai == 0) continue;
        i64 hi = order - i;
        for (i64 j = 0; j <= hi; ++j) {
            const mpz_class& bj = b.big_[static_cast<size_t>(j)];
            if (bj == 0) continue;
            mpz_addmul(r.big_[static_cast<size_t>(i + j)].get_mpz_t(), ai.get_mpz_t(),
                       bj.get_mpz_t());
        }
    }
    return r;
}

Series scalar_mul(i64 k, const Series& a) {
    if (a.modulus_) {
        const i64 m = *a.modulus_;
        Series r(a.order_, m);
        i64 kk = canon(k, m);
        for (i64 n = 0; n <= a.order_; ++n) {
            unsigned __int128 v = static_cast<unsigned __int128>(
                                      static_cast<std::uint64_t>(a.word_[static_cast<size_t>(n)])) *
                                  static_cast<std::uint64_t>(kk);
            r.word_[static_cast<size_t>(n)] = static_cast<i64>(v % static_cast<std::uint64_t>(m));
        }
        return r;
    }
    Series r(a.order_);
    for (i64 n = 0; n <= a.order_; ++n) r.big_[static_cast<size_t>(n)] = k * a.big_[static_cast<size_t>(n)];
    return r;
}

Series invert(const Series& a) {
    const i64 order = a.order_;
    if (a.modulus_) {
        const i64 m = *a.modulus_;
        mpz_class inv0;
        mpz_class a0(a.word_[0]);
        mpz_class mm(m);
        if (mpz_invert(inv0.get_mpz_t(), a0.get_mpz_t(), mm.get_mpz_t()) == 0)
            throw std::invalid_argument("non-invertible series: constant term is not a unit");
        const i64 b0 = inv0.get_si();
        Series r(order, m);
        r.word_[0] = b0;
        for (i64 n = 1; n <= order; ++n) {
            unsigned __int128 s = 0;
            for (i64 k = 1; k <= n; ++k) {
                i64 ak = a.word_[static_cast<size_t>(k)];
                if (ak == 0) continue;
                s += static_cast<unsigned __int128>(static_cast<std::uint64_t>(ak)) *
                     static_cast<std::uint64_t>(r.word_[static_cast<size_t>(n - k)]);
            }
            i64 sm = static_cast<i64>(s % static_cast<std::uint64_t>(m));
            unsigned __int128 t = static_cast<unsigned __int128>(static_cast<std::uint64_t>(b0)) *
                                  static_cast<std::uint64_t>(canon(-sm, m));
            r.word_[static_cast<size_t>(n)] = static_cast<i64>(t % static_cast<std::uint64_t>(m));
        }
        return r;
    }
    const mpz_class& a0 = a.big_[0];
    if (a0 != 1 && a0 != -1)
        throw std::invalid_argument("non-invertible series: constant term is not a unit");
    Series r(order);
    r.big_[0] = a0;  // 1/1 = 1, 1/-1 = -1
    mpz_class s;
    for (i64 n = 1; n <= order; ++n) {
        s = 0;
        for (i64 k = 1; k <= n; ++k) {
            const mpz_class& ak = a.big_[static_cast<size_t>(k)];
            if (ak == 0) continue;
            mpz_addmul(s.get_mpz_t(), ak.get_mpz_t(), r.big_[static_cast<size_t>(n - k)].get_mpz_t());
        }
        // b_n = -(1/a0) * s ; a0 = +-1 so 1/a0 = a0
        r.big_[static_cast<size_t>(n)] = -a0 * s;
    }
    return r;
}

Series dissect(const Series& a, i64 m, i64 r) {
    if (m < 1) throw std::invalid_argument("dissection modulus must be positive");
    if (r < 0 || r >= m) throw std::invalid_argument("dissection residue must lie in [0, m)");
    if (r > a.order_) throw std::invalid_argument("dissection residue beyond truncation order");
    i64 order = (a.order_ - r) / m;
    Series out = a.modulus_ ? Series(order, *a.modulus_) : Series(order);
    for (i64 n = 0; n <= order; ++n) {
        i64 src = r + n * m;
        if (a.modulus_)
            out.word_[static_cast<size_t>(n)] = a.word_[static_cast<size_t>(src)];
        else
            out.big_[static_cast<size_t>(n)] = a.big_[static_cast<size_t>(src)];
    }
    return out;
}

Series substitute_power(const Series& a, i64 k) {
    if (k < 1) throw std::invalid_argument("substitution power must be positive");
    Series out = a.modulus_ ? Series(a.order_, *a.modulus_) : Series(a.order_);
    for (i64 n = 0; n * k <= a.order_; ++n) {
        if (a.modulus_)
            out.word_[static_cast<size_t>(n * k)] = a.word_[static_cast<size_t>(n)];
        else
            out.big_[static_cast<size_t>(n * k)] = a.big_[static_cast<size_t>(n)];
    }
    return out;
}

Series negate_q(const Series& a) {
    Series out = a;
    if (a.modulus_) {
        const i64 m = *a.modulus_;
        for (i64 n = 1; n <= a.order_; n += 2) {
            i64 v = out.word_[static_cast<size_t>(n)];
            out.word_[static_cast<size_t>(n)] = v == 0 ? 0 : m - v;
        }
    } else {
        for (i64 n = 1; n <= a.order_; n += 2)
            out.big_[static_cast<size_t>(n)] = -out.big_[static_cast<size_t>(n)];
    }
    return out;
}

Series reduce_mod(const Series& a, i64 m) {
    check_modulus(m);
    Series out(a.order_, m);
    if (a.modulus_) {
        if (*a.modulus_ % m != 0)
            throw std::invalid_argument("modulus mismatch: new modulus must divide the old one");
        for (i64 n = 0; n <= a.order_; ++n)
            out.word_[static_cast<size_t>(n)] = a.word_[static_cast<size_t>(n)] % m;
        return out;
    }
    mpz_class t;
    for (i64 n = 0; n <= a.order_; ++n) {
        t = a.big_[static_cast<size_t>(n)] % m;
        out.word_[static_cast<size_t>(n)] = canon(t.get_si(), m);
    }
    return out;
}

Series truncate(const Series& a, i64 new_order) {
    check_order(new_order);
    if (new_order > a.order_)
        throw std::invalid_argument("cannot extend a truncated series");
    Series out = a.modulus_ ? Series(new_order, *a.modulus_) : Series(new_order);
    for (i64 n = 0; n <= new_order; ++n) {
        if (a.modulus_)
            out.word_[static_cast<size_t>(n)] = a.word_[static_cast<size_t>(n)];
        else
            out.big_[static_cast<size_t>(n)] = a.big_[static_cast<size_t>(n)];
    }
    return out;
}

Series shift_q(const Series& a, i64 k) {
    if (k < 0) throw std::invalid_argument("shift must be non-negative");
    Series out = a.modulus_ ? Series(a.order_, *a.modulus_) : Series(a.order_);
    for (i64 n = k; n <= a.order_; ++n) {
        if (a.modulus_)
            out.word_[static_cast<size_t>(n)] = a.word_[static_cast<size_t>(n - k)];
        else
            out.big_[static_cast<size_t>(n)] = a.big_[static_cast<size_t>(n - k)];
    }
    return out;
}

std::optional<Series> try_divide_exact(const Series& a, i64 k) {
    if (k == 0) throw std::invalid_argument("division by zero");
    if (a.modulus_) throw std::invalid_argument("exact division requires exact mode");
    Series out(a.order_);
    mpz_class kk(k);
    for (i64 n = 0; n <= a.order_; ++n) {
        const mpz_class& v = a.big_[static_cast<size_t>(n)];
        if (!mpz_divisible_p(v.get_mpz_t(), kk.get_mpz_t())) return std::nullopt;
        mpz_divexact(out.big_[static_cast<size_t>(n)].get_mpz_t(), v.get_mpz_t(), kk.get_mpz_t());
    }
    return out;
}

}  // namespace podq
