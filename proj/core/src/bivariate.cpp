#include "podq/bivariate.hpp"

#include <stdexcept>

namespace podq {

namespace {

void check_factor(i64 dz, i64 dq) {
    if (dq < 1) throw std::invalid_argument("factor q-degree must be positive");
    if (dz > dq || -dz > dq)
        throw std::invalid_argument("factor breaks triangular support: |dz| must be <= dq");
}

}  // namespace

BivariateSeries::BivariateSeries(i64 order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    c_.assign(static_cast<size_t>((order + 1) * (order + 1)), mpz_class(0));
}

BivariateSeries BivariateSeries::one(i64 order) {
    BivariateSeries s(order);
    s.c_[0] = 1;
    return s;
}

mpz_class BivariateSeries::coeff(i64 m, i64 n) const {
    if (n < 0 || n > order_) throw std::invalid_argument("q-exponent outside truncation order");
    if (!inside(m, n)) return mpz_class(0);
    return c_[slot(m, n)];
}

void BivariateSeries::set_coeff(i64 m, i64 n, const mpz_class& value) {
    if (!inside(m, n)) throw std::invalid_argument("coefficient outside triangular support");
    c_[slot(m, n)] = value;
}

void BivariateSeries::add_to_coeff(i64 m, i64 n, const mpz_class& delta) {
    if (!inside(m, n)) throw std::invalid_argument("coefficient outside triangular support");
    c_[slot(m, n)] += delta;
}

void BivariateSeries::mul_factor(int c, i64 dz, i64 dq) {
    if (c != 1 && c != -1) throw std::invalid_argument("factor coefficient must be +-1");
    check_factor(dz, dq);
    if (dq > order_) return;
    // Descending n: the source row n-dq still holds the pre-multiplication
    // value when row n is updated.
    for (i64 n = order_; n >= dq; --n) {
        i64 ns = n - dq;
        i64 lo = std::max(-n, -ns + dz);
        i64 hi = std::min(n, ns + dz);
        for (i64 m = lo; m <= hi; ++m) {
            const mpz_class& src = c_[slot(m - dz, ns)];
            if (src == 0) continue;
            if (c > 0)
                c_[slot(m, n)] -= src;
            else
                c_[slot(m, n)] += src;
        }
    }
}

void BivariateSeries::div_factor(int c, i64 dz, i64 dq) {
    if (c != 1 && c != -1) throw std::invalid_argument("factor coefficient must be +-1");
    check_factor(dz, dq);
    if (dq > order_) return;
    // Ascending n: b = a + c z^dz q^dq b, so the source row must already be
    // final.
    for (i64 n = dq; n <= order_; ++n) {
        i64 ns = n - dq;
        i64 lo = std::max(-n, -ns + dz);
        i64 hi = std::min(n, ns + dz);
        for (i64 m = lo; m <= hi; ++m) {
            const mpz_class& src = c_[slot(m - dz, ns)];
            if (src == 0) continue;
            if (c > 0)
                c_[slot(m, n)] += src;
            else
                c_[slot(m, n)] -= src;
        }
    }
}

void BivariateSeries::shift_monomial(i64 dz, i64 dq) {
    if (dq < 0) throw std::invalid_argument("monomial q-degree must be non-negative");
    if (dz > dq || -dz > dq)
        throw std::invalid_argument("monomial breaks triangular support: |dz| must be <= dq");
    if (dq == 0) return;
    for (i64 n = order_; n >= 0; --n) {
        i64 ns = n - dq;
        for (i64 m = -n; m <= n; ++m) {
            i64 msrc = m - dz;
            if (ns >= 0 && msrc >= -ns && msrc <= ns)
                c_[slot(m, n)] = c_[slot(msrc, ns)];
            else
                c_[slot(m, n)] = 0;
        }
    }
}

BivariateSeries BivariateSeries::reflect_z() const {
    BivariateSeries out(order_);
    for (i64 n = 0; n <= order_; ++n)
        for (i64 m = -n; m <= n; ++m) out.c_[out.slot(-m, n)] = c_[slot(m, n)];
    return out;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

BivariateSeries bivar_mul(const BivariateSeries& a, const BivariateSeries& b) {
    i64 order = std::min(a.order_, b.order_);
    BivariateSeries r(order);
    for (i64 n1 = 0; n1 <= order; ++n1) {
        for (i64 m1 = -n1; m1 <= n1; ++m1) {
            const mpz_class& av = a.c_[a.slot(m1, n1)];
            if (av == 0) continue;
            i64 hi = order - n1;
            for (i64 n2 = 0; n2 <= hi; ++n2) {
                for (i64 m2 = -n2; m2 <= n2; ++m2) {
                    const mpz_class& bv = b.c_[b.slot(m2, n2)];
                    if (bv == 0) continue;
                    mpz_addmul(r.c_[r.slot(m1 + m2, n1 + n2)].get_mpz_t(), av.get_mpz_t(),
                               bv.get_mpz_t());
                }
            }
        }
    }
    return r;
}

Series collapse_z1(const BivariateSeries& a) {
    Series out(a.order_);
    for (i64 n = 0; n <= a.order_; ++n) {
        mpz_class s(0);
        for (i64 m = -n; m <= n; ++m) s += a.c_[a.slot(m, n)];
        out.set_coeff(n, s);
    }
    return out;
}

Series residue_combine(const BivariateSeries& a, i64 t, const std::map<i64, i64>& weights) {
    if (t < 1) throw std::invalid_argument("residue modulus must be positive");
    for (i64 r = 0; r < t; ++r)
        if (!weights.contains(r))
            throw std::invalid_argument("weight map must cover every residue class");
    Series out(a.order_);
    for (i64 n = 0; n <= a.order_; ++n) {
        mpz_class s(0);
        for (i64 m = -n; m <= n; ++m) {
            const mpz_class& v = a.c_[a.slot(m, n)];
            if (v == 0) continue;
            i64 r = m % t;
            if (r < 0) r += t;
            i64 w = weights.at(r);
            if (w != 0) s += w * v;
        }
        out.set_coeff(n, s);
    }
    return out;
}

}  // namespace podq
