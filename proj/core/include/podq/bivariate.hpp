#pragma once

// Truncated series in q whose coefficients are Laurent polynomials in z,
// restricted to the triangular support |z-degree| <= q-degree.  Every
// generating function tracked here attaches at most one z per unit of q
// (statistics are differences of part counts, bounded by the weight), so the
// triangle is lossless.  Storage is a dense flat array with row n occupying
// slots n^2 .. n^2+2n, entry (m, n) at n^2 + (m + n).

#include <map>
#include <utility>

#include "podq/series.hpp"

namespace podq {

class BivariateSeries {
public:
    explicit BivariateSeries(i64 order);
    static BivariateSeries one(i64 order);

    i64 order() const { return order_; }

    // Coefficient of z^m q^n; zero outside the triangle |m| <= n <= order.
    mpz_class coeff(i64 m, i64 n) const;
    void set_coeff(i64 m, i64 n, const mpz_class& value);
    void add_to_coeff(i64 m, i64 n, const mpz_class& delta);

    // In-place multiplication by (1 - c z^dz q^dq) resp. its inverse,
    // c = +-1.  Requires |dz| <= dq and dq >= 1 so the triangle is preserved.
    void mul_factor(int c, i64 dz, i64 dq);
    void div_factor(int c, i64 dz, i64 dq);

    // Multiply by the monomial z^dz q^dq (again |dz| <= dq).
    void shift_monomial(i64 dz, i64 dq);

    // z -> 1/z.
    BivariateSeries reflect_z() const;

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);
    friend bool operator!=(const BivariateSeries& a, const BivariateSeries& b) {
        return !(a == b);
    }

private:
    i64 order_ = 0;
    std::vector<mpz_class> c_;  // size (order+1)^2

    size_t slot(i64 m, i64 n) const {
        return static_cast<size_t>(n * n + (m + n));
    }
    bool inside(i64 m, i64 n) const { return n >= 0 && n <= order_ && m >= -n && m <= n; }

    friend BivariateSeries bivar_mul(const BivariateSeries&, const BivariateSeries&);
    friend Series collapse_z1(const BivariateSeries&);
    friend Series residue_combine(const BivariateSeries&, i64 t,
                                  const std::map<i64, i64>& weights);
};

// Full product; quadratic in the table size, meant for cross-checks at
// moderate orders rather than for building the big tables (use the factor
// sweeps for those).
BivariateSeries bivar_mul(const BivariateSeries& a, const BivariateSeries& b);

// Substitute z = 1.
Series collapse_z1(const BivariateSeries& a);

// Weighted residue collapse: coefficient of q^n in the result is
// sum over m of weights[m mod t] * [z^m q^n] a.  Every residue class in
// [0, t) must be present in the weight map.  This replaces root-of-unity
// substitutions with exact integer arithmetic.
Series residue_combine(const BivariateSeries& a, i64 t, const std::map<i64, i64>& weights);

}  // namespace podq
