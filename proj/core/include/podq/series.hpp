#pragma once

// Truncated formal power series in one variable q.
//
// A Series of order N carries exact coefficients for q^0 .. q^N and nothing
// beyond; there is no implicit zero-extension.  Binary operations truncate to
// the smaller order of the two operands.  Coefficients are either
// arbitrary-precision integers (exact mode) or canonical residues in [0, m)
// held in machine words (modular mode).  Mixing an exact and a modular
// operand, or two different moduli, is an error: reduction must be requested
// explicitly through reduce_mod.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace podq {

using i64 = std::int64_t;

class Series {
public:
    // Zero series of the given order, exact or modular.
    explicit Series(i64 order);
    Series(i64 order, i64 modulus);

    static Series one(i64 order, std::optional<i64> modulus = std::nullopt);
    static Series from_coeffs(std::vector<mpz_class> coeffs,
                              std::optional<i64> modulus = std::nullopt);

    i64 order() const { return order_; }
    std::optional<i64> modulus() const { return modulus_; }

    // n must lie in [0, order]; out-of-range access throws.
    mpz_class coeff(i64 n) const;
    std::string coeff_str(i64 n) const;
    void set_coeff(i64 n, const mpz_class& value);
    void add_to_coeff(i64 n, i64 delta);

    // In-place multiplication by (1 - c q^j) resp. by its inverse, c = +-1,
    // j >= 1.  These sweeps are the workhorse of every Pochhammer expansion:
    // multiply runs over n descending, divide ascending, both in O(N/j + N)
    // coefficient operations and no temporaries.
    void mul_binomial(int c, i64 j);
    void div_binomial(int c, i64 j);

    bool is_zero() const;

    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    i64 order_ = 0;
    std::optional<i64> modulus_;
    std::vector<mpz_class> big_;   // exact mode, size order+1
    std::vector<i64> word_;       // modular mode, size order+1

    void check_index(i64 n) const;

    friend Series add(const Series&, const Series&);
    friend Series sub(const Series&, const Series&);
    friend Series mul(const Series&, const Series&);
    friend Series scalar_mul(i64 k, const Series&);
    friend Series invert(const Series&);
    friend Series dissect(const Series&, i64 m, i64 r);
    friend Series substitute_power(const Series&, i64 k);
    friend Series negate_q(const Series&);
    friend Series reduce_mod(const Series&, i64 m);
    friend Series truncate(const Series&, i64 new_order);
    friend Series shift_q(const Series&, i64 k);
    friend std::optional<Series> try_divide_exact(const Series&, i64 k);
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scalar_mul(i64 k, const Series& a);

// Reciprocal series; the constant term must be a unit (+-1 in exact mode,
// invertible residue in modular mode).
Series invert(const Series& a);

// m-dissection: picks exponents congruent to r mod m (0 <= r < m) and
// reindexes, so the result has order floor((order - r) / m).
Series dissect(const Series& a, i64 m, i64 r);

// q -> q^k for k >= 1; result keeps the original order.
Series substitute_power(const Series& a, i64 k);

// q -> -q.
Series negate_q(const Series& a);

// Reduce coefficients mod m (m >= 2).  From exact mode always; from modular
// mode only when m divides the existing modulus.
Series reduce_mod(const Series& a, i64 m);

// Shrink the order (new_order <= order); extension is not possible.
Series truncate(const Series& a, i64 new_order);

// Multiply by q^k, k >= 0: exponents move up, the tail beyond the order is
// dropped.  The result keeps the original order.
Series shift_q(const Series& a, i64 k);

// Divide every coefficient by k when exact; nullopt if any coefficient is
// not divisible.  Exact mode only.
std::optional<Series> try_divide_exact(const Series& a, i64 k);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

// Smallest n within both orders where coefficients differ, if any.
std::optional<i64> first_mismatch(const Series& a, const Series& b);

}  // namespace podq
