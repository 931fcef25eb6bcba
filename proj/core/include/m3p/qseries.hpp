#ifndef M3P_QSERIES_HPP
#define M3P_QSERIES_HPP

#include <gmpxx.h>

#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace m3p {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational; mpq_class(n, d) alone does not reduce.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Truncated power series in q with arbitrary-precision integer
/// coefficients.  Exponents 0 .. trunc()-1 are exact; anything beyond
/// the truncation order is unknown and must not be read.  A polynomial
/// that is exact at every order carries the sentinel truncation
/// kExact, so that products with genuinely truncated series keep the
/// finite order (truncation propagates as the min of the operands).
class QSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    explicit QSeries(int trunc = kExact) : trunc_(trunc) {
        if (trunc_ < 0) throw std::domain_error("QSeries: negative truncation");
    }

    static QSeries one(int trunc = kExact);
    static QSeries monomial(long d, Int coeff, int trunc = kExact);

    int trunc() const { return trunc_; }
    bool is_zero() const;
    /// Largest exponent with a nonzero coefficient, or -1 for the zero series.
    long degree() const;

    const Int& coeff(long d) const;
    void set_coeff(long d, Int value);
    void add_coeff(long d, const Int& value);

    QSeries truncated(int t) const;
    /// Multiply by q^e.
    QSeries shifted(long e) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries& operator*=(const Int& c);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
    friend QSeries operator*(QSeries a, const Int& c) { return a *= c; }
    QSeries operator-() const;

    /// Equality is truncation order plus coefficients; omitted zeros
    /// compare equal to stored zeros.
    bool operator==(const QSeries& o) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    /// Dense coefficient view, index = exponent (trailing zeros trimmed).
    const std::vector<Int>& data() const { return c_; }

private:
    void trim();
    int trunc_;
    std::vector<Int> c_;
    static const Int zero_;
};

/// Multiplicative inverse of a series with constant term 1, to order
/// `order`.
QSeries series_inverse(const QSeries& a, int order);

/// Subscript value standing for the infinite Pochhammer product.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// (q)_m = prod_{j=1}^m (1-q^j), truncated; m = kInfinity gives (q)_oo.
QSeries pochhammer(int m, int order);

/// 1/(q)_m truncated at `order`; m = kInfinity gives 1/(q)_oo, whose
/// coefficients count partitions.
QSeries pochhammer_inverse(int m, int order);

/// Gaussian binomial [M+m over m]_q as an exact polynomial: the
/// generating function of partitions inside an m x M box.  A negative
/// box (M < 0) yields the zero polynomial for every m, including
/// m = 0; the finitized character sums rely on those vanishing terms
/// to terminate.  Negative m is a domain error.
QSeries gauss_binomial(long M, long m);

/// Bivariate series: truncated in q, exact in the z-grading.  Column
/// n holds the coefficient series of z^n; z-exponents may be negative.
class QZSeries {
public:
    explicit QZSeries(int trunc) : trunc_(trunc) {
        if (trunc_ < 0 || trunc_ == QSeries::kExact)
            throw std::domain_error("QZSeries: needs a finite truncation");
    }

    int trunc() const { return trunc_; }
    bool is_zero() const;

    QSeries column(long n) const;
    void add_column(long n, const QSeries& s);
    /// Coefficient of q^d z^n.
    const Int& coeff(long d, long n) const;
    void add_term(long d, long n, const Int& c);

    QZSeries& operator+=(const QZSeries& o);
    friend QZSeries operator+(QZSeries a, const QZSeries& b) { return a += b; }
    QZSeries& operator*=(const Int& c);
    /// Multiply every column by a series in q alone.
    QZSeries& operator*=(const QSeries& s);
    /// Multiply by z^k.
    QZSeries z_shifted(long k) const;

    bool operator==(const QZSeries& o) const;
    bool operator!=(const QZSeries& o) const { return !(*this == o); }

    const std::map<long, QSeries>& columns() const { return cols_; }

private:
    void prune();
    int trunc_;
    std::map<long, QSeries> cols_;
};

/// Move the coefficient at (d, n) to (d+n, n): the substitution
/// z -> qz.  Terms pushed past the truncation order are dropped.
QZSeries regrade_z_to_qz(const QZSeries& a);

/// Coefficientwise comparison; both operands must carry the same
/// truncation order.
bool leq(const QZSeries& a, const QZSeries& b);
bool leq(const QSeries& a, const QSeries& b);

}  // namespace m3p

#endif
