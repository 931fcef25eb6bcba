#ifndef M3P_CHARACTERS_HPP
#define M3P_CHARACTERS_HPP

#include <vector>

#include "m3p/qseries.hpp"

namespace m3p {

/// Throws unless p >= 4 and p is not divisible by 3.
void validate_p(int p);

/// The quadratic-form data (s, B, A) behind the Gordon-type sums.
/// B has half-integer entries in its first row and column, so 2B is
/// stored; every exponent  t(m) B m + t(A) m  is an integer.
struct GordonData {
    int p = 0;
    int s = 0;
    std::vector<std::vector<long>> twoB;  // (s+1) x (s+1), symmetric
    std::vector<long> A;                  // length s+1

    /// (2 B m)_i, all integers.
    std::vector<long> twoBm(const std::vector<long>& m) const;
    /// t(m) B m + t(A) m.
    long exponent(const std::vector<long>& m) const;
    /// m_0 + 2(m_1 + ... + m_s): the z-weight attached to m.
    long zweight(const std::vector<long>& m) const;
};

GordonData gordon_data(int p);

/// Gordon-type sum  sum_m q^{tmBm + tAm} / ((q)_{m_0} ... (q)_{m_s})
/// z^{m_0 + 2 m_1 + ... + 2 m_s}: the character of the annihilator
/// ideal I^[p] graded by (degree, variable count).  Substituting
/// z -> qz (regrade_z_to_qz) turns it into the character of the
/// principal subspace.
QZSeries fermionic_principal(int p, int order);

/// Same sum with the last Pochhammer deepened to (q)_{m_s + l} and the
/// z-weight carried as (qz): monotone in l, equal to the regraded
/// principal character at l = 0.
QZSeries fermionic_extremal(int p, int l, int order);

/// The stable l -> infinity form: prefactor 1/(q)_oo, denominators
/// (q)_{m_0} ... (q)_{m_{s-1}} only, summation over all of
/// m_0..m_s >= 0.
QZSeries fermionic_voa(int p, int order);

/// Finitized character: every Pochhammer inverse replaced by the
/// Gaussian binomial [P_i + m_i over m_i] with
///   P_0 = N-1 - (2Bm)_0 - 2A_0,   P_i = 2(N-1) - (2Bm)_i - 2A_i,
/// vanishing boxes truncating the sum.
QZSeries fermionic_finitized(int p, int N, int order);

/// Right-hand side of the bounded character recursion
///   chi^[p]_{N,n} = sum_{l+2m=n} q^{l(l-1)+(p-2)lm+(p-2)m(m-1)+2m}
///                   [2(N-1)-(p-2)(n-2)+m over m] chi^[p-3]_{N-2(l-1)-(p-2)m, l},
/// with the p = 1, 2 base case chi_{N,n} = q^n [N-1+n over n] and
/// chi_{N,0} = 1 for every N.  Lower levels are evaluated by the same
/// recursion, never by enumeration.
QSeries recursion_rhs(int p, int N, int n, int order);

/// Unbounded (N = infinity) recursion with base q^n/(q)_n.
QSeries principal_recursion_rhs(int p, int n, int order);

/// (q^{p-2} + q^{p-1} - q^{2p-3}) / ((1-q)(1-q^2)(1-q^3)).
QSeries ideal3_char(int p, int order);

/// q^3 (1-q^{p-2})(1-q^{p-1}) / ((1-q)(1-q^2)(1-q^3)).
QSeries a3_char(int p, int order);

/// Finitized three-variable character by its own recursion:
///   chi3(N, p) = q^{p+1} [N-p+2]_q [2N-p+1]_q + q^6 chi3(N-4, p-3),
/// base q^3 [N+2 over 3] for p = 1, 2; the first summand is dropped
/// when the bounded two-variable space it counts is empty (N <= p-2).
QSeries chi3_finitized_recursion(int p, int N, int order);

}  // namespace m3p

#endif
