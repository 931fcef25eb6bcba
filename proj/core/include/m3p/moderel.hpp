#ifndef M3P_MODEREL_HPP
#define M3P_MODEREL_HPP

#include <array>
#include <map>

#include "m3p/sympoly.hpp"

namespace m3p {

/// Element of the cubic slice of the mode algebra: an integer
/// combination of xi_{-i} xi_{-j} xi_{-k} with i+j+k fixed.  The
/// modes commute, so coefficients are aggregated on sorted keys
/// i >= j >= k >= 1.
class XiPoly {
public:
    XiPoly() = default;

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Exp3, Int>& coeffs() const { return coeffs_; }
    void add_term(Exp3 key, const Int& c);

    /// Common weight i+j+k of all keys; throws on the zero element.
    long degree() const;

    XiPoly& operator+=(const XiPoly& o);
    XiPoly& operator*=(const Int& c);
    friend XiPoly operator*(XiPoly a, const Int& c) { return a *= c; }
    friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
    bool operator==(const XiPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<Exp3, Int> coeffs_;
};

/// Modes of a(z) d^{nu1}a(z) ... pattern: the sum over ordered triples
/// (i,j,k >= 1, i+j+k = d) of c(i,nu1) c(j,nu2) c(k,nu3) xi_{-i}xi_{-j}xi_{-k}
/// with c(k,nu) = (k-1)(k-2)...(k-nu).
XiPoly current_product_modes(int nu1, int nu2, int nu3, int d);

/// The degree-d modes of a(z)^2 d^nu a(z), 0 <= nu <= p-3.
XiPoly squared_current_relation(int p, int nu, int d);

/// The degree-d modes of
///   p(p-4) a^2 d^{p-1}a + 4(p-3)^2 a da d^{p-2}a + 2(2(p-3)^2 - p) a d^2a d^{p-3}a.
XiPoly mixed_current_relation(int p, int d);

/// Pairing of rho against a polynomial: sum of rho's coefficients
/// times the matching monomial-symmetric coefficients of f.
Rat pair_against(const XiPoly& rho, const SymPoly3& f);

/// True when rho annihilates the whole degree-matched slice of the
/// ideal generated by phi3 and l1(phi3).
bool annihilation_check(const XiPoly& rho, int p);
bool annihilation_check(const XiPoly& rho, const Ideal3& ideal);

/// Minimal degree at which mixed_current_relation is nonzero.
long mixed_relation_min_degree(int p);

/// For p >= 7: the mixed relation at its minimal nontrivial degree
/// lies outside the span of the squared-current relations there.
/// Derivatives at fixed total degree only rescale each generator, so
/// the span is taken over the nu-indexed family alone.
bool independence_check(int p);

/// dim A_{d,3} minus the ideal slice dimension (computed through the
/// annihilator) must match the coefficient of q^d in the cubic-slice
/// character q^3 (1-q^{p-2})(1-q^{p-1}) / ((1-q)(1-q^2)(1-q^3)).
bool a3_dimension_crosscheck(int p, int d);

/// Rank of span{ squared_current_relation(p, nu, d) : 0 <= nu <= p-3 }.
long squared_relation_rank(int p, int d);

}  // namespace m3p

#endif
