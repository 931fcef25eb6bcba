#ifndef M3P_SYMPOLY_HPP
#define M3P_SYMPOLY_HPP

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "m3p/partitions.hpp"
#include "m3p/qseries.hpp"

namespace m3p {

using Exp3 = std::array<int, 3>;

/// Polynomial in (x1, x2, x3) in fully expanded monomial form with
/// exact rational coefficients.  Transient representation used for
/// products, Ward operators and exact divisions.
class MonoPoly3 {
public:
    MonoPoly3() = default;
    static MonoPoly3 monomial(Exp3 e, Rat c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp3, Rat>& terms() const { return terms_; }
    void add_term(const Exp3& e, const Rat& c);

    MonoPoly3& operator+=(const MonoPoly3& o);
    MonoPoly3& operator-=(const MonoPoly3& o);
    MonoPoly3 operator*(const MonoPoly3& o) const;
    MonoPoly3& operator*=(const Rat& c);
    bool operator==(const MonoPoly3& o) const { return terms_ == o.terms_; }

    /// sum_j x_j^{m+1} d/dx_j, m >= -1.
    MonoPoly3 l_op(int m) const;

    /// (x_i - x_j)^n for 1-based variable indices.
    static MonoPoly3 binomial_power(int i, int j, int n);

    /// Exact division by (x_i - x_j); throws if the division leaves a
    /// remainder.
    MonoPoly3 divided_by_linear(int i, int j) const;

    /// x3 -> 0.
    MonoPoly3 at_x3_zero() const;

private:
    std::map<Exp3, Rat> terms_;
};

/// sum over the six signed permutations of the exponent pattern.
MonoPoly3 antisymmetrize(const Exp3& e);

/// Exact bivariate polynomial, used for the restriction x1 -> x,
/// x2, x3 -> y.
class Poly2 {
public:
    Poly2() = default;
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
    void add_term(int dx, int dy, const Rat& c);
    Poly2& operator-=(const Poly2& o);
    Poly2 operator*(const Poly2& o) const;
    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

private:
    std::map<std::pair<int, int>, Rat> terms_;
};

/// Symmetric polynomial in three variables stored in the
/// monomial-symmetric basis: keys are partitions l1 >= l2 >= l3 >= 0.
class SymPoly3 {
public:
    SymPoly3() = default;
    static SymPoly3 one();
    static SymPoly3 msym(Exp3 lam, Rat c = Rat(1));

    /// Collapse an expanded polynomial; throws std::logic_error when
    /// the input is not symmetric.
    static SymPoly3 from_expanded(const MonoPoly3& f);
    MonoPoly3 to_expanded() const;

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Exp3, Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(const Exp3& lam) const;
    /// Total degree of a homogeneous polynomial (throws when mixed).
    int homogeneous_degree() const;

    SymPoly3& operator+=(const SymPoly3& o);
    SymPoly3& operator-=(const SymPoly3& o);
    SymPoly3 operator*(const SymPoly3& o) const;
    SymPoly3& operator*=(const Rat& c);
    friend SymPoly3 operator+(SymPoly3 a, const SymPoly3& b) { return a += b; }
    friend SymPoly3 operator-(SymPoly3 a, const SymPoly3& b) { return a -= b; }
    friend SymPoly3 operator*(SymPoly3 a, const Rat& c) { return a *= c; }
    bool operator==(const SymPoly3& o) const { return coeffs_ == o.coeffs_; }

private:
    std::map<Exp3, Rat> coeffs_;
};

SymPoly3 power_sum(int m);
SymPoly3 elementary(int k);
/// D3 = prod_{i<j} (x_i - x_j)^2.
SymPoly3 discriminant3();

/// l_m applied to a symmetric polynomial (the image is symmetric).
SymPoly3 l_op(int m, const SymPoly3& f);

/// The three-point polynomial: (x1-x2)^{p-2} F(1-p/3, 2-p, 2-2p/3; z)
/// with z = (x3-x2)/(x1-x2), expanded through the terminating
/// hypergeometric series.  p = 1, 2 give the constant 1 (the nested
/// base case).
SymPoly3 phi3(int p);

/// Coefficients c_0..c_kmax of the terminating series
/// F(a, b, c; z) = sum_k (a)_k (b)_k / ((c)_k k!) z^k.
std::vector<Rat> hypergeometric_coeffs(const Rat& a, const Rat& b, const Rat& c, int kmax);

/// Annihilation of phi3 by the quadratic Ward combination
/// 2p l2 - 6 l1^2 + 6(p-2) P1 l1 - (2p-3)(p-2) P1^2 + 3(p-2) P2.
bool hyp_ode_check(int p);

/// f_j = (l1 - (p-2) P1)^j phi3, 0 <= j <= p-2.
SymPoly3 f_j(int p, int j);

/// Largest key under the (|lam|, lam_1, lam_2) lexicographic order.
Exp3 leading_monomial(const SymPoly3& f);

/// Restriction g(x1,x2,x3) -> g(x,y,y).
Poly2 specialize_pi(const SymPoly3& f);
Poly2 specialize_pi(const MonoPoly3& f);

struct QRReduction {
    SymPoly3 q;  // Q_{m-1}
    SymPoly3 r;  // R_m
    bool identity_holds;  // l_m(phi3) == Q l_1(phi3) + (p-2) R phi3
};

/// Q_{m-1} = Sym x1^{m+1} x2 / ((x1-x2)(x1-x3)(x2-x3)) computed by
/// antisymmetrisation and exact Vandermonde division;
/// R_m = (x1^{m+1}-x2^{m+1})/(x1-x2) - (x1+x2) Q_{m-1}.
QRReduction qr_reduction(int p, int m);

/// Coefficients (a1, b20, b11) with
/// l1^2(phi3) = a1 P1 l1(phi3) + (b20 m_{(2,0,0)} + b11 m_{(1,1,0)}) phi3.
struct L1SquareReduction {
    Rat a1, b20, b11;
    bool ok;
};
L1SquareReduction l1_square_reduction(int p);

/// k D3 phi3^[p-3] == (P1^2 - 3P2) l1(phi3^[p]) + (p-2)(3P3 - P1 P2) phi3^[p]
/// with k = -9(p-2)(p-4) / (2(2p-9)).
bool nested_identity_check(int p);

/// Square-freeness of the hypergeometric factor g plus the absence of
/// a common z-factor between phi3 and l1(phi3).
bool squarefree_check(int p);

/// Generators of the annihilator ideal for fixed p, with graded bases
/// computed on demand (exact linear algebra over the m_lam basis).
class Ideal3 {
public:
    static Ideal3 make(int p);
    int p() const { return p_; }
    const SymPoly3& phi() const { return phi_; }
    const SymPoly3& lphi() const { return lphi_; }
    /// Basis of the degree-d component of Lambda phi3 + Lambda l1(phi3).
    std::vector<SymPoly3> graded_basis(int d) const;
    long graded_dim(int d) const;

private:
    int p_ = 0;
    SymPoly3 phi_, lphi_;
};

std::vector<SymPoly3> ideal3_basis(int p, int d);

/// Partitions of d into at most three parts (zeros allowed), sorted.
std::vector<Exp3> partitions3(int d);

/// Dual pairing: the coefficient of m_{(l1-1, l2-1, l3-1)} in f.  A
/// degree mismatch yields 0, or throws in strict mode.
Rat coupling(const SymPoly3& f, const Partition& lam, bool strict = false);

/// Degreewise exactness of
///   0 -> D3 I3^[p-3] -> I3^[p] -> (x-y)^{p-2} C[x,y] -> 0
/// checked for every homogeneous degree <= cap.
bool exactness_check(int p, int cap);

/// Bounded refinement with per-variable degree caps N-1 / N-5 and the
/// box J^{N-1} = { deg_x <= N-p+1, deg_y <= 2N-p }.
bool finitized_exactness_check(int p, int N);

}  // namespace m3p

#endif
