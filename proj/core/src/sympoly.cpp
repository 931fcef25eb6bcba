#include "m3p/sympoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "m3p/linalg.hpp"

namespace m3p {

namespace {

void validate_phi_p(int p) {
    if (p == 1 || p == 2) return;
    if (p < 4 || p % 3 == 0)
        throw std::domain_error("phi3: p must be 1, 2 or >= 4 and not divisible by 3");
}

Exp3 sorted_desc(Exp3 e) {
    std::sort(e.begin(), e.end(), std::greater<int>());
    return e;
}

// term order with x_i heaviest, used by the exact linear division
struct VarFirstLess {
    int i;
    bool operator()(const Exp3& a, const Exp3& b) const {
        if (a[i] != b[i]) return a[i] < b[i];
        return a < b;
    }
};

}  // namespace

MonoPoly3 MonoPoly3::monomial(Exp3 e, Rat c) {
    MonoPoly3 f;
    f.add_term(e, c);
    return f;
}

void MonoPoly3::add_term(const Exp3& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MonoPoly3& MonoPoly3::operator+=(const MonoPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MonoPoly3& MonoPoly3::operator-=(const MonoPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MonoPoly3 MonoPoly3::operator*(const MonoPoly3& o) const {
    MonoPoly3 out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return out;
}

MonoPoly3& MonoPoly3::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MonoPoly3 MonoPoly3::l_op(int m) const {
    if (m < -1) throw std::domain_error("l_op: m must be >= -1");
    MonoPoly3 out;
    for (const auto& [e, c] : terms_) {
        for (int j = 0; j < 3; ++j) {
            if (e[j] == 0) continue;
            Exp3 shifted = e;
            shifted[j] += m;
            out.add_term(shifted, c * e[j]);
        }
    }
    return out;
}

MonoPoly3 MonoPoly3::binomial_power(int i, int j, int n) {
    if (n < 0) throw std::domain_error("binomial_power: negative exponent");
    MonoPoly3 out;
    for (int t = 0; t <= n; ++t) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, t);
        if ((n - t) % 2 != 0) binom = -binom;
        Exp3 e{0, 0, 0};
        e[i - 1] += t;
        e[j - 1] += n - t;
        out.add_term(e, Rat(binom));
    }
    return out;
}

MonoPoly3 MonoPoly3::divided_by_linear(int i, int j) const {
    VarFirstLess less{i - 1};
    MonoPoly3 rem = *this;
    MonoPoly3 quot;
    while (!rem.terms_.empty()) {
        auto lead = std::max_element(
            rem.terms_.begin(), rem.terms_.end(),
            [&](const auto& a, const auto& b) { return less(a.first, b.first); });
        Exp3 e = lead->first;
        Rat c = lead->second;
        if (e[i - 1] == 0)
            throw std::logic_error("divided_by_linear: nonzero remainder");
        Exp3 q = e;
        q[i - 1] -= 1;
        quot.add_term(q, c);
        rem.add_term(e, -c);
        Exp3 carry = q;
        carry[j - 1] += 1;
        rem.add_term(carry, c);
    }
    return quot;
}

MonoPoly3 MonoPoly3::at_x3_zero() const {
    MonoPoly3 out;
    for (const auto& [e, c] : terms_)
        if (e[2] == 0) out.add_term(e, c);
    return out;
}

MonoPoly3 antisymmetrize(const Exp3& e) {
    static const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    static const std::array<int, 6> sign{1, -1, -1, 1, 1, -1};
    MonoPoly3 out;
    for (int k = 0; k < 6; ++k) {
        Exp3 image{0, 0, 0};
        for (int t = 0; t < 3; ++t) image[perms[k][t]] = e[t];
        out.add_term(image, Rat(sign[k]));
    }
    return out;
}

void Poly2::add_term(int dx, int dy, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(dx, dy);
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return out;
}

SymPoly3 SymPoly3::one() { return msym({0, 0, 0}); }

SymPoly3 SymPoly3::msym(Exp3 lam, Rat c) {
    if (lam[0] < lam[1] || lam[1] < lam[2] || lam[2] < 0)
        throw std::domain_error("msym: key must be a partition");
    SymPoly3 f;
    if (c != 0) f.coeffs_.emplace(lam, std::move(c));
    return f;
}

SymPoly3 SymPoly3::from_expanded(const MonoPoly3& f) {
    SymPoly3 out;
    for (const auto& [e, c] : f.terms()) {
        Exp3 key = sorted_desc(e);
        if (e == key) out.coeffs_.emplace(key, c);
    }
    if (out.to_expanded() != f)
        throw std::logic_error("from_expanded: polynomial is not symmetric");
    return out;
}

MonoPoly3 SymPoly3::to_expanded() const {
    MonoPoly3 out;
    for (const auto& [lam, c] : coeffs_) {
        Exp3 perm = lam;
        std::sort(perm.begin(), perm.end());
        do {
            out.add_term(perm, c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

const Rat& SymPoly3::coeff(const Exp3& lam) const {
    static const Rat zero(0);
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? zero : it->second;
}

int SymPoly3::homogeneous_degree() const {
    if (coeffs_.empty())
        throw std::domain_error("homogeneous_degree: zero polynomial");
    int d = -1;
    for (const auto& [lam, c] : coeffs_) {
        int s = lam[0] + lam[1] + lam[2];
        if (d < 0) d = s;
        else if (d != s)
            throw std::logic_error("homogeneous_degree: mixed degrees");
    }
    return d;
}

SymPoly3& SymPoly3::operator+=(const SymPoly3& o) {
    for (const auto& [lam, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.emplace(lam, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

SymPoly3& SymPoly3::operator-=(const SymPoly3& o) {
    for (const auto& [lam, c] : o.coeffs_) {
        auto [it, fresh] = coeffs_.emplace(lam, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

SymPoly3 SymPoly3::operator*(const SymPoly3& o) const {
    if (is_zero() || o.is_zero()) return SymPoly3();
    return from_expanded(to_expanded() * o.to_expanded());
}

SymPoly3& SymPoly3::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lam, v] : coeffs_) v *= c;
    return *this;
}

SymPoly3 power_sum(int m) {
    if (m < 0) throw std::domain_error("power_sum: m must be >= 0");
    if (m == 0) return SymPoly3::msym({0, 0, 0}, Rat(3));
    return SymPoly3::msym({m, 0, 0});
}

SymPoly3 elementary(int k) {
    switch (k) {
        case 0: return SymPoly3::one();
        case 1: return SymPoly3::msym({1, 0, 0});
        case 2: return SymPoly3::msym({1, 1, 0});
        case 3: return SymPoly3::msym({1, 1, 1});
        default: throw std::domain_error("elementary: k must be 0..3");
    }
}

SymPoly3 discriminant3() {
    MonoPoly3 d = MonoPoly3::binomial_power(1, 2, 2) * MonoPoly3::binomial_power(1, 3, 2) *
                  MonoPoly3::binomial_power(2, 3, 2);
    return SymPoly3::from_expanded(d);
}

SymPoly3 l_op(int m, const SymPoly3& f) {
    return SymPoly3::from_expanded(f.to_expanded().l_op(m));
}

std::vector<Rat> hypergeometric_coeffs(const Rat& a, const Rat& b, const Rat& c, int kmax) {
    std::vector<Rat> out;
    out.reserve(kmax + 1);
    Rat cur(1);
    out.push_back(cur);
    for (int k = 0; k < kmax; ++k) {
        Rat den = (c + k) * (k + 1);
        if (den == 0)
            throw std::domain_error("hypergeometric_coeffs: lower parameter hit zero");
        cur *= (a + k) * (b + k) / den;
        out.push_back(cur);
    }
    return out;
}

SymPoly3 phi3(int p) {
    validate_phi_p(p);
    if (p == 1 || p == 2) return SymPoly3::one();
    Rat a = make_rat(3 - p, 3);
    Rat b(2 - p);
    Rat c = make_rat(2 * (3 - p), 3);
    std::vector<Rat> g = hypergeometric_coeffs(a, b, c, p - 2);
    MonoPoly3 acc;
    for (int k = 0; k <= p - 2; ++k) {
        if (g[k] == 0) continue;
        MonoPoly3 term = MonoPoly3::binomial_power(1, 2, p - 2 - k) *
                         MonoPoly3::binomial_power(3, 2, k);
        term *= g[k];
        acc += term;
    }
    return SymPoly3::from_expanded(acc);
}

bool hyp_ode_check(int p) {
    validate_phi_p(p);
    if (p < 4) throw std::domain_error("hyp_ode_check: p must be >= 4");
    SymPoly3 phi = phi3(p);
    SymPoly3 lphi = l_op(1, phi);
    SymPoly3 acc = l_op(2, phi) * Rat(2 * p);
    acc -= l_op(1, lphi) * Rat(6);
    acc += (power_sum(1) * lphi) * Rat(6 * (p - 2));
    acc -= (power_sum(1) * power_sum(1) * phi) * Rat((2 * p - 3) * (p - 2));
    acc += (power_sum(2) * phi) * Rat(3 * (p - 2));
    return acc.is_zero();
}

SymPoly3 f_j(int p, int j) {
    if (j < 0 || j > p - 2) throw std::domain_error("f_j: j must lie in 0..p-2");
    SymPoly3 g = phi3(p);
    for (int t = 0; t < j; ++t) g = l_op(1, g) - (power_sum(1) * g) * Rat(p - 2);
    return g;
}

Exp3 leading_monomial(const SymPoly3& f) {
    if (f.is_zero()) throw std::domain_error("leading_monomial: zero polynomial");
    auto key = [](const Exp3& lam) {
        return std::array<int, 3>{lam[0] + lam[1] + lam[2], lam[0], lam[1]};
    };
    Exp3 best = f.coeffs().begin()->first;
    for (const auto& [lam, c] : f.coeffs())
        if (key(lam) > key(best)) best = lam;
    return best;
}

Poly2 specialize_pi(const MonoPoly3& f) {
    Poly2 out;
    for (const auto& [e, c] : f.terms()) out.add_term(e[0], e[1] + e[2], c);
    return out;
}

Poly2 specialize_pi(const SymPoly3& f) { return specialize_pi(f.to_expanded()); }

QRReduction qr_reduction(int p, int m) {
    validate_phi_p(p);
    if (p < 4) throw std::domain_error("qr_reduction: p must be >= 4");
    if (m < 2) throw std::domain_error("qr_reduction: m must be >= 2");
    MonoPoly3 num = antisymmetrize({m + 1, 1, 0});
    num = num.divided_by_linear(1, 2).divided_by_linear(1, 3).divided_by_linear(2, 3);
    SymPoly3 q = SymPoly3::from_expanded(num);

    MonoPoly3 rexp;
    for (int t = 0; t <= m; ++t) rexp.add_term({t, m - t, 0}, Rat(1));
    MonoPoly3 x1px2;
    x1px2.add_term({1, 0, 0}, Rat(1));
    x1px2.add_term({0, 1, 0}, Rat(1));
    rexp -= x1px2 * num;
    SymPoly3 r = SymPoly3::from_expanded(rexp);

    SymPoly3 phi = phi3(p);
    SymPoly3 lphi = l_op(1, phi);
    SymPoly3 lhs = l_op(m, phi);
    SymPoly3 rhs = q * lphi + (r * phi) * Rat(p - 2);
    return {q, r, lhs == rhs};
}

L1SquareReduction l1_square_reduction(int p) {
    SymPoly3 phi = phi3(p);
    SymPoly3 lphi = l_op(1, phi);
    SymPoly3 target = l_op(1, lphi);
    SymPoly3 v1 = power_sum(1) * lphi;
    SymPoly3 v2 = SymPoly3::msym({2, 0, 0}) * phi;
    SymPoly3 v3 = SymPoly3::msym({1, 1, 0}) * phi;
    std::vector<Exp3> coords = partitions3(p);
    RatMatrix a;
    std::vector<Rat> b;
    for (const Exp3& lam : coords) {
        a.push_back({v1.coeff(lam), v2.coeff(lam), v3.coeff(lam)});
        b.push_back(target.coeff(lam));
    }
    auto x = solve(a, b);
    if (!x) return {Rat(0), Rat(0), Rat(0), false};
    SymPoly3 rhs = v1 * (*x)[0] + v2 * (*x)[1] + v3 * (*x)[2];
    return {(*x)[0], (*x)[1], (*x)[2], rhs == target};
}

bool nested_identity_check(int p) {
    validate_phi_p(p);
    if (p < 4) throw std::domain_error("nested_identity_check: p must be >= 4");
    SymPoly3 phi = phi3(p);
    SymPoly3 lphi = l_op(1, phi);
    SymPoly3 phi_lower = phi3(p - 3);
    Rat k = make_rat(-9L * (p - 2) * (p - 4), 2L * (2 * p - 9));
    SymPoly3 lhs = (discriminant3() * phi_lower) * k;
    SymPoly3 rhs = (power_sum(1) * power_sum(1) - power_sum(2) * Rat(3)) * lphi;
    rhs += (power_sum(3) * Rat(3) - power_sum(1) * power_sum(2)) * phi * Rat(p - 2);
    return lhs == rhs;
}

namespace {

using UniPoly = std::vector<Rat>;  // coefficient list, index = degree

void uni_trim(UniPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    uni_trim(out);
    return out;
}

UniPoly uni_derivative(const UniPoly& a) {
    UniPoly out;
    for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rat(static_cast<long>(i)));
    uni_trim(out);
    return out;
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        uni_trim(a);
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& v : a) v /= lead;
    }
    return a;
}

}  // namespace

bool squarefree_check(int p) {
    validate_phi_p(p);
    if (p < 4) throw std::domain_error("squarefree_check: p must be >= 4");
    Rat a = make_rat(3 - p, 3);
    Rat c = make_rat(2 * (3 - p), 3);
    UniPoly g = hypergeometric_coeffs(a, Rat(2 - p), c, p - 2);
    if (uni_gcd(g, uni_derivative(g)).size() != 1) return false;
    // l1(phi3) = (p-2)[(x2+x3) g(z) + (x1-x2)(1-z) F(a, 3-p, 2a; z)]
    // in the variables (x2, x1-x2, z); a common factor of phi3 and
    // l1(phi3) is a common z-factor of g and (1-z) F.
    UniPoly f2 = hypergeometric_coeffs(a, Rat(3 - p), c, p - 3);
    UniPoly bracket = uni_mul({Rat(1), Rat(-1)}, f2);
    return uni_gcd(g, bracket).size() == 1;
}

std::vector<Exp3> partitions3(int d) {
    std::vector<Exp3> out;
    if (d < 0) return out;
    for (int l1 = 0; l1 <= d; ++l1)
        for (int l2 = 0; l2 <= l1; ++l2) {
            int l3 = d - l1 - l2;
            if (l3 < 0 || l3 > l2) continue;
            out.push_back({l1, l2, l3});
        }
    std::sort(out.begin(), out.end());
    return out;
}

Ideal3 Ideal3::make(int p) {
    validate_phi_p(p);
    if (p < 4) throw std::domain_error("Ideal3: p must be >= 4");
    Ideal3 ideal;
    ideal.p_ = p;
    ideal.phi_ = phi3(p);
    ideal.lphi_ = l_op(1, ideal.phi_);
    return ideal;
}

std::vector<SymPoly3> Ideal3::graded_basis(int d) const {
    std::vector<SymPoly3> candidates;
    if (d < p_ - 2) return candidates;
    for (const Exp3& kappa : partitions3(d - (p_ - 2)))
        candidates.push_back(SymPoly3::msym(kappa) * phi_);
    for (const Exp3& kappa : partitions3(d - (p_ - 1)))
        candidates.push_back(SymPoly3::msym(kappa) * lphi_);
    std::vector<Exp3> coords = partitions3(d);
    RatMatrix rows;
    rows.reserve(candidates.size());
    for (const SymPoly3& f : candidates) {
        std::vector<Rat> row;
        row.reserve(coords.size());
        for (const Exp3& lam : coords) row.push_back(f.coeff(lam));
        rows.push_back(std::move(row));
    }
    std::vector<SymPoly3> basis;
    for (int i : independent_rows(rows)) basis.push_back(candidates[i]);
    return basis;
}

long Ideal3::graded_dim(int d) const { return static_cast<long>(graded_basis(d).size()); }

std::vector<SymPoly3> ideal3_basis(int p, int d) {
    if (d < 0) throw std::domain_error("ideal3_basis: d must be >= 0");
    return Ideal3::make(p).graded_basis(d);
}

Rat coupling(const SymPoly3& f, const Partition& lam, bool strict) {
    if (lam.length() != 3)
        throw std::domain_error("coupling: partition must have three parts");
    Exp3 mu{lam.parts()[0] - 1, lam.parts()[1] - 1, lam.parts()[2] - 1};
    if (f.is_zero()) return Rat(0);
    if (f.homogeneous_degree() != mu[0] + mu[1] + mu[2]) {
        if (strict) throw std::domain_error("coupling: degree mismatch");
        return Rat(0);
    }
    return f.coeff(mu);
}

namespace {

std::vector<Rat> coord_row(const SymPoly3& f, const std::vector<Exp3>& coords) {
    std::vector<Rat> row;
    row.reserve(coords.size());
    for (const Exp3& lam : coords) row.push_back(f.coeff(lam));
    return row;
}

// Basis of the degree-d slice of Lambda (all symmetric polynomials),
// optionally with every variable exponent capped.
std::vector<SymPoly3> lambda_basis(int d, int var_cap) {
    std::vector<SymPoly3> out;
    for (const Exp3& kappa : partitions3(d))
        if (kappa[0] <= var_cap) out.push_back(SymPoly3::msym(kappa));
    return out;
}

// Restrict a graded basis to the subspace with every variable
// exponent <= var_cap (exact nullspace computation).
std::vector<SymPoly3> bounded_slice(const std::vector<SymPoly3>& full, int d, int var_cap) {
    if (full.empty()) return {};
    std::vector<Exp3> bad;
    for (const Exp3& lam : partitions3(d))
        if (lam[0] > var_cap) bad.push_back(lam);
    if (bad.empty()) return full;
    RatMatrix eqs(bad.size(), std::vector<Rat>(full.size(), Rat(0)));
    for (size_t k = 0; k < bad.size(); ++k)
        for (size_t i = 0; i < full.size(); ++i) eqs[k][i] = full[i].coeff(bad[k]);
    std::vector<SymPoly3> out;
    for (const auto& combo : nullspace(eqs)) {
        SymPoly3 g;
        for (size_t i = 0; i < full.size(); ++i) {
            if (combo[i] == 0) continue;
            SymPoly3 t = full[i];
            t *= combo[i];
            g += t;
        }
        out.push_back(std::move(g));
    }
    return out;
}

struct SequenceChecker {
    int p;
    Ideal3 upper;
    bool lower_is_lambda;
    Ideal3 lower;          // valid only when !lower_is_lambda
    SymPoly3 d3 = discriminant3();

    static SequenceChecker make(int p) {
        SequenceChecker s{p, Ideal3::make(p), p - 3 < 4, {}};
        if (!s.lower_is_lambda) s.lower = Ideal3::make(p - 3);
        return s;
    }

    // One degree of the exactness statement.  im_dim is the expected
    // dimension of the right-hand space at this degree.
    bool check_degree(const std::vector<SymPoly3>& basis,
                      const std::vector<SymPoly3>& lower_basis, int d, long im_dim) const {
        RatMatrix pim;
        for (const SymPoly3& f : basis) {
            Poly2 img = specialize_pi(f);
            std::vector<Rat> row(d + 1, Rat(0));
            for (const auto& [e, c] : img.terms()) row[e.first] = c;
            pim.push_back(std::move(row));
        }
        long rank_pi = rank(pim);
        if (rank_pi != im_dim) return false;
        if (static_cast<long>(basis.size()) - rank_pi !=
            static_cast<long>(lower_basis.size()))
            return false;
        if (lower_basis.empty()) return true;
        std::vector<Exp3> coords = partitions3(d);
        RatMatrix span_rows;
        for (const SymPoly3& f : basis) span_rows.push_back(coord_row(f, coords));
        long base_rank = rank(span_rows);
        for (const SymPoly3& g : lower_basis) {
            SymPoly3 h = d3 * g;
            if (!specialize_pi(h).is_zero()) return false;  // pi o iota must vanish
            span_rows.push_back(coord_row(h, coords));
        }
        return rank(span_rows) == base_rank;
    }
};

}  // namespace

bool exactness_check(int p, int cap) {
    validate_phi_p(p);
    if (p < 4) throw std::domain_error("exactness_check: p must be >= 4");
    if (cap < 0) throw std::domain_error("exactness_check: cap must be >= 0");
    SequenceChecker s = SequenceChecker::make(p);
    for (int d = 0; d <= cap; ++d) {
        std::vector<SymPoly3> basis = s.upper.graded_basis(d);
        std::vector<SymPoly3> lower_basis;
        if (d >= 6)
            lower_basis = s.lower_is_lambda ? lambda_basis(d - 6, d)
                                            : s.lower.graded_basis(d - 6);
        long im_dim = d >= p - 2 ? d - p + 3 : 0;
        if (!s.check_degree(basis, lower_basis, d, im_dim)) return false;
    }
    return true;
}

bool finitized_exactness_check(int p, int N) {
    validate_phi_p(p);
    if (p < 4) throw std::domain_error("finitized_exactness_check: p must be >= 4");
    if (N < p - 1)
        throw std::domain_error("finitized_exactness_check: N must be >= p-1");
    SequenceChecker s = SequenceChecker::make(p);
    int top = 3 * (N - 1);
    for (int d = 0; d <= top; ++d) {
        std::vector<SymPoly3> basis = bounded_slice(s.upper.graded_basis(d), d, N - 1);
        std::vector<SymPoly3> lower_basis;
        if (d >= 6 && N - 5 >= 0) {
            lower_basis = s.lower_is_lambda
                              ? lambda_basis(d - 6, N - 5)
                              : bounded_slice(s.lower.graded_basis(d - 6), d - 6, N - 5);
        }
        // (x-y)^{p-2} J^{N-1} at degree d: monomials x^a y^b with
        // a+b = d-(p-2), 0 <= a <= N-p+1, 0 <= b <= 2N-p
        long im_dim = 0;
        int e = d - (p - 2);
        if (e >= 0) {
            int alo = std::max(0, e - (2 * N - p));
            int ahi = std::min(N - p + 1, e);
            im_dim = std::max(0, ahi - alo + 1);
        }
        if (!s.check_degree(basis, lower_basis, d, im_dim)) return false;
    }
    return true;
}

}  // namespace m3p
