#include "m3p/moderel.hpp"

#include <algorithm>
#include <stdexcept>

#include "m3p/characters.hpp"
#include "m3p/linalg.hpp"

namespace m3p {

void XiPoly::add_term(Exp3 key, const Int& c) {
    if (c == 0) return;
    std::sort(key.begin(), key.end(), std::greater<int>());
    if (key[2] < 1) throw std::domain_error("XiPoly: mode indices must be >= 1");
    auto [it, fresh] = coeffs_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

long XiPoly::degree() const {
    if (coeffs_.empty()) throw std::domain_error("XiPoly::degree: zero element");
    const Exp3& k = coeffs_.begin()->first;
    return k[0] + k[1] + k[2];
}

XiPoly& XiPoly::operator+=(const XiPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

XiPoly& XiPoly::operator*=(const Int& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs_) v *= c;
    return *this;
}

namespace {

// c(k, nu) = (k-1)(k-2)...(k-nu)
Int falling(int k, int nu) {
    Int out = 1;
    for (int t = 1; t <= nu; ++t) out *= (k - t);
    return out;
}

}  // namespace

XiPoly current_product_modes(int nu1, int nu2, int nu3, int d) {
    if (nu1 < 0 || nu2 < 0 || nu3 < 0)
        throw std::domain_error("current_product_modes: derivative orders must be >= 0");
    if (d < 3) throw std::domain_error("current_product_modes: d must be >= 3");
    XiPoly out;
    for (int i = 1; i <= d - 2; ++i) {
        Int ci = falling(i, nu1);
        if (ci == 0) continue;
        for (int j = 1; j <= d - i - 1; ++j) {
            Int cj = falling(j, nu2);
            if (cj == 0) continue;
            int k = d - i - j;
            Int ck = falling(k, nu3);
            if (ck == 0) continue;
            out.add_term({i, j, k}, ci * cj * ck);
        }
    }
    return out;
}

XiPoly squared_current_relation(int p, int nu, int d) {
    validate_p(p);
    if (nu < 0 || nu > p - 3)
        throw std::domain_error("squared_current_relation: nu must lie in 0..p-3");
    return current_product_modes(0, 0, nu, d);
}

XiPoly mixed_current_relation(int p, int d) {
    validate_p(p);
    XiPoly out = current_product_modes(0, 0, p - 1, d) * Int(p * (p - 4));
    out += current_product_modes(0, 1, p - 2, d) * Int(4 * (p - 3) * (p - 3));
    out += current_product_modes(0, 2, p - 3, d) * Int(2 * (2 * (p - 3) * (p - 3) - p));
    return out;
}

Rat pair_against(const XiPoly& rho, const SymPoly3& f) {
    Rat acc(0);
    for (const auto& [k, c] : rho.coeffs()) {
        Rat v = coupling(f, Partition({k[0], k[1], k[2]}));
        if (v != 0) acc += Rat(c) * v;
    }
    return acc;
}

bool annihilation_check(const XiPoly& rho, const Ideal3& ideal) {
    if (rho.is_zero()) return true;
    long d = rho.degree();
    for (const SymPoly3& f : ideal.graded_basis(static_cast<int>(d) - 3))
        if (pair_against(rho, f) != 0) return false;
    return true;
}

bool annihilation_check(const XiPoly& rho, int p) {
    return annihilation_check(rho, Ideal3::make(p));
}

long mixed_relation_min_degree(int p) {
    validate_p(p);
    // every summand needs k > nu on its most-derived factor, so the
    // search from d = 3 terminates quickly
    for (int d = 3; d <= 4 * p; ++d)
        if (!mixed_current_relation(p, d).is_zero()) return d;
    throw std::logic_error("mixed_relation_min_degree: relation vanished through degree 4p");
}

namespace {

std::vector<Exp3> xi_keys(int d) {
    std::vector<Exp3> out;
    for (int i = 1; i <= d - 2; ++i)
        for (int j = 1; j <= i; ++j) {
            int k = d - i - j;
            if (k < 1 || k > j) continue;
            out.push_back({i, j, k});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> xi_row(const XiPoly& rho, const std::vector<Exp3>& keys) {
    std::vector<Int> row;
    row.reserve(keys.size());
    for (const Exp3& k : keys) {
        auto it = rho.coeffs().find(k);
        row.push_back(it == rho.coeffs().end() ? Int(0) : it->second);
    }
    return row;
}

}  // namespace

long squared_relation_rank(int p, int d) {
    validate_p(p);
    std::vector<Exp3> keys = xi_keys(d);
    IntMatrix rows;
    for (int nu = 0; nu <= p - 3; ++nu)
        rows.push_back(xi_row(squared_current_relation(p, nu, d), keys));
    return rank_bareiss(std::move(rows));
}

bool independence_check(int p) {
    validate_p(p);
    if (p < 7) throw std::domain_error("independence_check: p must be >= 7");
    int d = static_cast<int>(mixed_relation_min_degree(p));
    std::vector<Exp3> keys = xi_keys(d);
    IntMatrix rows;
    for (int nu = 0; nu <= p - 3; ++nu)
        rows.push_back(xi_row(squared_current_relation(p, nu, d), keys));
    long base = rank_bareiss(rows);
    rows.push_back(xi_row(mixed_current_relation(p, d), keys));
    return rank_bareiss(std::move(rows)) == base + 1;
}

bool a3_dimension_crosscheck(int p, int d) {
    validate_p(p);
    if (d < 3) throw std::domain_error("a3_dimension_crosscheck: d must be >= 3");
    long dim_a = static_cast<long>(xi_keys(d).size());
    long dim_ideal = static_cast<long>(ideal3_basis(p, d - 3).size());
    Int expected = a3_char(p, d + 1).coeff(d);
    return Int(dim_a - dim_ideal) == expected;
}

}  // namespace m3p
