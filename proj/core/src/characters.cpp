#include "m3p/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace m3p {

void validate_p(int p) {
    if (p < 4 || p % 3 == 0)
        throw std::domain_error("p must be >= 4 and not divisible by 3");
}

std::vector<long> GordonData::twoBm(const std::vector<long>& m) const {
    std::vector<long> out(s + 1, 0);
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j) out[i] += twoB[i][j] * m[j];
    return out;
}

long GordonData::exponent(const std::vector<long>& m) const {
    auto bm = twoBm(m);
    long quad = 0, lin = 0;
    for (int i = 0; i <= s; ++i) {
        quad += m[i] * bm[i];
        lin += A[i] * m[i];
    }
    if (quad % 2 != 0) throw std::logic_error("GordonData: odd quadratic form value");
    return quad / 2 + lin;
}

long GordonData::zweight(const std::vector<long>& m) const {
    long w = m[0];
    for (int i = 1; i <= s; ++i) w += 2 * m[i];
    return w;
}

GordonData gordon_data(int p) {
    validate_p(p);
    GordonData gd;
    gd.p = p;
    gd.s = p / 3;
    int s = gd.s;
    gd.twoB.assign(s + 1, std::vector<long>(s + 1, 0));
    gd.twoB[0][0] = 2L * s;
    for (int j = 1; j <= s; ++j) {
        gd.twoB[0][j] = p + s - 2 - j;
        gd.twoB[j][0] = p + s - 2 - j;
    }
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) gd.twoB[i][j] = 2L * (p + s - 2 - std::max(i, j));
    gd.A.assign(s + 1, 0);
    gd.A[0] = -s;
    for (int i = 1; i <= s; ++i) gd.A[i] = -p + s + 2 - i;
    return gd;
}

namespace {

// Walk every m in N^{s+1} whose exponent (optionally weighted by the
// z-count from the (qz)-power) stays below the truncation order.  The
// off-diagonal entries of B are nonnegative and each diagonal slice
// t -> B_ii t^2 + A_i t (+ w_i t) is nonnegative on integers, so a
// prefix exponent >= order can only grow when extended and the walk
// is provably exhaustive.
void for_each_term(const GordonData& gd, int order, bool add_zweight,
                   const std::function<void(const std::vector<long>&, long)>& visit) {
    std::vector<long> m(gd.s + 1, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > gd.s) {
            long e = gd.exponent(m) + (add_zweight ? gd.zweight(m) : 0);
            if (e < order) visit(m, e);
            return;
        }
        long w_i = add_zweight ? (i == 0 ? 1 : 2) : 0;
        for (long v = 0;; ++v) {
            m[i] = v;
            long e = gd.exponent(m) + (add_zweight ? gd.zweight(m) : 0);
            if (e < order) {
                rec(i + 1);
            } else {
                // slope of the prefix exponent in coordinate i
                long slope = gd.twoB[i][i] * v + gd.twoB[i][i] / 2 + gd.A[i] + w_i;
                for (int j = 0; j < i; ++j) slope += gd.twoB[i][j] * m[j];
                if (slope > 0) break;
            }
        }
        m[i] = 0;
    };
    rec(0);
}

class PochCache {
public:
    explicit PochCache(int order) : order_(order) {}
    const QSeries& inv(int subscript) {
        auto it = cache_.find(subscript);
        if (it == cache_.end())
            it = cache_.emplace(subscript, pochhammer_inverse(subscript, order_)).first;
        return it->second;
    }

private:
    int order_;
    std::map<int, QSeries> cache_;
};

}  // namespace

QZSeries fermionic_principal(int p, int order) {
    validate_p(p);
    if (order < 1) throw std::domain_error("fermionic_principal: order must be >= 1");
    GordonData gd = gordon_data(p);
    PochCache poch(order);
    QZSeries out(order);
    for_each_term(gd, order, /*add_zweight=*/false, [&](const std::vector<long>& m, long e) {
        QSeries term = QSeries::one(order);
        for (int i = 0; i <= gd.s; ++i) term *= poch.inv(static_cast<int>(m[i]));
        out.add_column(gd.zweight(m), term.shifted(e));
    });
    return out;
}

QZSeries fermionic_extremal(int p, int l, int order) {
    validate_p(p);
    if (l < 0) throw std::domain_error("fermionic_extremal: l must be >= 0");
    if (order < 1) throw std::domain_error("fermionic_extremal: order must be >= 1");
    GordonData gd = gordon_data(p);
    PochCache poch(order);
    QZSeries out(order);
    for_each_term(gd, order, /*add_zweight=*/true, [&](const std::vector<long>& m, long e) {
        QSeries term = QSeries::one(order);
        for (int i = 0; i < gd.s; ++i) term *= poch.inv(static_cast<int>(m[i]));
        long deep = m[gd.s] + l;
        term *= poch.inv(deep >= order ? kInfinity : static_cast<int>(deep));
        out.add_column(gd.zweight(m), term.shifted(e));
    });
    return out;
}

QZSeries fermionic_voa(int p, int order) {
    validate_p(p);
    if (order < 1) throw std::domain_error("fermionic_voa: order must be >= 1");
    GordonData gd = gordon_data(p);
    PochCache poch(order);
    QZSeries out(order);
    for_each_term(gd, order, /*add_zweight=*/true, [&](const std::vector<long>& m, long e) {
        QSeries term = poch.inv(kInfinity);
        for (int i = 0; i < gd.s; ++i) term *= poch.inv(static_cast<int>(m[i]));
        out.add_column(gd.zweight(m), term.shifted(e));
    });
    return out;
}

QZSeries fermionic_finitized(int p, int N, int order) {
    validate_p(p);
    if (N < 1) throw std::domain_error("fermionic_finitized: N must be >= 1");
    if (order < 1) throw std::domain_error("fermionic_finitized: order must be >= 1");
    GordonData gd = gordon_data(p);
    QZSeries out(order);
    for_each_term(gd, order, /*add_zweight=*/true, [&](const std::vector<long>& m, long e) {
        auto bm = gd.twoBm(m);
        QSeries term = QSeries::one(order);
        for (int i = 0; i <= gd.s && !term.is_zero(); ++i) {
            long box = (i == 0 ? (N - 1) : 2L * (N - 1)) - bm[i] - 2 * gd.A[i];
            term *= gauss_binomial(box, m[i]);
        }
        if (!term.is_zero()) out.add_column(gd.zweight(m), term.shifted(e));
    });
    return out;
}

namespace {

QSeries chi_bounded(int p, int N, int n, int order) {
    if (n == 0) return QSeries::one(order);
    if (N < 1) return QSeries(order);
    if (p == 1 || p == 2)
        return gauss_binomial(N - 1, n).shifted(n).truncated(order);
    QSeries out(order);
    for (int m = 0; 2 * m <= n; ++m) {
        int l = n - 2 * m;
        long e = static_cast<long>(l) * (l - 1) + static_cast<long>(p - 2) * l * m +
                 static_cast<long>(p - 2) * m * (m - 1) + 2L * m;
        if (e >= order) continue;
        QSeries box = gauss_binomial(2L * (N - 1) - static_cast<long>(p - 2) * (n - 2), m);
        if (box.is_zero()) continue;
        QSeries sub = chi_bounded(p - 3, N - 2 * (l - 1) - (p - 2) * m, l, order);
        if (sub.is_zero()) continue;
        out += (sub * box).shifted(e);
    }
    return out;
}

QSeries chi_principal(int p, int n, int order, PochCache& poch) {
    if (n == 0) return QSeries::one(order);
    if (p == 1 || p == 2) return poch.inv(n).shifted(n);
    QSeries out(order);
    for (int m = 0; 2 * m <= n; ++m) {
        int l = n - 2 * m;
        long e = static_cast<long>(l) * (l - 1) + static_cast<long>(p - 2) * l * m +
                 static_cast<long>(p - 2) * m * (m - 1) + 2L * m;
        if (e >= order) continue;
        QSeries sub = chi_principal(p - 3, l, order, poch);
        out += (sub * poch.inv(m)).shifted(e);
    }
    return out;
}

}  // namespace

QSeries recursion_rhs(int p, int N, int n, int order) {
    validate_p(p);
    if (N < 1) throw std::domain_error("recursion_rhs: N must be >= 1");
    if (n < 0) throw std::domain_error("recursion_rhs: n must be >= 0");
    if (order < 1) throw std::domain_error("recursion_rhs: order must be >= 1");
    return chi_bounded(p, N, n, order);
}

QSeries principal_recursion_rhs(int p, int n, int order) {
    validate_p(p);
    if (n < 0) throw std::domain_error("principal_recursion_rhs: n must be >= 0");
    if (order < 1) throw std::domain_error("principal_recursion_rhs: order must be >= 1");
    PochCache poch(order);
    return chi_principal(p, n, order, poch);
}

QSeries ideal3_char(int p, int order) {
    validate_p(p);
    if (order < 1) throw std::domain_error("ideal3_char: order must be >= 1");
    QSeries num(order);
    if (p - 2 < order) num.add_coeff(p - 2, 1);
    if (p - 1 < order) num.add_coeff(p - 1, 1);
    if (2 * p - 3 < order) num.add_coeff(2 * p - 3, -1);
    return num * pochhammer_inverse(3, order);
}

QSeries a3_char(int p, int order) {
    validate_p(p);
    if (order < 1) throw std::domain_error("a3_char: order must be >= 1");
    // q^3 (1 - q^{p-2})(1 - q^{p-1})
    QSeries num(order);
    for (auto [e, c] : {std::pair<long, int>{3, 1},
                        {3 + p - 2, -1},
                        {3 + p - 1, -1},
                        {3 + 2 * p - 3, 1}})
        if (e < order) num.add_coeff(e, c);
    return num * pochhammer_inverse(3, order);
}

QSeries chi3_finitized_recursion(int p, int N, int order) {
    if (order < 1) throw std::domain_error("chi3_finitized_recursion: order must be >= 1");
    if (p >= 4) validate_p(p);
    else if (p != 1 && p != 2)
        throw std::domain_error("chi3_finitized_recursion: bad p");
    if (N < 1) return QSeries(order);
    if (p == 1 || p == 2)
        return gauss_binomial(N - 1, 3).shifted(3).truncated(order);
    QSeries out = chi3_finitized_recursion(p - 3, N - 4, order);
    out = out.shifted(6);
    if (N >= p - 1 && p + 1 < order) {
        // q^{p+1} [N-p+2]_q [2N-p+1]_q, the bounded two-variable block
        QSeries block = gauss_binomial(N - p + 1, 1) * gauss_binomial(2 * N - p, 1);
        out += block.truncated(order).shifted(p + 1);
    }
    return out;
}

}  // namespace m3p
