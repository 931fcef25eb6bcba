#include "m3p/qseries.hpp"

#include <algorithm>

namespace m3p {

const Int QSeries::zero_ = 0;

QSeries QSeries::one(int trunc) {
    QSeries s(trunc);
    if (trunc > 0) s.set_coeff(0, 1);
    return s;
}

QSeries QSeries::monomial(long d, Int coeff, int trunc) {
    QSeries s(trunc);
    if (d < trunc) s.set_coeff(d, std::move(coeff));
    return s;
}

bool QSeries::is_zero() const { return c_.empty(); }

long QSeries::degree() const { return static_cast<long>(c_.size()) - 1; }

const Int& QSeries::coeff(long d) const {
    if (d < 0 || d >= trunc_)
        throw std::domain_error("QSeries::coeff: exponent beyond truncation");
    if (d >= static_cast<long>(c_.size())) return zero_;
    return c_[d];
}

void QSeries::set_coeff(long d, Int value) {
    if (d < 0 || d >= trunc_)
        throw std::domain_error("QSeries::set_coeff: exponent beyond truncation");
    if (d >= static_cast<long>(c_.size())) {
        if (value == 0) return;
        c_.resize(d + 1);
    }
    c_[d] = std::move(value);
    if (d + 1 == static_cast<long>(c_.size())) trim();
}

void QSeries::add_coeff(long d, const Int& value) {
    if (d < 0 || d >= trunc_)
        throw std::domain_error("QSeries::add_coeff: exponent beyond truncation");
    if (value == 0) return;
    if (d >= static_cast<long>(c_.size())) c_.resize(d + 1);
    c_[d] += value;
    if (d + 1 == static_cast<long>(c_.size())) trim();
}

void QSeries::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QSeries QSeries::truncated(int t) const {
    if (t >= trunc_) {
        if (t > trunc_)
            throw std::domain_error("QSeries::truncated: cannot extend truncation");
        return *this;
    }
    QSeries r(t);
    long top = std::min<long>(c_.size(), t);
    r.c_.assign(c_.begin(), c_.begin() + top);
    r.trim();
    return r;
}

QSeries QSeries::shifted(long e) const {
    if (e < 0) throw std::domain_error("QSeries::shifted: negative shift");
    QSeries r(trunc_);
    long top = static_cast<long>(c_.size());
    if (trunc_ != kExact) top = std::min<long>(top, trunc_ - e);
    if (top > 0) {
        r.c_.assign(e, 0);
        r.c_.insert(r.c_.end(), c_.begin(), c_.begin() + top);
    }
    r.trim();
    return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    int t = std::min(trunc_, o.trunc_);
    long top = static_cast<long>(o.c_.size());
    if (t != kExact) top = std::min<long>(top, t);
    if (top > static_cast<long>(c_.size())) c_.resize(top);
    for (long d = 0; d < top; ++d) c_[d] += o.c_[d];
    trunc_ = t;
    if (t != kExact && static_cast<long>(c_.size()) > t) c_.resize(t);
    trim();
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    int t = std::min(trunc_, o.trunc_);
    long top = static_cast<long>(o.c_.size());
    if (t != kExact) top = std::min<long>(top, t);
    if (top > static_cast<long>(c_.size())) c_.resize(top);
    for (long d = 0; d < top; ++d) c_[d] -= o.c_[d];
    trunc_ = t;
    if (t != kExact && static_cast<long>(c_.size()) > t) c_.resize(t);
    trim();
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
    int t = std::min(trunc_, o.trunc_);
    std::vector<Int> out;
    if (!c_.empty() && !o.c_.empty()) {
        long full = static_cast<long>(c_.size() + o.c_.size()) - 1;
        long top = (t == kExact) ? full : std::min<long>(full, t);
        out.assign(top, 0);
        for (long i = 0; i < static_cast<long>(c_.size()) && i < top; ++i) {
            if (c_[i] == 0) continue;
            long jmax = std::min<long>(o.c_.size(), top - i);
            for (long j = 0; j < jmax; ++j) {
                if (o.c_[j] == 0) continue;
                out[i + j] += c_[i] * o.c_[j];
            }
        }
    }
    c_ = std::move(out);
    trunc_ = t;
    trim();
    return *this;
}

QSeries& QSeries::operator*=(const Int& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= k;
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

bool QSeries::operator==(const QSeries& o) const {
    return trunc_ == o.trunc_ && c_ == o.c_;
}

QSeries series_inverse(const QSeries& a, int order) {
    if (order < 1) throw std::domain_error("series_inverse: order must be >= 1");
    if (a.trunc() < order)
        throw std::domain_error("series_inverse: operand truncated below requested order");
    if (a.coeff(0) != 1)
        throw std::domain_error("series_inverse: constant term must be 1");
    // b_n = -sum_{k=1}^n a_k b_{n-k}
    QSeries b(order);
    b.set_coeff(0, 1);
    for (long n = 1; n < order; ++n) {
        Int acc = 0;
        long kmax = std::min<long>(n, a.degree());
        for (long k = 1; k <= kmax; ++k) acc -= a.coeff(k) * b.coeff(n - k);
        b.set_coeff(n, acc);
    }
    return b;
}

QSeries pochhammer(int m, int order) {
    if (order < 1) throw std::domain_error("pochhammer: order must be >= 1");
    if (m < 0) throw std::domain_error("pochhammer: negative subscript");
    QSeries r = QSeries::one(order);
    long jmax = (m == kInfinity) ? order - 1 : m;
    for (long j = 1; j <= jmax && j < order; ++j) {
        // multiply by (1 - q^j) in place
        QSeries shifted = r.shifted(j);
        r -= shifted;
    }
    return r;
}

QSeries pochhammer_inverse(int m, int order) {
    return series_inverse(pochhammer(m, order), order);
}

QSeries gauss_binomial(long M, long m) {
    if (m < 0) throw std::domain_error("gauss_binomial: negative m");
    // m = 0 counts the empty partition whatever the width; a negative
    // box admits nothing else.  The finitized character sums rely on
    // both readings (verified against enumeration).
    if (m == 0) return QSeries::one();
    if (M < 0) return QSeries(QSeries::kExact);
    if (M == 0) return QSeries::one();
    // Pascal recurrence [M+m over m] = [M+m-1 over m-1] + q^m [M+m-1 over m],
    // run as a DP over the number of box rows.  row[j] = [j+i over i] after
    // pass i.
    std::vector<QSeries> row(M + 1, QSeries::one());
    for (long i = 1; i <= m; ++i)
        for (long j = 1; j <= M; ++j) row[j] += row[j - 1].shifted(i);
    return row[M];
}

bool QZSeries::is_zero() const { return cols_.empty(); }

QSeries QZSeries::column(long n) const {
    auto it = cols_.find(n);
    if (it == cols_.end()) return QSeries(trunc_);
    return it->second;
}

void QZSeries::add_column(long n, const QSeries& s) {
    if (s.trunc() < trunc_)
        throw std::domain_error("QZSeries::add_column: column truncated below series order");
    QSeries t = s.trunc() == trunc_ ? s : s.truncated(trunc_);
    auto [it, fresh] = cols_.emplace(n, t);
    if (!fresh) it->second += t;
    if (it->second.is_zero()) cols_.erase(it);
}

const Int& QZSeries::coeff(long d, long n) const {
    static const Int zero = 0;
    auto it = cols_.find(n);
    if (it == cols_.end()) {
        if (d < 0 || d >= trunc_)
            throw std::domain_error("QZSeries::coeff: exponent beyond truncation");
        return zero;
    }
    return it->second.coeff(d);
}

void QZSeries::add_term(long d, long n, const Int& c) {
    auto it = cols_.emplace(n, QSeries(trunc_)).first;
    it->second.add_coeff(d, c);
    if (it->second.is_zero()) cols_.erase(it);
}

QZSeries& QZSeries::operator+=(const QZSeries& o) {
    if (o.trunc_ < trunc_) {
        // shrink to the finer truncation first
        QZSeries r(o.trunc_);
        for (auto& [n, s] : cols_) r.add_column(n, s.truncated(o.trunc_));
        *this = std::move(r);
    }
    for (auto& [n, s] : o.cols_) add_column(n, s.truncated(trunc_));
    return *this;
}

QZSeries& QZSeries::operator*=(const Int& c) {
    for (auto& [n, s] : cols_) s *= c;
    prune();
    return *this;
}

QZSeries& QZSeries::operator*=(const QSeries& s) {
    for (auto& [n, col] : cols_) col *= s;
    trunc_ = std::min<int>(trunc_, s.trunc());
    prune();
    return *this;
}

QZSeries QZSeries::z_shifted(long k) const {
    QZSeries r(trunc_);
    for (auto& [n, s] : cols_) r.cols_.emplace(n + k, s);
    return r;
}

void QZSeries::prune() {
    for (auto it = cols_.begin(); it != cols_.end();) {
        if (it->second.is_zero())
            it = cols_.erase(it);
        else
            ++it;
    }
}

bool QZSeries::operator==(const QZSeries& o) const {
    return trunc_ == o.trunc_ && cols_ == o.cols_;
}

QZSeries regrade_z_to_qz(const QZSeries& a) {
    QZSeries r(a.trunc());
    for (auto& [n, s] : a.columns()) {
        long top = std::min<long>(s.degree(), a.trunc() - 1 - n);
        QSeries col(a.trunc());
        for (long d = 0; d <= top; ++d) {
            const Int& c = s.coeff(d);
            if (c == 0) continue;
            if (d + n < 0)
                throw std::domain_error("regrade_z_to_qz: negative q-exponent");
            col.set_coeff(d + n, c);
        }
        if (!col.is_zero()) r.add_column(n, col);
    }
    return r;
}

bool leq(const QSeries& a, const QSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::domain_error("leq: mismatched truncation orders");
    long top = std::max(a.degree(), b.degree());
    for (long d = 0; d <= top; ++d)
        if (a.coeff(d) > b.coeff(d)) return false;
    return true;
}

bool leq(const QZSeries& a, const QZSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::domain_error("leq: mismatched truncation orders");
    for (auto& [n, s] : a.columns())
        if (!leq(s, b.column(n))) return false;
    // columns of b absent from a only make b larger when nonnegative;
    // a zero column of a must still be <= b's column
    for (auto& [n, s] : b.columns()) {
        if (a.columns().count(n)) continue;
        if (!leq(QSeries(a.trunc()), s)) return false;
    }
    return true;
}

}  // namespace m3p
