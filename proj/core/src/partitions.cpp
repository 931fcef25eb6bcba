#include "m3p/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace m3p {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!weakly_decreasing_positive(parts_))
        throw std::domain_error("Partition: parts must be weakly decreasing and positive");
}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = weight() <=> o.weight(); c != 0) return c;
    return parts_ <=> o.parts_;
}

bool weakly_decreasing_positive(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

bool in_admissible_class(const std::vector<int>& parts, int p, int N) {
    if (!weakly_decreasing_positive(parts)) return false;
    if (!parts.empty() && N != kUnbounded && parts[0] > N) return false;
    for (size_t i = 0; i + 2 < parts.size(); ++i)
        if (parts[i] - parts[i + 2] < p - 2) return false;
    return true;
}

bool is_admissible(const Partition& lam, int p, int N) {
    return in_admissible_class(lam.parts(), p, N);
}

namespace {

void check_class_params(int p, int N, int n) {
    if (p < 1) throw std::domain_error("admissible class: p must be >= 1");
    if (n < 0) throw std::domain_error("admissible class: n must be >= 0");
    (void)N;
}

// Shared DFS over C^[p]_{N,n}.  cap bounds the first part (already
// min'ed with N); visit receives each completed partition.
void scan_admissible(int p, int cap, int n,
                     const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    cur.reserve(n);
    std::function<void()> rec = [&]() {
        int i = static_cast<int>(cur.size());
        if (i == n) {
            visit(cur);
            return;
        }
        int hi = i == 0 ? cap : cur[i - 1];
        if (i >= 2) hi = std::min(hi, cur[i - 2] - (p - 2));
        for (int v = hi; v >= 1; --v) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

}  // namespace

std::vector<Partition> enumerate_admissible(int p, int N, int n) {
    check_class_params(p, N, n);
    if (N == kUnbounded)
        throw std::domain_error("enumerate_admissible: N must be finite");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (N < 1) return out;
    scan_admissible(p, N, n,
                    [&](const std::vector<int>& v) { out.emplace_back(Partition(v)); });
    std::sort(out.begin(), out.end());
    return out;
}

Int count_admissible(int p, int N, long d, int n) {
    check_class_params(p, N, n);
    if (n == 0) return d == 0 ? 1 : 0;
    if (N < 1 && N != kUnbounded) return 0;
    if (d < n) return 0;
    int cap = (N == kUnbounded) ? static_cast<int>(d - (n - 1)) : N;
    Int total = 0;
    std::function<void(int, long, int, int)> rec = [&](int i, long rem, int prev1, int prev2) {
        if (i == n) {
            if (rem == 0) total += 1;
            return;
        }
        int hi = i == 0 ? cap : prev1;
        if (i >= 2) hi = std::min(hi, prev2 - (p - 2));
        hi = std::min<long>(hi, rem - (n - 1 - i));  // leave >= 1 per later part
        for (int v = hi; v >= 1; --v) rec(i + 1, rem - v, v, prev1);
    };
    rec(0, d, 0, 0);
    return total;
}

QSeries admissible_gen_function(int p, int N, int n, int order) {
    check_class_params(p, N, n);
    if (order < 1) throw std::domain_error("admissible_gen_function: order must be >= 1");
    QSeries gf(order);
    if (n == 0) {
        gf.set_coeff(0, 1);
        return gf;
    }
    if (N < 1 && N != kUnbounded) return gf;
    int cap = (N == kUnbounded) ? order - 1 : N;
    std::function<void(int, long, int, int)> rec = [&](int i, long w, int prev1, int prev2) {
        if (i == n) {
            gf.add_coeff(w, 1);
            return;
        }
        int hi = i == 0 ? cap : prev1;
        if (i >= 2) hi = std::min(hi, prev2 - (p - 2));
        hi = std::min<long>(hi, order - 1 - w - (n - 1 - i));
        for (int v = hi; v >= 1; --v) rec(i + 1, w + v, v, prev1);
    };
    rec(0, 0, 0, 0);
    return gf;
}

std::vector<std::vector<int>> bounded_partitions(int M, int m) {
    if (M < 0 || m < 0)
        throw std::domain_error("bounded_partitions: M and m must be >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(m);
    std::function<void()> rec = [&]() {
        int i = static_cast<int>(cur.size());
        if (i == m) {
            out.push_back(cur);
            return;
        }
        int hi = i == 0 ? M : cur[i - 1];
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        long wa = std::accumulate(a.begin(), a.end(), 0L);
        long wb = std::accumulate(b.begin(), b.end(), 0L);
        return wa != wb ? wa < wb : a < b;
    });
    return out;
}

}  // namespace m3p
