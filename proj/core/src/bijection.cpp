#include "m3p/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace m3p {

namespace {

std::optional<SNuEntry> entry_at(const std::vector<SNuEntry>& s, int index) {
    for (const auto& e : s)
        if (e.index == index) return e;
    return std::nullopt;
}

std::vector<int> bumped(const std::vector<int>& parts, const SNuEntry& e, int delta) {
    // raise at i+1 in case b, lower at i+1 in case a, act at i otherwise
    int j = e.index;
    if ((delta > 0 && e.kase == SNuCase::b) || (delta < 0 && e.kase == SNuCase::a)) j = e.index + 1;
    std::vector<int> out = parts;
    out[j - 1] += delta;
    return out;
}

}  // namespace

Partition b1(const Partition& lam, int p) {
    if (!in_admissible_class(lam.parts(), p - 3, kUnbounded))
        throw std::domain_error("b1: input not in the window-(p-3) class");
    int l = lam.length();
    std::vector<int> out(lam.parts());
    for (int i = 0; i < l; ++i) out[i] += 2 * (l - 1 - i);
    if (!in_admissible_class(out, p, kUnbounded))
        throw std::logic_error("b1: image left the window-p class");
    return Partition(out);
}

Partition b2(const Partition& nu, int p) {
    if (!in_admissible_class(nu.parts(), p, kUnbounded))
        throw std::domain_error("b2: input not admissible");
    std::vector<int> out(nu.parts());
    for (int& v : out) v += p - 2;
    out.push_back(1);
    out.push_back(1);
    if (!in_admissible_class(out, p, kUnbounded))
        throw std::logic_error("b2: image not admissible");
    return Partition(out);
}

std::vector<SNuEntry> s_nu(const Partition& nu, int p) {
    const auto& v = nu.parts();
    int n = nu.length();
    std::vector<SNuEntry> s;
    for (int i = 1; i <= n; ++i) {
        // nu_0 = +inf, nu_{n+1} = -inf; no case can hold at i = n
        if (i == n) continue;
        int cur = v[i - 1], next = v[i];
        bool prev_inf = (i == 1);
        if (cur == next) {
            s.push_back({i, SNuCase::a});
        } else if (cur == next + 1 && (prev_inf || v[i - 2] - next >= p - 1)) {
            s.push_back({i, SNuCase::b});
        } else if (!prev_inf && v[i - 2] > cur && cur > next && v[i - 2] - next == p - 2) {
            s.push_back({i, SNuCase::c});
        }
    }
    return s;
}

std::optional<Partition> b3(const Partition& nu, int p, int N) {
    auto s = s_nu(nu, p);
    if (s.empty()) return std::nullopt;
    const SNuEntry& top = s.back();
    auto cand = bumped(nu.parts(), top, +1);
    if (in_admissible_class(cand, p, N)) return Partition(cand);
    if (auto below = entry_at(s, top.index - 1)) {
        auto cand2 = bumped(nu.parts(), *below, +1);
        if (in_admissible_class(cand2, p, N)) {
            // the raise one index earlier counts only when the inverse
            // move undoes it; raising there can mark a fresh higher
            // index and hand the image a second preimage otherwise
            Partition img(cand2);
            auto back = b3_star(img, p, N);
            if (back && *back == nu) return img;
        }
    }
    return std::nullopt;
}

std::optional<Partition> b3_star(const Partition& nu, int p, int N) {
    auto s = s_nu(nu, p);
    if (s.empty()) return std::nullopt;
    auto cand = bumped(nu.parts(), s.back(), -1);
    if (in_admissible_class(cand, p, N)) return Partition(cand);
    return std::nullopt;
}

Decomposition decompose(const Partition& nu, int p, int N) {
    if (!in_admissible_class(nu.parts(), p, N))
        throw std::domain_error("decompose: input not in C^[p]_{N,n}");
    if (s_nu(nu, p).empty()) {
        // nu = B1(lambda): undo the staircase shift
        int l = nu.length();
        std::vector<int> lam(nu.parts());
        for (int i = 0; i < l; ++i) lam[i] -= 2 * (l - 1 - i);
        if (!in_admissible_class(lam, p - 3, kUnbounded))
            throw std::logic_error("decompose: B1 preimage not in the window-(p-3) class");
        return {Partition(lam), {}};
    }
    // saturate B3*: k = max { j : B3*^j(nu) is defined }
    long k = 0;
    Partition cur = nu;
    while (auto prev = b3_star(cur, p, N)) {
        cur = std::move(*prev);
        ++k;
    }
    // cur = B2(nu_bar): strip the two trailing 1s and the p-2 shift
    auto parts = cur.parts();
    int n = static_cast<int>(parts.size());
    if (n < 2 || parts[n - 1] != 1 || parts[n - 2] != 1)
        throw std::logic_error("decompose: saturated value is not a B2 image");
    parts.resize(n - 2);
    for (int& v : parts) v -= p - 2;
    Partition bar(parts);
    if (!in_admissible_class(bar.parts(), p, N - (p - 2)))
        throw std::logic_error("decompose: stripped value left C^[p]_{N-p+2,n-2}");
    Decomposition rest = decompose(bar, p, N - (p - 2));
    if (!rest.mu.empty() && rest.mu.back() < k)
        throw std::logic_error("decompose: exponents not weakly decreasing");
    rest.mu.push_back(static_cast<int>(k));
    return rest;
}

long b3_chain_bound(int L, int l, int p) {
    return 2 * static_cast<long>(L) - static_cast<long>(p - 6) * (l - 2) + 2;
}

Partition compose(const Partition& lam, const std::vector<int>& mu, int p, int N) {
    int l = lam.length();
    int m = static_cast<int>(mu.size());
    for (int i = 0; i < m; ++i) {
        if (mu[i] < 0 || (i && mu[i] > mu[i - 1]))
            throw std::domain_error("compose: mu must be weakly decreasing and nonnegative");
    }
    int L = N - 2 * (l - 1) - (p - 2) * m;
    if (!in_admissible_class(lam.parts(), p - 3, L))
        throw std::domain_error("compose: lambda not in C^[p-3]_{L,l} for the target class");
    if (m > 0 && mu[0] > b3_chain_bound(L, l, p))
        throw std::domain_error("compose: mu_1 exceeds the B3-chain bound");

    Partition cur = b1(lam, p);
    int bound = L + 2 * l - 2;
    for (int i = 0; i < m; ++i) {
        cur = b2(cur, p);
        bound += p - 2;
        for (int t = 0; t < mu[i]; ++t) {
            auto next = b3(cur, p, bound);
            if (!next)
                throw std::logic_error("compose: B3 undefined inside the stated range");
            cur = std::move(*next);
        }
    }
    if (bound != N)
        throw std::logic_error("compose: running bound disagrees with target N");
    if (!in_admissible_class(cur.parts(), p, N))
        throw std::logic_error("compose: image left C^[p]_{N,n}");
    return cur;
}

}  // namespace m3p
