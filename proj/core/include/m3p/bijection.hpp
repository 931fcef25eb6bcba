#ifndef M3P_BIJECTION_HPP
#define M3P_BIJECTION_HPP

#include <optional>
#include <vector>

#include "m3p/partitions.hpp"

namespace m3p {

/// Which of the three local patterns holds at an index of S_nu.
enum class SNuCase { a, b, c };

struct SNuEntry {
    int index;  // 1-based position in nu
    SNuCase kase;
    bool operator==(const SNuEntry&) const = default;
};

/// The unique factorisation nu = (B3^{mu_m} B2) ... (B3^{mu_1} B2) B1(lambda):
/// lambda lives in the class with window p-3, mu is a box partition
/// (weakly decreasing, parts >= 0, innermost exponent first).
struct Decomposition {
    Partition lambda;
    std::vector<int> mu;
    bool operator==(const Decomposition&) const = default;
};

/// B1: (l_1,...,l_k) -> (l_1+2(k-1),...,l_{k-1}+2,l_k), mapping the
/// window-(p-3) class into the window-p one.
Partition b1(const Partition& lam, int p);

/// B2: shift all parts by p-2 and append two 1s.
Partition b2(const Partition& nu, int p);

/// The marked indices of nu, with sentinels nu_0 = +inf and
/// nu_{n+1} = -inf; sorted by index, at most one case per index.
std::vector<SNuEntry> s_nu(const Partition& nu, int p);

/// B3 raises one part by 1 (at i+1 in case b, at i otherwise, for
/// i = max S_nu, falling back to i-1 when the first candidate leaves
/// the class).  Returns nothing when undefined.
std::optional<Partition> b3(const Partition& nu, int p, int N);

/// Inverse move: lowers one part (at i+1 in case a, at i otherwise);
/// no fallback.
std::optional<Partition> b3_star(const Partition& nu, int p, int N);

/// Peel nu in C^[p]_{N,n} down to its (lambda, mu) factorisation by
/// saturating B3* at each layer and stripping the trailing B2.
Decomposition decompose(const Partition& nu, int p, int N);

/// Rebuild nu from (lambda, mu) inside the target class C^[p]_{N,n};
/// N fixes the bound L of lambda's class and the running bounds for
/// the B3 steps.  Violating the mu_1 bound is a domain error.
Partition compose(const Partition& lam, const std::vector<int>& mu, int p, int N);

/// Upper bound of the B3-chain on B2(B1(lambda)) for lambda in
/// C^[p-3]_{L,l}: the chain is defined exactly for 0 <= k <= this.
long b3_chain_bound(int L, int l, int p);

}  // namespace m3p

#endif
