#ifndef M3P_PARTITIONS_HPP
#define M3P_PARTITIONS_HPP

#include <compare>
#include <vector>

#include "m3p/qseries.hpp"

namespace m3p {

/// Bound value standing for "no upper bound on parts".
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// A partition: weakly decreasing list of strictly positive parts.
/// The empty partition (weight 0) is allowed.
struct Partition {
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;

    bool operator==(const Partition&) const = default;
    /// (weight, lex) order used for deterministic listings.
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> parts_;
};

bool weakly_decreasing_positive(const std::vector<int>& parts);

/// Membership test for the class C^[p]_{N,n}: parts in [1, N], weakly
/// decreasing, and every window obeys parts[i] - parts[i+2] >= p-2.
/// p = 1, 2 make the window condition vacuous and are accepted.
bool in_admissible_class(const std::vector<int>& parts, int p, int N);

bool is_admissible(const Partition& lam, int p, int N);

/// All of C^[p]_{N,n}, sorted by (weight, lex).  N must be finite.
std::vector<Partition> enumerate_admissible(int p, int N, int n);

/// Cardinality of C^[p]_{N,d,n}; N = kUnbounded counts weight-d
/// length-n admissible partitions (finite, parts are >= 1).
Int count_admissible(int p, int N, long d, int n);

/// Generating function sum_{nu in C^[p]_{N,n}} q^|nu| truncated at
/// `order`.  Defined for every N: the n = 0 class is the single empty
/// partition regardless of the bound, and n >= 1 with N < 1 is empty.
/// The character recursions rely on both edge conventions.
QSeries admissible_gen_function(int p, int N, int n, int order);

/// The box classes P_{M,m}: weakly decreasing lists of m parts with
/// M >= mu_1 >= ... >= mu_m >= 0, sorted by (weight, lex).
std::vector<std::vector<int>> bounded_partitions(int M, int m);

}  // namespace m3p

#endif
