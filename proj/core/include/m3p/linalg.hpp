#ifndef M3P_LINALG_HPP
#define M3P_LINALG_HPP

#include <optional>
#include <vector>

#include "m3p/qseries.hpp"

namespace m3p {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Rank by fraction-free (Bareiss) elimination; the matrix is consumed.
long rank_bareiss(IntMatrix a);

/// Rank of a rational matrix: rows are scaled to integers first, then
/// eliminated fraction-free.
long rank(const RatMatrix& a);

/// Indices of a maximal independent subset of rows, scanned in order.
std::vector<int> independent_rows(const RatMatrix& a);

/// Basis of { x : A x = 0 }.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& a);

/// One exact solution of A x = b, if consistent.
std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b);

}  // namespace m3p

#endif
