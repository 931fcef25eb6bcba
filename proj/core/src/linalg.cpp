#include "m3p/linalg.hpp"

#include <stdexcept>

namespace m3p {

long rank_bareiss(IntMatrix a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    Int prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                Int num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(num);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

namespace {

IntMatrix clear_denominators(const RatMatrix& a) {
    IntMatrix out;
    out.reserve(a.size());
    for (const auto& row : a) {
        Int lcm = 1;
        for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Int> irow;
        irow.reserve(row.size());
        for (const auto& v : row) {
            Int scaled = v.get_num() * (lcm / v.get_den());
            irow.push_back(std::move(scaled));
        }
        out.push_back(std::move(irow));
    }
    return out;
}

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(RatMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        Rat inv = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

long rank(const RatMatrix& a) {
    if (a.empty()) return 0;
    return rank_bareiss(clear_denominators(a));
}

std::vector<int> independent_rows(const RatMatrix& a) {
    std::vector<int> picked;
    if (a.empty()) return picked;
    // incremental RREF: stored rows stay mutually reduced, lead entry 1
    RatMatrix ech;
    std::vector<size_t> leads;
    for (size_t i = 0; i < a.size(); ++i) {
        std::vector<Rat> row = a[i];
        for (size_t k = 0; k < ech.size(); ++k) {
            if (row[leads[k]] == 0) continue;
            Rat f = row[leads[k]];
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * ech[k][j];
        }
        size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        Rat inv = row[lead];
        for (auto& v : row) v /= inv;
        for (size_t k = 0; k < ech.size(); ++k) {
            if (ech[k][lead] == 0) continue;
            Rat f = ech[k][lead];
            for (size_t j = 0; j < row.size(); ++j) ech[k][j] -= f * row[j];
        }
        picked.push_back(static_cast<int>(i));
        ech.push_back(std::move(row));
        leads.push_back(lead);
    }
    return picked;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& a) {
    std::vector<std::vector<Rat>> basis;
    if (a.empty()) return basis;
    RatMatrix m = a;
    std::vector<int> pivots = rref(m);
    size_t cols = a[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b) {
    if (a.size() != b.size()) throw std::domain_error("solve: shape mismatch");
    if (a.empty()) return std::vector<Rat>{};
    size_t cols = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    std::vector<Rat> x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (static_cast<size_t>(pivots[r]) == cols) return std::nullopt;  // 0 = 1 row
        x[pivots[r]] = a[r][cols];
    }
    return x;
}

}  // namespace m3p
