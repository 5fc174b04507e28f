#include "wreathpow/matrix_rank.hpp"

#include <stdexcept>

namespace wreathpow {

int exact_rank(std::vector<std::vector<CycloNumber>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int conductor = -1;
    for (const auto& row : rows) {
        if (row.size() != cols)
            throw std::invalid_argument("exact_rank: ragged matrix");
        for (const auto& e : row) {
            if (conductor < 0) conductor = e.conductor();
            else if (e.conductor() != conductor)
                throw std::invalid_argument("exact_rank: mixed conductors");
        }
    }
    if (cols == 0) return 0;

    std::vector<bool> col_used(cols, false);
    std::size_t top = 0;
    while (top < rows.size()) {
        // lightest nonzero entry in the remaining submatrix
        std::size_t best_i = rows.size(), best_j = cols;
        std::pair<int, std::size_t> best_w{0, 0};
        for (std::size_t i = top; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_used[j] || rows[i][j].is_zero()) continue;
                auto w = rows[i][j].weight();
                if (best_i == rows.size() || w < best_w) {
                    best_i = i;
                    best_j = j;
                    best_w = w;
                }
            }
        }
        if (best_i == rows.size()) break; // remaining submatrix is zero

        std::swap(rows[top], rows[best_i]);
        col_used[best_j] = true;
        const CycloNumber pivot_inv = cyclo_inverse(rows[top][best_j]);
        for (std::size_t i = top + 1; i < rows.size(); ++i) {
            if (rows[i][best_j].is_zero()) continue;
            CycloNumber factor = rows[i][best_j] * pivot_inv;
            for (std::size_t j = 0; j < cols; ++j) {
                if (rows[top][j].is_zero()) continue;
                rows[i][j] -= factor * rows[top][j];
            }
        }
        ++top;
    }
    return static_cast<int>(top);
}

} // namespace wreathpow
