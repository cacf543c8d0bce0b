#include "qgx/assignment.hpp"

#include <limits>
#include <stdexcept>

#include "qgx/errors.hpp"

namespace qgx {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Finds an alternating path from free row `start` to free column `target`
// through tight edges, avoiding rows below `first_open` (pinned). Rewires the
// matching along the path on success.
bool repair(std::size_t n, const std::vector<char>& tight, std::vector<std::size_t>& row_to_col,
            std::vector<std::size_t>& col_to_row, std::size_t start, std::size_t target,
            std::size_t first_open) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> via_row(n, none);  // column -> row that reached it
    std::vector<char> row_seen(n, 0);
    std::vector<std::size_t> queue{start};
    row_seen[start] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t r = queue[qi];
        for (std::size_t c = 0; c < n; ++c) {
            if (!tight[r * n + c] || via_row[c] != none) continue;
            if (c != target) {
                const std::size_t owner = col_to_row[c];
                if (owner == none || owner < first_open || row_seen[owner]) continue;
                via_row[c] = r;
                row_seen[owner] = 1;
                queue.push_back(owner);
                continue;
            }
            via_row[c] = r;
            // Walk back from target to start flipping matched edges.
            std::size_t col = c;
            while (true) {
                const std::size_t row = via_row[col];
                const std::size_t prev = row_to_col[row];
                row_to_col[row] = col;
                col_to_row[col] = row;
                if (row == start) return true;
                col = prev;
            }
        }
    }
    return false;
}

}  // namespace

Assignment solve_assignment(std::span<const std::int64_t> cost, std::size_t n) {
    if (cost.size() != n * n) throw DimensionMismatch("solve_assignment: cost matrix size", cost.size(), n * n);
    Assignment out;
    if (n == 0) return out;

    auto a = [&](std::size_t i, std::size_t j) { return cost[(i - 1) * n + (j - 1)]; };

    // 1-based potentials, e-maxx formulation.
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            std::int64_t delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = a(i0, j) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<std::size_t> row_to_col(n), col_to_row(n);
    for (std::size_t j = 1; j <= n; ++j) {
        row_to_col[p[j] - 1] = j - 1;
        col_to_row[j - 1] = p[j] - 1;
    }

    // Every optimal assignment lives on edges with zero reduced cost.
    std::vector<char> tight(n * n, 0);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) tight[(i - 1) * n + (j - 1)] = a(i, j) - u[i] - v[j] == 0;

    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < row_to_col[r]; ++c) {
            if (!tight[r * n + c]) continue;
            const std::size_t owner = col_to_row[c];
            if (owner < r) continue;  // pinned
            // Tentatively give c to r; `owner` loses c and must reach r's old column.
            const std::size_t freed = row_to_col[r];
            auto saved_rc = row_to_col;
            auto saved_cr = col_to_row;
            row_to_col[r] = c;
            col_to_row[c] = r;
            col_to_row[freed] = std::numeric_limits<std::size_t>::max();
            row_to_col[owner] = std::numeric_limits<std::size_t>::max();
            if (repair(n, tight, row_to_col, col_to_row, owner, freed, r + 1)) break;
            row_to_col = std::move(saved_rc);
            col_to_row = std::move(saved_cr);
        }
    }

    out.row_to_col = std::move(row_to_col);
    for (std::size_t r = 0; r < n; ++r) out.cost += cost[r * n + out.row_to_col[r]];
    return out;
}

Assignment solve_max_assignment(std::span<const std::int64_t> weight, std::size_t n) {
    std::vector<std::int64_t> neg(weight.begin(), weight.end());
    for (auto& w : neg) w = -w;
    Assignment res = solve_assignment(neg, n);
    res.cost = -res.cost;
    return res;
}

}  // namespace qgx
