#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qgx {

struct Assignment {
    /// row_to_col[r] is the column assigned to row r.
    std::vector<std::size_t> row_to_col;
    std::int64_t cost = 0;
};

/// Minimum-cost perfect assignment on an n×n integer cost matrix (row-major),
/// Hungarian method with integer potentials, O(n³).
///
/// Among co-optimal assignments the lexicographically smallest row_to_col is
/// returned: the optimal duals delimit the tight subgraph that contains every
/// optimal assignment, and rows are pinned to their smallest feasible column
/// one at a time with an alternating-path repair.
Assignment solve_assignment(std::span<const std::int64_t> cost, std::size_t n);

/// Same, maximizing total weight.
Assignment solve_max_assignment(std::span<const std::int64_t> weight, std::size_t n);

}  // namespace qgx
