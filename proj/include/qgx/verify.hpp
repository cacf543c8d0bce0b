#pragma once

// Oracle property suites behind `qgx verify`. Every check is seeded and
// deterministic; a suite fails if any of its checks fails.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgx::verify {

enum class Suite { metric, quotient, grouping, graph, sequence, tour, fsm, all };

std::optional<Suite> parse_suite(std::string_view name) noexcept;
std::string_view to_string(Suite s) noexcept;

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Called after each check completes (for streaming progress).
using Reporter = std::function<void(const CheckResult&)>;

std::vector<CheckResult> run_suite(Suite s, std::uint64_t seed = 1, const Reporter& report = {});

bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace qgx::verify
