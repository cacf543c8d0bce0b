#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace qgx::harness {

enum class CrossoverKind { genotypic, quotient, quotient_heuristic };

std::string_view to_string(CrossoverKind k) noexcept;
std::optional<CrossoverKind> parse_crossover_kind(std::string_view s) noexcept;

/// One GA run. Config files are `key = value` lines; '#' starts a comment.
///
/// Required keys: problem, representation, crossover, population,
/// generations, seed. Optional: tournament (3), crossover_rate (0.9),
/// mutation_rate (0.02), instance, output.
struct RunConfig {
    std::string problem;         // onemax | partition | tsp | seqmatch | fsm-parity | fsm-mod3 | graphmatch
    std::string representation;  // bitstring:<n> | kary:<k> | permutation | sequence | fsm:<states> | adjacency
    CrossoverKind crossover = CrossoverKind::genotypic;
    std::size_t population = 0;
    std::size_t generations = 0;
    std::size_t tournament = 3;
    double crossover_rate = 0.9;
    double mutation_rate = 0.02;
    std::uint64_t seed = 0;
    std::filesystem::path instance;
    std::filesystem::path output;

    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

RunConfig parse_config(std::istream& in, const std::string& source = "<stream>");
RunConfig load_config(const std::filesystem::path& path);
void write_config(std::ostream& out, const RunConfig& cfg);

/// "kary:4" -> {"kary", "4"}.
struct RepresentationId {
    std::string name;
    std::optional<std::size_t> parameter;
};
RepresentationId parse_representation(const std::string& id);

}  // namespace qgx::harness
