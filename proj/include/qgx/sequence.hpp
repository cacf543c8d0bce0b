#pragma once

// Variable-length sequences. A stretched sequence interleaves gap symbols
// '-'; every stretching of s belongs to the class of s, and the quotient of
// the (right-padded) Hamming distance on stretched sequences is the edit
// distance. Homologous crossover = optimal alignment + column-wise crossover.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qgx/metric.hpp"
#include "qgx/quotient.hpp"
#include "qgx/rng.hpp"

namespace qgx {

inline constexpr char kGap = '-';

/// A sequence never contains kGap; a stretched sequence may.
using Seq = std::string;
using StretchedSeq = std::string;

bool is_valid_seq(std::string_view s) noexcept;

/// Removes every gap symbol.
Seq unstretch(std::string_view s);

struct Alignment {
    StretchedSeq first;
    StretchedSeq second;
};

enum class AlignPolicy {
    /// Traceback prefers match/substitute, then deletion, then insertion.
    deterministic,
    /// Uniform over all co-optimal alignments.
    sampled,
};

/// Unit-cost Levenshtein distance, O(|s1|·|s2|).
Dist edit_distance(std::string_view s1, std::string_view s2);

/// Optimal alignment: Hamming(first, second) == edit_distance(s1, s2), no
/// column holds two gaps. `rng` is only consulted by the sampled policy.
Alignment align(std::string_view s1, std::string_view s2, AlignPolicy policy, Rng& rng);
Alignment align(std::string_view s1, std::string_view s2);

/// Hamming distance after padding the shorter operand with trailing gaps.
Dist stretched_hamming(std::string_view a, std::string_view b);

/// Align, cross columns uniformly, unstretch. The child may be empty.
Seq homologous_crossover(std::string_view p1, std::string_view p2, Rng& rng,
                         AlignPolicy policy = AlignPolicy::deterministic);

/// Uniform crossover on the leftmost-aligned, right-padded parents, gaps
/// removed afterwards. The genotypic baseline for homologous crossover.
Seq padded_uniform_crossover(std::string_view p1, std::string_view p2, Rng& rng);

/// Every stretching of s with total length ≤ max_length, in increasing length
/// and then lexicographic order of gap positions.
std::vector<StretchedSeq> enumerate_stretchings(std::string_view s, std::size_t max_length);

/// All sequences of length ≤ max_length over `alphabet`, shortest first.
std::vector<Seq> enumerate_sequences(std::string_view alphabet, std::size_t max_length);

/// Classes of stretched sequences, truncated to stretchings of length ≤ bound
/// so that classes are finite.
EquivRelation<StretchedSeq> stretching_relation(std::size_t max_length);

struct EditDistance {
    Dist operator()(std::string_view a, std::string_view b) const { return edit_distance(a, b); }
};

struct StretchedHamming {
    Dist operator()(std::string_view a, std::string_view b) const { return stretched_hamming(a, b); }
};

/// One sequence per non-empty line; surrounding whitespace trimmed.
std::vector<Seq> parse_sequence_corpus(std::istream& in, const std::string& source = "<stream>");
std::vector<Seq> load_sequence_corpus(const std::filesystem::path& path);

/// Distinct symbols of a corpus, sorted.
std::string corpus_alphabet(const std::vector<Seq>& corpus);

}  // namespace qgx
