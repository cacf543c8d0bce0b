#pragma once

// Per-representation mutation. Every operator visits each site once and
// changes it with probability `rate`; rate 0 returns the input unchanged.

#include <cstdint>
#include <string_view>
#include <vector>

#include "qgx/fsm.hpp"
#include "qgx/graph.hpp"
#include "qgx/grouping.hpp"
#include "qgx/rng.hpp"
#include "qgx/sequence.hpp"
#include "qgx/tour.hpp"

namespace qgx::harness {

using BitString = std::vector<std::uint8_t>;

/// Bit flips.
BitString mutate(const BitString& g, double rate, Rng& rng);

/// Each locus resampled uniformly from {1..k} (may keep its label).
KaryVector mutate(const KaryVector& g, double rate, Rng& rng);

/// Each node pair flipped; both triangles stay in sync.
AdjMatrix mutate(const AdjMatrix& g, double rate, Rng& rng);

/// Every symbol is hit with probability rate by one of insert-before, delete
/// or replace (chosen uniformly); the slot past the end can only receive an
/// insertion, so the empty sequence only ever grows.
Seq mutate(const Seq& g, std::string_view alphabet, double rate, Rng& rng);

/// For each position, with probability rate, reverse the segment between it
/// and a uniformly drawn second position.
Perm mutate(const Perm& g, double rate, Rng& rng);

/// Transition cells resampled over all states, output labels over
/// {0..n_labels-1}. The start state is left alone.
FsmTable mutate(const FsmTable& g, int n_labels, double rate, Rng& rng);

}  // namespace qgx::harness
