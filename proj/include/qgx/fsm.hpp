#pragma once

// Deterministic finite state machines used as classifiers (Moore machines:
// the class of an input string is the output label of the state reached).
// State numbering is arbitrary; putting both parents in a normal form before
// crossing their tables approximates crossover on the classifiers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qgx/metric.hpp"
#include "qgx/rng.hpp"

namespace qgx {

class FsmTable {
public:
    /// delta is row-major n_states × alphabet_size.
    FsmTable(std::size_t n_states, std::size_t alphabet_size, std::vector<std::size_t> delta,
             std::vector<int> outputs, std::size_t start = 0);

    static FsmTable random(std::size_t n_states, std::size_t alphabet_size, int n_labels, Rng& rng);

    std::size_t n_states() const noexcept { return n_states_; }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t start() const noexcept { return start_; }
    std::size_t next(std::size_t state, std::size_t symbol) const { return delta_[state * alphabet_size_ + symbol]; }
    int output(std::size_t state) const { return outputs_[state]; }

    std::span<const std::size_t> delta() const noexcept { return delta_; }
    std::span<const int> outputs() const noexcept { return outputs_; }

    /// Output label after reading `input` from the start state.
    int classify(std::span<const std::size_t> input) const;

    bool is_valid() const noexcept;

    friend bool operator==(const FsmTable&, const FsmTable&) = default;

private:
    std::size_t n_states_;
    std::size_t alphabet_size_;
    std::vector<std::size_t> delta_;
    std::vector<int> outputs_;
    std::size_t start_;
};

/// Renumbers states by breadth-first discovery from the start state, symbols
/// explored in order; unreachable states follow in their original order. The
/// start state becomes 0.
FsmTable fsm_canonicalize(const FsmTable& m);

/// Applies a state renumbering: state s becomes perm[s].
FsmTable renumber_states(const FsmTable& m, std::span<const std::size_t> perm);

/// Disagreeing transition cells plus disagreeing output labels plus start.
Dist fsm_hamming(const FsmTable& a, const FsmTable& b);

/// Canonicalize both parents, then uniform crossover over transition cells
/// and output labels.
FsmTable fsm_crossover(const FsmTable& p1, const FsmTable& p2, Rng& rng);

/// Uniform cell-wise crossover of the tables as given (no normalization).
FsmTable fsm_uniform_crossover(const FsmTable& p1, const FsmTable& p2, Rng& rng);

/// Outputs on every input string of length 0..max_length, shortest first,
/// then lexicographic.
std::vector<int> output_vector(const FsmTable& m, std::size_t max_length);

struct FsmHamming {
    Dist operator()(const FsmTable& a, const FsmTable& b) const { return fsm_hamming(a, b); }
};

}  // namespace qgx
