#include "qgx/fsm.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qgx/errors.hpp"

namespace qgx {
namespace {

void require_same_shape(const FsmTable& a, const FsmTable& b, const char* where) {
    if (a.n_states() != b.n_states()) throw DimensionMismatch(std::string(where) + ": state count", a.n_states(), b.n_states());
    if (a.alphabet_size() != b.alphabet_size())
        throw DimensionMismatch(std::string(where) + ": alphabet size", a.alphabet_size(), b.alphabet_size());
}

}  // namespace

FsmTable::FsmTable(std::size_t n_states, std::size_t alphabet_size, std::vector<std::size_t> delta,
                   std::vector<int> outputs, std::size_t start)
    : n_states_(n_states), alphabet_size_(alphabet_size), delta_(std::move(delta)), outputs_(std::move(outputs)),
      start_(start) {
    if (n_states_ == 0) throw InvalidRepresentation("FsmTable: at least one state required");
    if (alphabet_size_ == 0) throw InvalidRepresentation("FsmTable: empty alphabet");
    if (delta_.size() != n_states_ * alphabet_size_)
        throw DimensionMismatch("FsmTable: transition cells", delta_.size(), n_states_ * alphabet_size_);
    if (outputs_.size() != n_states_) throw DimensionMismatch("FsmTable: output labels", outputs_.size(), n_states_);
    if (!is_valid()) throw InvalidRepresentation("FsmTable: transition or start state out of range");
}

FsmTable FsmTable::random(std::size_t n_states, std::size_t alphabet_size, int n_labels, Rng& rng) {
    std::vector<std::size_t> delta(n_states * alphabet_size);
    for (auto& d : delta) d = static_cast<std::size_t>(rng.below(n_states));
    std::vector<int> out(n_states);
    for (auto& o : out) o = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_labels)));
    return FsmTable(n_states, alphabet_size, std::move(delta), std::move(out), 0);
}

int FsmTable::classify(std::span<const std::size_t> input) const {
    std::size_t s = start_;
    for (std::size_t c : input) {
        if (c >= alphabet_size_) throw std::out_of_range("FsmTable::classify: symbol outside alphabet");
        s = next(s, c);
    }
    return outputs_[s];
}

bool FsmTable::is_valid() const noexcept {
    if (start_ >= n_states_) return false;
    return std::ranges::all_of(delta_, [&](std::size_t d) { return d < n_states_; });
}

FsmTable renumber_states(const FsmTable& m, std::span<const std::size_t> perm) {
    const std::size_t n = m.n_states(), a = m.alphabet_size();
    if (perm.size() != n) throw DimensionMismatch("renumber_states: permutation size", perm.size(), n);
    std::vector<std::size_t> delta(n * a);
    std::vector<int> out(n);
    for (std::size_t s = 0; s < n; ++s) {
        out[perm[s]] = m.output(s);
        for (std::size_t c = 0; c < a; ++c) delta[perm[s] * a + c] = perm[m.next(s, c)];
    }
    return FsmTable(n, a, std::move(delta), std::move(out), perm[m.start()]);
}

FsmTable fsm_canonicalize(const FsmTable& m) {
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    const std::size_t n = m.n_states();
    std::vector<std::size_t> id(n, unset);
    std::vector<std::size_t> order{m.start()};
    id[m.start()] = 0;
    for (std::size_t qi = 0; qi < order.size(); ++qi)
        for (std::size_t c = 0; c < m.alphabet_size(); ++c) {
            const std::size_t t = m.next(order[qi], c);
            if (id[t] != unset) continue;
            id[t] = order.size();
            order.push_back(t);
        }
    std::size_t next_id = order.size();
    for (std::size_t s = 0; s < n; ++s)
        if (id[s] == unset) id[s] = next_id++;
    return renumber_states(m, id);
}

Dist fsm_hamming(const FsmTable& a, const FsmTable& b) {
    require_same_shape(a, b, "fsm_hamming");
    return Hamming{}(a.delta(), b.delta()) + Hamming{}(a.outputs(), b.outputs()) + (a.start() != b.start() ? 1 : 0);
}

FsmTable fsm_uniform_crossover(const FsmTable& p1, const FsmTable& p2, Rng& rng) {
    require_same_shape(p1, p2, "fsm_crossover");
    std::vector<std::size_t> delta(p1.delta().size());
    for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = rng.coin() ? p1.delta()[i] : p2.delta()[i];
    std::vector<int> out(p1.n_states());
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = rng.coin() ? p1.output(s) : p2.output(s);
    const std::size_t start = p1.start() == p2.start() ? p1.start() : (rng.coin() ? p1.start() : p2.start());
    return FsmTable(p1.n_states(), p1.alphabet_size(), std::move(delta), std::move(out), start);
}

FsmTable fsm_crossover(const FsmTable& p1, const FsmTable& p2, Rng& rng) {
    require_same_shape(p1, p2, "fsm_crossover");
    return fsm_uniform_crossover(fsm_canonicalize(p1), fsm_canonicalize(p2), rng);
}

std::vector<int> output_vector(const FsmTable& m, std::size_t max_length) {
    std::vector<int> out;
    std::vector<std::size_t> word;
    for (std::size_t len = 0; len <= max_length; ++len) {
        word.assign(len, 0);
        while (true) {
            out.push_back(m.classify(word));
            std::size_t i = len;
            while (i > 0 && word[i - 1] + 1 == m.alphabet_size()) word[--i] = 0;
            if (i == 0) break;
            ++word[i - 1];
        }
    }
    return out;
}

}  // namespace qgx
