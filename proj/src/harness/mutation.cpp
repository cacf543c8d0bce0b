#include "qgx/harness/mutation.hpp"

#include <algorithm>

namespace qgx::harness {

BitString mutate(const BitString& g, double rate, Rng& rng) {
    BitString out = g;
    for (auto& b : out)
        if (rng.chance(rate)) b ^= 1;
    return out;
}

KaryVector mutate(const KaryVector& g, double rate, Rng& rng) {
    std::vector<int> labels(g.labels().begin(), g.labels().end());
    for (auto& l : labels)
        if (rng.chance(rate)) l = static_cast<int>(rng.below(g.k())) + 1;
    return KaryVector(g.k(), std::move(labels));
}

AdjMatrix mutate(const AdjMatrix& g, double rate, Rng& rng) {
    AdjMatrix out = g;
    for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j = i + 1; j < g.n(); ++j)
            if (rng.chance(rate)) out.flip_edge(i, j);
    return out;
}

Seq mutate(const Seq& g, std::string_view alphabet, double rate, Rng& rng) {
    auto symbol = [&] { return alphabet[rng.below(alphabet.size())]; };
    Seq out;
    out.reserve(g.size() + 1);
    for (char c : g) {
        if (!rng.chance(rate)) {
            out.push_back(c);
            continue;
        }
        switch (rng.below(3)) {
            case 0:  // insert before
                out.push_back(symbol());
                out.push_back(c);
                break;
            case 1:  // delete
                break;
            default:  // replace
                out.push_back(symbol());
        }
    }
    if (rng.chance(rate)) out.push_back(symbol());
    return out;
}

Perm mutate(const Perm& g, double rate, Rng& rng) {
    Perm out = g;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!rng.chance(rate)) continue;
        const std::size_t j = rng.below(g.size());
        out = reverse_segment(out, std::min(i, j), std::max(i, j));
    }
    return out;
}

FsmTable mutate(const FsmTable& g, int n_labels, double rate, Rng& rng) {
    std::vector<std::size_t> delta(g.delta().begin(), g.delta().end());
    for (auto& d : delta)
        if (rng.chance(rate)) d = rng.below(g.n_states());
    std::vector<int> out(g.outputs().begin(), g.outputs().end());
    for (auto& o : out)
        if (rng.chance(rate)) o = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_labels)));
    return FsmTable(g.n_states(), g.alphabet_size(), std::move(delta), std::move(out), g.start());
}

}  // namespace qgx::harness
