#include "qgx/tour.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "qgx/errors.hpp"

namespace qgx {
namespace {

constexpr std::size_t kMaxEncodable = 16;

using Code = std::uint64_t;

void require_same_size(const Perm& a, const Perm& b, const char* where) {
    if (a.size() != b.size()) throw DimensionMismatch(std::string(where) + ": permutation size", a.size(), b.size());
}

Code encode(std::span<const int> p) {
    Code c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) c |= static_cast<Code>(p[i]) << (4 * i);
    return c;
}

// Reverses nibbles first..last of a code.
Code reverse_code(Code c, std::size_t first, std::size_t last) {
    Code out = c;
    for (std::size_t i = first, j = last; i <= last; ++i, --j) {
        const Code v = (c >> (4 * j)) & 0xF;
        out &= ~(Code{0xF} << (4 * i));
        out |= v << (4 * i);
    }
    return out;
}

// π[i] = position of a[i] in b. Sorting π by reversals ⇔ turning a into b.
std::vector<int> relative(const Perm& a, const Perm& b) {
    std::vector<int> pos(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) pos[static_cast<std::size_t>(b[i])] = static_cast<int>(i);
    std::vector<int> rel(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) rel[i] = pos[static_cast<std::size_t>(a[i])];
    return rel;
}

// Framed permutation 0, π+1, n+1.
std::vector<int> framed(std::span<const int> rel) {
    std::vector<int> f(rel.size() + 2);
    f.front() = 0;
    for (std::size_t i = 0; i < rel.size(); ++i) f[i + 1] = rel[i] + 1;
    f.back() = static_cast<int>(rel.size()) + 1;
    return f;
}

bool is_break(int x, int y) { return std::abs(x - y) != 1; }

std::size_t count_breakpoints(const std::vector<int>& f) {
    std::size_t b = 0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) b += is_break(f[i], f[i + 1]);
    return b;
}

// Breakpoint change when framed positions i..j (1 ≤ i ≤ j ≤ n) are reversed.
int reversal_gain(const std::vector<int>& f, std::size_t i, std::size_t j) {
    const int before = is_break(f[i - 1], f[i]) + is_break(f[j], f[j + 1]);
    const int after = is_break(f[i - 1], f[j]) + is_break(f[i], f[j + 1]);
    return before - after;
}

// Sequence of framed-position reversals sorting f greedily. With `rng`, ties
// among the best reversals are broken uniformly; otherwise the first wins.
std::vector<std::pair<std::size_t, std::size_t>> greedy_sort(std::vector<int> f, Rng* rng) {
    std::vector<std::pair<std::size_t, std::size_t>> steps;
    const std::size_t n = f.size() - 2;
    std::size_t b = count_breakpoints(f);
    std::vector<std::pair<std::size_t, std::size_t>> best;
    while (b > 0) {
        int best_gain = 0;
        best.clear();
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                const int g = reversal_gain(f, i, j);
                if (g > best_gain) {
                    best_gain = g;
                    best.clear();
                }
                if (g == best_gain && g > 0) best.emplace_back(i, j);
            }
        // Single elements never reduce breakpoints by reversal; the i == j
        // case is skipped above.
        std::pair<std::size_t, std::size_t> pick;
        if (best_gain > 0) {
            pick = rng ? best[rng->below(best.size())] : best.front();
        } else {
            // Every inner strip is increasing: flip the first one that is not
            // glued to a frame element so a decreasing strip appears.
            std::size_t start = 1;
            bool found = false;
            while (start <= n) {
                std::size_t end = start;
                while (end < n && !is_break(f[end], f[end + 1])) ++end;
                const bool glued = !is_break(f[start - 1], f[start]) || !is_break(f[end], f[end + 1]);
                if (!glued && end > start) {
                    pick = {start, end};
                    found = true;
                    break;
                }
                start = end + 1;
            }
            if (!found) throw std::logic_error("greedy_sort: no progress possible");
        }
        std::reverse(f.begin() + static_cast<std::ptrdiff_t>(pick.first),
                     f.begin() + static_cast<std::ptrdiff_t>(pick.second) + 1);
        steps.push_back(pick);
        b = count_breakpoints(f);
    }
    return steps;
}

// BFS distances from `target` to every permutation reachable by reversals.
std::unordered_map<Code, int> distances_from(std::span<const int> target) {
    const std::size_t n = target.size();
    std::unordered_map<Code, int> dist;
    std::vector<Code> frontier{encode(target)};
    dist.emplace(frontier.front(), 0);
    for (int d = 0; !frontier.empty(); ++d) {
        std::vector<Code> next;
        for (Code c : frontier)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const Code r = reverse_code(c, i, j);
                    if (dist.emplace(r, d + 1).second) next.push_back(r);
                }
        frontier = std::move(next);
    }
    return dist;
}

Dist bidirectional_bfs(const Perm& a, const Perm& b) {
    const std::size_t n = a.size();
    const Code src = encode(a.order()), dst = encode(b.order());
    if (src == dst) return 0;
    std::unordered_map<Code, int> seen[2];
    std::vector<Code> frontier[2] = {{src}, {dst}};
    seen[0].emplace(src, 0);
    seen[1].emplace(dst, 0);
    int depth[2] = {0, 0};
    while (!frontier[0].empty() && !frontier[1].empty()) {
        const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        const int other = 1 - side;
        std::vector<Code> next;
        Dist best = std::numeric_limits<Dist>::max();
        for (Code c : frontier[side])
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const Code r = reverse_code(c, i, j);
                    if (!seen[side].emplace(r, depth[side] + 1).second) continue;
                    next.push_back(r);
                    if (auto it = seen[other].find(r); it != seen[other].end())
                        best = std::min<Dist>(best, depth[side] + 1 + it->second);
                }
        if (best != std::numeric_limits<Dist>::max()) return best;
        frontier[side] = std::move(next);
        ++depth[side];
    }
    throw std::logic_error("bidirectional_bfs: permutations not connected");
}

void check_exact_bound(std::size_t n, std::size_t bound, const char* where) {
    const std::size_t limit = std::min(bound, kMaxEncodable);
    if (n > limit) throw CapacityError(std::string(where) + ": exact mode size", n, limit);
}

Perm exact_walk(const Perm& p1, const Perm& target, Rng& rng, std::size_t bound) {
    check_exact_bound(p1.size(), bound, "reversal_crossover");
    const auto dist = distances_from(target.order());
    const std::size_t n = p1.size();
    std::vector<int> cur(p1.order().begin(), p1.order().end());
    int d = dist.at(encode(cur));
    const auto steps = rng.between(0, d);
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (std::int64_t s = 0; s < steps; ++s) {
        moves.clear();
        const Code c = encode(cur);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (dist.at(reverse_code(c, i, j)) == d - 1) moves.emplace_back(i, j);
        const auto [i, j] = moves[rng.below(moves.size())];
        std::reverse(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        --d;
    }
    return Perm(std::move(cur));
}

Perm greedy_walk(const Perm& p1, const Perm& target, Rng& rng) {
    // Reversals on framed π positions map one-to-one onto positions of p1.
    const auto steps = greedy_sort(framed(relative(p1, target)), &rng);
    const auto take = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(steps.size())));
    std::vector<int> cur(p1.order().begin(), p1.order().end());
    for (std::size_t s = 0; s < take; ++s) {
        const auto [i, j] = steps[s];
        std::reverse(cur.begin() + static_cast<std::ptrdiff_t>(i - 1), cur.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return Perm(std::move(cur));
}

}  // namespace

Perm::Perm(std::vector<int> order) : order_(std::move(order)) {
    if (!is_valid()) throw InvalidRepresentation("Perm: not a permutation of {0..n-1}");
}

Perm Perm::identity(std::size_t n) {
    std::vector<int> o(n);
    std::iota(o.begin(), o.end(), 0);
    return Perm(std::move(o));
}

Perm Perm::random(std::size_t n, Rng& rng) {
    std::vector<int> o(n);
    std::iota(o.begin(), o.end(), 0);
    rng.shuffle(std::span<int>(o));
    return Perm(std::move(o));
}

bool Perm::is_valid() const noexcept {
    std::vector<char> seen(order_.size(), 0);
    for (int v : order_) {
        if (v < 0 || static_cast<std::size_t>(v) >= order_.size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

Perm rotate(const Perm& p, std::size_t shift) {
    const std::size_t n = p.size();
    std::vector<int> o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = p[(i + shift) % n];
    return Perm(std::move(o));
}

Perm canonical_rotation(const Perm& p) {
    const auto it = std::find(p.order().begin(), p.order().end(), 0);
    return rotate(p, static_cast<std::size_t>(it - p.order().begin()));
}

Perm reflect(const Perm& p) {
    std::vector<int> o(p.order().rbegin(), p.order().rend());
    return canonical_rotation(Perm(std::move(o)));
}

Perm reverse_segment(const Perm& p, std::size_t first, std::size_t last) {
    if (first > last || last >= p.size()) throw std::out_of_range("reverse_segment: bad segment");
    std::vector<int> o(p.order().begin(), p.order().end());
    std::reverse(o.begin() + static_cast<std::ptrdiff_t>(first), o.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    return Perm(std::move(o));
}

std::size_t breakpoints(const Perm& a, const Perm& b) {
    require_same_size(a, b, "breakpoints");
    return count_breakpoints(framed(relative(a, b)));
}

ReversalDistance reversal_distance(const Perm& a, const Perm& b, ReversalMode mode, std::size_t exact_bound) {
    require_same_size(a, b, "reversal_distance");
    if (mode == ReversalMode::exact) {
        check_exact_bound(a.size(), exact_bound, "reversal_distance");
        const Dist d = bidirectional_bfs(a, b);
        return {d, d};
    }
    const auto f = framed(relative(a, b));
    const auto bp = static_cast<Dist>(count_breakpoints(f));
    return {(bp + 1) / 2, static_cast<Dist>(greedy_sort(f, nullptr).size())};
}

Dist exact_reversal_distance(const Perm& a, const Perm& b, std::size_t exact_bound) {
    return reversal_distance(a, b, ReversalMode::exact, exact_bound).lower;
}

Dist circular_reversal_distance(const Perm& a, const Perm& b, bool with_reflection, std::size_t exact_bound) {
    require_same_size(a, b, "circular_reversal_distance");
    // Rotating both sides does not preserve linear reversal distance, so both
    // classes are enumerated.
    const auto rel = rotation_relation(with_reflection);
    const auto as = rel.class_members(a);
    const auto bs = rel.class_members(b);
    Dist best = std::numeric_limits<Dist>::max();
    for (const auto& x : as)
        for (const auto& y : bs) {
            best = std::min(best, exact_reversal_distance(x, y, exact_bound));
            if (best == 0) return 0;
        }
    return best;
}

Perm circ_normalize(const Perm& p1, const Perm& p2, bool with_reflection) {
    require_same_size(p1, p2, "circ_normalize");
    const auto candidates = rotation_relation(with_reflection).class_members(p2);
    std::size_t best = 0;
    std::tuple<std::size_t, Dist> best_key{std::numeric_limits<std::size_t>::max(), 0};
    for (std::size_t s = 0; s < candidates.size(); ++s) {
        const std::tuple<std::size_t, Dist> key{breakpoints(p1, candidates[s]),
                                                Hamming{}(p1.order(), candidates[s].order())};
        if (key < best_key) {
            best_key = key;
            best = s;
        }
    }
    return candidates[best];
}

Perm sorting_crossover(const Perm& p1, const Perm& p2, Rng& rng, ReversalMode mode, std::size_t exact_bound) {
    require_same_size(p1, p2, "sorting_crossover");
    if (p1.size() < 2) return p1;
    return mode == ReversalMode::exact ? exact_walk(p1, p2, rng, exact_bound) : greedy_walk(p1, p2, rng);
}

Perm reversal_crossover(const Perm& p1, const Perm& p2, Rng& rng, ReversalMode mode, std::size_t exact_bound) {
    return sorting_crossover(p1, circ_normalize(p1, p2), rng, mode, exact_bound);
}

EquivRelation<Perm> rotation_relation(bool with_reflection) {
    EquivRelation<Perm> rel;
    rel.same_class = [with_reflection](const Perm& a, const Perm& b) {
        if (a.size() != b.size()) return false;
        if (a.size() == 0) return true;
        const Perm ca = canonical_rotation(a);
        return ca == canonical_rotation(b) || (with_reflection && ca == reflect(b));
    };
    rel.class_members = [with_reflection](const Perm& p) {
        std::vector<Perm> out;
        const std::size_t n = p.size();
        if (n == 0) return std::vector<Perm>{p};
        for (std::size_t s = 0; s < n; ++s) out.push_back(rotate(p, s));
        if (with_reflection) {
            const Perm r(std::vector<int>(p.order().rbegin(), p.order().rend()));
            for (std::size_t s = 0; s < n; ++s) out.push_back(rotate(r, s));
        }
        return out;
    };
    return rel;
}

std::vector<Perm> enumerate_perms(std::size_t n) {
    std::vector<int> o(n);
    std::iota(o.begin(), o.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(o);
    } while (std::next_permutation(o.begin(), o.end()));
    return out;
}

std::int64_t TspInstance::edge_length(std::size_t i, std::size_t j) const {
    const auto [xi, yi] = cities[i];
    const auto [xj, yj] = cities[j];
    return std::llround(std::hypot(xi - xj, yi - yj));
}

std::int64_t TspInstance::tour_length(const Perm& tour) const {
    if (tour.size() != cities.size()) throw DimensionMismatch("tour_length: city count", tour.size(), cities.size());
    std::int64_t len = 0;
    for (std::size_t i = 0; i < tour.size(); ++i)
        len += edge_length(static_cast<std::size_t>(tour[i]), static_cast<std::size_t>(tour[(i + 1) % tour.size()]));
    return len;
}

TspInstance parse_tsp(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(source, lineno, "missing city count");
    std::istringstream hdr(line);
    long long n = -1;
    std::string extra;
    if (!(hdr >> n) || (hdr >> extra) || n < 1) throw ParseError(source, lineno, "expected positive city count");
    TspInstance inst;
    for (long long i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError(source, lineno, "expected " + std::to_string(n) + " cities");
        std::istringstream row(line);
        double x = 0, y = 0;
        if (!(row >> x >> y) || (row >> extra) || !std::isfinite(x) || !std::isfinite(y))
            throw ParseError(source, lineno, "expected 'x y'");
        inst.cities.emplace_back(x, y);
    }
    if (next_line()) throw ParseError(source, lineno, "trailing content");
    return inst;
}

TspInstance load_tsp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    return parse_tsp(in, path.string());
}

}  // namespace qgx
