#include "qgx/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "qgx/errors.hpp"

namespace qgx {
namespace {

void require_same_order(const AdjMatrix& a, const AdjMatrix& b, const char* where) {
    if (a.n() != b.n()) throw DimensionMismatch(std::string(where) + ": node count", a.n(), b.n());
}

// Cost of matching B onto A under perm: Σ_{i≠j} [B[i][j] != A[π i][π j]].
Dist match_cost(const AdjMatrix& a, const AdjMatrix& b, std::span<const std::size_t> perm) {
    const std::size_t n = a.n();
    Dist c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) c += b.edge(i, j) != a.edge(perm[i], perm[j]) ? 2 : 0;
    return c;
}

// Cost change of swapping perm[x] and perm[y].
Dist swap_delta(const AdjMatrix& a, const AdjMatrix& b, std::span<const std::size_t> perm, std::size_t x,
                std::size_t y) {
    const std::size_t px = perm[x], py = perm[y];
    Dist d = 0;
    for (std::size_t j = 0; j < a.n(); ++j) {
        if (j == x || j == y) continue;
        const std::size_t pj = perm[j];
        d += (b.edge(x, j) != a.edge(py, pj)) - (b.edge(x, j) != a.edge(px, pj));
        d += (b.edge(y, j) != a.edge(px, pj)) - (b.edge(y, j) != a.edge(py, pj));
    }
    return 2 * d;
}

std::vector<std::size_t> degree_order(const AdjMatrix& g) {
    std::vector<std::size_t> idx(g.n());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) { return g.degree(l) > g.degree(r); });
    return idx;
}

GraphMatch heuristic_match(const AdjMatrix& a, const AdjMatrix& b, const MatchOptions& opt) {
    const std::size_t n = a.n();
    std::vector<std::size_t> best_perm(n);
    std::iota(best_perm.begin(), best_perm.end(), 0);
    Dist best = std::numeric_limits<Dist>::max();
    const std::size_t restarts = std::max<std::size_t>(1, opt.restarts);

    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<std::size_t> perm(n);
        if (r == 0) {
            const auto ob = degree_order(b);
            const auto oa = degree_order(a);
            for (std::size_t t = 0; t < n; ++t) perm[ob[t]] = oa[t];
        } else {
            std::iota(perm.begin(), perm.end(), 0);
            Rng rng(opt.seed, r);
            rng.shuffle(std::span<std::size_t>(perm));
        }
        Dist cost = match_cost(a, b, perm);
        while (cost > 0) {
            Dist best_delta = 0;
            std::size_t bx = 0, by = 0;
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = x + 1; y < n; ++y) {
                    const Dist d = swap_delta(a, b, perm, x, y);
                    if (d < best_delta) {
                        best_delta = d;
                        bx = x;
                        by = y;
                    }
                }
            if (best_delta == 0) break;
            std::swap(perm[bx], perm[by]);
            cost += best_delta;
        }
        if (cost < best) {
            best = cost;
            best_perm = perm;
        }
    }
    return {NodePermutation(std::move(best_perm)), best};
}

class BranchAndBound {
public:
    BranchAndBound(const AdjMatrix& a, const AdjMatrix& b, Dist upper)
        : a_(a), b_(b), n_(a.n()), perm_(n_, 0), used_(n_, 0), best_(upper + 1) {}

    GraphMatch run() {
        descend(0, 0);
        return {NodePermutation(best_perm_), best_};
    }

private:
    Dist lower_bound(std::size_t depth) const {
        // Cross cells between each unassigned node and the assigned prefix,
        // each node placed independently at its cheapest free position.
        Dist lb = 0;
        for (std::size_t u = depth; u < n_; ++u) {
            Dist cheapest = std::numeric_limits<Dist>::max();
            for (std::size_t v = 0; v < n_ && cheapest > 0; ++v) {
                if (used_[v]) continue;
                Dist c = 0;
                for (std::size_t i = 0; i < depth; ++i) c += b_.edge(u, i) != a_.edge(v, perm_[i]);
                cheapest = std::min(cheapest, c);
            }
            lb += 2 * cheapest;
        }
        // Cells inside the unassigned block: edge counts must be reconciled.
        Dist eb = 0, ea = 0;
        for (std::size_t u = depth; u < n_; ++u)
            for (std::size_t w = u + 1; w < n_; ++w) eb += b_.edge(u, w);
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            for (std::size_t w = v + 1; w < n_; ++w)
                if (!used_[w]) ea += a_.edge(v, w);
        }
        return lb + 2 * (eb > ea ? eb - ea : ea - eb);
    }

    void descend(std::size_t depth, Dist partial) {
        if (depth == n_) {
            if (partial < best_) {
                best_ = partial;
                best_perm_ = perm_;
            }
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            Dist add = 0;
            for (std::size_t i = 0; i < depth; ++i) add += b_.edge(depth, i) != a_.edge(v, perm_[i]);
            const Dist g = partial + 2 * add;
            if (g >= best_) continue;
            perm_[depth] = v;
            used_[v] = 1;
            if (g + lower_bound(depth + 1) < best_) descend(depth + 1, g);
            used_[v] = 0;
        }
    }

    const AdjMatrix& a_;
    const AdjMatrix& b_;
    std::size_t n_;
    std::vector<std::size_t> perm_;
    std::vector<char> used_;
    Dist best_;
    std::vector<std::size_t> best_perm_;
};

}  // namespace

AdjMatrix::AdjMatrix(std::size_t n, std::vector<std::uint8_t> cells) : n_(n), bits_(std::move(cells)) {
    if (bits_.size() != n_ * n_) throw DimensionMismatch("AdjMatrix: cell count", bits_.size(), n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (bits_[i * n_ + i] != 0) throw InvalidRepresentation("AdjMatrix: self loop at node " + std::to_string(i));
        for (std::size_t j = 0; j < n_; ++j) {
            if (bits_[i * n_ + j] > 1) throw InvalidRepresentation("AdjMatrix: cells must be 0/1");
            if (bits_[i * n_ + j] != bits_[j * n_ + i])
                throw InvalidRepresentation("AdjMatrix: asymmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
        }
    }
}

AdjMatrix AdjMatrix::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    AdjMatrix g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw InvalidRepresentation("AdjMatrix: edge endpoint out of range");
        g.set_edge(u, v, true);
    }
    return g;
}

AdjMatrix AdjMatrix::random(std::size_t n, double edge_probability, Rng& rng) {
    AdjMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(edge_probability)) g.set_edge(i, j, true);
    return g;
}

void AdjMatrix::set_edge(std::size_t i, std::size_t j, bool present) {
    if (i == j) throw InvalidRepresentation("AdjMatrix: self loop at node " + std::to_string(i));
    bits_[i * n_ + j] = present;
    bits_[j * n_ + i] = present;
}

std::size_t AdjMatrix::edge_count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)) / 2;
}

std::size_t AdjMatrix::degree(std::size_t i) const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                                               bits_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_), 1));
}

std::vector<std::pair<std::size_t, std::size_t>> AdjMatrix::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (edge(i, j)) out.emplace_back(i, j);
    return out;
}

bool AdjMatrix::is_valid() const noexcept {
    if (bits_.size() != n_ * n_) return false;
    for (std::size_t i = 0; i < n_; ++i) {
        if (bits_[i * n_ + i] != 0) return false;
        for (std::size_t j = 0; j < n_; ++j)
            if (bits_[i * n_ + j] > 1 || bits_[i * n_ + j] != bits_[j * n_ + i]) return false;
    }
    return true;
}

NodePermutation::NodePermutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<char> seen(map_.size(), 0);
    for (std::size_t v : map_) {
        if (v >= map_.size() || seen[v]) throw InvalidRepresentation("NodePermutation: not a bijection");
        seen[v] = 1;
    }
}

NodePermutation NodePermutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), 0);
    return NodePermutation(std::move(m));
}

AdjMatrix relabel(const AdjMatrix& a, const NodePermutation& p) {
    if (p.size() != a.n()) throw DimensionMismatch("relabel: permutation size", p.size(), a.n());
    const std::size_t n = a.n();
    std::vector<std::uint8_t> cells(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cells[p(i) * n + p(j)] = a.edge(i, j);
    return AdjMatrix(n, std::move(cells));
}

Dist hamming(const AdjMatrix& a, const AdjMatrix& b) {
    require_same_order(a, b, "hamming");
    return Hamming{}(a.cells(), b.cells());
}

GraphMatch graph_match(const AdjMatrix& a, const AdjMatrix& b, const MatchOptions& opt) {
    require_same_order(a, b, "graph_match");
    if (a.n() == 0) return {NodePermutation::identity(0), 0};
    if (opt.mode == MatchMode::heuristic) return heuristic_match(a, b, opt);
    if (a.n() > opt.exact_bound) throw CapacityError("graph_match: exact mode node count", a.n(), opt.exact_bound);
    const GraphMatch seed = heuristic_match(a, b, opt);
    return BranchAndBound(a, b, seed.distance).run();
}

Dist graph_li_distance(const AdjMatrix& a, const AdjMatrix& b, const MatchOptions& opt) {
    return graph_match(a, b, opt).distance;
}

Dist edge_edit_distance(const AdjMatrix& a, const AdjMatrix& b, const MatchOptions& opt) {
    return graph_li_distance(a, b, opt) / 2;
}

AdjMatrix graph_match_normalize(const AdjMatrix& p1, const AdjMatrix& p2, const MatchOptions& opt) {
    return relabel(p2, graph_match(p1, p2, opt).perm);
}

AdjMatrix graph_uniform_crossover(const AdjMatrix& a, const AdjMatrix& b, Rng& rng) {
    require_same_order(a, b, "graph_uniform_crossover");
    AdjMatrix child(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = i + 1; j < a.n(); ++j) child.set_edge(i, j, rng.coin() ? a.edge(i, j) : b.edge(i, j));
    return child;
}

AdjMatrix graph_li_crossover(const AdjMatrix& p1, const AdjMatrix& p2, Rng& rng, const MatchOptions& opt) {
    return graph_uniform_crossover(p1, graph_match_normalize(p1, p2, opt), rng);
}

EquivRelation<AdjMatrix> graph_relabeling_relation() {
    EquivRelation<AdjMatrix> rel;
    rel.same_class = [](const AdjMatrix& a, const AdjMatrix& b) {
        if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
        std::vector<std::size_t> m(a.n());
        std::iota(m.begin(), m.end(), 0);
        do {
            if (relabel(b, NodePermutation(m)) == a) return true;
        } while (std::next_permutation(m.begin(), m.end()));
        return false;
    };
    rel.class_members = [](const AdjMatrix& a) {
        std::vector<std::size_t> m(a.n());
        std::iota(m.begin(), m.end(), 0);
        std::vector<AdjMatrix> out;
        do {
            out.push_back(relabel(a, NodePermutation(m)));
        } while (std::next_permutation(m.begin(), m.end()));
        return out;
    };
    return rel;
}

std::uint64_t graph_code(const AdjMatrix& a) {
    if (a.n() > 11) throw CapacityError("graph_code: node count", a.n(), 11);
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = i + 1; j < a.n(); ++j, ++bit)
            if (a.edge(i, j)) code |= std::uint64_t{1} << bit;
    return code;
}

AdjMatrix graph_from_code(std::size_t n, std::uint64_t code) {
    if (n > 11) throw CapacityError("graph_from_code: node count", n, 11);
    AdjMatrix g(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
            if ((code >> bit) & 1U) g.set_edge(i, j, true);
    return g;
}

std::vector<AdjMatrix> enumerate_graphs(std::size_t n) {
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (pairs > 24) throw CapacityError("enumerate_graphs: node pairs", pairs, 24);
    std::vector<AdjMatrix> out;
    out.reserve(std::size_t{1} << pairs);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << pairs); ++c) out.push_back(graph_from_code(n, c));
    return out;
}

std::size_t unlabeled_graph_census(std::size_t n) {
    if (n > 6) throw CapacityError("unlabeled_graph_census: node count", n, 6);
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    std::vector<char> seen(total, 0);
    std::size_t classes = 0;
    const auto rel = graph_relabeling_relation();
    for (std::uint64_t c = 0; c < total; ++c) {
        if (seen[c]) continue;
        ++classes;
        for (const auto& m : rel.class_members(graph_from_code(n, c))) seen[graph_code(m)] = 1;
    }
    return classes;
}

AdjMatrix planted_partition_graph(std::size_t n, std::size_t groups, double p_in, double p_out, std::uint64_t seed) {
    if (groups == 0) throw InvalidRepresentation("planted_partition_graph: groups must be >= 1");
    Rng rng(seed);
    AdjMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool same = (i * groups) / n == (j * groups) / n;
            if (rng.chance(same ? p_in : p_out)) g.set_edge(i, j, true);
        }
    return g;
}

AdjMatrix parse_edge_list(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(source, lineno, "missing header 'n m'");
    std::istringstream hdr(line);
    long long n = -1, m = -1;
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra) || n < 0 || m < 0)
        throw ParseError(source, lineno, "expected header 'n m' with non-negative integers");

    AdjMatrix g(static_cast<std::size_t>(n));
    for (long long e = 0; e < m; ++e) {
        if (!next_line()) throw ParseError(source, lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || (row >> extra)) throw ParseError(source, lineno, "expected 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(source, lineno, "node id out of range");
        if (u == v) throw ParseError(source, lineno, "self loop");
        const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
        if (g.edge(su, sv)) throw ParseError(source, lineno, "repeated edge");
        g.set_edge(su, sv, true);
    }
    if (next_line()) throw ParseError(source, lineno, "trailing content after " + std::to_string(m) + " edges");
    return g;
}

AdjMatrix load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    return parse_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const AdjMatrix& a) {
    const auto es = a.edges();
    out << a.n() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace qgx
