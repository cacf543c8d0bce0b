#include "qgx/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "qgx/errors.hpp"
#include "qgx/fsm.hpp"
#include "qgx/graph.hpp"
#include "qgx/grouping.hpp"
#include "qgx/metric.hpp"
#include "qgx/quotient.hpp"
#include "qgx/sequence.hpp"
#include "qgx/tour.hpp"

namespace qgx::verify {
namespace {

using Bits = std::vector<int>;

struct Runner {
    std::string suite;
    std::uint64_t seed;
    const Reporter& report;
    std::vector<CheckResult>& out;

    template <typename F>
    void check(std::string name, F&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r{suite, std::move(name), false, {}, 0.0};
        try {
            std::ostringstream detail;
            r.passed = body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (report) report(r);
        out.push_back(std::move(r));
    }
};

std::string describe(const AxiomReport& r) {
    std::ostringstream s;
    s << r.points << " points, " << r.triples_checked << " triples" << (r.exhaustive ? "" : " (sampled)") << ", "
      << r.violations.size() << " violations";
    return s.str();
}

std::string describe(const GeometricityReport& r) {
    std::ostringstream s;
    s << r.total << " offspring, " << r.violations << " outside the segment (rate " << r.violation_rate() << ")";
    return s.str();
}

std::vector<Bits> all_bitstrings(std::size_t n) {
    std::vector<Bits> out;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        Bits b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<int>((m >> i) & 1);
        out.push_back(std::move(b));
    }
    return out;
}

Bits uniform_bits(const Bits& a, const Bits& b, Rng& rng) {
    Bits c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = rng.coin() ? a[i] : b[i];
    return c;
}

// Ignores both parents: a uniformly random string.
Bits pseudo_bits(const Bits& a, const Bits&, Rng& rng) {
    Bits c(a.size());
    for (auto& v : c) v = rng.coin() ? 1 : 0;
    return c;
}

bool same_grouping(const KaryVector& a, const KaryVector& b) { return canonical_labels(a) == canonical_labels(b); }

bool isomorphic(const AdjMatrix& a, const AdjMatrix& b) {
    return a.n() == b.n() && graph_relabeling_relation().same_class(a, b);
}

// ---------------------------------------------------------------------------

void metric_suite(Runner& r) {
    r.check("hamming axioms, 4-bit strings", [](std::ostream& d) {
        const auto pts = all_bitstrings(4);
        const auto rep = check_metric_axioms<Bits>(pts, Hamming{});
        d << describe(rep);
        return rep.ok();
    });
    r.check("axiom checker flags a non-metric", [](std::ostream& d) {
        std::vector<int> pts{0, 1, 2, 3, 4};
        auto sq = [](int a, int b) { return static_cast<Dist>((a - b) * (a - b)); };
        const auto rep = check_metric_axioms<int>(pts, sq);
        d << rep.count(Axiom::triangle) << " triangle violations";
        return rep.count(Axiom::triangle) > 0;
    });
    r.check("uniform crossover geometric under hamming, 6-bit strings", [&](std::ostream& d) {
        const auto pts = all_bitstrings(6);
        std::vector<std::pair<Bits, Bits>> pairs;
        for (const auto& a : pts)
            for (const auto& b : pts) pairs.emplace_back(a, b);
        const auto rep = check_geometricity(uniform_bits, Hamming{}, pairs, 2, r.seed);
        d << describe(rep);
        return rep.violations == 0;
    });
    r.check("parent-ignoring crossover detected, 6-bit strings", [&](std::ostream& d) {
        const auto pts = all_bitstrings(6);
        std::vector<std::pair<Bits, Bits>> pairs;
        for (const auto& a : pts)
            for (const auto& b : pts) pairs.emplace_back(a, b);
        const auto rep = check_geometricity(pseudo_bits, Hamming{}, pairs, 2, r.seed);
        d << describe(rep);
        return rep.violation_rate() > 0.05;
    });
}

void quotient_suite(Runner& r) {
    r.check("one-sided minimization equals two-sided, groupings k<=3 n<=6", [&](std::ostream& d) {
        Rng rng(r.seed, 1);
        std::size_t pairs = 0, mismatches = 0;
        const auto rel = relabeling_relation();
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t n = 1; n <= 6; ++n)
                for (int t = 0; t < 40; ++t) {
                    const auto a = KaryVector::random(n, k, rng);
                    const auto b = KaryVector::random(n, k, rng);
                    const Dist one = quotient_distance_bruteforce(a, b, KaryHamming{}, rel, QuotientSides::one);
                    const Dist both = quotient_distance_bruteforce(a, b, KaryHamming{}, rel, QuotientSides::both);
                    mismatches += one != both;
                    ++pairs;
                }
        d << pairs << " pairs, " << mismatches << " mismatches";
        return mismatches == 0;
    });
    r.check("generic normalize reaches the quotient distance", [&](std::ostream& d) {
        Rng rng(r.seed, 2);
        const auto rel = relabeling_relation();
        std::size_t bad = 0;
        for (int t = 0; t < 300; ++t) {
            const auto a = KaryVector::random(7, 3, rng);
            const auto b = KaryVector::random(7, 3, rng);
            const auto nb = normalize(a, b, KaryHamming{}, rel);
            if (hamming(a, nb) != quotient_distance_bruteforce(a, b, KaryHamming{}, rel) || !rel.same_class(nb, b))
                ++bad;
        }
        d << bad << " of 300 pairs off";
        return bad == 0;
    });
    r.check("rotation quotient of reversal distance, n=5 canonical pairs", [](std::ostream& d) {
        const auto rel = rotation_relation();
        std::size_t pairs = 0, bad = 0;
        for (const auto& a : enumerate_perms(5)) {
            if (a[0] != 0) continue;
            for (const auto& b : enumerate_perms(5)) {
                if (b[0] != 0) continue;
                const Dist brute = quotient_distance_bruteforce(a, b, ExactReversalDistance{}, rel);
                bad += brute != circular_reversal_distance(a, b);
                ++pairs;
            }
        }
        d << pairs << " pairs, " << bad << " mismatches";
        return bad == 0;
    });
    r.check("enumeration bound enforced", [](std::ostream& d) {
        const auto rel = relabeling_relation();
        const KaryVector a(4, {1, 2, 3, 4});
        try {
            (void)quotient_distance_bruteforce(a, a, KaryHamming{}, rel, QuotientSides::both, 100);
        } catch (const CapacityError&) {
            d << "576 representative pairs refused at bound 100";
            return true;
        }
        return false;
    });
}

void grouping_suite(Runner& r) {
    r.check("li_distance equals brute force, k in 2..4, n in 3..7", [&](std::ostream& d) {
        Rng rng(r.seed, 10);
        const auto rel = relabeling_relation();
        std::size_t pairs = 0, bad = 0;
        for (std::size_t k = 2; k <= 4; ++k)
            for (std::size_t n = 3; n <= 7; ++n)
                for (int t = 0; t < 500; ++t) {
                    const auto a = KaryVector::random(n, k, rng);
                    const auto b = KaryVector::random(n, k, rng);
                    bad += li_distance(a, b) != quotient_distance_bruteforce(a, b, KaryHamming{}, rel);
                    ++pairs;
                }
        d << pairs << " pairs, " << bad << " mismatches";
        return bad == 0;
    });
    r.check("li axioms exhaustive, k in 2..3, n <= 5", [](std::ostream& d) {
        bool ok = true;
        for (std::size_t k = 2; k <= 3; ++k)
            for (std::size_t n = 1; n <= 5; ++n) {
                const auto pts = enumerate_kary(n, k);
                const auto rep = check_metric_axioms<KaryVector>(pts, LiDistance{}, same_grouping);
                if (!rep.ok()) {
                    d << "k=" << k << " n=" << n << ": " << describe(rep) << "; ";
                    ok = false;
                }
            }
        if (ok) d << "no violations";
        return ok;
    });
    r.check("li_normalize lands at LI distance", [&](std::ostream& d) {
        Rng rng(r.seed, 11);
        std::size_t bad = 0;
        for (int t = 0; t < 1000; ++t) {
            const auto a = KaryVector::random(9, 4, rng);
            const auto b = KaryVector::random(9, 4, rng);
            const auto nb = li_normalize(a, b);
            bad += hamming(a, nb) != li_distance(a, b) || !same_grouping(nb, b);
        }
        d << bad << " of 1000 off";
        return bad == 0;
    });
    r.check("li_crossover geometric under LI, n=8 k=3", [&](std::ostream& d) {
        Rng rng(r.seed, 12);
        std::vector<std::pair<KaryVector, KaryVector>> pairs;
        for (int t = 0; t < 1000; ++t) pairs.emplace_back(KaryVector::random(8, 3, rng), KaryVector::random(8, 3, rng));
        auto op = [](const KaryVector& a, const KaryVector& b, Rng& g) { return li_crossover(a, b, g); };
        const auto rep = check_geometricity(op, LiDistance{}, pairs, 1, r.seed);
        d << describe(rep);
        return rep.violations == 0;
    });
}

void graph_suite(Runner& r) {
    r.check("exact graph LI equals brute force, n in 3..6", [&](std::ostream& d) {
        Rng rng(r.seed, 20);
        const auto rel = graph_relabeling_relation();
        std::size_t pairs = 0, bad = 0;
        for (std::size_t n = 3; n <= 6; ++n)
            for (int t = 0; t < 200; ++t) {
                const auto a = AdjMatrix::random(n, 0.5, rng);
                const auto b = AdjMatrix::random(n, 0.5, rng);
                const Dist brute =
                    quotient_distance_bruteforce(a, b, GraphHamming{}, rel, QuotientSides::one);
                bad += graph_li_distance(a, b) != brute;
                ++pairs;
            }
        d << pairs << " pairs, " << bad << " mismatches";
        return bad == 0;
    });
    r.check("graph LI axioms exhaustive, n <= 4", [](std::ostream& d) {
        bool ok = true;
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto pts = enumerate_graphs(n);
            const auto rep = check_metric_axioms<AdjMatrix>(pts, GraphLiDistance{}, isomorphic);
            if (!rep.ok()) {
                d << "n=" << n << ": " << describe(rep) << "; ";
                ok = false;
            }
        }
        if (ok) d << "no violations";
        return ok;
    });
    r.check("heuristic match never beats exact, n=7", [&](std::ostream& d) {
        Rng rng(r.seed, 21);
        std::size_t bad = 0;
        for (int t = 0; t < 100; ++t) {
            const auto a = AdjMatrix::random(7, 0.4, rng);
            const auto b = AdjMatrix::random(7, 0.4, rng);
            const Dist ex = graph_li_distance(a, b);
            const Dist he = graph_li_distance(a, b, MatchOptions{.mode = MatchMode::heuristic});
            bad += he < ex;
        }
        d << bad << " of 100 below exact";
        return bad == 0;
    });
    r.check("exact graph_li_crossover geometric under graph LI, n=5", [&](std::ostream& d) {
        Rng rng(r.seed, 22);
        std::vector<std::pair<AdjMatrix, AdjMatrix>> pairs;
        for (int t = 0; t < 200; ++t) pairs.emplace_back(AdjMatrix::random(5, 0.5, rng), AdjMatrix::random(5, 0.5, rng));
        auto op = [](const AdjMatrix& a, const AdjMatrix& b, Rng& g) { return graph_li_crossover(a, b, g); };
        const auto rep = check_geometricity(op, GraphLiDistance{}, pairs, 1, r.seed);
        d << describe(rep);
        return rep.violations == 0;
    });
    r.check("unlabeled graph census n=3 and n=4", [](std::ostream& d) {
        const auto c3 = unlabeled_graph_census(3), c4 = unlabeled_graph_census(4);
        d << "n=3: " << c3 << ", n=4: " << c4;
        return c3 == 4 && c4 == 11;
    });
}

void sequence_suite(Runner& r) {
    r.check("edit distance equals min stretched hamming, binary length <= 4", [](std::ostream& d) {
        const auto seqs = enumerate_sequences("01", 4);
        std::size_t pairs = 0, bad = 0;
        for (const auto& a : seqs)
            for (const auto& b : seqs) {
                const std::size_t cap = a.size() + b.size();
                Dist best = -1;
                for (const auto& sa : enumerate_stretchings(a, cap))
                    for (const auto& sb : enumerate_stretchings(b, cap)) {
                        const Dist h = stretched_hamming(sa, sb);
                        if (best < 0 || h < best) best = h;
                    }
                bad += best != edit_distance(a, b);
                ++pairs;
            }
        d << pairs << " pairs, " << bad << " mismatches";
        return bad == 0;
    });
    r.check("edit distance axioms exhaustive, binary length <= 3", [](std::ostream& d) {
        const auto pts = enumerate_sequences("01", 3);
        auto ed = [](const Seq& a, const Seq& b) { return edit_distance(a, b); };
        const auto rep = check_metric_axioms<Seq>(pts, ed);
        d << describe(rep);
        return rep.ok();
    });
    r.check("alignments realize the edit distance", [&](std::ostream& d) {
        Rng rng(r.seed, 30);
        std::size_t bad = 0;
        for (int t = 0; t < 500; ++t) {
            Seq a(rng.below(13), 'a'), b(rng.below(13), 'a');
            for (auto& c : a) c = "acgt"[rng.below(4)];
            for (auto& c : b) c = "acgt"[rng.below(4)];
            for (auto policy : {AlignPolicy::deterministic, AlignPolicy::sampled}) {
                const auto al = align(a, b, policy, rng);
                bad += al.first.size() != al.second.size() || unstretch(al.first) != a ||
                       unstretch(al.second) != b || stretched_hamming(al.first, al.second) != edit_distance(a, b);
            }
        }
        d << bad << " of 1000 alignments off";
        return bad == 0;
    });
    auto random_pairs = [&](std::uint64_t stream) {
        Rng rng(r.seed, stream);
        std::vector<std::pair<Seq, Seq>> pairs;
        for (int t = 0; t < 1000; ++t) {
            Seq a(rng.below(13), 'a'), b(rng.below(13), 'a');
            for (auto& c : a) c = "ab"[rng.below(2)];
            for (auto& c : b) c = "ab"[rng.below(2)];
            pairs.emplace_back(std::move(a), std::move(b));
        }
        return pairs;
    };
    r.check("homologous crossover geometric under edit distance, length <= 12", [&](std::ostream& d) {
        const auto pairs = random_pairs(31);
        auto ed = [](const Seq& a, const Seq& b) { return edit_distance(a, b); };
        auto det = [](const Seq& a, const Seq& b, Rng& g) {
            return homologous_crossover(a, b, g, AlignPolicy::deterministic);
        };
        auto smp = [](const Seq& a, const Seq& b, Rng& g) {
            return homologous_crossover(a, b, g, AlignPolicy::sampled);
        };
        const auto r1 = check_geometricity(det, ed, pairs, 1, r.seed);
        const auto r2 = check_geometricity(smp, ed, pairs, 1, r.seed);
        d << "deterministic: " << describe(r1) << "; sampled: " << describe(r2);
        return r1.violations == 0 && r2.violations == 0;
    });
    r.check("padded uniform crossover geometric under stretched hamming, equal lengths", [&](std::ostream& d) {
        Rng rng(r.seed, 32);
        std::vector<std::pair<Seq, Seq>> pairs;
        for (int t = 0; t < 1000; ++t) {
            Seq a(rng.below(13), 'a');
            Seq b = a;
            for (auto& c : a) c = "ab"[rng.below(2)];
            for (auto& c : b) c = "ab"[rng.below(2)];
            pairs.emplace_back(std::move(a), std::move(b));
        }
        auto op = [](const Seq& a, const Seq& b, Rng& g) { return padded_uniform_crossover(a, b, g); };
        auto sh = [](const Seq& a, const Seq& b) { return stretched_hamming(a, b); };
        const auto rep = check_geometricity(op, sh, pairs, 1, r.seed);
        d << describe(rep);
        return rep.violations == 0;
    });
}

void tour_suite(Runner& r) {
    r.check("rotation quotient of reversal distance, n=5", [](std::ostream& d) {
        const auto rel = rotation_relation();
        std::size_t bad = 0, pairs = 0;
        for (const auto& a : enumerate_perms(5))
            for (const auto& b : enumerate_perms(5)) {
                if (a[0] != 0 || b[0] != 0) continue;
                bad += circular_reversal_distance(a, b) != quotient_distance_bruteforce(a, b, ExactReversalDistance{}, rel);
                ++pairs;
            }
        d << pairs << " canonical pairs, " << bad << " mismatches";
        return bad == 0;
    });
    r.check("reversal distance axioms exhaustive, n <= 5", [](std::ostream& d) {
        bool ok = true;
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto pts = enumerate_perms(n);
            const auto rep = check_metric_axioms<Perm>(pts, ExactReversalDistance{});
            if (!rep.ok()) {
                d << "n=" << n << ": " << describe(rep) << "; ";
                ok = false;
            }
        }
        if (ok) d << "no violations";
        return ok;
    });
    r.check("breakpoint interval brackets exact distance, n <= 7", [&](std::ostream& d) {
        Rng rng(r.seed, 40);
        std::size_t bad = 0;
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = 2 + rng.below(6);
            const auto a = Perm::random(n, rng), b = Perm::random(n, rng);
            const Dist ex = exact_reversal_distance(a, b);
            const auto iv = reversal_distance(a, b, ReversalMode::breakpoint_bound);
            bad += iv.lower > ex || ex > iv.upper;
        }
        d << bad << " of 500 outside";
        return bad == 0;
    });
    r.check("exact reversal_crossover geometric under reversal distance, n <= 7", [&](std::ostream& d) {
        Rng rng(r.seed, 41);
        std::vector<std::pair<Perm, Perm>> pairs;
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 3 + static_cast<std::size_t>(t) % 5;
            const auto a = Perm::random(n, rng);
            const auto b = Perm::random(n, rng);
            // The walk targets the rotation of b chosen by circ_normalize.
            pairs.emplace_back(a, circ_normalize(a, b));
        }
        auto op = [](const Perm& a, const Perm& b, Rng& g) { return reversal_crossover(a, b, g); };
        const auto rep = check_geometricity(op, ExactReversalDistance{}, pairs, 1, r.seed);
        d << describe(rep);
        return rep.violations == 0;
    });
}

void fsm_suite(Runner& r) {
    r.check("canonical form is idempotent and keeps behaviour", [&](std::ostream& d) {
        Rng rng(r.seed, 50);
        std::size_t bad = 0;
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = 1 + rng.below(6);
            const auto m = FsmTable::random(n, 2, 3, rng);
            const auto c = fsm_canonicalize(m);
            bad += fsm_canonicalize(c) != c || c.start() != 0 || output_vector(c, 2 * n) != output_vector(m, 2 * n);
        }
        d << bad << " of 500 off";
        return bad == 0;
    });
    r.check("renumbered machines share a canonical form", [&](std::ostream& d) {
        Rng rng(r.seed, 51);
        std::size_t bad = 0, tried = 0;
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = 1 + rng.below(6);
            const auto m = fsm_canonicalize(FsmTable::random(n, 2, 2, rng));
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            rng.shuffle(std::span<std::size_t>(perm));
            const auto moved = renumber_states(m, perm);
            // Unreachable states keep their relative order, so only fully
            // reachable machines must coincide exactly.
            const auto reach = fsm_canonicalize(moved);
            bool all_reachable = true;
            {
                std::vector<char> seen(n, 0);
                std::vector<std::size_t> q{m.start()};
                seen[m.start()] = 1;
                for (std::size_t i = 0; i < q.size(); ++i)
                    for (std::size_t c = 0; c < 2; ++c)
                        if (!seen[m.next(q[i], c)]) {
                            seen[m.next(q[i], c)] = 1;
                            q.push_back(m.next(q[i], c));
                        }
                all_reachable = q.size() == n;
            }
            if (!all_reachable) continue;
            ++tried;
            bad += reach != m;
        }
        d << tried << " reachable machines, " << bad << " mismatches";
        return bad == 0;
    });
    r.check("table hamming axioms, sampled", [&](std::ostream& d) {
        Rng rng(r.seed, 52);
        std::vector<FsmTable> pts;
        for (int t = 0; t < 200; ++t) pts.push_back(FsmTable::random(3, 2, 2, rng));
        const auto rep = check_metric_axioms<FsmTable>(pts, FsmHamming{});
        d << describe(rep);
        return rep.ok();
    });
    r.check("fsm crossover geometric under table hamming of canonical parents", [&](std::ostream& d) {
        Rng rng(r.seed, 53);
        std::vector<std::pair<FsmTable, FsmTable>> pairs;
        for (int t = 0; t < 500; ++t)
            pairs.emplace_back(fsm_canonicalize(FsmTable::random(5, 2, 2, rng)),
                               fsm_canonicalize(FsmTable::random(5, 2, 2, rng)));
        auto op = [](const FsmTable& a, const FsmTable& b, Rng& g) { return fsm_crossover(a, b, g); };
        const auto rep = check_geometricity(op, FsmHamming{}, pairs, 2, r.seed);
        d << describe(rep);
        return rep.violations == 0;
    });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept {
    for (Suite s : {Suite::metric, Suite::quotient, Suite::grouping, Suite::graph, Suite::sequence, Suite::tour,
                    Suite::fsm, Suite::all})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

std::string_view to_string(Suite s) noexcept {
    switch (s) {
        case Suite::metric: return "metric";
        case Suite::quotient: return "quotient";
        case Suite::grouping: return "grouping";
        case Suite::graph: return "graph";
        case Suite::sequence: return "sequence";
        case Suite::tour: return "tour";
        case Suite::fsm: return "fsm";
        case Suite::all: return "all";
    }
    return "?";
}

std::vector<CheckResult> run_suite(Suite s, std::uint64_t seed, const Reporter& report) {
    std::vector<CheckResult> out;
    auto run = [&](Suite one, void (*fn)(Runner&)) {
        if (s != Suite::all && s != one) return;
        Runner r{std::string(to_string(one)), seed, report, out};
        fn(r);
    };
    run(Suite::metric, metric_suite);
    run(Suite::quotient, quotient_suite);
    run(Suite::grouping, grouping_suite);
    run(Suite::graph, graph_suite);
    run(Suite::sequence, sequence_suite);
    run(Suite::tour, tour_suite);
    run(Suite::fsm, fsm_suite);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
    return std::ranges::all_of(results, [](const CheckResult& r) { return r.passed; });
}

}  // namespace qgx::verify
