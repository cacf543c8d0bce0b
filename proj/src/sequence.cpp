#include "qgx/sequence.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "qgx/errors.hpp"

namespace qgx {
namespace {

struct Table {
    std::size_t rows, cols;
    std::vector<Dist> d;
    Dist& at(std::size_t i, std::size_t j) { return d[i * cols + j]; }
    Dist at(std::size_t i, std::size_t j) const { return d[i * cols + j]; }
};

Table edit_table(std::string_view a, std::string_view b) {
    Table t{a.size() + 1, b.size() + 1, std::vector<Dist>((a.size() + 1) * (b.size() + 1))};
    for (std::size_t i = 0; i <= a.size(); ++i) t.at(i, 0) = static_cast<Dist>(i);
    for (std::size_t j = 0; j <= b.size(); ++j) t.at(0, j) = static_cast<Dist>(j);
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = 1; j <= b.size(); ++j)
            t.at(i, j) = std::min({t.at(i - 1, j - 1) + (a[i - 1] != b[j - 1] ? 1 : 0), t.at(i - 1, j) + 1,
                                   t.at(i, j - 1) + 1});
    return t;
}

enum class Move { diag, del, ins };

}  // namespace

bool is_valid_seq(std::string_view s) noexcept { return s.find(kGap) == std::string_view::npos; }

Seq unstretch(std::string_view s) {
    Seq out;
    out.reserve(s.size());
    for (char c : s)
        if (c != kGap) out.push_back(c);
    return out;
}

Dist edit_distance(std::string_view s1, std::string_view s2) {
    // Two-row version of the same recurrence.
    std::vector<Dist> prev(s2.size() + 1), cur(s2.size() + 1);
    for (std::size_t j = 0; j <= s2.size(); ++j) prev[j] = static_cast<Dist>(j);
    for (std::size_t i = 1; i <= s1.size(); ++i) {
        cur[0] = static_cast<Dist>(i);
        for (std::size_t j = 1; j <= s2.size(); ++j)
            cur[j] = std::min({prev[j - 1] + (s1[i - 1] != s2[j - 1] ? 1 : 0), prev[j] + 1, cur[j - 1] + 1});
        std::swap(prev, cur);
    }
    return prev[s2.size()];
}

Alignment align(std::string_view s1, std::string_view s2, AlignPolicy policy, Rng& rng) {
    const Table t = edit_table(s1, s2);

    // Number of optimal paths from the origin to each cell; only needed for
    // uniform sampling. Long double keeps ratios exact enough for any length
    // where the DP itself is practical.
    std::vector<long double> ways;
    if (policy == AlignPolicy::sampled) {
        ways.assign(t.rows * t.cols, 0.0L);
        ways[0] = 1.0L;
        for (std::size_t i = 0; i <= s1.size(); ++i)
            for (std::size_t j = 0; j <= s2.size(); ++j) {
                if (i == 0 && j == 0) continue;
                long double w = 0.0L;
                const Dist here = t.at(i, j);
                if (i > 0 && j > 0 && t.at(i - 1, j - 1) + (s1[i - 1] != s2[j - 1] ? 1 : 0) == here)
                    w += ways[(i - 1) * t.cols + (j - 1)];
                if (i > 0 && t.at(i - 1, j) + 1 == here) w += ways[(i - 1) * t.cols + j];
                if (j > 0 && t.at(i, j - 1) + 1 == here) w += ways[i * t.cols + (j - 1)];
                ways[i * t.cols + j] = w;
            }
    }

    Alignment out;
    std::size_t i = s1.size(), j = s2.size();
    while (i > 0 || j > 0) {
        const Dist here = t.at(i, j);
        Move options[3] = {Move::diag, Move::diag, Move::diag};
        long double weight[3] = {0.0L, 0.0L, 0.0L};
        std::size_t count = 0;
        if (i > 0 && j > 0 && t.at(i - 1, j - 1) + (s1[i - 1] != s2[j - 1] ? 1 : 0) == here) {
            options[count] = Move::diag;
            weight[count++] = ways.empty() ? 1.0L : ways[(i - 1) * t.cols + (j - 1)];
        }
        if (i > 0 && t.at(i - 1, j) + 1 == here) {
            options[count] = Move::del;
            weight[count++] = ways.empty() ? 1.0L : ways[(i - 1) * t.cols + j];
        }
        if (j > 0 && t.at(i, j - 1) + 1 == here) {
            options[count] = Move::ins;
            weight[count++] = ways.empty() ? 1.0L : ways[i * t.cols + (j - 1)];
        }
        Move pick = options[0];
        if (policy == AlignPolicy::sampled && count > 1) {
            long double total = 0.0L;
            for (std::size_t c = 0; c < count; ++c) total += weight[c];
            long double r = static_cast<long double>(rng.uniform()) * total;
            pick = options[count - 1];
            for (std::size_t c = 0; c < count; ++c) {
                if (r < weight[c]) {
                    pick = options[c];
                    break;
                }
                r -= weight[c];
            }
        }
        switch (pick) {
            case Move::diag:
                out.first.push_back(s1[--i]);
                out.second.push_back(s2[--j]);
                break;
            case Move::del:
                out.first.push_back(s1[--i]);
                out.second.push_back(kGap);
                break;
            case Move::ins:
                out.first.push_back(kGap);
                out.second.push_back(s2[--j]);
                break;
        }
    }
    std::reverse(out.first.begin(), out.first.end());
    std::reverse(out.second.begin(), out.second.end());
    return out;
}

Alignment align(std::string_view s1, std::string_view s2) {
    Rng unused;
    return align(s1, s2, AlignPolicy::deterministic, unused);
}

Dist stretched_hamming(std::string_view a, std::string_view b) {
    const std::size_t n = std::max(a.size(), b.size());
    Dist h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const char ca = i < a.size() ? a[i] : kGap;
        const char cb = i < b.size() ? b[i] : kGap;
        h += ca != cb ? 1 : 0;
    }
    return h;
}

Seq homologous_crossover(std::string_view p1, std::string_view p2, Rng& rng, AlignPolicy policy) {
    const Alignment al = align(p1, p2, policy, rng);
    Seq child;
    child.reserve(al.first.size());
    for (std::size_t c = 0; c < al.first.size(); ++c) {
        const char v = rng.coin() ? al.first[c] : al.second[c];
        if (v != kGap) child.push_back(v);
    }
    return child;
}

Seq padded_uniform_crossover(std::string_view p1, std::string_view p2, Rng& rng) {
    const std::size_t n = std::max(p1.size(), p2.size());
    Seq child;
    child.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const char a = i < p1.size() ? p1[i] : kGap;
        const char b = i < p2.size() ? p2[i] : kGap;
        const char v = rng.coin() ? a : b;
        if (v != kGap) child.push_back(v);
    }
    return child;
}

std::vector<StretchedSeq> enumerate_stretchings(std::string_view s, std::size_t max_length) {
    std::vector<StretchedSeq> out;
    const std::size_t k = s.size();
    for (std::size_t len = k; len <= max_length; ++len) {
        // Choose which of the len slots carry the k symbols; selection bitmask
        // walked in lexicographic order of slot indices.
        std::vector<std::size_t> slots(k);
        for (std::size_t i = 0; i < k; ++i) slots[i] = i;
        while (true) {
            StretchedSeq st(len, kGap);
            for (std::size_t i = 0; i < k; ++i) st[slots[i]] = s[i];
            out.push_back(std::move(st));
            // next combination
            std::size_t i = k;
            while (i > 0 && slots[i - 1] == len - k + (i - 1)) --i;
            if (i == 0) break;
            ++slots[i - 1];
            for (std::size_t t = i; t < k; ++t) slots[t] = slots[t - 1] + 1;
        }
    }
    return out;
}

std::vector<Seq> enumerate_sequences(std::string_view alphabet, std::size_t max_length) {
    std::vector<Seq> out{Seq{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (char c : alphabet) out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

EquivRelation<StretchedSeq> stretching_relation(std::size_t max_length) {
    EquivRelation<StretchedSeq> rel;
    rel.same_class = [](const StretchedSeq& a, const StretchedSeq& b) { return unstretch(a) == unstretch(b); };
    rel.class_members = [max_length](const StretchedSeq& x) {
        auto members = enumerate_stretchings(unstretch(x), std::max(max_length, x.size()));
        return members;
    };
    return rel;
}

std::vector<Seq> parse_sequence_corpus(std::istream& in, const std::string& source) {
    std::vector<Seq> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        Seq s = line.substr(first, last - first + 1);
        if (!is_valid_seq(s)) throw ParseError(source, lineno, "gap symbol '-' is reserved");
        if (s.find_first_of(" \t") != std::string::npos) throw ParseError(source, lineno, "embedded whitespace");
        out.push_back(std::move(s));
    }
    if (out.empty()) throw ParseError(source, lineno, "empty corpus");
    return out;
}

std::vector<Seq> load_sequence_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    return parse_sequence_corpus(in, path.string());
}

std::string corpus_alphabet(const std::vector<Seq>& corpus) {
    std::set<char> symbols;
    for (const auto& s : corpus) symbols.insert(s.begin(), s.end());
    return {symbols.begin(), symbols.end()};
}

}  // namespace qgx
