#include "qgx/grouping.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "qgx/assignment.hpp"
#include "qgx/errors.hpp"

namespace qgx {
namespace {

void require_same_space(const KaryVector& a, const KaryVector& b, const char* where) {
    if (a.k() != b.k()) throw DimensionMismatch(std::string(where) + ": group count", a.k(), b.k());
    if (a.size() != b.size()) throw DimensionMismatch(std::string(where) + ": length", a.size(), b.size());
}

}  // namespace

KaryVector::KaryVector(std::size_t k, std::vector<int> labels) : k_(k), labels_(std::move(labels)) {
    if (k_ < 1) throw InvalidRepresentation("KaryVector: k must be >= 1");
    if (labels_.empty()) throw InvalidRepresentation("KaryVector: length must be >= 1");
    for (int v : labels_) {
        if (v < 1 || static_cast<std::size_t>(v) > k_)
            throw InvalidRepresentation("KaryVector: label " + std::to_string(v) + " outside {1.." +
                                        std::to_string(k_) + "}");
    }
}

KaryVector KaryVector::random(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<int> labels(n);
    for (auto& v : labels) v = static_cast<int>(rng.below(k)) + 1;
    return KaryVector(k, std::move(labels));
}

bool KaryVector::is_valid() const noexcept {
    if (k_ < 1 || labels_.empty()) return false;
    return std::ranges::all_of(labels_, [&](int v) { return v >= 1 && static_cast<std::size_t>(v) <= k_; });
}

LabelPermutation::LabelPermutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 1 || static_cast<std::size_t>(v) > image_.size() || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidRepresentation("LabelPermutation: not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

LabelPermutation LabelPermutation::identity(std::size_t k) {
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    return LabelPermutation(std::move(img));
}

KaryVector relabel(const KaryVector& a, const LabelPermutation& sigma) {
    if (sigma.k() != a.k()) throw DimensionMismatch("relabel: group count", a.k(), sigma.k());
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = sigma(a[i]);
    return KaryVector(a.k(), std::move(out));
}

KaryVector canonical_labels(const KaryVector& a) {
    std::vector<int> map(a.k() + 1, 0);
    int next = 1;
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int& m = map[static_cast<std::size_t>(a[i])];
        if (m == 0) m = next++;
        out[i] = m;
    }
    return KaryVector(a.k(), std::move(out));
}

Dist hamming(const KaryVector& a, const KaryVector& b) {
    require_same_space(a, b, "hamming");
    return Hamming{}(a.labels(), b.labels());
}

std::vector<std::int64_t> agreement_matrix(const KaryVector& a, const KaryVector& b) {
    require_same_space(a, b, "agreement_matrix");
    const std::size_t k = a.k();
    std::vector<std::int64_t> c(k * k, 0);
    for (std::size_t t = 0; t < a.size(); ++t)
        ++c[static_cast<std::size_t>(a[t] - 1) * k + static_cast<std::size_t>(b[t] - 1)];
    return c;
}

LabelPermutation optimal_relabeling(const KaryVector& a, const KaryVector& b) {
    require_same_space(a, b, "optimal_relabeling");
    const std::size_t k = a.k();
    const auto agree = agreement_matrix(a, b);

    std::vector<char> present(k, 0);
    for (std::size_t t = 0; t < a.size(); ++t) {
        present[static_cast<std::size_t>(a[t] - 1)] = 1;
        present[static_cast<std::size_t>(b[t] - 1)] = 1;
    }
    std::vector<std::size_t> used;
    for (std::size_t l = 0; l < k; ++l)
        if (present[l]) used.push_back(l);

    // Rows are b's labels, columns a's labels: σ(row) = column.
    const std::size_t m = used.size();
    std::vector<std::int64_t> w(m * m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) w[r * m + c] = agree[used[c] * k + used[r]];
    const Assignment best = solve_max_assignment(w, m);

    std::vector<int> image(k);
    std::iota(image.begin(), image.end(), 1);
    for (std::size_t r = 0; r < m; ++r) image[used[r]] = static_cast<int>(used[best.row_to_col[r]]) + 1;
    return LabelPermutation(std::move(image));
}

Dist li_distance(const KaryVector& a, const KaryVector& b) {
    require_same_space(a, b, "li_distance");
    const std::size_t k = a.k();
    const auto agree = agreement_matrix(a, b);
    const Assignment best = solve_max_assignment(agree, k);
    return static_cast<Dist>(a.size()) - best.cost;
}

KaryVector li_normalize(const KaryVector& p1, const KaryVector& p2) {
    return relabel(p2, optimal_relabeling(p1, p2));
}

KaryVector uniform_crossover(const KaryVector& a, const KaryVector& b, Rng& rng) {
    require_same_space(a, b, "uniform_crossover");
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = rng.coin() ? a[i] : b[i];
    return KaryVector(a.k(), std::move(out));
}

KaryVector one_point_crossover(const KaryVector& a, const KaryVector& b, Rng& rng) {
    require_same_space(a, b, "one_point_crossover");
    const auto cut = static_cast<std::size_t>(rng.below(a.size() + 1));
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = i < cut ? a[i] : b[i];
    return KaryVector(a.k(), std::move(out));
}

KaryVector li_crossover(const KaryVector& p1, const KaryVector& p2, Rng& rng, VectorCrossover base) {
    const KaryVector q = li_normalize(p1, p2);
    return base == VectorCrossover::uniform ? uniform_crossover(p1, q, rng) : one_point_crossover(p1, q, rng);
}

EquivRelation<KaryVector> relabeling_relation() {
    EquivRelation<KaryVector> rel;
    rel.same_class = [](const KaryVector& a, const KaryVector& b) {
        return a.k() == b.k() && a.size() == b.size() && canonical_labels(a) == canonical_labels(b);
    };
    rel.class_members = [](const KaryVector& a) {
        std::vector<int> image(a.k());
        std::iota(image.begin(), image.end(), 1);
        std::vector<KaryVector> out;
        do {
            out.push_back(relabel(a, LabelPermutation(image)));
        } while (std::next_permutation(image.begin(), image.end()));
        return out;
    };
    return rel;
}

std::vector<KaryVector> enumerate_kary(std::size_t n, std::size_t k) {
    std::vector<KaryVector> out;
    std::vector<int> cur(n, 1);
    while (true) {
        out.emplace_back(k, cur);
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == static_cast<int>(k)) {
            cur[i - 1] = 1;
            --i;
        }
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

}  // namespace qgx
