#include "crownlab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "crownlab/errors.hpp"
#include "crownlab/parallel.hpp"

namespace crownlab {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

// (top)! / (top - count)!
std::uint64_t falling_factorial(std::uint64_t top, std::uint64_t count) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < count; ++i) out = saturating_mul(out, top - i);
    return out;
}

// Depth-first search over injective vertex labelings into 1..p+q with the
// edge labels forced by a fixed valence. Above the midpoint of the complement
// involution k <-> 3(p+q+1)-k labels are tried from the top down.
class ForcedEdgeSearch {
public:
    using Visitor = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

    ForcedEdgeSearch(const Graph& g, int valence)
        : graph_(g), valence_(valence), total_(g.order() + g.size()),
          used_(static_cast<std::size_t>(total_) + 1, false),
          vertex_labels_(static_cast<std::size_t>(g.order()), 0),
          edge_labels_(static_cast<std::size_t>(g.size()), 0),
          descending_(2 * valence > 3 * (total_ + 1)) {
        // Breadth-first vertex order so edges close as early as possible.
        const auto adj = g.adjacency();
        std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
        for (VertexId root = 1; root <= g.order(); ++root) {
            if (position[root - 1] >= 0) continue;
            std::queue<VertexId> pending;
            pending.push(root);
            position[root - 1] = static_cast<int>(order_.size());
            order_.push_back(root);
            while (!pending.empty()) {
                VertexId v = pending.front();
                pending.pop();
                for (VertexId w : adj[v - 1]) {
                    if (position[w - 1] < 0) {
                        position[w - 1] = static_cast<int>(order_.size());
                        order_.push_back(w);
                        pending.push(w);
                    }
                }
            }
        }
        closing_.resize(order_.size());
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            const Edge& edge = g.edges()[e];
            closing_[std::max(position[edge.u - 1], position[edge.v - 1])].push_back(e);
        }
    }

    void run(const Visitor& visit) {
        visit_ = &visit;
        descend(0);
    }

private:
    bool descend(std::size_t depth) {
        if (depth == order_.size()) {
            return (*visit_)(vertex_labels_, edge_labels_);
        }
        const VertexId v = order_[depth];
        for (int step = 0; step < total_; ++step) {
            const int label = descending_ ? total_ - step : step + 1;
            if (used_[label]) continue;
            used_[label] = true;
            vertex_labels_[v - 1] = label;
            std::size_t placed = 0;
            bool ok = true;
            for (std::size_t e : closing_[depth]) {
                const Edge& edge = graph_.edges()[e];
                const int forced = valence_ - vertex_labels_[edge.u - 1] - vertex_labels_[edge.v - 1];
                if (forced < 1 || forced > total_ || used_[forced]) {
                    ok = false;
                    break;
                }
                used_[forced] = true;
                edge_labels_[e] = forced;
                ++placed;
            }
            const bool keep_going = !ok || descend(depth + 1);
            for (std::size_t i = 0; i < placed; ++i) {
                used_[edge_labels_[closing_[depth][i]]] = false;
            }
            used_[label] = false;
            vertex_labels_[v - 1] = 0;
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& graph_;
    int valence_;
    int total_;
    std::vector<bool> used_;
    std::vector<int> vertex_labels_;
    std::vector<int> edge_labels_;
    bool descending_;
    std::vector<VertexId> order_;
    std::vector<std::vector<std::size_t>> closing_;
    const Visitor* visit_ = nullptr;
};

}  // namespace

SpectrumReport brute_sem_spectrum(const Graph& g, std::uint64_t guard) {
    const int p = g.order();
    const int q = g.size();
    if (q == 0) {
        throw InvalidInput("spectrum needs at least one edge");
    }
    const std::uint64_t space = falling_factorial(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(p));
    if (space > guard || 2 * p >= 64) {
        throw GuardExceeded("super edge-magic search over " + std::to_string(p) + "! bijections exceeds the guard",
                            space);
    }

    SpectrumReport report;
    report.mode = Mode::Sem;
    report.search_space_size = space;
    std::vector<int> labels(static_cast<std::size_t>(p));
    std::iota(labels.begin(), labels.end(), 1);
    const std::uint64_t run = q >= 64 ? kSaturated : (std::uint64_t{1} << q) - 1;
    do {
        std::uint64_t mask = 0;
        for (const Edge& e : g.edges()) {
            const std::uint64_t bit = std::uint64_t{1} << (labels[e.u - 1] + labels[e.v - 1]);
            if (mask & bit) {
                mask = 0;
                break;
            }
            mask |= bit;
        }
        if (mask == 0) continue;
        const int low = std::countr_zero(mask);
        if ((mask >> low) != run) continue;
        const int valence = p + q + low;
        if (!report.witnesses.contains(valence)) {
            report.witnesses.emplace(valence, extend_sem(VertexLabeling(g, labels)));
        }
    } while (std::next_permutation(labels.begin(), labels.end()));

    for (const auto& [v, w] : report.witnesses) report.spectrum.push_back(v);
    report.exhaustive = true;
    return report;
}

SpectrumReport brute_em_spectrum(const Graph& g, std::uint64_t guard) {
    const int p = g.order();
    const int q = g.size();
    const MagicInterval interval = em_interval(g);
    const std::uint64_t per_valence =
        falling_factorial(static_cast<std::uint64_t>(p + q), static_cast<std::uint64_t>(p));
    if (per_valence > guard) {
        throw GuardExceeded("edge-magic search over " + std::to_string(per_valence) +
                                " vertex assignments per valence exceeds the guard",
                            per_valence);
    }

    const auto count = static_cast<std::size_t>(interval.size());
    std::vector<std::optional<TotalLabeling>> found(count);
    parallel_for(count, [&](std::size_t i) {
        const int valence = static_cast<int>(interval.lo) + static_cast<int>(i);
        ForcedEdgeSearch search(g, valence);
        search.run([&](const std::vector<int>& vl, const std::vector<int>& el) {
            found[i] = verify(g, vl, el);
            return false;
        });
    });

    SpectrumReport report;
    report.mode = Mode::Em;
    report.search_space_size = saturating_mul(per_valence, count);
    for (std::size_t i = 0; i < count; ++i) {
        if (found[i]) {
            const int valence = found[i]->valence();
            report.spectrum.push_back(valence);
            report.witnesses.emplace(valence, std::move(*found[i]));
        }
    }
    report.exhaustive = true;
    return report;
}

std::vector<TotalLabeling> brute_em_labelings(int m, int valence, std::size_t limit, int max_m) {
    if (m > max_m) {
        throw GuardExceeded("cycle search limited to m <= " + std::to_string(max_m), static_cast<std::uint64_t>(m));
    }
    const Graph g = cycle_graph(m);
    std::vector<TotalLabeling> out;
    if (limit == 0 || !em_interval(g).contains(valence)) {
        return out;
    }
    ForcedEdgeSearch search(g, valence);
    search.run([&](const std::vector<int>& vl, const std::vector<int>& el) {
        out.push_back(verify(g, vl, el));
        return out.size() < limit;
    });
    return out;
}

}  // namespace crownlab
