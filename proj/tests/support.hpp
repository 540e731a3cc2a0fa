#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "crownlab/graph.hpp"
#include "crownlab/labeling.hpp"

namespace crownlab::support {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Straight recomputation of the edge sums, independent of verify().
inline std::optional<int> recomputed_valence(const TotalLabeling& f) {
    const Graph& g = f.graph();
    std::set<int> labels;
    for (int v : f.vertex_labels()) labels.insert(v);
    for (int e : f.edge_labels()) labels.insert(e);
    const int total = g.order() + g.size();
    if (static_cast<int>(labels.size()) != total || *labels.begin() != 1 || *labels.rbegin() != total) {
        return std::nullopt;
    }
    std::optional<int> k;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const Edge& edge = g.edges()[e];
        const int s = f.vertex_label(edge.u) + f.edge_label(e) + f.vertex_label(edge.v);
        if (k && *k != s) return std::nullopt;
        k = s;
    }
    return k;
}

inline bool all_vertex_labels_small(const TotalLabeling& f) {
    return std::all_of(f.vertex_labels().begin(), f.vertex_labels().end(),
                       [&](int l) { return l <= f.order(); });
}

// Connected and 2-regular with at least three vertices.
inline bool is_hamiltonian_cycle(const Graph& g) {
    if (g.order() < 3 || g.size() != g.order()) return false;
    for (int d : g.degrees()) {
        if (d != 2) return false;
    }
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) return false;
    }
    const auto adj = g.adjacency();
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::vector<VertexId> stack{1};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[v - 1]) {
            if (!seen[w - 1]) {
                seen[w - 1] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.order();
}

// Number of cycles of the permutation i -> i + step (mod m).
inline int rotation_cycles(int m, int step) { return std::gcd(((step % m) + m) % m, m); }

inline std::vector<int> odd_primes_upto(int limit) {
    std::vector<int> out;
    for (int v = 3; v <= limit; v += 2) {
        bool prime = true;
        for (int d = 3; d * d <= v; d += 2) {
            if (v % d == 0) prime = false;
        }
        if (prime) out.push_back(v);
    }
    return out;
}

// Random super edge-magic labeling of a cycle of odd length m: canonical
// labeling pushed through a random rotation/reflection of vertex names.
inline TotalLabeling random_sem_cycle(int m) {
    const VertexLabeling canon = canonical_cycle(m);
    const int shift = uniform(0, m - 1);
    const bool flip = uniform(0, 1) == 1;
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int src = flip ? ((m - i + shift) % m) : ((i + shift) % m);
        labels[i] = canon.label(src + 1);
    }
    return extend_sem(VertexLabeling(cycle_graph(m), labels));
}

}  // namespace crownlab::support
