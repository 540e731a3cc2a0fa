#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "crownlab/graph.hpp"

namespace crownlab {

enum class LabelingKind { EdgeMagic, SuperEdgeMagic };

std::string_view to_string(LabelingKind kind);

/// Bijection V -> {1..p}.
class VertexLabeling {
public:
    /// `labels[v-1]` is the label of vertex v. Throws NotBijective.
    VertexLabeling(Graph graph, std::vector<int> labels);

    const Graph& graph() const noexcept { return graph_; }
    std::span<const int> labels() const noexcept { return labels_; }
    int label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v - 1)); }

private:
    Graph graph_;
    std::vector<int> labels_;
};

/// A validated edge-magic labeling. Only `verify` (and the transforms that
/// call it) can produce one, so every instance satisfies the bijectivity and
/// constant-sum invariants.
class TotalLabeling {
public:
    const Graph& graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }
    int size() const noexcept { return graph_.size(); }

    std::span<const int> vertex_labels() const noexcept { return vertex_labels_; }
    std::span<const int> edge_labels() const noexcept { return edge_labels_; }
    int vertex_label(VertexId v) const { return vertex_labels_.at(static_cast<std::size_t>(v - 1)); }
    int edge_label(std::size_t edge_index) const { return edge_labels_.at(edge_index); }

    LabelingKind kind() const noexcept { return kind_; }
    bool is_super() const noexcept { return kind_ == LabelingKind::SuperEdgeMagic; }
    int valence() const noexcept { return valence_; }

    friend TotalLabeling verify(const Graph& g, std::vector<int> vertex_labels, std::vector<int> edge_labels);

private:
    TotalLabeling(Graph g, std::vector<int> vl, std::vector<int> el, LabelingKind kind, int valence)
        : graph_(std::move(g)), vertex_labels_(std::move(vl)), edge_labels_(std::move(el)),
          kind_(kind), valence_(valence) {}

    Graph graph_;
    std::vector<int> vertex_labels_;
    std::vector<int> edge_labels_;
    LabelingKind kind_;
    int valence_;
};

/// Checks that the labels are a bijection onto {1..p+q} and that every edge
/// xy (x == y for loops) has f(x) + f(xy) + f(y) equal to one constant.
/// Throws NotBijective or NonConstantValence.
TotalLabeling verify(const Graph& g, std::vector<int> vertex_labels, std::vector<int> edge_labels);

/// Extends a vertex labeling whose edge sums are q consecutive integers
/// with edge labels p+1..p+q. Valence is p + q + min sum.
/// Throws NotConsecutiveSums.
TotalLabeling extend_sem(const VertexLabeling& g);

/// Label of v_i is (i+1)/2 for odd i and (i+1+m)/2 for even i, on cycle_graph(m).
VertexLabeling canonical_cycle(int m);

/// x -> p+q+1-f(x) everywhere. Valence becomes 3(p+q+1) - val(f).
TotalLabeling em_complement(const TotalLabeling& f);

/// Vertex labels x -> p+1-f(x), edges re-derived. Valence 4p+q+3 - val(f).
TotalLabeling sem_complement(const TotalLabeling& f);

enum class Parity { Odd, Even };

/// Doubling transforms for a super edge-magic labeling with p == q.
/// Odd: valence 2val(f)-2p-2. Even: valence 2val(f)-2p-1.
TotalLabeling odd_even(const TotalLabeling& f, Parity parity);

/// Super edge-magic labeling of underlying(star_loop(n)): center gets r, the
/// leaves take the remaining labels in increasing order of vertex id.
/// Valence r + 2n + 3.
TotalLabeling star_loop_labeling(int n, int r);

/// A digraph together with a labeling of its underlying graph, where edge i
/// of the labeling is arc i of the digraph.
class LabeledDigraph {
public:
    /// Throws InvalidInput if underlying(digraph) does not match the
    /// labeling's graph arc for arc (for instance when two arcs are antiparallel).
    LabeledDigraph(Digraph digraph, TotalLabeling labeling);

    const Digraph& digraph() const noexcept { return digraph_; }
    const TotalLabeling& labeling() const noexcept { return labeling_; }
    int arc_label(std::size_t arc_index) const { return labeling_.edge_label(arc_index); }

private:
    Digraph digraph_;
    TotalLabeling labeling_;
};

/// Labels each vertex with its own id and extends via extend_sem.
LabeledDigraph self_labeled(const Digraph& d);

}  // namespace crownlab
