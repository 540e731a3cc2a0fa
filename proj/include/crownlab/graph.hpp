#pragma once

#include <map>
#include <span>
#include <vector>

namespace crownlab {

/// Vertices are numbered 1..vertex_count. In labeled constructions a
/// vertex's id is its label.
using VertexId = int;

enum class Orientation { Plus, Minus };

struct Arc {
    VertexId tail;
    VertexId head;

    bool is_loop() const noexcept { return tail == head; }
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Unordered pair; `u == v` is a loop.
struct Edge {
    VertexId u;
    VertexId v;

    bool is_loop() const noexcept { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed graph, loops allowed, no parallel arcs.
class Digraph {
public:
    Digraph(int vertex_count, std::vector<Arc> arcs);

    int vertex_count() const noexcept { return vertex_count_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    bool has_arc(VertexId tail, VertexId head) const;
    std::vector<int> in_degrees() const;   // index v-1
    std::vector<int> out_degrees() const;  // index v-1
    bool is_one_regular() const;
    bool is_strongly_connected() const;

    Digraph reversed() const;

    /// Same vertex count and the same arc set, irrespective of arc order.
    bool same_arcs(const Digraph& other) const;

private:
    int vertex_count_;
    std::vector<Arc> arcs_;
};

/// Undirected graph, loops allowed, no parallel edges. A loop adds 2 to the
/// degree of its vertex.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edges);

    int order() const noexcept { return vertex_count_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    int degree(VertexId v) const { return degrees_.at(static_cast<std::size_t>(v - 1)); }
    std::span<const int> degrees() const noexcept { return degrees_; }

    /// Neighbour lists (index v-1); a loop lists v once.
    std::vector<std::vector<VertexId>> adjacency() const;

    /// Same order and same edge set, irrespective of edge order and endpoint order.
    bool same_edges(const Graph& other) const;

private:
    int vertex_count_;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

struct CrownSpec {
    int m = 3;  // cycle length
    int n = 1;  // pendant leaves per core vertex

    void validate() const;
    int order() const { return m * (n + 1); }
};

/// Arcs (a,b) with b-a = (m+1)/2 (Plus) or (m-1)/2 (Minus) modulo m. The
/// vertex ids coincide with the canonical super edge-magic labels of C_m.
Digraph directed_cycle(int m, Orientation sign);

/// Undirected cycle v1 v2 ... vm v1 on ids 1..m.
Graph cycle_graph(int m);

/// Star with n leaves and a loop at the center; every leaf has indegree 1.
/// The center gets id `center` and the leaves take the remaining ids of 1..n+1
/// in increasing order.
Digraph star_loop(int n, VertexId center = 1);

/// Oriented crown C_m (.) K_n-bar. Core ids 1..m; leaf j of core vertex i is
/// m + (i-1)n + j. For odd m the core is directed_cycle(m, sign), otherwise
/// the walk 1 -> 2 -> ... -> m -> 1 (reversed for Minus).
Digraph build_crown(const CrownSpec& spec, Orientation sign);

/// Forgets orientation. Arcs (u,v) and (v,u) collapse into one edge; edges
/// keep the order in which their first arc appears.
Graph underlying(const Digraph& d);

struct CrownShape {
    std::vector<VertexId> core;                          // sorted
    std::map<VertexId, std::vector<VertexId>> leaves;    // per core vertex, sorted
    std::vector<std::vector<VertexId>> core_components;  // each in walk order
    int n = 0;
    bool single_cycle = false;
};

/// Recognises H (.) K_n-bar for a 2-regular H (loops count 2). Throws
/// NotACrownShape.
CrownShape crown_shape(const Graph& g);

}  // namespace crownlab
