#include "crownlab/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

std::pair<VertexId, VertexId> key(const Edge& e) {
    return std::minmax(e.u, e.v);
}

void check_vertex(int vertex_count, VertexId v, const char* what) {
    if (v < 1 || v > vertex_count) {
        throw InvalidInput(std::string(what) + " endpoint " + std::to_string(v) +
                           " outside 1.." + std::to_string(vertex_count));
    }
}

// Vertices reachable from `start` following arcs forward (or backward).
std::vector<bool> reach(const Digraph& d, VertexId start, bool forward) {
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(d.vertex_count()));
    for (const Arc& a : d.arcs()) {
        if (forward) {
            adj[a.tail - 1].push_back(a.head);
        } else {
            adj[a.head - 1].push_back(a.tail);
        }
    }
    std::vector<bool> seen(adj.size(), false);
    std::vector<VertexId> stack{start};
    seen[start - 1] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[v - 1]) {
            if (!seen[w - 1]) {
                seen[w - 1] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
    if (vertex_count_ < 1) {
        throw InvalidInput("digraph needs at least one vertex");
    }
    std::set<Arc> seen;
    for (const Arc& a : arcs_) {
        check_vertex(vertex_count_, a.tail, "arc");
        check_vertex(vertex_count_, a.head, "arc");
        if (!seen.insert(a).second) {
            throw InvalidInput("parallel arc (" + std::to_string(a.tail) + "," +
                               std::to_string(a.head) + ")");
        }
    }
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
    return std::find(arcs_.begin(), arcs_.end(), Arc{tail, head}) != arcs_.end();
}

std::vector<int> Digraph::in_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
    for (const Arc& a : arcs_) {
        ++deg[a.head - 1];
    }
    return deg;
}

std::vector<int> Digraph::out_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
    for (const Arc& a : arcs_) {
        ++deg[a.tail - 1];
    }
    return deg;
}

bool Digraph::is_one_regular() const {
    auto in = in_degrees();
    auto out = out_degrees();
    auto one = [](int d) { return d == 1; };
    return std::all_of(in.begin(), in.end(), one) && std::all_of(out.begin(), out.end(), one);
}

bool Digraph::is_strongly_connected() const {
    auto fwd = reach(*this, 1, true);
    auto bwd = reach(*this, 1, false);
    auto all = [](const std::vector<bool>& s) { return std::all_of(s.begin(), s.end(), [](bool b) { return b; }); };
    return all(fwd) && all(bwd);
}

Digraph Digraph::reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        rev.push_back({a.head, a.tail});
    }
    return Digraph(vertex_count_, std::move(rev));
}

bool Digraph::same_arcs(const Digraph& other) const {
    if (vertex_count_ != other.vertex_count_ || arcs_.size() != other.arcs_.size()) {
        return false;
    }
    std::set<Arc> a(arcs_.begin(), arcs_.end());
    std::set<Arc> b(other.arcs_.begin(), other.arcs_.end());
    return a == b;
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)),
      degrees_(static_cast<std::size_t>(std::max(vertex_count, 0)), 0) {
    if (vertex_count_ < 1) {
        throw InvalidInput("graph needs at least one vertex");
    }
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : edges_) {
        check_vertex(vertex_count_, e.u, "edge");
        check_vertex(vertex_count_, e.v, "edge");
        if (!seen.insert(key(e)).second) {
            throw InvalidInput("parallel edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        }
        ++degrees_[e.u - 1];
        ++degrees_[e.v - 1];
    }
}

std::vector<std::vector<VertexId>> Graph::adjacency() const {
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(vertex_count_));
    for (const Edge& e : edges_) {
        adj[e.u - 1].push_back(e.v);
        if (!e.is_loop()) {
            adj[e.v - 1].push_back(e.u);
        }
    }
    return adj;
}

bool Graph::same_edges(const Graph& other) const {
    if (vertex_count_ != other.vertex_count_ || edges_.size() != other.edges_.size()) {
        return false;
    }
    std::set<std::pair<VertexId, VertexId>> a;
    std::set<std::pair<VertexId, VertexId>> b;
    for (const Edge& e : edges_) a.insert(key(e));
    for (const Edge& e : other.edges_) b.insert(key(e));
    return a == b;
}

void CrownSpec::validate() const {
    if (m < 3) {
        throw InvalidInput("crown needs m >= 3, got " + std::to_string(m));
    }
    if (n < 1) {
        throw InvalidInput("crown needs n >= 1, got " + std::to_string(n));
    }
}

Digraph directed_cycle(int m, Orientation sign) {
    if (m < 3 || m % 2 == 0) {
        throw InvalidInput("directed_cycle needs odd m >= 3, got " + std::to_string(m));
    }
    const int step = sign == Orientation::Plus ? (m + 1) / 2 : (m - 1) / 2;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    VertexId a = 1;
    for (int i = 0; i < m; ++i) {
        VertexId b = (a - 1 + step) % m + 1;
        arcs.push_back({a, b});
        a = b;
    }
    return Digraph(m, std::move(arcs));
}

Graph cycle_graph(int m) {
    if (m < 3) {
        throw InvalidInput("cycle needs m >= 3, got " + std::to_string(m));
    }
    std::vector<Edge> edges;
    for (VertexId i = 1; i < m; ++i) {
        edges.push_back({i, i + 1});
    }
    edges.push_back({m, 1});
    return Graph(m, std::move(edges));
}

Digraph star_loop(int n, VertexId center) {
    if (n < 1) {
        throw InvalidInput("star_loop needs n >= 1, got " + std::to_string(n));
    }
    if (center < 1 || center > n + 1) {
        throw InvalidInput("star center id out of range");
    }
    std::vector<Arc> arcs{{center, center}};
    for (VertexId v = 1; v <= n + 1; ++v) {
        if (v != center) {
            arcs.push_back({center, v});
        }
    }
    return Digraph(n + 1, std::move(arcs));
}

Digraph build_crown(const CrownSpec& spec, Orientation sign) {
    spec.validate();
    const int m = spec.m;
    const int n = spec.n;
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(spec.order()));
    if (m % 2 == 1) {
        auto core = directed_cycle(m, sign);
        arcs.assign(core.arcs().begin(), core.arcs().end());
    } else {
        for (VertexId i = 1; i <= m; ++i) {
            VertexId j = i % m + 1;
            arcs.push_back(sign == Orientation::Plus ? Arc{i, j} : Arc{j, i});
        }
    }
    for (VertexId i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            arcs.push_back({i, m + (i - 1) * n + j});
        }
    }
    return Digraph(spec.order(), std::move(arcs));
}

Graph underlying(const Digraph& d) {
    std::set<std::pair<VertexId, VertexId>> seen;
    std::vector<Edge> edges;
    edges.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) {
        if (seen.insert(std::minmax(a.tail, a.head)).second) {
            edges.push_back({a.tail, a.head});
        }
    }
    return Graph(d.vertex_count(), std::move(edges));
}

CrownShape crown_shape(const Graph& g) {
    const auto adj = g.adjacency();
    const int order = g.order();
    std::vector<bool> is_leaf(static_cast<std::size_t>(order), false);
    for (VertexId v = 1; v <= order; ++v) {
        is_leaf[v - 1] = g.degree(v) == 1;
    }

    CrownShape shape;
    std::vector<int> core_degree(static_cast<std::size_t>(order), 0);
    for (VertexId v = 1; v <= order; ++v) {
        if (is_leaf[v - 1]) {
            VertexId owner = adj[v - 1].front();
            if (is_leaf[owner - 1]) {
                throw NotACrownShape("leaf " + std::to_string(v) + " hangs off another leaf");
            }
            shape.leaves[owner].push_back(v);
        } else {
            shape.core.push_back(v);
            shape.leaves.try_emplace(v);
        }
    }
    if (shape.core.empty()) {
        throw NotACrownShape("no core vertices");
    }
    for (const Edge& e : g.edges()) {
        if (!is_leaf[e.u - 1] && !is_leaf[e.v - 1]) {
            ++core_degree[e.u - 1];
            ++core_degree[e.v - 1];
        }
    }
    for (VertexId v : shape.core) {
        if (core_degree[v - 1] != 2) {
            throw NotACrownShape("core vertex " + std::to_string(v) + " has core degree " +
                                 std::to_string(core_degree[v - 1]));
        }
    }
    shape.n = static_cast<int>(shape.leaves.at(shape.core.front()).size());
    for (auto& [v, ls] : shape.leaves) {
        if (static_cast<int>(ls.size()) != shape.n) {
            throw NotACrownShape("uneven leaf counts (" + std::to_string(ls.size()) + " at vertex " +
                                 std::to_string(v) + ", expected " + std::to_string(shape.n) + ")");
        }
        std::sort(ls.begin(), ls.end());
    }
    if (shape.n < 1) {
        throw NotACrownShape("core vertices carry no leaves");
    }

    // Walk each component of the 2-regular core.
    std::vector<bool> seen(static_cast<std::size_t>(order), false);
    for (VertexId start : shape.core) {
        if (seen[start - 1]) continue;
        std::vector<VertexId> walk;
        VertexId cur = start;
        while (cur != 0) {
            seen[cur - 1] = true;
            walk.push_back(cur);
            VertexId next = 0;
            for (VertexId w : adj[cur - 1]) {
                if (!is_leaf[w - 1] && !seen[w - 1]) {
                    next = w;
                    break;
                }
            }
            cur = next;
        }
        shape.core_components.push_back(std::move(walk));
    }
    shape.single_cycle = shape.core_components.size() == 1 && shape.core.size() >= 3;
    return shape;
}

}  // namespace crownlab
