#include "crownlab/certificate.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

// Walks a 2-regular connected vertex set from its smallest member towards the
// smaller neighbour. `neighbours` must only list vertices of the set.
std::vector<VertexId> walk_cycle(const std::vector<std::vector<VertexId>>& neighbours, VertexId start,
                                 std::size_t expected) {
    std::vector<VertexId> walk{start};
    const auto& first = neighbours[start - 1];
    VertexId prev = start;
    VertexId cur = *std::min_element(first.begin(), first.end());
    while (cur != start) {
        if (walk.size() >= expected) {
            throw InvalidInput("core is not a single cycle");
        }
        walk.push_back(cur);
        const auto& nb = neighbours[cur - 1];
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    if (walk.size() != expected) {
        throw InvalidInput("core is not a single cycle of the declared length");
    }
    return walk;
}

}  // namespace

std::string_view to_string(Family family) {
    switch (family) {
        case Family::Crown: return "crown";
        case Family::Cycle: return "cycle";
        case Family::StarLoop: return "star_loop";
    }
    return "?";
}

Family family_from_string(std::string_view name) {
    if (name == "crown") return Family::Crown;
    if (name == "cycle") return Family::Cycle;
    if (name == "star_loop") return Family::StarLoop;
    throw InvalidInput("unknown graph family '" + std::string(name) + "'");
}

void GraphSpec::validate() const {
    switch (family) {
        case Family::Crown: CrownSpec{m, n}.validate(); break;
        case Family::Cycle:
            if (m < 3) throw InvalidInput("cycle needs m >= 3");
            break;
        case Family::StarLoop:
            if (n < 1) throw InvalidInput("star_loop needs n >= 1");
            break;
    }
}

Graph family_graph(const GraphSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::Cycle: return cycle_graph(spec.m);
        case Family::StarLoop: return underlying(star_loop(spec.n));
        case Family::Crown: break;
    }
    const int m = spec.m;
    const int n = spec.n;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        edges.push_back({i + 1, (i + 1) % m + 1});
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 1; j <= n; ++j) {
            edges.push_back({i + 1, m + i * n + j});
        }
    }
    return Graph(m * (n + 1), std::move(edges));
}

std::vector<std::string> family_vertex_names(const GraphSpec& spec) {
    spec.validate();
    std::vector<std::string> names;
    switch (spec.family) {
        case Family::Cycle:
            for (int i = 1; i <= spec.m; ++i) names.push_back("v" + std::to_string(i));
            break;
        case Family::StarLoop:
            names.emplace_back("c");
            for (int t = 1; t <= spec.n; ++t) names.push_back("l" + std::to_string(t));
            break;
        case Family::Crown:
            for (int i = 0; i < spec.m; ++i) names.push_back("c" + std::to_string(i));
            for (int i = 0; i < spec.m; ++i) {
                for (int j = 1; j <= spec.n; ++j) {
                    names.push_back("l" + std::to_string(i) + "_" + std::to_string(j));
                }
            }
            break;
    }
    return names;
}

Certificate make_certificate(const GraphSpec& spec, const TotalLabeling& labeling, std::string construction) {
    const Graph target = family_graph(spec);
    const Graph& source = labeling.graph();
    if (source.order() != target.order() || source.size() != target.size()) {
        throw InvalidInput("labeled graph has the wrong order or size for " + std::string(to_string(spec.family)));
    }

    // to_family[v-1] = family id of source vertex v
    std::vector<VertexId> to_family(static_cast<std::size_t>(source.order()), 0);
    const auto adj = source.adjacency();
    switch (spec.family) {
        case Family::Cycle: {
            for (VertexId v = 1; v <= source.order(); ++v) {
                if (adj[v - 1].size() != 2) throw InvalidInput("not a cycle");
            }
            auto walk = walk_cycle(adj, 1, static_cast<std::size_t>(spec.m));
            for (std::size_t i = 0; i < walk.size(); ++i) to_family[walk[i] - 1] = static_cast<VertexId>(i + 1);
            break;
        }
        case Family::StarLoop: {
            VertexId center = 0;
            for (const Edge& e : source.edges()) {
                if (e.is_loop()) center = e.u;
            }
            if (center == 0 || source.degree(center) != spec.n + 2) throw InvalidInput("not a looped star");
            to_family[center - 1] = 1;
            VertexId next = 2;
            for (VertexId v = 1; v <= source.order(); ++v) {
                if (v == center) continue;
                if (source.degree(v) != 1) throw InvalidInput("not a looped star");
                to_family[v - 1] = next++;
            }
            break;
        }
        case Family::Crown: {
            CrownShape shape;
            try {
                shape = crown_shape(source);
            } catch (const NotACrownShape& e) {
                throw InvalidInput(std::string("not a crown: ") + e.what());
            }
            if (!shape.single_cycle || shape.n != spec.n || static_cast<int>(shape.core.size()) != spec.m) {
                throw InvalidInput("not the crown C_" + std::to_string(spec.m) + " with " + std::to_string(spec.n) +
                                   " leaves per vertex");
            }
            std::vector<std::vector<VertexId>> core_adj(adj.size());
            for (VertexId v : shape.core) {
                for (VertexId w : adj[v - 1]) {
                    if (source.degree(w) != 1) core_adj[v - 1].push_back(w);
                }
            }
            auto walk = walk_cycle(core_adj, shape.core.front(), static_cast<std::size_t>(spec.m));
            for (int i = 0; i < spec.m; ++i) {
                to_family[walk[i] - 1] = i + 1;
                const auto& leaves = shape.leaves.at(walk[i]);
                for (int j = 1; j <= spec.n; ++j) {
                    to_family[leaves[j - 1] - 1] = spec.m + i * spec.n + j;
                }
            }
            break;
        }
    }

    std::vector<int> vertex_labels(static_cast<std::size_t>(target.order()));
    for (VertexId v = 1; v <= source.order(); ++v) {
        vertex_labels[to_family[v - 1] - 1] = labeling.vertex_label(v);
    }
    std::map<std::pair<VertexId, VertexId>, int> moved;
    for (std::size_t e = 0; e < source.edges().size(); ++e) {
        const Edge& edge = source.edges()[e];
        moved[std::minmax(to_family[edge.u - 1], to_family[edge.v - 1])] = labeling.edge_label(e);
    }
    std::vector<int> edge_labels;
    for (const Edge& e : target.edges()) {
        auto it = moved.find(std::minmax(e.u, e.v));
        if (it == moved.end()) {
            throw InvalidInput("labeled graph is not isomorphic to the family member");
        }
        edge_labels.push_back(it->second);
    }
    return Certificate{spec, verify(target, std::move(vertex_labels), std::move(edge_labels)), std::move(construction)};
}

}  // namespace crownlab
