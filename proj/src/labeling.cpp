#include "crownlab/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

std::string describe(const Edge& e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::vector<int> edge_sums(const Graph& g, std::span<const int> vertex_labels) {
    std::vector<int> sums;
    sums.reserve(static_cast<std::size_t>(g.size()));
    for (const Edge& e : g.edges()) {
        sums.push_back(vertex_labels[e.u - 1] + vertex_labels[e.v - 1]);
    }
    return sums;
}

}  // namespace

std::string_view to_string(LabelingKind kind) {
    return kind == LabelingKind::SuperEdgeMagic ? "super-edge-magic" : "edge-magic";
}

VertexLabeling::VertexLabeling(Graph graph, std::vector<int> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
    const int p = graph_.order();
    if (static_cast<int>(labels_.size()) != p) {
        throw NotBijective("expected " + std::to_string(p) + " vertex labels, got " +
                           std::to_string(labels_.size()));
    }
    std::vector<bool> used(static_cast<std::size_t>(p) + 1, false);
    for (int l : labels_) {
        if (l < 1 || l > p || used[l]) {
            throw NotBijective("vertex label " + std::to_string(l) + " repeated or outside 1.." +
                               std::to_string(p));
        }
        used[l] = true;
    }
}

TotalLabeling verify(const Graph& g, std::vector<int> vertex_labels, std::vector<int> edge_labels) {
    const int p = g.order();
    const int q = g.size();
    if (static_cast<int>(vertex_labels.size()) != p || static_cast<int>(edge_labels.size()) != q) {
        throw NotBijective("label count does not match graph (" + std::to_string(p) + " vertices, " +
                           std::to_string(q) + " edges)");
    }
    std::vector<bool> used(static_cast<std::size_t>(p + q) + 1, false);
    auto take = [&](int label, auto owner) {
        if (label < 1 || label > p + q) {
            throw NotBijective(owner() + " has label " + std::to_string(label) + " outside 1.." +
                               std::to_string(p + q));
        }
        if (used[label]) {
            throw NotBijective("label " + std::to_string(label) + " used twice (again at " + owner() + ")");
        }
        used[label] = true;
    };
    for (int v = 1; v <= p; ++v) {
        take(vertex_labels[v - 1], [v] { return "vertex " + std::to_string(v); });
    }
    for (int e = 0; e < q; ++e) {
        take(edge_labels[e], [&g, e] { return "edge " + describe(g.edges()[e]); });
    }

    int valence = 0;
    for (int e = 0; e < q; ++e) {
        const Edge& edge = g.edges()[e];
        int sum = vertex_labels[edge.u - 1] + edge_labels[e] + vertex_labels[edge.v - 1];
        if (e == 0) {
            valence = sum;
        } else if (sum != valence) {
            throw NonConstantValence("edge " + describe(g.edges()[0]) + " sums to " + std::to_string(valence) +
                                         " but edge " + describe(edge) + " sums to " + std::to_string(sum),
                                     0, static_cast<std::size_t>(e));
        }
    }
    const bool super = std::all_of(vertex_labels.begin(), vertex_labels.end(), [p](int l) { return l <= p; });
    return TotalLabeling(g, std::move(vertex_labels), std::move(edge_labels),
                         super ? LabelingKind::SuperEdgeMagic : LabelingKind::EdgeMagic, valence);
}

TotalLabeling extend_sem(const VertexLabeling& g) {
    const Graph& graph = g.graph();
    const int p = graph.order();
    const int q = graph.size();
    if (q == 0) {
        throw NotConsecutiveSums("graph has no edges", {});
    }
    std::vector<int> sums = edge_sums(graph, g.labels());
    std::vector<int> sorted = sums;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] != sorted[i - 1] + 1) {
            std::ostringstream msg;
            msg << (sorted[i] == sorted[i - 1] ? "duplicate" : "gap in") << " edge sums at " << sorted[i]
                << "; sums:";
            for (int s : sorted) msg << ' ' << s;
            throw NotConsecutiveSums(msg.str(), std::move(sorted));
        }
    }
    const int valence = p + q + sorted.front();
    std::vector<int> edge_labels;
    edge_labels.reserve(sums.size());
    for (int s : sums) {
        edge_labels.push_back(valence - s);
    }
    return verify(graph, {g.labels().begin(), g.labels().end()}, std::move(edge_labels));
}

VertexLabeling canonical_cycle(int m) {
    if (m < 3 || m % 2 == 0) {
        throw InvalidInput("canonical cycle labeling needs odd m >= 3, got " + std::to_string(m));
    }
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        labels[i - 1] = i % 2 == 1 ? (i + 1) / 2 : (i + 1 + m) / 2;
    }
    return VertexLabeling(cycle_graph(m), std::move(labels));
}

TotalLabeling em_complement(const TotalLabeling& f) {
    const int top = f.order() + f.size() + 1;
    std::vector<int> vl;
    std::vector<int> el;
    for (int l : f.vertex_labels()) vl.push_back(top - l);
    for (int l : f.edge_labels()) el.push_back(top - l);
    return verify(f.graph(), std::move(vl), std::move(el));
}

TotalLabeling sem_complement(const TotalLabeling& f) {
    if (!f.is_super()) {
        throw InvalidInput("super edge-magic complement needs a super edge-magic labeling");
    }
    const int p = f.order();
    std::vector<int> vl;
    for (int l : f.vertex_labels()) vl.push_back(p + 1 - l);
    return extend_sem(VertexLabeling(f.graph(), std::move(vl)));
}

TotalLabeling odd_even(const TotalLabeling& f, Parity parity) {
    if (!f.is_super()) {
        throw InvalidInput("odd/even labelings need a super edge-magic labeling");
    }
    const int p = f.order();
    if (p != f.size()) {
        throw InvalidInput("odd/even labelings need order == size (p=" + std::to_string(p) +
                           ", q=" + std::to_string(f.size()) + ")");
    }
    const bool odd = parity == Parity::Odd;
    const int valence = odd ? 2 * f.valence() - 2 * p - 2 : 2 * f.valence() - 2 * p - 1;
    std::vector<int> vl;
    for (int l : f.vertex_labels()) vl.push_back(odd ? 2 * l - 1 : 2 * l);
    std::vector<int> el;
    for (const Edge& e : f.graph().edges()) {
        el.push_back(valence - vl[e.u - 1] - vl[e.v - 1]);
    }
    return verify(f.graph(), std::move(vl), std::move(el));
}

TotalLabeling star_loop_labeling(int n, int r) {
    if (n < 1) {
        throw InvalidInput("star_loop_labeling needs n >= 1");
    }
    if (r < 1 || r > n + 1) {
        throw InvalidInput("center label r=" + std::to_string(r) + " outside 1.." + std::to_string(n + 1));
    }
    std::vector<int> labels{r};
    for (int l = 1; l <= n + 1; ++l) {
        if (l != r) labels.push_back(l);
    }
    return extend_sem(VertexLabeling(underlying(star_loop(n)), std::move(labels)));
}

LabeledDigraph::LabeledDigraph(Digraph digraph, TotalLabeling labeling)
    : digraph_(std::move(digraph)), labeling_(std::move(labeling)) {
    const Graph& g = labeling_.graph();
    if (g.order() != digraph_.vertex_count() || static_cast<std::size_t>(g.size()) != digraph_.arc_count()) {
        throw InvalidInput("labeling does not cover the digraph arc for arc");
    }
    for (std::size_t i = 0; i < digraph_.arc_count(); ++i) {
        const Arc& a = digraph_.arcs()[i];
        const Edge& e = g.edges()[i];
        if (!((a.tail == e.u && a.head == e.v) || (a.tail == e.v && a.head == e.u))) {
            throw InvalidInput("arc " + std::to_string(i) + " does not match edge " + std::to_string(i));
        }
    }
}

LabeledDigraph self_labeled(const Digraph& d) {
    std::vector<int> ids(static_cast<std::size_t>(d.vertex_count()));
    std::iota(ids.begin(), ids.end(), 1);
    auto labeling = extend_sem(VertexLabeling(underlying(d), std::move(ids)));
    return LabeledDigraph(d, std::move(labeling));
}

}  // namespace crownlab
