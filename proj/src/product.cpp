#include "crownlab/product.hpp"

#include <algorithm>
#include <string>

#include "crownlab/arithmetic.hpp"
#include "crownlab/errors.hpp"

namespace crownlab {

FamilyMember::FamilyMember(Digraph d) : digraph_(std::move(d)), min_sum_(0) {
    const int p = digraph_.vertex_count();
    if (static_cast<int>(digraph_.arc_count()) != p) {
        throw InvalidInput("family member needs |V| == |E|");
    }
    std::vector<int> sums;
    for (const Arc& a : digraph_.arcs()) sums.push_back(a.tail + a.head);
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 1; i < sums.size(); ++i) {
        if (sums[i] != sums[i - 1] + 1) {
            throw InvalidInput("family member arc sums are not consecutive");
        }
    }
    min_sum_ = sums.front();
}

ArcAssignment::ArcAssignment(std::vector<FamilyMember> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw InvalidInput("arc assignment is empty");
    }
    for (const FamilyMember& f : members_) {
        if (f.order() != members_.front().order()) {
            throw InvalidInput("family members have different vertex sets (" + std::to_string(f.order()) +
                               " vs " + std::to_string(members_.front().order()) + ")");
        }
    }
}

ArcAssignment ArcAssignment::constant(std::size_t arc_count, const FamilyMember& member) {
    return ArcAssignment(std::vector<FamilyMember>(arc_count, member));
}

Digraph h_product(const Digraph& d, const ArcAssignment& h) {
    if (h.arc_count() != d.arc_count()) {
        throw InvalidInput("arc assignment is not total on E(D)");
    }
    const int p = h.order();
    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < d.arc_count(); ++e) {
        const Arc& outer = d.arcs()[e];
        for (const Arc& inner : h[e].digraph().arcs()) {
            arcs.push_back({p * (outer.tail - 1) + inner.tail, p * (outer.head - 1) + inner.head});
        }
    }
    return Digraph(d.vertex_count() * p, std::move(arcs));
}

LabeledDigraph induced_product_labeling(const LabeledDigraph& outer, const ArcAssignment& h) {
    const Digraph& d = outer.digraph();
    const TotalLabeling& f = outer.labeling();
    const int p = h.order();
    const int k = h[0].min_sum();
    for (std::size_t e = 0; e < h.arc_count(); ++e) {
        if (h[e].min_sum() != k) {
            throw InvalidInput("family members have different minimum sums");
        }
    }
    Digraph product = h_product(d, h);

    std::vector<int> vertex_labels(static_cast<std::size_t>(product.vertex_count()));
    for (VertexId a = 1; a <= d.vertex_count(); ++a) {
        for (int i = 1; i <= p; ++i) {
            vertex_labels[p * (a - 1) + i - 1] = p * (f.vertex_label(a) - 1) + i;
        }
    }
    std::vector<int> edge_labels;
    edge_labels.reserve(product.arc_count());
    for (std::size_t e = 0; e < d.arc_count(); ++e) {
        const int outer_label = outer.arc_label(e);
        for (const Arc& inner : h[e].digraph().arcs()) {
            edge_labels.push_back(p * (outer_label - 1) + (k + p) - (inner.tail + inner.head));
        }
    }
    Graph g = underlying(product);
    if (static_cast<std::size_t>(g.size()) != product.arc_count()) {
        throw InvalidInput("product has antiparallel arcs; its underlying graph would need parallel edges");
    }
    auto labeling = verify(g, std::move(vertex_labels), std::move(edge_labels));
    const int expected = p * (f.valence() - 3) + k + p;
    if (labeling.valence() != expected || labeling.kind() != f.kind()) {
        throw ConstructionFailure("induced product labeling has valence " + std::to_string(labeling.valence()) +
                                  ", expected " + std::to_string(expected));
    }
    return LabeledDigraph(std::move(product), std::move(labeling));
}

LabeledDigraph product_cycle_sem(int q_outer, int p_inner) {
    if (q_outer == p_inner || !is_odd_prime(q_outer) || !is_odd_prime(p_inner)) {
        throw InvalidInput("product_cycle_sem needs distinct odd primes, got " + std::to_string(q_outer) +
                           " and " + std::to_string(p_inner));
    }
    auto outer = self_labeled(directed_cycle(q_outer, Orientation::Plus));
    FamilyMember inner(directed_cycle(p_inner, Orientation::Minus));
    auto result = induced_product_labeling(outer, ArcAssignment::constant(outer.digraph().arc_count(), inner));
    const Digraph& d = result.digraph();
    if (!d.is_one_regular() || !d.is_strongly_connected()) {
        throw ConstructionFailure("product of C_" + std::to_string(q_outer) + " and C_" + std::to_string(p_inner) +
                                  " is not a single cycle");
    }
    return result;
}

}  // namespace crownlab
