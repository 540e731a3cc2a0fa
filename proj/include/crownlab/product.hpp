#pragma once

#include <vector>

#include "crownlab/graph.hpp"
#include "crownlab/labeling.hpp"

namespace crownlab {

/// A super edge-magic digraph on {1..p} with p arcs whose vertex ids are its
/// labels. `min_sum` is the smallest tail+head over the arcs.
class FamilyMember {
public:
    /// Throws InvalidInput unless |V| == |E| and the arc sums are p
    /// consecutive integers.
    explicit FamilyMember(Digraph d);

    const Digraph& digraph() const noexcept { return digraph_; }
    int order() const noexcept { return digraph_.vertex_count(); }
    int min_sum() const noexcept { return min_sum_; }

private:
    Digraph digraph_;
    int min_sum_;
};

/// h : E(D) -> family, stored per arc index of D.
class ArcAssignment {
public:
    /// Throws InvalidInput when members disagree on the vertex set size.
    explicit ArcAssignment(std::vector<FamilyMember> members);
    static ArcAssignment constant(std::size_t arc_count, const FamilyMember& member);

    std::size_t arc_count() const noexcept { return members_.size(); }
    int order() const noexcept { return members_.front().order(); }
    const FamilyMember& operator[](std::size_t arc_index) const { return members_.at(arc_index); }

private:
    std::vector<FamilyMember> members_;
};

/// Vertex (a,i) is named p(a-1)+i; ((a,i),(b,j)) is an arc iff (a,b) is arc e
/// of D and (i,j) is an arc of h(e).
Digraph h_product(const Digraph& d, const ArcAssignment& h);

/// Labeling induced on h_product(D, h) by a (super) edge-magic labeling f of
/// D: (a,i) gets p(f(a)-1)+i, and the arc from D-arc labeled e gets
/// p(e-1) + (k+p) - (i+j). Valence p(val(f)-3) + k + p.
/// Throws InvalidInput if the members disagree on p or k.
LabeledDigraph induced_product_labeling(const LabeledDigraph& outer, const ArcAssignment& h);

/// Super edge-magic labeling of C_{pq} induced by the canonical C_q oriented
/// Plus (outer) and the canonical C_p oriented Minus (inner). The result is
/// checked to be a single directed pq-cycle.
LabeledDigraph product_cycle_sem(int q_outer, int p_inner);

}  // namespace crownlab
