#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crownlab/graph.hpp"
#include "crownlab/labeling.hpp"

namespace crownlab {

enum class Family { Crown, Cycle, StarLoop };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);  // throws InvalidInput

/// Which member of a graph family a certificate talks about. Crowns use m and
/// n, cycles m, looped stars n.
struct GraphSpec {
    Family family = Family::Crown;
    int m = 0;
    int n = 0;

    void validate() const;
    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// The reference graph of a family member. Crown: core c_i is id i+1 with
/// c_i ~ c_{i+1 mod m}, leaf j of c_i is id m + i*n + j. Cycle: v_i is id i.
/// Looped star: center id 1, leaf l_t id t+1.
Graph family_graph(const GraphSpec& spec);

/// External vertex names indexed by id-1: "c0".."c{m-1}" and "l{i}_{j}" for
/// crowns, "v1".."vm" for cycles, "c" and "l1".."ln" for looped stars.
std::vector<std::string> family_vertex_names(const GraphSpec& spec);

/// A labeling moved onto family_graph(spec), ready for external re-checking.
struct Certificate {
    GraphSpec graph;
    TotalLabeling labeling;
    std::string construction;  // how it was obtained; not serialized

    int valence() const noexcept { return labeling.valence(); }
};

/// Finds the family isomorphism for `labeling.graph()` (cores and cycles are
/// walked from their smallest id towards the smaller neighbour, leaves taken
/// in id order) and re-verifies the moved labeling.
/// Throws InvalidInput when the graph is not the family member described.
Certificate make_certificate(const GraphSpec& spec, const TotalLabeling& labeling, std::string construction = {});

}  // namespace crownlab
