#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "crownlab/coverage.hpp"
#include "crownlab/graph.hpp"
#include "crownlab/labeling.hpp"

namespace crownlab {

/// 10!, i.e. every vertex bijection of a 10-vertex graph.
inline constexpr std::uint64_t kDefaultSemGuard = 3'628'800;
/// Candidate vertex assignments per valence for the edge-magic search.
inline constexpr std::uint64_t kDefaultEmGuard = 1'000'000'000;
inline constexpr int kDefaultCycleSearchLimit = 8;

struct SpectrumReport {
    Mode mode = Mode::Sem;
    std::vector<int> spectrum;                // sorted
    std::map<int, TotalLabeling> witnesses;   // first labeling found per valence
    std::uint64_t search_space_size = 0;
    bool exhaustive = false;
};

/// Every valence of a super edge-magic labeling, by trying all p! vertex
/// bijections in lexicographic order. Throws GuardExceeded if p! > guard.
SpectrumReport brute_sem_spectrum(const Graph& g, std::uint64_t guard = kDefaultSemGuard);

/// Every valence in J_G that admits an edge-magic labeling. For each candidate
/// valence a depth-first search assigns vertex labels; edge labels are forced
/// by the valence. Throws GuardExceeded if (p+q)!/q! > guard.
SpectrumReport brute_em_spectrum(const Graph& g, std::uint64_t guard = kDefaultEmGuard);

/// Up to `limit` edge-magic labelings of cycle_graph(m) with the given
/// valence, in search order. Throws GuardExceeded if m > max_m.
std::vector<TotalLabeling> brute_em_labelings(int m, int valence,
                                              std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                              int max_m = kDefaultCycleSearchLimit);

}  // namespace crownlab
