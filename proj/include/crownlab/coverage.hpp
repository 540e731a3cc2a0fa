#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "crownlab/certificate.hpp"
#include "crownlab/graph.hpp"
#include "crownlab/labeling.hpp"

namespace crownlab {

enum class Mode { Sem, Em };

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view name);  // throws InvalidInput

/// Closed integer interval [lo, hi]; empty when lo > hi (the rearrangement
/// extremes admit no integer).
struct MagicInterval {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    Mode mode = Mode::Sem;

    bool empty() const noexcept { return lo > hi; }
    std::int64_t size() const noexcept { return empty() ? 0 : hi - lo + 1; }
    bool contains(std::int64_t v) const noexcept { return lo <= v && v <= hi; }
    friend bool operator==(const MagicInterval&, const MagicInterval&) = default;
};

/// I_G from the extremes of (sum deg(u) g(u) + sum_{i=p+1}^{p+q} i) / q over
/// vertex bijections, found by pairing sorted degrees with sorted labels.
MagicInterval sem_interval(const Graph& g);

/// J_G from the extremes of (sum deg(u) g(u) + sum g(e)) / q over bijections
/// of V u E onto 1..p+q.
MagicInterval em_interval(const Graph& g);

struct ValenceCover {
    GraphSpec graph;
    MagicInterval interval;
    std::map<int, Certificate> achieved;
    std::vector<int> missing;

    bool complete() const noexcept { return missing.empty(); }
};

/// Every valence of I_G for the crown C_pq (.) K_n-bar. Shifts the canonical
/// labeling where one core orientation passes the gcd test, uses the product
/// rescue labeling on the first exceptional family and its super edge-magic
/// complement on the second. Throws ConstructionFailure if a rescue core is
/// not Hamiltonian.
ValenceCover perfect_sem_cover(int p, int q, int n);

/// Every valence of J_G: the sem cover, its complements and its odd/even
/// transforms (the latter taking precedence where ranges overlap).
ValenceCover perfect_em_cover(int p, int q, int n);

/// Experimental cover for any odd m >= 3. Exceptional shifts try product
/// rescue labelings from every coprime split of m in both orientations, then
/// the complement of a rescued partner shift; anything left is reported missing.
ValenceCover crown_sem_cover(int m, int n);

/// The em-mode cover derived from any sem-mode crown cover.
ValenceCover em_cover_from(const ValenceCover& sem);

struct StarProductValences {
    std::vector<int> valences;  // sorted, distinct
    std::vector<Certificate> certificates;
};

/// For each edge-magic labeling g of C_m and r = 1..n+1, the crown labeling
/// induced by C_m (oriented, labeled by g) times the looped star with center
/// label r. Valence (n+1)(val(g)-2) + r + 1.
StarProductValences star_product_valences(std::span<const TotalLabeling> cycle_labelings, int n);

/// m = 2^a p1^a1 ... pk^ak. Odd m: 1 + sum ai. Even m: sum ai, plus 1 if a >= 2.
int cycle_valence_lower_bound(int m);

/// cycle_valence_lower_bound(m) * (n+1).
int crown_valence_lower_bound(int m, int n);

}  // namespace crownlab
