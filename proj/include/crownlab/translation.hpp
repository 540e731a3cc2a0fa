#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "crownlab/graph.hpp"
#include "crownlab/labeling.hpp"

namespace crownlab {

/// Adjacency matrix of a labeled oriented crown, stored by its nonzero
/// entries. Rows and columns are vertex labels 1..m(n+1).
class BlockMatrix {
public:
    int order() const noexcept { return m_ * (n_ + 1); }
    int cycle_length() const noexcept { return m_; }
    int leaves_per_vertex() const noexcept { return n_; }
    Orientation sign() const noexcept { return sign_; }
    int shift() const noexcept { return r_; }
    /// Valence of the untranslated (r = 1) labeling.
    int base_valence() const noexcept { return base_valence_; }

    std::span<const Arc> arcs() const noexcept { return arcs_; }
    bool entry(int i, int j) const;
    int row_sum(int i) const;
    std::vector<std::vector<std::uint8_t>> dense() const;

    friend BlockMatrix base_matrix(const LabeledDigraph& cycle, int n, Orientation sign);
    friend BlockMatrix translate(const BlockMatrix& base, int r);

private:
    BlockMatrix(int m, int n, Orientation sign, int r, int base_valence, std::vector<Arc> arcs);

    int m_;
    int n_;
    Orientation sign_;
    int r_;
    int base_valence_;
    std::vector<Arc> arcs_;  // sorted
};

/// Orients a super edge-magic cycle labeling: vertices are renamed by their
/// labels and the walk leaves label 1 towards its larger-labeled neighbour.
/// For the canonical labeling this is directed_cycle(m, Plus).
LabeledDigraph orient_cycle(const TotalLabeling& g);

/// Matrix of star_loop(n) (center labeled 1) times the labeled cycle, the
/// cycle taken as given (Plus) or reversed (Minus). Only rows 1..m are nonzero.
/// Throws InvalidInput unless `cycle` is a 1-regular odd cycle whose vertex
/// ids equal its super edge-magic labels.
BlockMatrix base_matrix(const LabeledDigraph& cycle, int n, Orientation sign);

/// Shifts every row down by r-1: entry (i,j) becomes base (i-r+1, j) for
/// i >= r and 0 above. `base` must be untranslated; 1 <= r <= mn+1.
BlockMatrix translate(const BlockMatrix& base, int r);

/// True iff gcd((m+1)/2-(r-1), m) != 1 and gcd((m-1)/2-(r-1), m) != 1.
bool gcd_exception(std::int64_t m, std::int64_t r);

struct TranslationResult {
    LabeledDigraph crown;  // G(A^r) with vertex ids equal to labels
    Graph core;            // und(S), vertices renumbered 1..m from r..r+m-1
    int r = 1;
    Orientation sign = Orientation::Plus;
    bool single_cycle = false;

    const TotalLabeling& labeling() const noexcept { return crown.labeling(); }
};

/// The super edge-magic labeling read off translate(base_matrix(g, n, sign), r).
/// Valence val(g_1) + r - 1. The underlying graph is H (.) K_n-bar where H is
/// the core; `single_cycle` says whether H is one m-cycle.
/// Throws ConstructionFailure if any of those checks fails.
TranslationResult translated_labeling(const LabeledDigraph& g, int n, Orientation sign, int r);

}  // namespace crownlab
