#include "crownlab/translation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crownlab/errors.hpp"
#include "crownlab/product.hpp"

namespace crownlab {

BlockMatrix::BlockMatrix(int m, int n, Orientation sign, int r, int base_valence, std::vector<Arc> arcs)
    : m_(m), n_(n), sign_(sign), r_(r), base_valence_(base_valence), arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end());
}

bool BlockMatrix::entry(int i, int j) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{i, j});
}

int BlockMatrix::row_sum(int i) const {
    auto lo = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{i, 0});
    auto hi = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{i + 1, 0});
    return static_cast<int>(hi - lo);
}

std::vector<std::vector<std::uint8_t>> BlockMatrix::dense() const {
    const auto size = static_cast<std::size_t>(order());
    std::vector<std::vector<std::uint8_t>> out(size, std::vector<std::uint8_t>(size, 0));
    for (const Arc& a : arcs_) {
        out[a.tail - 1][a.head - 1] = 1;
    }
    return out;
}

LabeledDigraph orient_cycle(const TotalLabeling& g) {
    if (!g.is_super()) {
        throw InvalidInput("orient_cycle needs a super edge-magic labeling");
    }
    const int m = g.order();
    if (m < 3 || g.size() != m) {
        throw InvalidInput("orient_cycle needs a cycle");
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m) + 1);
    for (const Edge& e : g.graph().edges()) {
        int a = g.vertex_label(e.u);
        int b = g.vertex_label(e.v);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int l = 1; l <= m; ++l) {
        if (adj[l].size() != 2 || adj[l][0] == adj[l][1]) {
            throw InvalidInput("orient_cycle needs a 2-regular simple graph");
        }
    }
    std::vector<Arc> arcs;
    int prev = 1;
    int cur = std::max(adj[1][0], adj[1][1]);
    arcs.push_back({prev, cur});
    while (cur != 1) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        arcs.push_back({cur, next});
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(arcs.size()) != m) {
        throw InvalidInput("orient_cycle needs a single cycle");
    }
    return self_labeled(Digraph(m, std::move(arcs)));
}

BlockMatrix base_matrix(const LabeledDigraph& cycle, int n, Orientation sign) {
    const Digraph& d = cycle.digraph();
    const TotalLabeling& g = cycle.labeling();
    const int m = d.vertex_count();
    if (n < 1) {
        throw InvalidInput("base_matrix needs n >= 1");
    }
    if (m < 3 || m % 2 == 0 || !d.is_one_regular() || !d.is_strongly_connected()) {
        throw InvalidInput("base_matrix needs an oriented odd cycle");
    }
    if (!g.is_super()) {
        throw InvalidInput("base_matrix needs a super edge-magic cycle labeling");
    }
    for (VertexId v = 1; v <= m; ++v) {
        if (g.vertex_label(v) != v) {
            throw InvalidInput("base_matrix needs vertex ids equal to labels");
        }
    }
    FamilyMember member(sign == Orientation::Plus ? d : d.reversed());
    auto star = self_labeled(star_loop(n, 1));
    auto crown = induced_product_labeling(star, ArcAssignment::constant(star.digraph().arc_count(), member));
    std::vector<Arc> arcs(crown.digraph().arcs().begin(), crown.digraph().arcs().end());
    return BlockMatrix(m, n, sign, 1, crown.labeling().valence(), std::move(arcs));
}

BlockMatrix translate(const BlockMatrix& base, int r) {
    if (base.shift() != 1) {
        throw InvalidInput("translate expects an untranslated base matrix");
    }
    const int m = base.cycle_length();
    const int n = base.leaves_per_vertex();
    if (r < 1 || r > m * n + 1) {
        throw InvalidInput("translation index r=" + std::to_string(r) + " outside 1.." + std::to_string(m * n + 1));
    }
    std::vector<Arc> arcs;
    arcs.reserve(base.arcs().size());
    for (const Arc& a : base.arcs()) {
        arcs.push_back({a.tail + r - 1, a.head});
    }
    return BlockMatrix(m, n, base.sign(), r, base.base_valence(), std::move(arcs));
}

bool gcd_exception(std::int64_t m, std::int64_t r) {
    if (m < 3 || m % 2 == 0) {
        throw InvalidInput("gcd_exception needs odd m >= 3");
    }
    return std::gcd((m + 1) / 2 - (r - 1), m) != 1 && std::gcd((m - 1) / 2 - (r - 1), m) != 1;
}

TranslationResult translated_labeling(const LabeledDigraph& g, int n, Orientation sign, int r) {
    const BlockMatrix matrix = translate(base_matrix(g, n, sign), r);
    const int m = matrix.cycle_length();
    const std::string where = " (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";

    Digraph d(matrix.order(), {matrix.arcs().begin(), matrix.arcs().end()});
    Graph und = underlying(d);
    if (static_cast<std::size_t>(und.size()) != d.arc_count()) {
        throw ConstructionFailure("translated crown has antiparallel arcs" + where);
    }
    std::vector<int> ids(static_cast<std::size_t>(d.vertex_count()));
    std::iota(ids.begin(), ids.end(), 1);
    auto labeling = [&] {
        try {
            return extend_sem(VertexLabeling(und, std::move(ids)));
        } catch (const LabelingError& e) {
            throw ConstructionFailure(std::string("translated labeling invalid: ") + e.what() + where);
        }
    }();
    if (labeling.valence() != matrix.base_valence() + r - 1) {
        throw ConstructionFailure("translated valence off the shift law" + where);
    }

    // Core S: arcs with both ends in the window r..r+m-1.
    std::vector<Arc> core_arcs;
    for (const Arc& a : d.arcs()) {
        if (a.tail >= r && a.tail < r + m && a.head >= r && a.head < r + m) {
            core_arcs.push_back({a.tail - r + 1, a.head - r + 1});
        }
    }
    Digraph core(m, std::move(core_arcs));
    if (!core.is_one_regular()) {
        throw ConstructionFailure("core digraph is not 1-regular" + where);
    }

    CrownShape shape;
    try {
        shape = crown_shape(und);
    } catch (const NotACrownShape& e) {
        throw ConstructionFailure(std::string("translated crown lost its shape: ") + e.what() + where);
    }
    if (shape.n != n || static_cast<int>(shape.core.size()) != m || shape.core.front() != r) {
        throw ConstructionFailure("translated crown core is not the window" + where);
    }
    const bool single = shape.single_cycle && static_cast<int>(shape.core_components.front().size()) == m;
    return TranslationResult{LabeledDigraph(std::move(d), std::move(labeling)), underlying(core), r, sign, single};
}

}  // namespace crownlab
