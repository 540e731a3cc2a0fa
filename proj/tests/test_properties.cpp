#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "crownlab/coverage.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/product.hpp"
#include "crownlab/translation.hpp"
#include "support.hpp"

using namespace crownlab;

namespace {

constexpr int kCases = 1000;

Orientation random_sign() { return support::uniform(0, 1) ? Orientation::Plus : Orientation::Minus; }

// A random super edge-magic crown labeling from a random shift of a random
// cycle labeling; the core need not be a single cycle.
TotalLabeling random_crown_labeling(int max_m, int max_n) {
    const int m = 2 * support::uniform(1, max_m / 2) + 1;
    const int n = support::uniform(1, max_n);
    const LabeledDigraph g = orient_cycle(support::random_sem_cycle(m));
    return translated_labeling(g, n, random_sign(), support::uniform(1, m * n + 1)).labeling();
}

// Outer labeled digraphs for the product: self-labeled cycles and looped
// stars, or their edge-magic complements.
LabeledDigraph random_outer() {
    Digraph d = support::uniform(0, 1) ? directed_cycle(2 * support::uniform(1, 6) + 1, random_sign())
                                      : star_loop(support::uniform(1, 6));
    LabeledDigraph self = self_labeled(d);
    if (support::uniform(0, 1)) return self;
    return LabeledDigraph(d, em_complement(self.labeling()));
}

}  // namespace

TEST(Properties, ProductValenceLaw) {
    for (int t = 0; t < kCases; ++t) {
        const LabeledDigraph outer = random_outer();
        const int p = 2 * support::uniform(1, 5) + 1;
        std::vector<FamilyMember> members;
        for (std::size_t a = 0; a < outer.digraph().arc_count(); ++a) {
            members.emplace_back(directed_cycle(p, random_sign()));
        }
        const ArcAssignment h(std::move(members));
        const LabeledDigraph prod = induced_product_labeling(outer, h);
        const int k = (p + 3) / 2;
        const int expected = p * (outer.labeling().valence() - 3) + k + p;
        EXPECT_EQ(prod.labeling().valence(), expected);
        EXPECT_EQ(support::recomputed_valence(prod.labeling()), expected);
        EXPECT_EQ(prod.labeling().is_super(), outer.labeling().is_super());
        EXPECT_EQ(prod.digraph().vertex_count(), p * outer.digraph().vertex_count());
    }
}

TEST(Properties, ShiftLaw) {
    for (int t = 0; t < kCases; ++t) {
        const int m = 2 * support::uniform(1, 15) + 1;
        const int n = support::uniform(1, 4);
        const Orientation sign = random_sign();
        const LabeledDigraph g = orient_cycle(support::random_sem_cycle(m));
        const int r = support::uniform(1, m * n + 1);
        const int base = translated_labeling(g, n, sign, 1).labeling().valence();
        const TranslationResult shifted = translated_labeling(g, n, sign, r);
        EXPECT_EQ(shifted.labeling().valence() - base, r - 1);
        EXPECT_EQ(support::recomputed_valence(shifted.labeling()), shifted.labeling().valence());
    }
}

TEST(Properties, ComplementIdentities) {
    for (int t = 0; t < kCases; ++t) {
        const TotalLabeling f = random_crown_labeling(21, 3);
        const int p = f.order();
        const int q = f.size();
        const TotalLabeling e = em_complement(f);
        EXPECT_EQ(f.valence() + e.valence(), 3 * (p + q + 1));
        EXPECT_EQ(support::recomputed_valence(e), e.valence());
        const TotalLabeling back = em_complement(e);
        EXPECT_TRUE(std::ranges::equal(back.vertex_labels(), f.vertex_labels()));
        EXPECT_TRUE(std::ranges::equal(back.edge_labels(), f.edge_labels()));
        const TotalLabeling s = sem_complement(f);
        EXPECT_EQ(f.valence() + s.valence(), 4 * p + q + 3);
        EXPECT_TRUE(s.is_super());
        EXPECT_EQ(support::recomputed_valence(s), s.valence());
    }
}

TEST(Properties, OddEvenValences) {
    for (int t = 0; t < kCases; ++t) {
        const TotalLabeling f = random_crown_labeling(21, 3);
        const int p = f.order();
        ASSERT_EQ(p, f.size());
        const TotalLabeling o = odd_even(f, Parity::Odd);
        const TotalLabeling e = odd_even(f, Parity::Even);
        EXPECT_EQ(o.valence(), 2 * f.valence() - 2 * p - 2);
        EXPECT_EQ(e.valence(), 2 * f.valence() - 2 * p - 1);
        EXPECT_EQ(support::recomputed_valence(o), o.valence());
        EXPECT_EQ(support::recomputed_valence(e), e.valence());
    }
}

TEST(Properties, ExtendSemExactlyOnConsecutiveSums) {
    int extended = 0;
    for (int t = 0; t < kCases; ++t) {
        const int p = support::uniform(2, 7);
        std::vector<Edge> edges;
        for (int u = 1; u <= p; ++u) {
            for (int v = u; v <= p; ++v) {
                if (support::uniform(0, 2) == 0) edges.push_back({u, v});
            }
        }
        if (edges.empty()) edges.push_back({1, 2});
        const Graph g(p, edges);
        std::vector<int> labels(static_cast<std::size_t>(p));
        std::iota(labels.begin(), labels.end(), 1);
        std::shuffle(labels.begin(), labels.end(), support::rng());
        std::vector<int> sums;
        for (const Edge& e : edges) sums.push_back(labels[e.u - 1] + labels[e.v - 1]);
        std::sort(sums.begin(), sums.end());
        bool consecutive = true;
        for (std::size_t i = 1; i < sums.size(); ++i) consecutive = consecutive && sums[i] == sums[i - 1] + 1;
        const VertexLabeling vl(g, labels);
        if (consecutive) {
            const TotalLabeling f = extend_sem(vl);
            EXPECT_EQ(f.valence(), g.order() + g.size() + sums.front());
            EXPECT_EQ(support::recomputed_valence(f), f.valence());
            EXPECT_TRUE(f.is_super());
            ++extended;
        } else {
            EXPECT_THROW(extend_sem(vl), NotConsecutiveSums);
        }
    }
    EXPECT_GT(extended, 50);
}

TEST(Properties, StarProductBlocksAreDisjoint) {
    for (int t = 0; t < 100; ++t) {
        const int m = 2 * support::uniform(1, 6) + 1;
        const int n = support::uniform(1, 4);
        const TotalLabeling a = support::random_sem_cycle(m);
        const TotalLabeling b = em_complement(a);
        const TotalLabeling inputs[] = {a, b};
        const StarProductValences out = star_product_valences(inputs, n);
        EXPECT_EQ(out.valences.size(), static_cast<std::size_t>(2 * (n + 1)));
        for (const Certificate& c : out.certificates) {
            EXPECT_EQ(support::recomputed_valence(c.labeling), c.valence());
        }
    }
}
