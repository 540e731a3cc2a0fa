#include <gtest/gtest.h>

#include "crownlab/certificate.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/oracle.hpp"
#include "support.hpp"

using namespace crownlab;

namespace {

std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void expect_witnesses_valid(const SpectrumReport& r) {
    EXPECT_TRUE(r.exhaustive);
    ASSERT_EQ(r.witnesses.size(), r.spectrum.size());
    for (const auto& [v, w] : r.witnesses) {
        EXPECT_EQ(support::recomputed_valence(w), v);
        if (r.mode == Mode::Sem) EXPECT_TRUE(support::all_vertex_labels_small(w));
    }
}

}  // namespace

TEST(BruteSem, SmallestCrown) {
    const SpectrumReport r = brute_sem_spectrum(family_graph({Family::Crown, 3, 1}));
    EXPECT_EQ(r.spectrum, range(15, 18));
    EXPECT_EQ(r.search_space_size, 720u);
    expect_witnesses_valid(r);
}

TEST(BruteSem, LoopedStar) {
    const SpectrumReport r = brute_sem_spectrum(family_graph({Family::StarLoop, 0, 2}));
    EXPECT_EQ(r.spectrum, range(8, 10));
    expect_witnesses_valid(r);
}

TEST(BruteSem, GuardRefusesLargeInputs) {
    std::vector<Edge> edges;
    for (int i = 1; i <= 11; ++i) edges.push_back({i, i % 11 + 1});
    try {
        brute_sem_spectrum(Graph(11, edges));
        FAIL() << "expected GuardExceeded";
    } catch (const GuardExceeded& e) {
        EXPECT_EQ(e.estimated_size(), 39916800u);
    }
    EXPECT_THROW(brute_sem_spectrum(family_graph({Family::Crown, 3, 1}), 100), GuardExceeded);
}

TEST(BruteSem, WitnessIsLexicographicallyFirst) {
    const SpectrumReport r = brute_sem_spectrum(cycle_graph(5));
    EXPECT_EQ(r.spectrum, (std::vector<int>{14}));
    const auto w = r.witnesses.at(14).vertex_labels();
    EXPECT_EQ(std::vector<int>(w.begin(), w.end()), (std::vector<int>{1, 3, 5, 2, 4}));
}

TEST(BruteEm, Triangle) {
    const SpectrumReport r = brute_em_spectrum(cycle_graph(3));
    EXPECT_EQ(r.spectrum, range(9, 12));
    expect_witnesses_valid(r);
}

TEST(BruteEm, LoopedStarIsPerfect) {
    const SpectrumReport r = brute_em_spectrum(family_graph({Family::StarLoop, 0, 3}));
    EXPECT_EQ(r.spectrum, range(10, 17));
    expect_witnesses_valid(r);
}

TEST(BruteEm, SmallestCrownIsPerfect) {
    const SpectrumReport r = brute_em_spectrum(family_graph({Family::Crown, 3, 1}));
    EXPECT_EQ(r.spectrum, range(15, 24));
    expect_witnesses_valid(r);
}

TEST(BruteEm, FiveCycleSpectrum) {
    const SpectrumReport r = brute_em_spectrum(cycle_graph(5));
    EXPECT_EQ(r.spectrum, (std::vector<int>{14, 16, 17, 19}));
}

TEST(BruteEm, GuardRefusesLargeInputs) {
    EXPECT_THROW(brute_em_spectrum(family_graph({Family::Crown, 3, 1}), 1000), GuardExceeded);
}

TEST(BruteEm, ComplementSymmetry) {
    const std::vector<GraphSpec> specs{{Family::Cycle, 3, 0}, {Family::Cycle, 4, 0}, {Family::Cycle, 5, 0},
                                       {Family::Cycle, 6, 0}, {Family::Cycle, 7, 0}, {Family::StarLoop, 0, 2},
                                       {Family::StarLoop, 0, 4}, {Family::Crown, 3, 1}};
    for (const GraphSpec& s : specs) {
        const Graph g = family_graph(s);
        const SpectrumReport r = brute_em_spectrum(g);
        const int total = 3 * (g.order() + g.size() + 1);
        for (int v : r.spectrum) {
            EXPECT_TRUE(std::ranges::binary_search(r.spectrum, total - v)) << v;
        }
    }
}

TEST(BruteEmLabelings, Examples) {
    EXPECT_FALSE(brute_em_labelings(4, 12, 1).empty());
    const auto all = brute_em_labelings(5, 14);
    const TotalLabeling canon = extend_sem(canonical_cycle(5));
    const bool found = std::ranges::any_of(all, [&](const TotalLabeling& f) {
        return std::ranges::equal(f.vertex_labels(), canon.vertex_labels()) &&
               std::ranges::equal(f.edge_labels(), canon.edge_labels());
    });
    EXPECT_TRUE(found);
    for (const TotalLabeling& f : all) EXPECT_EQ(support::recomputed_valence(f), 14);
    EXPECT_TRUE(brute_em_labelings(3, 8).empty());
    EXPECT_THROW(brute_em_labelings(9, 30), GuardExceeded);
    EXPECT_EQ(brute_em_labelings(5, 14, 2).size(), 2u);
}

TEST(BruteEmLabelings, DistinctResults) {
    const auto all = brute_em_labelings(6, 20);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const TotalLabeling& f : all) {
        seen.insert({{f.vertex_labels().begin(), f.vertex_labels().end()}, {f.edge_labels().begin(), f.edge_labels().end()}});
    }
    EXPECT_EQ(seen.size(), all.size());
    EXPECT_FALSE(all.empty());
}
