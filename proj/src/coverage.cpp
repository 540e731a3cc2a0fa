#include "crownlab/coverage.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "crownlab/arithmetic.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/parallel.hpp"
#include "crownlab/product.hpp"
#include "crownlab/translation.hpp"

namespace crownlab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

// min and max of sum w_i * l_i over bijections of the weights onto 1..count
std::pair<std::int64_t, std::int64_t> rearrangement(std::vector<std::int64_t> weights) {
    std::sort(weights.begin(), weights.end());
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    const auto count = static_cast<std::int64_t>(weights.size());
    for (std::int64_t i = 0; i < count; ++i) {
        hi += weights[i] * (i + 1);
        lo += weights[i] * (count - i);
    }
    return {lo, hi};
}

std::string sign_name(Orientation s) {
    return s == Orientation::Plus ? "+" : "-";
}

std::string describe(const TranslationResult& t, const std::string& source) {
    return source + " translated by r=" + std::to_string(t.r) + " sign " + sign_name(t.sign);
}

// Oriented super edge-magic cycle of length a*b from canonical C_a (Plus,
// outer) and C_b (Minus, inner); nullopt if the product is not one cycle.
std::optional<LabeledDigraph> product_cycle(int outer, int inner) {
    auto o = self_labeled(directed_cycle(outer, Orientation::Plus));
    FamilyMember member(directed_cycle(inner, Orientation::Minus));
    auto result = induced_product_labeling(o, ArcAssignment::constant(o.digraph().arc_count(), member));
    if (!result.digraph().is_one_regular() || !result.digraph().is_strongly_connected()) {
        return std::nullopt;
    }
    return result;
}

void require_cover_args(int m, int n) {
    if (m < 3 || m % 2 == 0) {
        throw InvalidInput("crown covers need odd m >= 3, got " + std::to_string(m));
    }
    if (n < 1) {
        throw InvalidInput("crown covers need n >= 1");
    }
    if (static_cast<std::int64_t>(m) * (n + 1) > 2'000'000) {
        throw InvalidInput("crown too large for an explicit cover");
    }
}

ValenceCover assemble(const GraphSpec& spec, MagicInterval interval, std::vector<std::optional<Certificate>>& slots) {
    ValenceCover cover{spec, interval, {}, {}};
    for (auto& slot : slots) {
        if (slot) {
            const int v = slot->valence();
            cover.achieved.insert_or_assign(v, std::move(*slot));
        }
    }
    for (std::int64_t v = interval.lo; v <= interval.hi; ++v) {
        if (!cover.achieved.contains(static_cast<int>(v))) cover.missing.push_back(static_cast<int>(v));
    }
    return cover;
}

void check_slot_valence(const Certificate& c, std::int64_t expected) {
    if (c.valence() != expected) {
        throw ConstructionFailure(c.construction + " produced valence " + std::to_string(c.valence()) +
                                  ", expected " + std::to_string(expected));
    }
}

}  // namespace

std::string_view to_string(Mode mode) {
    return mode == Mode::Sem ? "sem" : "em";
}

Mode mode_from_string(std::string_view name) {
    if (name == "sem") return Mode::Sem;
    if (name == "em") return Mode::Em;
    throw InvalidInput("unknown mode '" + std::string(name) + "'");
}

MagicInterval sem_interval(const Graph& g) {
    const std::int64_t p = g.order();
    const std::int64_t q = g.size();
    if (q == 0) {
        throw InvalidInput("magic intervals need at least one edge");
    }
    std::vector<std::int64_t> weights(g.degrees().begin(), g.degrees().end());
    auto [lo, hi] = rearrangement(std::move(weights));
    const std::int64_t edge_sum = (p + 1 + p + q) * q / 2;
    return {ceil_div(lo + edge_sum, q), floor_div(hi + edge_sum, q), Mode::Sem};
}

MagicInterval em_interval(const Graph& g) {
    const std::int64_t q = g.size();
    if (q == 0) {
        throw InvalidInput("magic intervals need at least one edge");
    }
    std::vector<std::int64_t> weights(g.degrees().begin(), g.degrees().end());
    weights.insert(weights.end(), static_cast<std::size_t>(q), 1);
    auto [lo, hi] = rearrangement(std::move(weights));
    return {ceil_div(lo, q), floor_div(hi, q), Mode::Em};
}

ValenceCover perfect_sem_cover(int p, int q, int n) {
    if (!is_odd_prime(p) || !is_odd_prime(q) || p == q) {
        throw InvalidInput("perfect_sem_cover needs distinct odd primes, got " + std::to_string(p) + " and " +
                           std::to_string(q));
    }
    const int m = p * q;
    require_cover_args(m, n);
    const GraphSpec spec{Family::Crown, m, n};
    const MagicInterval interval = sem_interval(family_graph(spec));

    const auto canonical = self_labeled(directed_cycle(m, Orientation::Plus));
    const BezoutData bezout = bounded_bezout(p, q);
    const int inner = static_cast<int>(bezout.x_prime_factor);
    const int outer = m / inner;
    const auto rescue = product_cycle_sem(outer, inner);
    const std::string rescue_name =
        "rescue C_" + std::to_string(outer) + "+ x C_" + std::to_string(inner) + "-";
    // r-1 congruent to this modulo m is rescued directly; the rest by complement.
    const std::int64_t rescued_residue = (((m + 1) / 2 - bezout.x) % m + m) % m;

    auto rescued = [&](int r) {
        auto t = translated_labeling(rescue, n, Orientation::Plus, r);
        if (!t.single_cycle) {
            throw ConstructionFailure("rescue core is not a single " + std::to_string(m) + "-cycle at r=" +
                                      std::to_string(r));
        }
        return t;
    };

    const int count = m * n + 1;
    std::vector<std::optional<Certificate>> slots(static_cast<std::size_t>(count));
    parallel_for(static_cast<std::size_t>(count), [&](std::size_t index) {
        const int r = static_cast<int>(index) + 1;
        const int shift = r - 1;
        if (!gcd_exception(m, r)) {
            const Orientation sign =
                std::gcd((m + 1) / 2 - shift, m) == 1 ? Orientation::Plus : Orientation::Minus;
            auto t = translated_labeling(canonical, n, sign, r);
            if (!t.single_cycle) {
                throw ConstructionFailure("gcd test passed but the core is not a cycle at r=" + std::to_string(r));
            }
            slots[index] = make_certificate(spec, t.labeling(), describe(t, "canonical"));
        } else if (shift % m == rescued_residue) {
            auto t = rescued(r);
            slots[index] = make_certificate(spec, t.labeling(), describe(t, rescue_name));
        } else {
            const int partner = m * n - shift + 1;
            auto t = rescued(partner);
            slots[index] = make_certificate(spec, sem_complement(t.labeling()),
                                            "sem complement of " + describe(t, rescue_name));
        }
        check_slot_valence(*slots[index], interval.lo + shift);
    });
    return assemble(spec, interval, slots);
}

ValenceCover crown_sem_cover(int m, int n) {
    require_cover_args(m, n);
    const GraphSpec spec{Family::Crown, m, n};
    const MagicInterval interval = sem_interval(family_graph(spec));
    const auto canonical = self_labeled(directed_cycle(m, Orientation::Plus));

    struct Candidate {
        LabeledDigraph cycle;
        std::string name;
    };
    std::vector<Candidate> candidates;
    for (int a = 3; a <= m / 3; a += 2) {
        if (m % a == 0 && std::gcd(a, m / a) == 1) {
            if (auto c = product_cycle(m / a, a)) {
                candidates.push_back({*c, "rescue C_" + std::to_string(m / a) + "+ x C_" + std::to_string(a) + "-"});
            }
        }
    }

    auto try_rescue = [&](int r) -> std::optional<Certificate> {
        for (const Candidate& c : candidates) {
            for (Orientation sign : {Orientation::Plus, Orientation::Minus}) {
                auto t = translated_labeling(c.cycle, n, sign, r);
                if (t.single_cycle) return make_certificate(spec, t.labeling(), describe(t, c.name));
            }
        }
        return std::nullopt;
    };

    const int count = m * n + 1;
    std::vector<std::optional<Certificate>> slots(static_cast<std::size_t>(count));
    parallel_for(static_cast<std::size_t>(count), [&](std::size_t index) {
        const int r = static_cast<int>(index) + 1;
        const int shift = r - 1;
        if (!gcd_exception(m, r)) {
            const Orientation sign =
                std::gcd((m + 1) / 2 - shift, m) == 1 ? Orientation::Plus : Orientation::Minus;
            auto t = translated_labeling(canonical, n, sign, r);
            slots[index] = make_certificate(spec, t.labeling(), describe(t, "canonical"));
        } else if (auto direct = try_rescue(r)) {
            slots[index] = std::move(direct);
        } else if (auto partner = try_rescue(m * n - shift + 1)) {
            slots[index] = make_certificate(spec, sem_complement(partner->labeling),
                                            "sem complement of " + partner->construction);
        }
        if (slots[index]) check_slot_valence(*slots[index], interval.lo + shift);
    });
    return assemble(spec, interval, slots);
}

ValenceCover em_cover_from(const ValenceCover& sem) {
    if (sem.interval.mode != Mode::Sem || sem.graph.family != Family::Crown) {
        throw InvalidInput("em_cover_from expects a sem-mode crown cover");
    }
    const GraphSpec spec = sem.graph;
    const MagicInterval interval = em_interval(family_graph(spec));

    std::vector<std::optional<Certificate>> slots;
    for (const auto& [v, c] : sem.achieved) {
        slots.emplace_back(c);
    }
    for (const auto& [v, c] : sem.achieved) {
        slots.emplace_back(make_certificate(spec, em_complement(c.labeling), "complement of " + c.construction));
    }
    for (const auto& [v, c] : sem.achieved) {
        slots.emplace_back(make_certificate(spec, odd_even(c.labeling, Parity::Odd), "odd transform of " + c.construction));
        slots.emplace_back(make_certificate(spec, odd_even(c.labeling, Parity::Even), "even transform of " + c.construction));
    }
    ValenceCover cover = assemble(spec, interval, slots);
    for (const auto& [v, c] : cover.achieved) {
        if (!interval.contains(v)) {
            throw ConstructionFailure("valence " + std::to_string(v) + " outside the magic interval");
        }
    }
    return cover;
}

ValenceCover perfect_em_cover(int p, int q, int n) {
    return em_cover_from(perfect_sem_cover(p, q, n));
}

StarProductValences star_product_valences(std::span<const TotalLabeling> cycle_labelings, int n) {
    if (n < 1) {
        throw InvalidInput("star_product_valences needs n >= 1");
    }
    if (cycle_labelings.empty()) {
        return {};
    }
    const int m = cycle_labelings.front().order();
    StarProductValences out;
    std::set<int> valences;
    for (const TotalLabeling& g : cycle_labelings) {
        if (g.order() != m) {
            throw InvalidInput("cycle labelings have mixed lengths");
        }
        // Orient the cycle by walking it, keeping g's labels.
        const GraphSpec cycle_spec{Family::Cycle, m, 0};
        const Certificate normalized = make_certificate(cycle_spec, g);
        std::vector<Arc> arcs;
        std::vector<int> edge_labels;
        for (std::size_t e = 0; e < normalized.labeling.graph().edges().size(); ++e) {
            const Edge& edge = normalized.labeling.graph().edges()[e];
            arcs.push_back({edge.u, edge.v});
            edge_labels.push_back(normalized.labeling.edge_label(e));
        }
        Digraph oriented(m, std::move(arcs));
        auto outer_labeling = verify(underlying(oriented),
                                     {normalized.labeling.vertex_labels().begin(), normalized.labeling.vertex_labels().end()},
                                     std::move(edge_labels));
        LabeledDigraph outer(std::move(oriented), std::move(outer_labeling));

        for (int r = 1; r <= n + 1; ++r) {
            FamilyMember star(star_loop(n, r));
            auto product = induced_product_labeling(outer, ArcAssignment::constant(outer.digraph().arc_count(), star));
            const int expected = (n + 1) * (g.valence() - 2) + r + 1;
            if (product.labeling().valence() != expected) {
                throw ConstructionFailure("star product valence differs from (n+1)(val(g)-2)+r+1");
            }
            out.certificates.push_back(make_certificate(
                {Family::Crown, m, n}, product.labeling(),
                "cycle labeling of valence " + std::to_string(g.valence()) + " x looped star with center " +
                    std::to_string(r)));
            valences.insert(expected);
        }
    }
    out.valences.assign(valences.begin(), valences.end());
    return out;
}

int cycle_valence_lower_bound(int m) {
    if (m < 3) {
        throw InvalidInput("cycle bound needs m >= 3");
    }
    int two = 0;
    int odd = 0;
    for (const auto& [prime, exponent] : factorize(m)) {
        (prime == 2 ? two : odd) += exponent;
    }
    if (two == 0) return 1 + odd;
    return odd + (two >= 2 ? 1 : 0);
}

int crown_valence_lower_bound(int m, int n) {
    if (n < 1) {
        throw InvalidInput("crown bound needs n >= 1");
    }
    return cycle_valence_lower_bound(m) * (n + 1);
}

}  // namespace crownlab
