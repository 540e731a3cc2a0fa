#include "crownlab/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "crownlab/arithmetic.hpp"
#include "crownlab/coverage.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/io.hpp"
#include "crownlab/oracle.hpp"

namespace crownlab::cli {

namespace {

struct Options {
    std::string family = "crown";
    std::string mode = "sem";
    int m = 0;
    int n = 0;
    int p = 0;
    int q = 0;
    int k = 1;
    int valence = 0;
    std::string out_file;
    std::string in_file;
    bool cycle = false;
    std::optional<std::uint64_t> guard;
};

GraphSpec spec_from(const Options& o) {
    GraphSpec spec{family_from_string(o.family), o.m, o.n};
    spec.validate();
    return spec;
}

void require_prime_pair(int p, int q) {
    if (!is_odd_prime(p) || !is_odd_prime(q) || p == q) {
        throw InvalidInput("p and q must be distinct odd primes");
    }
}

ValenceCover cover_for(int p, int k, int q, int n, Mode mode) {
    require_prime_pair(p, q);
    if (k < 1) throw InvalidInput("k must be >= 1");
    std::int64_t m = q;
    for (int i = 0; i < k; ++i) {
        m *= p;
        if (m > 1'000'000) throw InvalidInput("p^k q is too large");
    }
    if (k == 1) {
        return mode == Mode::Sem ? perfect_sem_cover(p, q, n) : perfect_em_cover(p, q, n);
    }
    ValenceCover sem = crown_sem_cover(static_cast<int>(m), n);
    return mode == Mode::Sem ? sem : em_cover_from(sem);
}

// Prime-pair crowns use the proven covers; every other odd m the experiment.
ValenceCover crown_cover(int m, int n, Mode mode) {
    const auto factors = factorize(m);
    if (factors.size() == 2 && factors[0].second == 1 && factors[1].second == 1 && factors[0].first != 2) {
        const int p = static_cast<int>(factors[0].first);
        const int q = static_cast<int>(factors[1].first);
        return mode == Mode::Sem ? perfect_sem_cover(p, q, n) : perfect_em_cover(p, q, n);
    }
    ValenceCover sem = crown_sem_cover(m, n);
    return mode == Mode::Sem ? sem : em_cover_from(sem);
}

int cmd_intervals(const Options& o, std::ostream& out) {
    const GraphSpec spec = spec_from(o);
    const Mode mode = mode_from_string(o.mode);
    const Graph g = family_graph(spec);
    const MagicInterval interval = mode == Mode::Sem ? sem_interval(g) : em_interval(g);
    out << dump(Json{{"graph", to_json(spec)}, {"mode", o.mode}, {"interval", to_json(interval)}});
    return kOk;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
    CrownSpec{o.m, o.n}.validate();
    if (o.m % 2 == 0) throw InvalidInput("generate needs an odd core length");
    const Graph g = family_graph({Family::Crown, o.m, o.n});
    const MagicInterval sem = sem_interval(g);
    const MagicInterval em = em_interval(g);
    if (!em.contains(o.valence)) {
        throw InvalidInput("valence " + std::to_string(o.valence) + " is outside [" + std::to_string(em.lo) + ", " +
                           std::to_string(em.hi) + "]");
    }
    const ValenceCover cover = crown_cover(o.m, o.n, sem.contains(o.valence) ? Mode::Sem : Mode::Em);
    const auto it = cover.achieved.find(o.valence);
    if (it == cover.achieved.end()) {
        err << "no construction reaches valence " << o.valence << "\n";
        return kIncomplete;
    }
    out << dump(to_json(it->second));
    return kOk;
}

int cmd_cover(const Options& o, std::ostream& out, std::ostream& err) {
    const Mode mode = mode_from_string(o.mode);
    const ValenceCover cover = cover_for(o.p, o.k, o.q, o.n, mode);
    const Json report = to_json(cover);
    if (o.out_file.empty()) {
        out << dump(report);
    } else {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file) throw InvalidInput("cannot write " + o.out_file);
        file << dump(report);
        Json summary = report;
        summary.erase("certificates");
        out << dump(summary);
    }
    if (!cover.complete()) {
        err << cover.missing.size() << " valences missing\n";
        return kIncomplete;
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::ifstream file(o.in_file, std::ios::binary);
    if (!file) throw InvalidInput("cannot read " + o.in_file);
    Json j;
    try {
        j = Json::parse(file);
    } catch (const Json::parse_error& e) {
        err << "invalid JSON: " << e.what() << "\n";
        out << dump(Json{{"valid", false}, {"error", "invalid JSON"}});
        return kInvalidCertificate;
    }
    try {
        if (j.is_object() && j.contains("certificates")) {
            const CoverCheck check = check_cover_report(j);
            out << dump(Json{{"valid", true}, {"certificates", check.certificates}, {"complete", check.complete}});
            return check.complete ? kOk : kIncomplete;
        }
        const Certificate cert = certificate_from_json(j);
        out << dump(Json{{"valid", true},
                         {"kind", std::string(to_string(cert.labeling.kind()))},
                         {"valence", cert.valence()}});
        return kOk;
    } catch (const InvalidCertificate& e) {
        err << "invalid certificate: " << e.what() << "\n";
        out << dump(Json{{"valid", false}, {"error", e.what()}});
        return kInvalidCertificate;
    }
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    const GraphSpec spec = spec_from(o);
    const Mode mode = mode_from_string(o.mode);
    const Graph g = family_graph(spec);
    const SpectrumReport report = mode == Mode::Sem ? brute_sem_spectrum(g, o.guard.value_or(kDefaultSemGuard))
                                                    : brute_em_spectrum(g, o.guard.value_or(kDefaultEmGuard));
    out << dump(to_json(report, spec));
    return kOk;
}

int cmd_bezout(const Options& o, std::ostream& out) {
    const BezoutData b = bounded_bezout(o.p, o.q);
    out << dump(Json{{"p", b.p},
                     {"q", b.q},
                     {"alpha", b.alpha},
                     {"beta", b.beta},
                     {"x", b.x},
                     {"x_prime", b.x_prime},
                     {"x_prime_factor", b.x_prime_factor},
                     {"alpha_prime", b.alpha_prime},
                     {"beta_prime", b.beta_prime}});
    return kOk;
}

int cmd_conflicts(const Options& o, std::ostream& out) {
    const auto [x, x_prime] = conflict_pair(o.p, o.q);
    const auto values = conflict_values(o.p, o.k, o.q);
    out << dump(Json{{"p", o.p}, {"k", o.k}, {"q", o.q}, {"pair", {x, x_prime}}, {"values", values},
                     {"count", values.size()}});
    return kOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
    if (o.cycle) {
        out << dump(Json{{"m", o.m}, {"cycle_bound", cycle_valence_lower_bound(o.m)}});
    } else {
        out << dump(Json{{"m", o.m}, {"n", o.n}, {"crown_bound", crown_valence_lower_bound(o.m, o.n)}});
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge-magic labelings of crowns: intervals, constructions, covers and exhaustive spectra"};
    app.require_subcommand(1);
    Options o;
    const auto families = CLI::IsMember({"crown", "cycle", "star_loop"});
    const auto modes = CLI::IsMember({"sem", "em"});

    auto* intervals = app.add_subcommand("intervals", "I_G (sem) or J_G (em) of a family member");
    intervals->add_option("--family", o.family)->check(families);
    intervals->add_option("--m", o.m);
    intervals->add_option("--n", o.n);
    intervals->add_option("--mode", o.mode)->check(modes);

    auto* generate = app.add_subcommand("generate", "one certificate for a crown at a given valence");
    generate->add_option("--m", o.m)->required();
    generate->add_option("--n", o.n)->required();
    generate->add_option("--valence", o.valence)->required();

    auto* cover = app.add_subcommand("cover", "every valence of the crown with core length p^k q");
    cover->add_option("--p", o.p)->required();
    cover->add_option("--q", o.q)->required();
    cover->add_option("--k", o.k, "exponent of p (default 1)");
    cover->add_option("--n", o.n)->required();
    cover->add_option("--mode", o.mode)->check(modes);
    cover->add_option("--out", o.out_file, "write the full report here");

    auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate or cover report");
    verify_cmd->add_option("file", o.in_file)->required();

    auto* spectrum = app.add_subcommand("spectrum", "exhaustive valence spectrum of a small graph");
    spectrum->add_option("--family", o.family)->check(families);
    spectrum->add_option("--m", o.m);
    spectrum->add_option("--n", o.n);
    spectrum->add_option("--mode", o.mode)->check(modes);
    spectrum->add_option("--guard", o.guard, "maximum search size");

    auto* bezout = app.add_subcommand("bezout", "bounded Bezout coefficients of two odd primes");
    bezout->add_option("--p", o.p)->required();
    bezout->add_option("--q", o.q)->required();

    auto* conflicts = app.add_subcommand("conflicts", "conflict values of p^k q");
    conflicts->add_option("--p", o.p)->required();
    conflicts->add_option("--k", o.k);
    conflicts->add_option("--q", o.q)->required();

    auto* bound = app.add_subcommand("bound", "lower bound on distinct edge-magic valences");
    bound->add_option("--m", o.m)->required();
    bound->add_option("--n", o.n);
    bound->add_flag("--cycle", o.cycle, "bound for the cycle C_m alone");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidArguments;
    }

    try {
        if (*intervals) return cmd_intervals(o, out);
        if (*generate) return cmd_generate(o, out, err);
        if (*cover) return cmd_cover(o, out, err);
        if (*verify_cmd) return cmd_verify(o, out, err);
        if (*spectrum) return cmd_spectrum(o, out);
        if (*bezout) return cmd_bezout(o, out);
        if (*conflicts) return cmd_conflicts(o, out);
        if (*bound) return cmd_bound(o, out);
    } catch (const GuardExceeded& e) {
        err << "guard exceeded: " << e.what() << " (estimated " << e.estimated_size() << ")\n";
        return kGuardExceeded;
    } catch (const InvalidInput& e) {
        err << "invalid arguments: " << e.what() << "\n";
        return kInvalidArguments;
    } catch (const ConstructionFailure& e) {
        err << "construction failed: " << e.what() << "\n";
        return kInvalidCertificate;
    } catch (const LabelingError& e) {
        err << "invalid labeling: " << e.what() << "\n";
        return kInvalidCertificate;
    }
    return kInvalidArguments;
}

}  // namespace crownlab::cli
