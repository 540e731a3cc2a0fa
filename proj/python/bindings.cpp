#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crownlab/arithmetic.hpp"
#include "crownlab/cli.hpp"
#include "crownlab/coverage.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/io.hpp"
#include "crownlab/oracle.hpp"
#include "crownlab/translation.hpp"

namespace py = pybind11;
using namespace crownlab;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string interval_json(const std::string& family, int m, int n, const std::string& mode) {
    const GraphSpec spec{family_from_string(family), m, n};
    spec.validate();
    const Graph g = family_graph(spec);
    const MagicInterval interval = mode_from_string(mode) == Mode::Sem ? sem_interval(g) : em_interval(g);
    return to_json(interval).dump();
}

std::string cover_json(int p, int q, int n, const std::string& mode) {
    if (!is_odd_prime(p) || !is_odd_prime(q) || p == q) throw InvalidInput("p and q must be distinct odd primes");
    const Mode md = mode_from_string(mode);
    py::gil_scoped_release release;
    return to_json(md == Mode::Sem ? perfect_sem_cover(p, q, n) : perfect_em_cover(p, q, n)).dump();
}

std::string crown_sem_cover_json(int m, int n) {
    py::gil_scoped_release release;
    return to_json(crown_sem_cover(m, n)).dump();
}

std::string spectrum_json(const std::string& family, int m, int n, const std::string& mode, std::uint64_t guard) {
    const GraphSpec spec{family_from_string(family), m, n};
    spec.validate();
    const Graph g = family_graph(spec);
    const bool sem = mode_from_string(mode) == Mode::Sem;
    py::gil_scoped_release release;
    const SpectrumReport report = sem ? brute_sem_spectrum(g, guard) : brute_em_spectrum(g, guard);
    return to_json(report, spec).dump();
}

std::string verify_certificate_json(const std::string& text) {
    const Certificate cert = certificate_from_json(Json::parse(text));
    return Json{{"kind", std::string(to_string(cert.labeling.kind()))}, {"valence", cert.valence()}}.dump();
}

std::string verify_report_json(const std::string& text) {
    const CoverCheck check = check_cover_report(Json::parse(text));
    return Json{{"certificates", check.certificates}, {"complete", check.complete}}.dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"crownlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    {
        py::gil_scoped_release release;
        code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Edge-magic labelings of crowns";

    auto labeling_error = py::register_exception<LabelingError>(m, "LabelingError", PyExc_ValueError);
    py::register_exception<InvalidCertificate>(m, "InvalidCertificate", labeling_error.ptr());
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
    py::register_exception<ConstructionFailure>(m, "ConstructionFailure", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

    m.def("interval_json", &interval_json, py::arg("family"), py::arg("m"), py::arg("n"), py::arg("mode"));
    m.def("cover_json", &cover_json, py::arg("p"), py::arg("q"), py::arg("n"), py::arg("mode"));
    m.def("crown_sem_cover_json", &crown_sem_cover_json, py::arg("m"), py::arg("n"));
    m.def("spectrum_json", &spectrum_json, py::arg("family"), py::arg("m"), py::arg("n"), py::arg("mode"),
          py::arg("guard"));
    m.def("verify_certificate_json", &verify_certificate_json, py::arg("text"));
    m.def("verify_report_json", &verify_report_json, py::arg("text"));
    m.def("run_cli", &run_cli, py::arg("args"));

    m.def("is_odd_prime", &is_odd_prime);
    m.def("bezout", [](std::int64_t p, std::int64_t q) {
        const BezoutData b = bounded_bezout(p, q);
        py::dict d;
        d["p"] = b.p;
        d["q"] = b.q;
        d["alpha"] = b.alpha;
        d["beta"] = b.beta;
        d["x"] = b.x;
        d["x_prime"] = b.x_prime;
        d["x_prime_factor"] = b.x_prime_factor;
        d["alpha_prime"] = b.alpha_prime;
        d["beta_prime"] = b.beta_prime;
        return d;
    });
    m.def("conflict_pair", &conflict_pair);
    m.def("conflict_values", &conflict_values, py::arg("p"), py::arg("k"), py::arg("q"));
    m.def("exceptional_r", &exceptional_r, py::arg("p"), py::arg("q"), py::arg("n"));
    m.def("gcd_exception", &gcd_exception, py::arg("m"), py::arg("r"));
    m.def("crown_bound", &crown_valence_lower_bound, py::arg("m"), py::arg("n"));
    m.def("cycle_bound", &cycle_valence_lower_bound, py::arg("m"));

    m.attr("DEFAULT_SEM_GUARD") = kDefaultSemGuard;
    m.attr("DEFAULT_EM_GUARD") = kDefaultEmGuard;
}
