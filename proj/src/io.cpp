#include "crownlab/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InvalidCertificate(what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        fail(std::string(what) + " is not an integer");
    }
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        fail(std::string(what) + " is out of range");
    }
    return static_cast<int>(v);
}

std::string text(const Json& j, const char* what) {
    if (!j.is_string()) {
        fail(std::string(what) + " is not a string");
    }
    return j.get<std::string>();
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " is not a list");
    std::vector<int> out;
    for (const Json& v : j) out.push_back(integer(v, what));
    return out;
}

// Everything needed to read or write certificates of one family member.
struct FamilyIndex {
    explicit FamilyIndex(const GraphSpec& s) : spec(s), graph(family_graph(s)), names(family_vertex_names(s)) {
        for (std::size_t i = 0; i < names.size(); ++i) id_of.emplace(names[i], static_cast<VertexId>(i + 1));
        for (std::size_t e = 0; e < graph.edges().size(); ++e) {
            const Edge& edge = graph.edges()[e];
            edge_of.emplace(std::minmax(edge.u, edge.v), e);
        }
    }

    std::string edge_name(std::size_t e) const {
        return names[graph.edges()[e].u - 1] + "-" + names[graph.edges()[e].v - 1];
    }

    GraphSpec spec;
    Graph graph;
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexId> id_of;
    std::map<std::pair<VertexId, VertexId>, std::size_t> edge_of;
};

Json certificate_json(const Certificate& cert, const std::vector<std::string>& names) {
    const TotalLabeling& f = cert.labeling;
    Json vertices = Json::array();
    for (VertexId v = 1; v <= f.order(); ++v) {
        vertices.push_back({{"id", names[v - 1]}, {"label", f.vertex_label(v)}});
    }
    Json edges = Json::array();
    const auto& list = f.graph().edges();
    for (std::size_t e = 0; e < list.size(); ++e) {
        edges.push_back({{"u", names[list[e].u - 1]}, {"v", names[list[e].v - 1]}, {"label", f.edge_label(e)}});
    }
    return Json{{"graph", to_json(cert.graph)},
                {"kind", std::string(to_string(f.kind()))},
                {"valence", f.valence()},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)}};
}

Certificate certificate_from_json(const Json& j, const FamilyIndex& index) {
    const Graph& g = index.graph;
    const auto& names = index.names;
    const auto& id_of = index.id_of;

    const Json& vertices = field(j, "vertices");
    if (!vertices.is_array()) fail("'vertices' is not a list");
    std::vector<int> vl(static_cast<std::size_t>(g.order()), 0);
    for (const Json& entry : vertices) {
        const std::string name = text(field(entry, "id"), "vertex id");
        const auto it = id_of.find(name);
        if (it == id_of.end()) fail("unknown vertex '" + name + "'");
        if (vl[it->second - 1] != 0) fail("vertex '" + name + "' listed twice");
        const int label = integer(field(entry, "label"), "vertex label");
        if (label < 1) fail("vertex '" + name + "' has non-positive label " + std::to_string(label));
        vl[it->second - 1] = label;
    }
    for (std::size_t i = 0; i < vl.size(); ++i) {
        if (vl[i] == 0) fail("vertex '" + names[i] + "' has no label");
    }

    const Json& edges = field(j, "edges");
    if (!edges.is_array()) fail("'edges' is not a list");
    std::vector<int> el(static_cast<std::size_t>(g.size()), 0);
    for (const Json& entry : edges) {
        const std::string u = text(field(entry, "u"), "edge endpoint");
        const std::string v = text(field(entry, "v"), "edge endpoint");
        const std::string name = u + "-" + v;
        const auto iu = id_of.find(u);
        const auto iv = id_of.find(v);
        if (iu == id_of.end() || iv == id_of.end()) fail("edge " + name + " has an unknown endpoint");
        const auto it = index.edge_of.find(std::minmax(iu->second, iv->second));
        if (it == index.edge_of.end()) fail("edge " + name + " is not an edge of the graph");
        if (el[it->second] != 0) fail("edge " + name + " listed twice");
        const int label = integer(field(entry, "label"), "edge label");
        if (label < 1) fail("edge " + name + " has non-positive label " + std::to_string(label));
        el[it->second] = label;
    }
    for (std::size_t e = 0; e < el.size(); ++e) {
        if (el[e] == 0) fail("edge " + index.edge_name(e) + " has no label");
    }

    const int declared = integer(field(j, "valence"), "valence");
    const std::string kind = text(field(j, "kind"), "kind");
    for (std::size_t e = 0; e < el.size(); ++e) {
        const Edge& edge = g.edges()[e];
        const int sum = vl[edge.u - 1] + el[e] + vl[edge.v - 1];
        if (sum != declared) {
            fail("edge " + index.edge_name(e) + " sums to " + std::to_string(sum) + ", declared valence is " +
                 std::to_string(declared));
        }
    }
    try {
        TotalLabeling f = verify(g, std::move(vl), std::move(el));
        if (std::string(to_string(f.kind())) != kind) {
            fail("declared kind '" + kind + "' but the labels are " + std::string(to_string(f.kind())));
        }
        return Certificate{index.spec, std::move(f), "deserialized"};
    } catch (const InvalidCertificate&) {
        throw;
    } catch (const LabelingError& e) {
        fail(e.what());
    }
}

}  // namespace

Json to_json(const GraphSpec& spec) {
    Json j{{"family", std::string(to_string(spec.family))}};
    if (spec.family != Family::StarLoop) j["m"] = spec.m;
    if (spec.family != Family::Cycle) j["n"] = spec.n;
    return j;
}

Json to_json(const MagicInterval& interval) { return Json::array({interval.lo, interval.hi}); }

Json to_json(const Certificate& cert) { return certificate_json(cert, family_vertex_names(cert.graph)); }

Json to_json(const ValenceCover& cover) {
    const auto names = family_vertex_names(cover.graph);
    Json achieved = Json::array();
    Json certificates = Json::array();
    for (const auto& [valence, cert] : cover.achieved) {
        achieved.push_back(valence);
        certificates.push_back(certificate_json(cert, names));
    }
    return Json{{"graph", to_json(cover.graph)},
                {"mode", std::string(to_string(cover.interval.mode))},
                {"interval", to_json(cover.interval)},
                {"achieved", std::move(achieved)},
                {"missing", cover.missing},
                {"certificates", std::move(certificates)}};
}

Json to_json(const SpectrumReport& report, const GraphSpec& spec) {
    Json witnesses = Json::array();
    for (const auto& [valence, labeling] : report.witnesses) {
        witnesses.push_back(to_json(make_certificate(spec, labeling)));
    }
    return Json{{"graph", to_json(spec)},
                {"mode", std::string(to_string(report.mode))},
                {"spectrum", report.spectrum},
                {"search_space_size", report.search_space_size},
                {"exhaustive", report.exhaustive},
                {"witnesses", std::move(witnesses)}};
}

GraphSpec graph_spec_from_json(const Json& j) {
    GraphSpec spec;
    try {
        spec.family = family_from_string(text(field(j, "family"), "graph.family"));
        if (spec.family != Family::StarLoop) spec.m = integer(field(j, "m"), "graph.m");
        if (spec.family != Family::Cycle) spec.n = integer(field(j, "n"), "graph.n");
        spec.validate();
    } catch (const InvalidInput& e) {
        fail(std::string("bad graph spec: ") + e.what());
    }
    return spec;
}

Certificate certificate_from_json(const Json& j) {
    return certificate_from_json(j, FamilyIndex(graph_spec_from_json(field(j, "graph"))));
}

CoverCheck check_cover_report(const Json& j) {
    const GraphSpec spec = graph_spec_from_json(field(j, "graph"));
    Mode mode;
    try {
        mode = mode_from_string(text(field(j, "mode"), "mode"));
    } catch (const InvalidInput& e) {
        fail(e.what());
    }
    const FamilyIndex index(spec);
    const MagicInterval expected = mode == Mode::Sem ? sem_interval(index.graph) : em_interval(index.graph);
    const std::vector<int> bounds = int_list(field(j, "interval"), "interval");
    if (bounds.size() != 2 || bounds[0] != expected.lo || bounds[1] != expected.hi) {
        fail("interval does not match the graph (expected [" + std::to_string(expected.lo) + ", " +
             std::to_string(expected.hi) + "])");
    }

    const std::vector<int> achieved = int_list(field(j, "achieved"), "achieved");
    const std::vector<int> missing = int_list(field(j, "missing"), "missing");
    std::set<int> seen;
    for (int v : achieved) {
        if (!expected.contains(v) || !seen.insert(v).second) fail("achieved valence " + std::to_string(v) + " is invalid");
    }
    for (int v : missing) {
        if (!expected.contains(v) || !seen.insert(v).second) fail("missing valence " + std::to_string(v) + " is invalid");
    }
    if (static_cast<std::int64_t>(seen.size()) != expected.size()) {
        fail("achieved and missing do not cover the interval");
    }

    const Json& certificates = field(j, "certificates");
    if (!certificates.is_array()) fail("'certificates' is not a list");
    if (certificates.size() != achieved.size()) fail("certificate count differs from achieved count");
    std::set<int> certified;
    for (std::size_t i = 0; i < certificates.size(); ++i) {
        Certificate cert = [&] {
            try {
                if (!(graph_spec_from_json(field(certificates[i], "graph")) == spec)) {
                    fail("is for a different graph");
                }
                return certificate_from_json(certificates[i], index);
            } catch (const InvalidCertificate& e) {
                fail("certificate " + std::to_string(i) + ": " + e.what());
            }
        }();
        if (mode == Mode::Sem && !cert.labeling.is_super()) {
            fail("certificate " + std::to_string(i) + " is not super edge-magic");
        }
        certified.insert(cert.valence());
    }
    if (certified != std::set<int>(achieved.begin(), achieved.end())) {
        fail("certificate valences differ from the achieved list");
    }
    return CoverCheck{certificates.size(), missing.empty()};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace crownlab
