#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

#include "crownlab/certificate.hpp"
#include "crownlab/coverage.hpp"
#include "crownlab/oracle.hpp"

namespace crownlab {

using Json = nlohmann::json;

Json to_json(const GraphSpec& spec);
Json to_json(const MagicInterval& interval);
Json to_json(const Certificate& cert);

/// {graph, mode, interval: [lo, hi], achieved, missing, certificates}.
Json to_json(const ValenceCover& cover);

/// {graph, mode, spectrum, search_space_size, exhaustive, witnesses}.
Json to_json(const SpectrumReport& report, const GraphSpec& spec);

/// Throws InvalidCertificate on malformed specs.
GraphSpec graph_spec_from_json(const Json& j);

/// Rebuilds and re-verifies a serialized certificate: names must be exactly
/// the family's vertex names, edges exactly the family's edges, and the
/// declared kind and valence must match the labels. Throws InvalidCertificate
/// naming the first offending vertex or edge.
Certificate certificate_from_json(const Json& j);

struct CoverCheck {
    std::size_t certificates = 0;
    bool complete = false;
};

/// Re-verifies every certificate of a serialized cover report and checks that
/// achieved and missing partition the recomputed interval.
/// Throws InvalidCertificate.
CoverCheck check_cover_report(const Json& j);

/// Sorted keys, two-space indent, trailing LF.
std::string dump(const Json& j);

}  // namespace crownlab
