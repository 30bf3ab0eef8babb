#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "conductor/cover.hpp"
#include "conductor/dualgraph.hpp"
#include "conductor/error.hpp"
#include "conductor/ramification.hpp"
#include "conductor/rational.hpp"
#include "conductor/singularity.hpp"

namespace conductor::io {

using json = nlohmann::ordered_json;

// Input readers throw Error{kSchemaError} with a JSON-pointer-like path.

// A bare JSON integer or a string "n", "-n", "n/d" (U+2212 also accepted).
Rational read_rational(const json& j, const std::string& path);
json write(const Rational& r);

// Graph document, {"type": label} / {"kodaira": label}, or a report entry
// whose result carries a "graph". `extra_keys` are tolerated and ignored.
dualgraph::SncdGraph read_graph(const json& j,
                                std::initializer_list<const char*> extra_keys = {});
json write(const dualgraph::SncdGraph& graph);
json write(const dualgraph::GraphInvariants& inv,
           const dualgraph::SncdGraph& graph);
json write(const Diagnostics& diags);

singularity::ResolutionDatum read_resolution(const json& j);
cover::TameCoverData read_tame_cover(const json& j);
cover::WildCoverData read_wild_cover(const json& j);
json write(const cover::ConductorReport& rep);

struct RamificationInput {
  ramification::RamFiltration filtration;
  std::optional<ramification::RepFixedDims> rep;
};
RamificationInput read_ramification(const json& j);

// Throws kParseError on malformed text.
json parse_text(const std::string& text);

}  // namespace conductor::io
