#pragma once

#include "zagraph/graph.hpp"
#include "zagraph/invariants.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace zag {

// "dot" or "json"; anything else is Errc::unknown_format. Output is
// canonical: vertices in index order, edges sorted by (min, max).
std::string export_graph(const SimpleGraph& g, const InvariantReport& report, std::string_view format);

nlohmann::ordered_json graph_json(const SimpleGraph& g, const InvariantReport& report);
std::string graph_dot(const SimpleGraph& g);

// Human-readable multi-line summary used by `analyze` without --export.
std::string invariant_text(const SimpleGraph& g, const InvariantReport& report);

}  // namespace zag
