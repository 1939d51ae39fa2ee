#include "zagraph/export.hpp"

#include "zagraph/error.hpp"

#include <sstream>

namespace zag {

using json = nlohmann::ordered_json;

namespace {

json extent(const std::optional<std::size_t>& v) { return v ? json(*v) : json("inf"); }

json optional_number(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string extent_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

}  // namespace

json graph_json(const SimpleGraph& g, const InvariantReport& r) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  const auto& s = r.shape;
  json inv{{"vertex_count", r.vertex_count},
           {"edge_count", r.edge_count},
           {"connected", r.connectivity.connected},
           {"diameter", extent(r.connectivity.diameter)},
           {"girth", extent(r.girth)},
           {"min_degree", optional_number(r.degrees.min_degree)},
           {"regular_k", optional_number(r.degrees.regular_k)},
           {"empty", s.empty_graph},
           {"complete", s.complete},
           {"star", s.star},
           {"bipartite", s.bipartite},
           {"complete_bipartite", s.complete_bipartite},
           {"bipartition", s.bipartition ? json::array({s.bipartition->first, s.bipartition->second}) : json(nullptr)},
           {"clique_number", r.clique_number},
           {"chromatic_number", r.chromatic_number}};
  return json{{"ring", g.ring_label()},
              {"graph_kind", graph_kind_name(g.kind())},
              {"vertices", g.labels()},
              {"edges", std::move(edges)},
              {"invariants", std::move(inv)}};
}

std::string graph_dot(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph " << quoted(std::string(graph_kind_name(g.kind())) + "(" + g.ring_label() + ")") << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  " << quoted(g.label(v)) << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << quoted(g.label(u)) << " -- " << quoted(g.label(v)) << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_graph(const SimpleGraph& g, const InvariantReport& report, std::string_view format) {
  if (format == "dot") return graph_dot(g);
  if (format == "json") return graph_json(g, report).dump(2) + "\n";
  throw Error(Errc::unknown_format, "unknown export format '" + std::string(format) + "' (expected dot or json)");
}

std::string invariant_text(const SimpleGraph& g, const InvariantReport& r) {
  std::ostringstream os;
  os << "ring: " << g.ring_label() << '\n';
  os << "graph: " << graph_kind_name(g.kind()) << ", " << r.vertex_count << " vertices, " << r.edge_count << " edges\n";
  os << "vertices:";
  for (const auto& l : g.labels()) os << ' ' << l;
  os << "\nedges:";
  for (auto [u, v] : g.edges()) os << ' ' << g.label(u) << '~' << g.label(v);
  const auto& c = r.connectivity;
  os << "\nconnected: " << (c.connected ? "yes" : "no") << " (components " << c.components << ", diameter "
     << extent_text(c.diameter) << ")\n";
  os << "girth: " << extent_text(r.girth) << '\n';
  os << "degrees:";
  for (auto d : r.degrees.degrees) os << ' ' << d;
  os << " (min " << (r.degrees.min_degree ? std::to_string(*r.degrees.min_degree) : "none") << ", regular "
     << (r.degrees.regular_k ? std::to_string(*r.degrees.regular_k) : "no") << ")\n";
  const auto& s = r.shape;
  os << "empty: " << (s.empty_graph ? "yes" : "no") << "  complete: " << (s.complete ? "yes" : "no") << '\n';
  os << "star: " << (s.star ? "yes" : "no");
  if (s.star_center) os << " (center " << g.label(*s.star_center) << ")";
  os << "\nbipartite: " << (s.bipartite ? "yes" : "no");
  if (s.bipartition) os << " (parts " << s.bipartition->first << ',' << s.bipartition->second << ")";
  os << "  complete bipartite: " << (s.complete_bipartite ? "yes" : "no") << '\n';
  os << "clique number: " << r.clique_number << '\n';
  os << "chromatic number: " << r.chromatic_number << '\n';
  return os.str();
}

}  // namespace zag
