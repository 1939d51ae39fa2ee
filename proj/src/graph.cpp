#include "zagraph/graph.hpp"

#include "zagraph/error.hpp"

namespace zag {

std::string_view graph_kind_name(GraphKind k) noexcept {
  switch (k) {
    case GraphKind::za: return "ZA";
    case GraphKind::coann: return "COANN";
    case GraphKind::zerodiv: return "ZERODIV";
  }
  return "?";
}

SimpleGraph::SimpleGraph(GraphKind kind, std::string ring_label, std::vector<std::string> vertex_labels)
    : kind_(kind), ring_label_(std::move(ring_label)), labels_(std::move(vertex_labels)) {
  adj_.assign(labels_.size(), BitSet(labels_.size()));
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw Error(Errc::invalid_argument, "self-loops are not allowed in a simple graph");
  adj_[u].set(v);
  adj_[v].set(u);
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
  adj_[u].reset(v);
  adj_[v].reset(u);
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (auto v = adj_[u].next(u + 1); v < adj_.size(); v = adj_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

namespace {

// Joins every pair whose precomputed sets meet only in element 0.
void join_trivially_meeting(SimpleGraph& g, const std::vector<ElementSet>& sets) {
  for (std::size_t u = 0; u < sets.size(); ++u)
    for (std::size_t v = u + 1; v < sets.size(); ++v)
      if (sets[u].intersection_count(sets[v]) == 1) g.add_edge(u, v);
}

}  // namespace

SimpleGraph za_graph(const FiniteRing& r, Side side) {
  const auto vertices = classify_elements(r).nonzero_nonunits.members();
  std::vector<std::string> labels;
  std::vector<ElementSet> anns;
  for (auto x : vertices) {
    labels.push_back(r.element_label(static_cast<Element>(x)));
    anns.push_back(annihilator(r, static_cast<Element>(x), side));
  }
  SimpleGraph g(GraphKind::za, r.label(), std::move(labels));
  g.set_sources(vertices);
  join_trivially_meeting(g, anns);
  return g;
}

namespace {

std::string ideal_label(const FiniteRing& r, const Ideal& i, const std::optional<Element>& generator) {
  if (generator) return "(" + r.element_label(*generator) + ")";
  std::string s = "{";
  bool first = true;
  i.members.for_each([&](std::size_t x) {
    if (!first) s += ',';
    first = false;
    s += r.element_label(static_cast<Element>(x));
  });
  return s + "}";
}

}  // namespace

SimpleGraph coann_ideal_graph(const FiniteRing& r, const IdealLattice& lattice) {
  std::vector<std::size_t> vertices;
  std::vector<std::string> labels;
  std::vector<ElementSet> anns;
  for (std::size_t k = 0; k < lattice.ideals.size(); ++k) {
    const auto& i = lattice.ideals[k];
    if (i.is_zero() || i.contains(r.one())) continue;
    vertices.push_back(k);
    labels.push_back(ideal_label(r, i, lattice.principal_generator[k]));
    anns.push_back(ideal_annihilator(r, i).members);
  }
  SimpleGraph g(GraphKind::coann, r.label(), std::move(labels));
  g.set_sources(std::move(vertices));
  join_trivially_meeting(g, anns);
  return g;
}

SimpleGraph coann_ideal_graph(const FiniteRing& r) { return coann_ideal_graph(r, ideal_lattice(r)); }

SimpleGraph zero_divisor_graph(const FiniteRing& r) {
  auto zd = classify_elements(r).zero_divisors;
  zd.reset(0);
  const auto vertices = zd.members();
  std::vector<std::string> labels;
  for (auto x : vertices) labels.push_back(r.element_label(static_cast<Element>(x)));
  SimpleGraph g(GraphKind::zerodiv, r.label(), std::move(labels));
  for (std::size_t u = 0; u < vertices.size(); ++u)
    for (std::size_t v = u + 1; v < vertices.size(); ++v) {
      const auto x = static_cast<Element>(vertices[u]);
      const auto y = static_cast<Element>(vertices[v]);
      if (r.mul(x, y) == 0 || r.mul(y, x) == 0) g.add_edge(u, v);
    }
  g.set_sources(vertices);
  return g;
}

}  // namespace zag
