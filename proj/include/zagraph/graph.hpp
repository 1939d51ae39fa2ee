#pragma once

#include "zagraph/ideal.hpp"
#include "zagraph/ring.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zag {

enum class GraphKind { za, coann, zerodiv };

std::string_view graph_kind_name(GraphKind k) noexcept;  // "ZA" | "COANN" | "ZERODIV"

// Undirected simple graph with labelled vertices and bit-vector adjacency.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(GraphKind kind, std::string ring_label, std::vector<std::string> vertex_labels);

  GraphKind kind() const noexcept { return kind_; }
  const std::string& ring_label() const noexcept { return ring_label_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Ring element (ZA, ZERODIV) or lattice index (COANN) behind each vertex.
  const std::vector<std::size_t>& sources() const noexcept { return sources_; }
  void set_sources(std::vector<std::size_t> s) { sources_ = std::move(s); }

  bool adjacent(std::size_t u, std::size_t v) const noexcept { return adj_[u].test(v); }
  const BitSet& neighbours(std::size_t v) const noexcept { return adj_[v]; }
  std::size_t degree(std::size_t v) const noexcept { return adj_[v].count(); }

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::size_t edge_count() const noexcept;
  // Edges (i, j) with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  GraphKind kind_ = GraphKind::za;
  std::string ring_label_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> sources_;
  std::vector<BitSet> adj_;
};

// Vertices: nonzero nonunits in index order; x ~ y iff Ann(x) ∩ Ann(y) = {0}.
SimpleGraph za_graph(const FiniteRing& r, Side side = Side::left);

// Vertices: nonzero proper ideals in canonical order; I ~ J iff
// Ann(I) ∩ Ann(J) = {0}.
SimpleGraph coann_ideal_graph(const FiniteRing& r, const IdealLattice& lattice);
SimpleGraph coann_ideal_graph(const FiniteRing& r);

// Vertices: nonzero zero divisors; x ~ y iff xy = 0 or yx = 0.
SimpleGraph zero_divisor_graph(const FiniteRing& r);

}  // namespace zag
