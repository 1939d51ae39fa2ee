#pragma once

#include "zagraph/graph.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace zag {

struct InvariantOptions {
  // Wall-clock budget for each exact clique / colouring search. Running out
  // is an error (Errc::budget_exceeded), never an approximate answer.
  std::chrono::milliseconds budget{10000};
};

struct Connectivity {
  std::size_t components = 0;
  bool connected = true;
  // nullopt when disconnected (infinite); 0 for graphs with at most one vertex.
  std::optional<std::size_t> diameter;
};

Connectivity connectivity(const SimpleGraph& g);

// Shortest cycle length, nullopt if acyclic.
std::optional<std::size_t> girth(const SimpleGraph& g);

struct DegreeStats {
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> min_degree;
  std::optional<std::size_t> regular_k;
};

DegreeStats degree_stats(const SimpleGraph& g);

struct Shape {
  bool empty_graph = false;  // no edges
  bool complete = false;
  bool star = false;
  bool bipartite = false;
  bool complete_bipartite = false;
  // Part sizes (smaller first) of a connected bipartite graph on >= 2 vertices.
  std::optional<std::pair<std::size_t, std::size_t>> bipartition;
  std::optional<std::size_t> star_center;
};

Shape shape_classify(const SimpleGraph& g);

// Vertices of a maximum clique, lexicographically first among those the
// search visits; exact branch-and-bound with colouring bounds.
std::vector<std::size_t> maximum_clique(const SimpleGraph& g, const InvariantOptions& opts = {});
std::size_t clique_number(const SimpleGraph& g, const InvariantOptions& opts = {});

// Exact chromatic number: k-colourability tested by DSATUR backtracking for
// k from the clique number up to the greedy bound.
std::size_t chromatic_number(const SimpleGraph& g, const InvariantOptions& opts = {});

struct InvariantReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  Connectivity connectivity;
  std::optional<std::size_t> girth;
  DegreeStats degrees;
  Shape shape;
  std::size_t clique_number = 0;
  std::size_t chromatic_number = 0;
};

InvariantReport compute_invariants(const SimpleGraph& g, const InvariantOptions& opts = {});

}  // namespace zag
