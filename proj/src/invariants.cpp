#include "zagraph/invariants.hpp"

#include "zagraph/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace zag {

namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnseen);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    g.neighbours(u).for_each([&](std::size_t v) {
      if (dist[v] == kUnseen) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget) : end_(std::chrono::steady_clock::now() + budget) {}

  void tick(const char* what) {
    // Checked on the first node and every 1024th after it.
    if (ticks_++ % 1024 == 0 && std::chrono::steady_clock::now() >= end_)
      throw Error(Errc::budget_exceeded, std::string(what) + " search exceeded its time budget");
  }

 private:
  std::chrono::steady_clock::time_point end_;
  std::size_t ticks_ = 0;
};

}  // namespace

Connectivity connectivity(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  Connectivity c;
  std::vector<bool> seen(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    ++c.components;
    const auto d = bfs_distances(g, v);
    for (std::size_t u = 0; u < n; ++u)
      if (d[u] != kUnseen) seen[u] = true;
  }
  c.connected = c.components <= 1;
  if (!c.connected) return c;
  std::size_t diam = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (auto d : bfs_distances(g, v)) diam = std::max(diam, d);
  c.diameter = diam;
  return c;
}

std::optional<std::size_t> girth(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = kUnseen;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      // Cycles through root found deeper than this cannot beat `best`.
      if (2 * dist[u] >= best) break;
      g.neighbours(u).for_each([&](std::size_t v) {
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      });
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

DegreeStats degree_stats(const SimpleGraph& g) {
  DegreeStats s;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) s.degrees.push_back(g.degree(v));
  if (s.degrees.empty()) return s;
  const auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
  s.min_degree = *lo;
  if (*lo == *hi) s.regular_k = *lo;
  return s;
}

Shape shape_classify(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  const auto m = g.edge_count();
  Shape s;
  s.empty_graph = m == 0;
  s.complete = 2 * m == n * (n > 0 ? n - 1 : 0);
  if (n == 1) {
    s.star = true;
    s.star_center = 0;
  } else if (n > 1 && m == n - 1) {
    for (std::size_t v = 0; v < n; ++v)
      if (g.degree(v) == n - 1) {
        s.star = true;
        s.star_center = v;
        break;
      }
  }

  std::vector<int> side(n, -1);
  s.bipartite = true;
  for (std::size_t root = 0; root < n && s.bipartite; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty() && s.bipartite) {
      const auto u = queue.front();
      queue.pop_front();
      g.neighbours(u).for_each([&](std::size_t v) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          s.bipartite = false;
        }
      });
    }
  }
  if (s.bipartite && n >= 2 && connectivity(g).connected) {
    const auto a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
    const auto b = n - a;
    s.bipartition = std::pair{std::min(a, b), std::max(a, b)};
    s.complete_bipartite = m == a * b;
  }
  return s;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const SimpleGraph& g, const InvariantOptions& opts) : g_(g), deadline_(opts.budget) {}

  std::vector<std::size_t> run() {
    const auto n = g_.vertex_count();
    if (n == 0) return {};
    best_ = {0};
    std::vector<std::size_t> current;
    expand(BitSet::full(n), current);
    return best_;
  }

 private:
  // Greedy sequential colouring of the candidates; colour[i] bounds the
  // clique size reachable from order[0..i].
  void colour_sort(const BitSet& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    BitSet uncoloured = cand;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      BitSet available = uncoloured;
      for (auto v = available.first(); v < available.size(); v = available.next(v + 1)) {
        available -= g_.neighbours(v);
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(BitSet cand, std::vector<std::size_t>& current) {
    deadline_.tick("clique");
    std::vector<std::size_t> order, bound;
    colour_sort(cand, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const auto v = order[i];
      current.push_back(v);
      const BitSet next = cand & g_.neighbours(v);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      cand.reset(v);
    }
  }

  const SimpleGraph& g_;
  Deadline deadline_;
  std::vector<std::size_t> best_;
};

class Colouring {
 public:
  Colouring(const SimpleGraph& g, const InvariantOptions& opts) : g_(g), deadline_(opts.budget) {}

  // DSATUR greedy colour count (an upper bound).
  std::size_t greedy() {
    colour_.assign(g_.vertex_count(), kNone);
    std::size_t used = 0;
    for (std::size_t step = 0; step < g_.vertex_count(); ++step) {
      const auto v = pick();
      const auto forbidden = forbidden_colours(v);
      std::size_t c = 0;
      while (c < forbidden.size() && forbidden[c]) ++c;
      colour_[v] = c;
      used = std::max(used, c + 1);
    }
    return used;
  }

  bool colourable(std::size_t k) {
    colour_.assign(g_.vertex_count(), kNone);
    return extend(k, 0, 0);
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<bool> forbidden_colours(std::size_t v) const {
    std::vector<bool> f(g_.vertex_count() + 1, false);
    g_.neighbours(v).for_each([&](std::size_t u) {
      if (colour_[u] != kNone) f[colour_[u]] = true;
    });
    return f;
  }

  // Uncoloured vertex with the most distinct neighbour colours; ties go to
  // higher degree, then lower index.
  std::size_t pick() const {
    std::size_t best = kNone, best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (colour_[v] != kNone) continue;
      const auto f = forbidden_colours(v);
      const auto sat = static_cast<std::size_t>(std::count(f.begin(), f.end(), true));
      const auto deg = g_.degree(v);
      if (best == kNone || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool extend(std::size_t k, std::size_t coloured, std::size_t used) {
    if (coloured == g_.vertex_count()) return true;
    deadline_.tick("colouring");
    const auto v = pick();
    const auto forbidden = forbidden_colours(v);
    // Colours above `used` are interchangeable, so only one fresh colour is tried.
    const auto limit = std::min(k, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbidden[c]) continue;
      colour_[v] = c;
      if (extend(k, coloured + 1, std::max(used, c + 1))) return true;
    }
    colour_[v] = kNone;
    return false;
  }

  const SimpleGraph& g_;
  Deadline deadline_;
  std::vector<std::size_t> colour_;
};

}  // namespace

std::vector<std::size_t> maximum_clique(const SimpleGraph& g, const InvariantOptions& opts) {
  auto c = CliqueSearch(g, opts).run();
  std::sort(c.begin(), c.end());
  return c;
}

std::size_t clique_number(const SimpleGraph& g, const InvariantOptions& opts) {
  return maximum_clique(g, opts).size();
}

std::size_t chromatic_number(const SimpleGraph& g, const InvariantOptions& opts) {
  if (g.vertex_count() == 0) return 0;
  Colouring col(g, opts);
  const auto upper = col.greedy();
  for (auto k = clique_number(g, opts); k < upper; ++k)
    if (col.colourable(k)) return k;
  return upper;
}

InvariantReport compute_invariants(const SimpleGraph& g, const InvariantOptions& opts) {
  InvariantReport r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.connectivity = connectivity(g);
  r.girth = girth(g);
  r.degrees = degree_stats(g);
  r.shape = shape_classify(g);
  r.clique_number = clique_number(g, opts);
  r.chromatic_number = chromatic_number(g, opts);
  return r;
}

}  // namespace zag
