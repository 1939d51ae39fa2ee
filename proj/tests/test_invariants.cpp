#include "oracles.hpp"
#include "support.hpp"

#include "zagraph/graph.hpp"
#include "zagraph/harness.hpp"
#include "zagraph/invariants.hpp"

#include <random>

using namespace zag;
using zag::test::ring;

namespace {

SimpleGraph blank(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return SimpleGraph(GraphKind::za, "test", labels);
}

SimpleGraph complete(std::size_t n) {
  auto g = blank(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  auto g = blank(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph cycle(std::size_t n) {
  auto g = blank(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("connectivity and diameter") {
  const auto v4 = connectivity(za_graph(ring("Z2 x Z2")));
  CHECK(v4.connected);
  CHECK(v4.diameter == 1);
  const auto v8 = connectivity(za_graph(ring("Z2 x Z2 x Z2")));
  CHECK(v8.connected);
  CHECK(v8.diameter == 3);

  const auto z12 = za_graph(make_zn(12));
  const auto c = connectivity(z12);
  CHECK_FALSE(c.connected);
  CHECK_FALSE(c.diameter);
  CHECK(c.components == 2);
  for (std::size_t v = 0; v < z12.vertex_count(); ++v)
    if (z12.label(v) == "6") CHECK(z12.degree(v) == 0);

  CHECK(connectivity(blank(0)).diameter == 0);
  CHECK(connectivity(blank(1)).diameter == 0);
  CHECK_FALSE(connectivity(blank(2)).diameter);
  for (std::size_t n = 2; n <= 9; ++n) CHECK(connectivity(complete(n)).diameter == 1);
  CHECK(connectivity(cycle(7)).diameter == 3);
}

TEST_CASE("girth") {
  CHECK(girth(za_graph(make_matrix_ring(make_zn(2), 2))) == 3);
  CHECK(girth(za_graph(ring("Z5 x Z5"))) == 4);
  CHECK_FALSE(girth(za_graph(make_zn(6))));
  for (std::size_t m = 2; m <= 5; ++m)
    for (std::size_t n = 2; n <= 5; ++n) CHECK(girth(complete_bipartite(m, n)) == 4);
  for (std::size_t n = 3; n <= 9; ++n) CHECK(girth(cycle(n)) == n);
  CHECK(girth(complete(3)) == 3);
}

TEST_CASE("degrees") {
  const auto f25 = degree_stats(za_graph(ring("Z5 x Z5")));
  CHECK(f25.regular_k == 4);
  const auto z6 = degree_stats(za_graph(make_zn(6)));
  CHECK(z6.degrees == std::vector<std::size_t>{1, 2, 1});
  CHECK(z6.min_degree == 1);
  CHECK_FALSE(z6.regular_k);
  const auto none = degree_stats(blank(0));
  CHECK(none.degrees.empty());
  CHECK_FALSE(none.min_degree);
  CHECK_FALSE(none.regular_k);
}

TEST_CASE("shapes") {
  const auto star = shape_classify(za_graph(ring("Z2 x GF(4)")));
  CHECK(star.star);
  CHECK(star.complete_bipartite);
  CHECK(star.bipartition == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK_FALSE(star.complete);

  const auto k2 = shape_classify(za_graph(ring("Z2 x Z2")));
  CHECK(k2.complete);
  CHECK(k2.star);
  CHECK(k2.complete_bipartite);
  CHECK(k2.bipartition == std::pair<std::size_t, std::size_t>{1, 1});

  const auto z9 = za_graph(make_zn(9));
  CHECK(z9.vertex_count() == 2);
  const auto s9 = shape_classify(z9);
  CHECK(s9.empty_graph);
  CHECK_FALSE(s9.complete);
  CHECK_FALSE(s9.star);

  const auto z6 = za_graph(make_zn(6));
  const auto s6 = shape_classify(z6);
  REQUIRE(s6.star_center);
  CHECK(z6.label(*s6.star_center) == "3");

  const auto one = shape_classify(blank(1));
  CHECK(one.star);
  CHECK(one.complete);
  CHECK(one.empty_graph);
  const auto zero = shape_classify(blank(0));
  CHECK(zero.complete);
  CHECK(zero.empty_graph);
  CHECK_FALSE(zero.star);

  const auto c5 = shape_classify(cycle(5));
  CHECK_FALSE(c5.bipartite);
  const auto c6 = shape_classify(cycle(6));
  CHECK(c6.bipartite);
  CHECK_FALSE(c6.complete_bipartite);
  CHECK(shape_classify(complete_bipartite(2, 3)).bipartition == std::pair<std::size_t, std::size_t>{2, 3});
}

TEST_CASE("cliques and colourings") {
  CHECK(clique_number(za_graph(ring("Z2 x Z2 x Z2"))) == 3);
  CHECK(clique_number(za_graph(ring("Z5 x Z5"))) == 2);
  CHECK(clique_number(blank(0)) == 0);
  CHECK(chromatic_number(za_graph(ring("Z5 x Z5"))) == 2);
  CHECK(chromatic_number(blank(0)) == 0);
  CHECK(chromatic_number(blank(3)) == 1);

  const auto m2 = za_graph(make_matrix_ring(make_zn(2), 2));
  CHECK(clique_number(m2) == 3);
  CHECK(chromatic_number(m2) == 3);
  const auto m3 = za_graph(make_matrix_ring(make_zn(3), 2));
  CHECK(m3.vertex_count() == 32);
  CHECK(m3.edge_count() == 384);
  CHECK(clique_number(m3) == 4);
  CHECK(chromatic_number(m3) == 4);

  // An odd cycle has chi above omega.
  CHECK(clique_number(cycle(7)) == 2);
  CHECK(chromatic_number(cycle(7)) == 3);

  const auto clique = maximum_clique(za_graph(ring("Z2 x Z2 x Z2")));
  CHECK(clique.size() == 3);
}

TEST_CASE("exact search agrees with subset enumeration") {
  std::mt19937 rng(20240611);
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 12; ++n)
    for (double p : {0.2, 0.5, 0.8}) {
      auto g = blank(n);
      std::bernoulli_distribution coin(p);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (coin(rng)) g.add_edge(u, v);
      CAPTURE(n);
      CHECK(clique_number(g) == oracle::clique_by_subsets(g));
      CHECK(chromatic_number(g) == oracle::chromatic_by_subsets(g));
      ++checked;
    }
  const auto catalog = build_catalog(CatalogLimits{64, {Family::zn, Family::gf, Family::products, Family::local, Family::matrix}});
  for (const auto& e : catalog) {
    const auto g = za_graph(e.ring);
    if (g.vertex_count() > 12) continue;
    CAPTURE(e.provenance);
    CHECK(clique_number(g) == oracle::clique_by_subsets(g));
    CHECK(chromatic_number(g) == oracle::chromatic_by_subsets(g));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("report consistency over the catalog") {
  const auto catalog = build_catalog(CatalogLimits{64, {Family::zn, Family::gf, Family::products, Family::local, Family::matrix}});
  for (const auto& e : catalog) {
    CAPTURE(e.provenance);
    const auto g = za_graph(e.ring);
    const auto r = compute_invariants(g);
    CHECK(r.chromatic_number >= r.clique_number);
    CHECK(r.vertex_count == g.vertex_count());
    CHECK(r.edge_count == g.edge_count());
    if (r.girth) CHECK(*r.girth >= 3);
    if (r.shape.complete_bipartite) CHECK(r.shape.bipartite);
    if (r.shape.star) CHECK((r.shape.empty_graph || (r.shape.bipartition && r.shape.bipartition->first == 1)));
    CHECK(maximum_clique(g).size() == r.clique_number);
  }
}

TEST_CASE("budget") {
  // A dense random graph big enough that a zero budget cannot finish.
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.5);
  auto g = blank(400);
  for (std::size_t u = 0; u < 400; ++u)
    for (std::size_t v = u + 1; v < 400; ++v)
      if (coin(rng)) g.add_edge(u, v);
  const InvariantOptions tight{std::chrono::milliseconds(0)};
  CHECK(zag::test::error_code([&] { chromatic_number(g, tight); }) == Errc::budget_exceeded);
  CHECK(zag::test::error_code([&] { clique_number(g, tight); }) == Errc::budget_exceeded);
}

}  // TEST_SUITE
