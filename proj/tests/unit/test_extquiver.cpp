#include <gtest/gtest.h>

#include "brute.hpp"
#include "fixtures.hpp"
#include "instances.hpp"
#include "pathloc/extquiver.hpp"

using namespace pathloc;
using namespace pathloc::testing;

TEST(ExtQuiver, CountsBasisArrows) {
  auto q = quiver({"u", "v", "w"}, {{"a", "u", "v"}, {"b", "u", "v"}, {"c", "v", "w"}});
  const ExtQuiver g = ext_quiver(*full(q));
  EXPECT_EQ(g.multiplicity(q->vertex("u"), q->vertex("v")), 2u);
  EXPECT_EQ(g.multiplicity(q->vertex("v"), q->vertex("w")), 1u);
  EXPECT_FALSE(g.has_arrow(q->vertex("u"), q->vertex("w")));
  EXPECT_EQ(g.successors(q->vertex("u")), std::vector<VertexId>{q->vertex("v")});
  EXPECT_EQ(g.predecessors(q->vertex("w")), std::vector<VertexId>{q->vertex("v")});

  // Dropping b from the basis removes one Gamma arrow.
  const ExtQuiver h = ext_quiver(*spanned(q, {"a*c"}));
  EXPECT_EQ(h.multiplicity(q->vertex("u"), q->vertex("v")), 1u);
}

TEST(ExtQuiver, PredecessorsOfAFiniteBasisStopAtItsLongestPath) {
  auto q = quiver({"y", "z", "x"}, {{"alpha", "y", "z"}, {"beta", "z", "x"}});
  const VertexId x = q->vertex("x");
  const VertexId y = q->vertex("y");
  const auto finite = spanned(q, {"alpha", "beta"});
  EXPECT_FALSE(is_predecessor(*finite, y, x));
  EXPECT_EQ(is_predecessor(*finite, q->vertex("z"), x), 1u);
  EXPECT_EQ(is_predecessor(*full(q), y, x), 2u);
  const PredecessorReport r = n_predecessors(*full(q), x, 2);
  EXPECT_EQ(r.entries, (std::map<VertexId, std::size_t>{{y, 1}}));
}

TEST(ExtQuiver, PredecessorCountsAreBasisPathCounts) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const auto q = build(random_shape(rng, 2 + i % 4, 0.4, 2, false));
    const auto c = share(PathCoalgebra::finite(q, random_truncation(*q, rng)));
    const std::size_t len = c->max_length().value_or(0);
    for (std::size_t n = 1; n <= 3; ++n) {
      const Matrix counts = length_n_paths(*c, n, len);
      for (VertexId x : q->vertices()) {
        const auto r = n_predecessors(*c, x, n);
        for (VertexId y : q->vertices()) {
          const auto it = r.entries.find(y);
          EXPECT_EQ(it == r.entries.end() ? 0 : it->second, counts[index(y)][index(x)]);
        }
      }
    }
  }
}

TEST(ExtQuiver, GammaPathsAndComponents) {
  ExtQuiver g(5);
  g.add(vertex_at(0), vertex_at(1));
  g.add(vertex_at(1), vertex_at(2));
  g.add(vertex_at(3), vertex_at(3));
  EXPECT_TRUE(gamma_path_exists(g, vertex_at(0), vertex_at(2), 2, [](VertexId) { return true; }));
  EXPECT_FALSE(gamma_path_exists(g, vertex_at(0), vertex_at(2), 2, [](VertexId v) { return v != vertex_at(1); }));
  EXPECT_FALSE(gamma_path_exists(g, vertex_at(0), vertex_at(2), 1, [](VertexId) { return true; }));
  EXPECT_TRUE(gamma_path_exists(g, vertex_at(3), vertex_at(3), 4, [](VertexId) { return true; }));
  EXPECT_TRUE(gamma_reachable(g, vertex_at(0), vertex_at(2)));
  EXPECT_FALSE(gamma_reachable(g, vertex_at(2), vertex_at(0)));
  const auto comp = weak_components(g);
  EXPECT_EQ(comp[0], comp[2]);
  EXPECT_NE(comp[0], comp[3]);
  EXPECT_NE(comp[3], comp[4]);
}
