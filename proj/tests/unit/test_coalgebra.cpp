#include <gtest/gtest.h>

#include "brute.hpp"
#include "fixtures.hpp"
#include "instances.hpp"
#include "pathloc/errors.hpp"

using namespace pathloc;
using namespace pathloc::testing;

TEST(Coalgebra, FullOverAChainIsFinite) {
  auto q = quiver({"x", "y", "z"}, {{"a", "x", "y"}, {"b", "y", "z"}});
  const auto c = full(q);
  EXPECT_TRUE(c->is_full());
  EXPECT_TRUE(c->is_finite_dimensional());
  EXPECT_EQ(c->dimension(), 6u);
  EXPECT_EQ(c->max_length(), 2u);
  EXPECT_EQ(formatted(*q, c->paths_into(q->vertex("z"))), (std::vector<std::string>{"z", "b", "a*b"}));
  EXPECT_EQ(formatted(*q, c->paths_from(q->vertex("x"))), (std::vector<std::string>{"x", "a", "a*b"}));
  EXPECT_TRUE(is_hereditary(*c));
}

TEST(Coalgebra, FullOverACycleNeedsACap) {
  auto q = quiver({"x", "y"}, {{"a", "x", "y"}, {"l", "y", "y"}});
  const auto c = full(q);
  EXPECT_FALSE(c->is_finite_dimensional());
  EXPECT_FALSE(c->max_length());
  EXPECT_THROW(c->dimension(), CapacityError);
  EXPECT_THROW(c->paths_into(q->vertex("y")), CapacityError);
  EXPECT_EQ(c->paths_into(q->vertex("x")).size(), 1u);
  EXPECT_EQ(c->paths_into(q->vertex("y"), 3).size(), 7u);
  ASSERT_TRUE(c->infinite_into_witness(q->vertex("y")));
  EXPECT_EQ(q->format(*c->infinite_into_witness(q->vertex("y"))), "l");
  EXPECT_TRUE(c->infinite_from_witness(q->vertex("x")));
  EXPECT_FALSE(c->infinite_into_witness(q->vertex("x")));
}

TEST(Coalgebra, ValidationNamesMissingSubpaths) {
  auto q = quiver({"x", "y", "z"}, {{"a", "x", "y"}, {"b", "y", "z"}});
  const PathCoalgebra bad = PathCoalgebra::finite(q, {q->parse_path("x"), q->parse_path("a*b")});
  const ValidationReport r = validate(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(formatted(*q, r.missing), (std::vector<std::string>{"y", "z", "a", "b"}));
  const auto good = spanned(q, {"a*b"});
  EXPECT_TRUE(validate(*good).ok());
  EXPECT_EQ(good->dimension(), 6u);
  EXPECT_FALSE(is_hereditary(*good));
}

TEST(Coalgebra, ClosureIsSubpathClosed) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto q = build(random_shape(rng, 1 + i % 4, 0.5, 2, false));
    const auto basis = random_truncation(*q, rng);
    const PathCoalgebra c = PathCoalgebra::finite(q, basis);
    EXPECT_TRUE(validate(c).ok());
    EXPECT_EQ(close_under_subpaths(*q, basis), basis);
    for (const Path& p : basis) {
      for (std::size_t i = 0; i <= p.length(); ++i) {
        for (std::size_t j = i; j <= p.length(); ++j) EXPECT_TRUE(c.contains(p.subpath(i, j)));
      }
    }
  }
}

TEST(Coalgebra, InjectiveBasisIsGradedByLength) {
  auto q = quiver({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}});
  const auto slices = injective_basis(*full(q), q->vertex("y"));
  ASSERT_EQ(slices.size(), 2u);
  EXPECT_EQ(slices[0].paths.size(), 1u);
  EXPECT_EQ(slices[1].paths.size(), 2u);
  EXPECT_EQ(slices[1].degree, 1u);
}

TEST(Coalgebra, OppositeReversesEveryPath) {
  auto q = quiver({"x", "y", "z"}, {{"a", "x", "y"}, {"b", "y", "z"}});
  const auto c = spanned(q, {"a*b"});
  const PathCoalgebra op = opposite(*c);
  EXPECT_EQ(op.dimension(), c->dimension());
  EXPECT_TRUE(op.contains(op.quiver().parse_path("b*a")));
  EXPECT_EQ(opposite(op), *c);
  EXPECT_TRUE(opposite(*full(q)).is_full());
}

TEST(Coalgebra, IntersectionOfSubcoalgebras) {
  auto q = quiver({"x", "y", "z"}, {{"a", "x", "y"}, {"b", "y", "z"}});
  const PathCoalgebra i = intersection(*spanned(q, {"a*b"}), *spanned(q, {"a"}));
  EXPECT_EQ(i.dimension(), 4u);
  EXPECT_TRUE(validate(i).ok());
}

TEST(Coalgebra, BasisArrowsMatchTheBruteMatrix) {
  auto q = quiver({"u", "v", "w"}, {{"a", "u", "v"}, {"b", "u", "v"}, {"c", "v", "w"}});
  const auto c = spanned(q, {"a*c"});
  const Matrix m = arrow_matrix(*c);
  EXPECT_EQ(m[0][1], 1u);
  EXPECT_EQ(m[1][2], 1u);
  EXPECT_EQ(c->basis_arrows().size(), 2u);
}
