#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pathloc/comodule.hpp"
#include "pathloc/errors.hpp"

using namespace pathloc;
using namespace pathloc::testing;

namespace {

VertexMultiset ms(const Quiver& q, std::initializer_list<std::pair<const char*, std::size_t>> items) {
  VertexMultiset m;
  for (const auto& [v, k] : items) m[q.vertex(v)] = k;
  return m;
}

}  // namespace

TEST(Comodule, SocleSeriesOfAnInjectiveFollowsPathLength) {
  auto q = quiver({"x", "y", "z"}, {{"a", "x", "z"}, {"b", "y", "z"}, {"c", "x", "y"}});
  const auto c = full(q);
  const PathComodule e = injective(c, q->vertex("z"));
  EXPECT_EQ(e.dimension(), 4u);  // z, a, b, c*b
  const LoewySeries s = socle_series(e);
  ASSERT_EQ(s.loewy_length(), 3u);
  EXPECT_EQ(s.layer(1), ms(*q, {{"z", 1}}));
  EXPECT_EQ(s.layer(2), ms(*q, {{"x", 1}, {"y", 1}}));
  EXPECT_EQ(s.layer(3), ms(*q, {{"x", 1}}));
  EXPECT_TRUE(s.layer(4).empty());
  EXPECT_EQ(s.dimension(), e.dimension());
}

TEST(Comodule, QuotientBySocleShiftsTheSeries) {
  auto q = quiver({"1", "2", "3", "4"}, {{"a", "4", "3"}, {"b", "3", "2"}, {"c", "2", "1"}});
  const PathComodule e = injective(full(q), q->vertex("1"));
  const LoewySeries s = socle_series(e);
  for (std::size_t n = 0; n <= 4; ++n) {
    const LoewySeries t = socle_series(quotient_by_socle(e, n));
    const LoewySeries p = socle_series(socle_part(e, n));
    for (std::size_t k = 1; k <= 4; ++k) {
      EXPECT_EQ(t.layer(k), s.layer(k + n));
      EXPECT_EQ(p.layer(k), k <= n ? s.layer(k) : VertexMultiset{});
    }
  }
  EXPECT_TRUE(quotient_by_socle(e, 4).is_zero());
}

TEST(Comodule, TruncatedInjectiveIsASocleTerm) {
  auto q = quiver({"x"}, {{"l", "x", "x"}});
  const auto c = full(q);
  EXPECT_THROW(injective(c, q->vertex("x")), CapacityError);
  const PathComodule e = injective(c, q->vertex("x"), 3);
  EXPECT_EQ(e.dimension(), 4u);
  EXPECT_EQ(socle_series(e).loewy_length(), 4u);
}

TEST(Comodule, ConstructorEnforcesTheInvariants) {
  auto q = quiver({"x", "y", "z"}, {{"a", "x", "y"}, {"b", "y", "z"}});
  const auto c = spanned(q, {"a", "b"});
  const VertexId z = q->vertex("z");
  const Path b = q->parse_path("b");
  const Path zz = q->parse_path("z");
  EXPECT_NO_THROW(PathComodule(c, {Component{z, {zz, b}, {zz}}}));
  EXPECT_THROW(PathComodule(c, {Component{z, {b}, {}}}), DomainError);              // not terminal-closed
  EXPECT_THROW(PathComodule(c, {Component{z, {zz}, {b}}}), DomainError);            // killed not present
  EXPECT_THROW(PathComodule(c, {Component{z, {zz, b, q->parse_path("a*b")}, {}}}), DomainError);  // not in C
  EXPECT_THROW(PathComodule(c, {Component{q->vertex("y"), {zz}, {}}}), DomainError);  // wrong anchor
  EXPECT_THROW(PathComodule(c, {Component{z, {zz, b}, {b}}}), DomainError);        // killed not closed
}

TEST(Comodule, DirectSumAddsSeries) {
  auto q = quiver({"x", "y"}, {{"a", "x", "y"}});
  const auto c = full(q);
  const std::vector<PathComodule> parts{injective(c, q->vertex("y")), simple(c, q->vertex("x")),
                                        injective(c, q->vertex("y"))};
  const PathComodule sum = direct_sum(parts);
  EXPECT_EQ(sum.dimension(), 5u);
  EXPECT_EQ(socle_series(sum).layer(1), ms(*q, {{"x", 1}, {"y", 2}}));
  EXPECT_EQ(hom_dim_simple_into(sum, q->vertex("y")), 2u);
  EXPECT_EQ(hom_dim_simple_into(sum, q->vertex("x")), 1u);
  const auto other = full(quiver({"x"}, {}));
  const std::vector<PathComodule> mixed{simple(c, q->vertex("x")), simple(other, vertex_at(0))};
  EXPECT_THROW(direct_sum(mixed), DomainError);
}

TEST(Comodule, EqualityComparesSurvivingClasses) {
  auto q = quiver({"x", "y"}, {{"a", "x", "y"}});
  const auto c = full(q);
  const PathComodule e = injective(c, q->vertex("y"));
  EXPECT_EQ(quotient_by_socle(e, 1), PathComodule(c, {Component{q->vertex("y"), {q->parse_path("y"), q->parse_path("a")},
                                                                    {q->parse_path("y")}}}));
  EXPECT_NE(e, quotient_by_socle(e, 1));
}

TEST(Comodule, Multisets) {
  const VertexMultiset a{{vertex_at(0), 1}};
  const VertexMultiset b{{vertex_at(0), 2}, {vertex_at(1), 1}};
  EXPECT_TRUE(multiset_included(a, b));
  EXPECT_FALSE(multiset_included(b, a));
  EXPECT_EQ(multiset_union(a, b), (VertexMultiset{{vertex_at(0), 3}, {vertex_at(1), 1}}));
}
