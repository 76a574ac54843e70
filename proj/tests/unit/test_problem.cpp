#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "pathloc/errors.hpp"

using namespace pathloc;
using namespace pathloc::testing;

namespace {

template <typename E>
E error_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const E& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  throw std::logic_error("unreachable");
}

const char* kHeader = "quiver\nvertex x\nvertex y\narrow a : x -> y\n";

}  // namespace

TEST(Problem, EveryDataFileRoundTrips) {
  for (const auto& entry : std::filesystem::directory_iterator(PATHLOC_TEST_DATA)) {
    const Problem p = parse_problem(read_data(entry.path().filename().string()));
    const std::string printed = print_problem(p);
    const Problem back = parse_problem(printed);
    EXPECT_TRUE(equivalent(p, back)) << entry.path();
    EXPECT_TRUE(back.notices.empty()) << entry.path();
    EXPECT_EQ(print_problem(back), printed) << entry.path();
  }
}

TEST(Problem, PathsModeClosesAndSaysSo) {
  const Problem p = load("kronecker_paths.quiver");
  ASSERT_EQ(p.notices.size(), 1u);
  EXPECT_NE(p.notices[0].find("closed the path list under subpaths"), std::string::npos);
  EXPECT_EQ(p.coalgebra->dimension(), 7u);  // u v w a b c a*c
  EXPECT_EQ(p.torsion_free().size(), 2u);
}

TEST(Problem, LocalizeDefaultsToEveryVertex) {
  const Problem p = parse_problem(std::string(kHeader) + "coalgebra full\n");
  EXPECT_TRUE(p.localize.empty());
  EXPECT_EQ(p.torsion_free().size(), 2u);
  EXPECT_EQ(p.cap, 16u);
}

TEST(Problem, CommentsAndCommaSeparatedBases) {
  const Problem p = parse_problem(std::string(kHeader) + "# note\ncoalgebra basis x, y, a  # trailing\ncap 4\n");
  EXPECT_EQ(p.coalgebra->dimension(), 3u);
  EXPECT_EQ(p.cap, 4u);
}

TEST(Problem, SyntaxErrorsCarryPositions) {
  const auto empty = error_of<SyntaxError>("");
  EXPECT_EQ(empty.line(), 1u);
  EXPECT_EQ(empty.column(), 1u);
  EXPECT_EQ(empty.expected(), "'quiver'");

  const auto no_coalgebra = error_of<SyntaxError>(kHeader);
  const auto unterminated = error_of<SyntaxError>("quiver\nvertex x");
  EXPECT_EQ(unterminated.line(), 2u);
  EXPECT_EQ(unterminated.column(), 9u);
  EXPECT_EQ(no_coalgebra.line(), 5u);
  EXPECT_EQ(no_coalgebra.column(), 1u);

  const auto arrow = error_of<SyntaxError>("quiver\nvertex x\narrow a x -> x\n");
  EXPECT_EQ(arrow.line(), 3u);
  EXPECT_EQ(arrow.column(), 9u);

  const auto mode = error_of<SyntaxError>(std::string(kHeader) + "coalgebra some\n");
  EXPECT_EQ(mode.line(), 5u);
  EXPECT_EQ(mode.column(), 11u);
}

TEST(Problem, ColumnsCountCodePoints) {
  const auto e = error_of<SemanticError>("quiver\nvertex \xce\xb1\narrow \xce\xb2 : \xce\xb1 -> \xce\xb3\n");
  EXPECT_EQ(e.token(), "\xce\xb3");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 16u);
}

TEST(Problem, SemanticErrorsNameTheToken) {
  EXPECT_EQ(error_of<SemanticError>("quiver\nvertex x\nvertex x\n").token(), "x");
  EXPECT_EQ(error_of<SemanticError>("quiver\nvertex x\narrow x : x -> x\n").token(), "x");
  EXPECT_EQ(error_of<SemanticError>(std::string(kHeader) + "coalgebra full\nlocalize z\n").token(), "z");
  EXPECT_EQ(error_of<SemanticError>(std::string(kHeader) + "coalgebra paths x*a\n").token(), "x");
  EXPECT_EQ(error_of<SemanticError>(std::string(kHeader) + "coalgebra full\ncoalgebra full\n").token(), "coalgebra");
  EXPECT_EQ(error_of<SemanticError>(std::string(kHeader) + "coalgebra full\ncap 0\n").token(), "0");
}

TEST(Problem, StrictBasisNamesTheMissingSubpath) {
  const auto e = error_of<SemanticError>(std::string(kHeader) + "coalgebra basis x a\n");
  EXPECT_EQ(e.token(), "y");
  EXPECT_EQ(e.line(), 5u);
  EXPECT_EQ(e.column(), 19u);
  EXPECT_NE(std::string(e.what()).find("basis is missing the subpath"), std::string::npos);
}

TEST(Problem, PrintedBasisIsClosedAndSorted) {
  const Problem p = parse_problem(std::string(kHeader) + "coalgebra paths a\nlocalize y\ncap 20\n");
  const std::string out = print_problem(p);
  EXPECT_NE(out.find("coalgebra basis x y a"), std::string::npos) << out;
  EXPECT_NE(out.find("localize y"), std::string::npos);
  EXPECT_NE(out.find("cap 20"), std::string::npos);
}
