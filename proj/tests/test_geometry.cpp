#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "gqm/field.hpp"
#include "gqm/geometry.hpp"

using gqm::Field;
using gqm::IncidenceLine;
using gqm::Pg32;
using gqm::Vec;

namespace {

Pg32 build() { return gqm::build_pg32(Field::make(2)); }

int index_of(const Pg32& g, const std::string& label) {
  for (std::size_t i = 0; i < g.points.size(); ++i)
    if (g.points[i].label == label) return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

IncidenceLine line_of(const Pg32& g, const std::string& a, const std::string& b,
                      const std::string& c) {
  std::array<int, 3> pts{index_of(g, a), index_of(g, b), index_of(g, c)};
  std::sort(pts.begin(), pts.end());
  return IncidenceLine{pts};
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("incidence counts of the 15-point space") {
  const Pg32 g = build();
  CHECK(g.points.size() == 15);
  CHECK(g.lines.size() == 35);
  CHECK(g.planes.size() == 15);
  for (int p = 0; p < 15; ++p) CHECK(g.lines_through_point(p) == 7);
  for (const auto& pl : g.planes) CHECK(pl.pts.size() == 7);
  for (const auto& l : g.lines) CHECK(g.planes_containing_line(l) == 3);
}

TEST_CASE("lines agree with an independent closure construction") {
  // A line is the sum-closure of two distinct points; a plane is the closure
  // of a line and an off-line point. Build both from scratch and compare.
  const Pg32 g = build();
  const Field f = Field::make(2);

  std::set<IncidenceLine> closure_lines;
  for (int i = 0; i < 15; ++i)
    for (int j = i + 1; j < 15; ++j) {
      Vec sum(4);
      for (int k = 0; k < 4; ++k) sum[k] = f.add(g.points[i].rep[k], g.points[j].rep[k]);
      const Vec canon = gqm::canonicalize(f, sum);
      int third = -1;
      for (int t = 0; t < 15; ++t)
        if (g.points[t].rep == canon) third = t;
      REQUIRE(third >= 0);
      std::array<int, 3> pts{i, j, third};
      std::sort(pts.begin(), pts.end());
      closure_lines.insert(IncidenceLine{pts});
    }
  CHECK(closure_lines.size() == 35);
  for (const auto& l : closure_lines) CHECK(g.contains_line(l));

  std::set<std::vector<int>> closure_planes;
  for (const auto& l : closure_lines)
    for (int p = 0; p < 15; ++p) {
      if (std::find(l.pts.begin(), l.pts.end(), p) != l.pts.end()) continue;
      // span of 3 independent points: all 7 nonzero GF(2) combinations
      std::set<int> span(l.pts.begin(), l.pts.end());
      span.insert(p);
      for (const int a : std::vector<int>(l.pts.begin(), l.pts.end())) {
        Vec sum(4);
        for (int k = 0; k < 4; ++k) sum[k] = f.add(g.points[a].rep[k], g.points[p].rep[k]);
        for (int t = 0; t < 15; ++t)
          if (g.points[t].rep == gqm::canonicalize(f, sum)) span.insert(t);
      }
      {
        // the seventh point: line-sum plus p is itself on the plane; add the
        // remaining pairwise sum to close the set
        std::vector<int> members(span.begin(), span.end());
        for (std::size_t x = 0; x < members.size(); ++x)
          for (std::size_t y = x + 1; y < members.size(); ++y) {
            Vec sum(4);
            for (int k = 0; k < 4; ++k)
              sum[k] = f.add(g.points[members[x]].rep[k], g.points[members[y]].rep[k]);
            for (int t = 0; t < 15; ++t)
              if (g.points[t].rep == gqm::canonicalize(f, sum)) span.insert(t);
          }
      }
      CHECK(span.size() == 7);
      closure_planes.insert(std::vector<int>(span.begin(), span.end()));
    }
  CHECK(closure_planes.size() == 15);
  for (const auto& pl : g.planes) {
    std::vector<int> sorted = pl.pts;
    std::sort(sorted.begin(), sorted.end());
    CHECK(closure_planes.count(sorted) == 1);
  }
}

TEST_CASE("membership spot checks") {
  const Pg32 g = build();
  CHECK(g.contains_line(line_of(g, "ab", "ba", "S")));
  CHECK(g.contains_line(line_of(g, "aa", "bb", "(ab)")));
  CHECK(g.contains_line(line_of(g, "aa", "ab", "ac")));  // a grid row
  CHECK_FALSE(g.contains_line(line_of(g, "aa", "bb", "S")));
  CHECK_FALSE(g.contains_line(line_of(g, "aa", "ab", "ba")));
}

TEST_CASE("the product states form a 6-line grid spanning no plane") {
  const Pg32 g = build();
  const auto grid = gqm::product_grid_check(g);
  CHECK(grid.product_lines.size() == 6);
  CHECK(grid.rows_and_cols);
  CHECK(grid.max_product_lines_in_plane <= 2);
  CHECK(grid.max_product_lines_in_plane >= 1);
}

TEST_CASE("every entangled state is a one-per-row, one-per-column sum of products") {
  const Pg32 g = build();
  const auto grid = gqm::product_grid_check(g);
  REQUIRE(grid.decompositions.size() == 6);
  for (const auto& d : grid.decompositions) {
    CAPTURE(d.state);
    CHECK(d.sums_to_state);
    CHECK(d.rows_distinct);
    CHECK(d.cols_distinct);
  }
  // the invariant state is the diagonal: aa + bb + cc
  const auto& s = grid.decompositions.front();
  CHECK(s.state == "S");
  CHECK(s.points == std::array<std::string, 3>{"aa", "bb", "cc"});
}

TEST_CASE("construction requires characteristic two") {
  CHECK_THROWS_AS(gqm::build_pg32(Field::make(3)), std::invalid_argument);
}

}  // TEST_SUITE
