#pragma once

#include <array>
#include <string>
#include <vector>

#include "gqm/projective.hpp"

namespace gqm {

// Line of PG(3, 2): three points whose representatives sum to zero.
// Point indices refer to the 15-entry catalog order, sorted ascending.
struct IncidenceLine {
  std::array<int, 3> pts{};
  friend bool operator==(const IncidenceLine&, const IncidenceLine&) = default;
  friend auto operator<=>(const IncidenceLine&, const IncidenceLine&) = default;
};

// Plane of PG(3, 2): the seven points annihilated by one nonzero functional.
struct IncidencePlane {
  Vec normal;
  std::vector<int> pts;
};

struct Pg32 {
  std::vector<ProjPoint> points;        // 15
  std::vector<IncidenceLine> lines;     // 35
  std::vector<IncidencePlane> planes;   // 15

  bool contains_line(const IncidenceLine& l) const;
  int lines_through_point(int pt) const;
  int planes_containing_line(const IncidenceLine& l) const;
};

Pg32 build_pg32(const Field& f);  // requires q = 2

// The 3x3 grid the nine product states form: the three rows (fixed first
// factor) and three columns (fixed second factor) are lines, and they are
// the only lines made of products alone. Each entangled state decomposes as
// a sum of products hitting each row and each column exactly once.
struct GridDecomposition {
  std::string state;
  std::array<std::string, 3> points;
  bool sums_to_state = false;
  bool rows_distinct = false;
  bool cols_distinct = false;
};

struct GridReport {
  std::vector<IncidenceLine> product_lines;  // expect 6
  bool rows_and_cols = false;                // the 6 are exactly 3 rows + 3 cols
  int max_product_lines_in_plane = 0;        // expect <= 2: the grid spans no plane
  std::vector<GridDecomposition> decompositions;
};

GridReport product_grid_check(const Pg32& g);

}  // namespace gqm
