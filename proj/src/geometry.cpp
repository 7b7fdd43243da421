#include "gqm/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gqm {
namespace {

Vec vec_sum(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

bool is_zero_vec(const Field& f, const Vec& v) {
  for (const auto& c : v)
    if (!f.is_zero(c)) return false;
  return true;
}

}  // namespace

bool Pg32::contains_line(const IncidenceLine& l) const {
  return std::find(lines.begin(), lines.end(), l) != lines.end();
}

int Pg32::lines_through_point(int pt) const {
  int n = 0;
  for (const auto& l : lines)
    n += std::count(l.pts.begin(), l.pts.end(), pt) > 0 ? 1 : 0;
  return n;
}

int Pg32::planes_containing_line(const IncidenceLine& l) const {
  int n = 0;
  for (const auto& p : planes) {
    bool all = true;
    for (int pt : l.pts)
      all = all && std::find(p.pts.begin(), p.pts.end(), pt) != p.pts.end();
    n += all ? 1 : 0;
  }
  return n;
}

Pg32 build_pg32(const Field& f) {
  if (f.q() != 2) throw std::invalid_argument("incidence geometry is built for GF(2) only");
  Pg32 g;
  g.points = enumerate_states(f, 4);

  const int n = static_cast<int>(g.points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec s = vec_sum(f, g.points[static_cast<std::size_t>(i)].rep,
                            g.points[static_cast<std::size_t>(j)].rep);
      for (int k = j + 1; k < n; ++k)
        if (is_zero_vec(f, vec_sum(f, s, g.points[static_cast<std::size_t>(k)].rep)))
          g.lines.push_back({{i, j, k}});
    }

  // Over GF(2) every nonzero functional is its own canonical representative,
  // so the 15 planes are the kernels of the 15 nonzero dual vectors.
  for (int u = 1; u < 16; ++u) {
    IncidencePlane plane;
    plane.normal = Vec{f.elt((u >> 3) & 1), f.elt((u >> 2) & 1), f.elt((u >> 1) & 1), f.elt(u & 1)};
    for (int i = 0; i < n; ++i)
      if (f.is_zero(bracket(f, plane.normal, g.points[static_cast<std::size_t>(i)].rep)))
        plane.pts.push_back(i);
    g.planes.push_back(std::move(plane));
  }
  return g;
}

GridReport product_grid_check(const Pg32& g) {
  GridReport r;
  auto label = [&](int i) { return g.points[static_cast<std::size_t>(i)].label; };
  auto is_product = [&](int i) { return label(i).size() == 2; };

  for (const auto& l : g.lines) {
    if (is_product(l.pts[0]) && is_product(l.pts[1]) && is_product(l.pts[2]))
      r.product_lines.push_back(l);
  }

  // Classify the product lines: same first letter = row, same second = column.
  int rows = 0, cols = 0;
  for (const auto& l : r.product_lines) {
    const std::string a = label(l.pts[0]), b = label(l.pts[1]), c = label(l.pts[2]);
    if (a[0] == b[0] && b[0] == c[0]) ++rows;
    if (a[1] == b[1] && b[1] == c[1]) ++cols;
  }
  r.rows_and_cols = r.product_lines.size() == 6 && rows == 3 && cols == 3;

  for (const auto& p : g.planes) {
    int inside = 0;
    for (const auto& l : r.product_lines) {
      bool all = true;
      for (int pt : l.pts) all = all && std::find(p.pts.begin(), p.pts.end(), pt) != p.pts.end();
      inside += all ? 1 : 0;
    }
    r.max_product_lines_in_plane = std::max(r.max_product_lines_in_plane, inside);
  }

  // Each entangled state is named after a permutation sigma of {a, b, c};
  // its decomposition picks the product "r sigma(r)" for each row r.
  const std::vector<std::pair<std::string, std::array<char, 3>>> sigma{
      {"S", {'a', 'b', 'c'}},      {"(ab)", {'b', 'a', 'c'}},  {"(bc)", {'a', 'c', 'b'}},
      {"(ca)", {'c', 'b', 'a'}},   {"(abc)", {'b', 'c', 'a'}}, {"(acb)", {'c', 'a', 'b'}},
  };
  auto index_of = [&](const std::string& lbl) {
    for (std::size_t i = 0; i < g.points.size(); ++i)
      if (g.points[i].label == lbl) return static_cast<int>(i);
    throw std::logic_error("label missing from catalog: " + lbl);
  };

  for (const auto& [state, images] : sigma) {
    GridDecomposition d;
    d.state = state;
    std::array<int, 4> acc{0, 0, 0, 0};
    std::set<char> row_set, col_set;
    for (int row = 0; row < 3; ++row) {
      const char r = static_cast<char>('a' + row);
      const std::string pt{r, images[static_cast<std::size_t>(row)]};
      d.points[static_cast<std::size_t>(row)] = pt;
      row_set.insert(pt[0]);
      col_set.insert(pt[1]);
      const Vec& coords = g.points[static_cast<std::size_t>(index_of(pt))].rep;
      for (int i = 0; i < 4; ++i)
        acc[static_cast<std::size_t>(i)] ^= coords[static_cast<std::size_t>(i)].idx;
    }
    const Vec& target = g.points[static_cast<std::size_t>(index_of(state))].rep;
    d.sums_to_state = true;
    for (int i = 0; i < 4; ++i)
      d.sums_to_state =
          d.sums_to_state && acc[static_cast<std::size_t>(i)] == target[static_cast<std::size_t>(i)].idx;
    d.rows_distinct = row_set.size() == 3;
    d.cols_distinct = col_set.size() == 3;
    r.decompositions.push_back(std::move(d));
  }
  return r;
}

}  // namespace gqm
