#include "gqm/reference_tables.hpp"

namespace gqm::ref {

const std::vector<CorrRow>& two_particle_q2() {
  static const std::vector<CorrRow> t{
      {"X1X2", "S", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},
      {"X1X2", "(ab)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"X1X2", "(bc)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"X1X2", "(ca)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"X1X2", "(abc)", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},
      {"X1X2", "(acb)", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},

      {"X1Y2", "S", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},
      {"X1Y2", "(ab)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"X1Y2", "(bc)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"X1Y2", "(ca)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"X1Y2", "(abc)", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},
      {"X1Y2", "(acb)", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},

      {"X1Z2", "S", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},
      {"X1Z2", "(ab)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"X1Z2", "(bc)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"X1Z2", "(ca)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"X1Z2", "(abc)", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},
      {"X1Z2", "(acb)", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},

      {"Y1X2", "S", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},
      {"Y1X2", "(ab)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"Y1X2", "(bc)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"Y1X2", "(ca)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"Y1X2", "(abc)", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},
      {"Y1X2", "(acb)", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},

      {"Y1Y2", "S", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},
      {"Y1Y2", "(ab)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"Y1Y2", "(bc)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"Y1Y2", "(ca)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"Y1Y2", "(abc)", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},
      {"Y1Y2", "(acb)", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},

      {"Y1Z2", "S", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},
      {"Y1Z2", "(ab)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"Y1Z2", "(bc)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"Y1Z2", "(ca)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"Y1Z2", "(abc)", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},
      {"Y1Z2", "(acb)", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},

      {"Z1X2", "S", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},
      {"Z1X2", "(ab)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"Z1X2", "(bc)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"Z1X2", "(ca)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"Z1X2", "(abc)", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},
      {"Z1X2", "(acb)", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},

      {"Z1Y2", "S", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},
      {"Z1Y2", "(ab)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"Z1Y2", "(bc)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"Z1Y2", "(ca)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"Z1Y2", "(abc)", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},
      {"Z1Y2", "(acb)", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},

      {"Z1Z2", "S", 0, 1, 1, 2, 1, 2, 0, 1, -1, 1},
      {"Z1Z2", "(ab)", 1, 2, 0, 1, 0, 1, 1, 2, 1, 1},
      {"Z1Z2", "(bc)", 0, 1, 1, 3, 1, 3, 1, 3, -1, 3},
      {"Z1Z2", "(ca)", 1, 3, 1, 3, 1, 3, 0, 1, -1, 3},
      {"Z1Z2", "(abc)", 1, 3, 0, 1, 1, 3, 1, 3, 1, 3},
      {"Z1Z2", "(acb)", 1, 3, 1, 3, 0, 1, 1, 3, 1, 3},
  };
  return t;
}

const std::vector<RelabelRow>& relabel_q2() {
  static const std::vector<RelabelRow> t{
      {"(ab)", "X", "Y", -1},  {"(ab)", "Y", "X", -1},  {"(ab)", "Z", "Z", -1},
      {"(bc)", "X", "X", -1},  {"(bc)", "Y", "Z", -1},  {"(bc)", "Z", "Y", -1},
      {"(ca)", "X", "Z", -1},  {"(ca)", "Y", "Y", -1},  {"(ca)", "Z", "X", -1},
      {"(abc)", "X", "Y", 1},  {"(abc)", "Y", "Z", 1},  {"(abc)", "Z", "X", 1},
      {"(acb)", "X", "Z", 1},  {"(acb)", "Y", "X", 1},  {"(acb)", "Z", "Y", 1},
  };
  return t;
}

const std::vector<LocalActionRow>& local_actions_q2() {
  static const std::vector<LocalActionRow> t{
      {"(ab)", 1, "S", "(ab)"},     {"(ab)", 2, "S", "(ab)"},
      {"(bc)", 1, "S", "(bc)"},     {"(bc)", 2, "S", "(bc)"},
      {"(ca)", 1, "S", "(ca)"},     {"(ca)", 2, "S", "(ca)"},
      {"(acb)", 1, "S", "(abc)"},   {"(abc)", 2, "S", "(abc)"},
      {"(abc)", 1, "S", "(acb)"},   {"(acb)", 2, "S", "(acb)"},
      {"(ab)", 1, "(bc)", "(acb)"},
  };
  return t;
}

const std::vector<EntangledCoords>& entangled_q2() {
  static const std::vector<EntangledCoords> t{
      {"S", {0, 1, 1, 0}},     {"(ab)", {1, 0, 0, 1}},  {"(bc)", {1, 1, 1, 0}},
      {"(ca)", {0, 1, 1, 1}},  {"(abc)", {1, 1, 0, 1}}, {"(acb)", {1, 0, 1, 1}},
  };
  return t;
}

const std::vector<std::vector<int>>& dual_pairings(int q) {
  // Element indices: -1 = q-1 for prime q; w = 2, w^2 = 3 for q = 4.
  static const std::vector<std::vector<int>> q3{
      {0, 2, 2, 2},
      {1, 0, 2, 1},
      {1, 1, 0, 2},
      {1, 2, 1, 0},
  };
  static const std::vector<std::vector<int>> q4{
      {0, 1, 1, 1, 1},
      {1, 0, 2, 3, 1},
      {1, 2, 0, 1, 3},
      {1, 3, 1, 0, 2},
      {1, 1, 3, 2, 0},
  };
  static const std::vector<std::vector<int>> q5{
      {0, 4, 4, 4, 4, 4},
      {1, 0, 2, 4, 3, 1},
      {1, 3, 0, 2, 1, 4},
      {1, 1, 3, 0, 4, 2},
      {1, 2, 4, 1, 0, 3},
      {1, 4, 1, 3, 2, 0},
  };
  switch (q) {
    case 3:
      return q3;
    case 4:
      return q4;
    default:
      return q5;
  }
}

const std::array<std::array<int, 4>, 4>& gf4_add() {
  static const std::array<std::array<int, 4>, 4> t{{
      {{0, 1, 2, 3}},
      {{1, 0, 3, 2}},
      {{2, 3, 0, 1}},
      {{3, 2, 1, 0}},
  }};
  return t;
}

const std::array<std::array<int, 4>, 4>& gf4_mul() {
  static const std::array<std::array<int, 4>, 4> t{{
      {{0, 0, 0, 0}},
      {{0, 1, 2, 3}},
      {{0, 2, 3, 1}},
      {{0, 3, 1, 2}},
  }};
  return t;
}

const std::vector<CensusRow>& s6_census_q5() {
  static const std::vector<CensusRow> t{
      {"6", {6}, 20},
      {"5+1", {5, 1}, 24},
      {"4+1+1", {4, 1, 1}, 30},
      {"4+2", {4, 2}, 0},
      {"3+3", {3, 3}, 20},
      {"3+2+1", {3, 2, 1}, 0},
      {"2+2+2", {2, 2, 2}, 10},
      {"2+2+1+1", {2, 2, 1, 1}, 15},
      {"3+1+1+1", {3, 1, 1, 1}, 0},
      {"2+1+1+1+1", {2, 1, 1, 1, 1}, 0},
      {"1+1+1+1+1+1", {1, 1, 1, 1, 1, 1}, 1},
  };
  return t;
}

}  // namespace gqm::ref
