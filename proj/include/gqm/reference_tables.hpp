#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gqm::ref {

// Published values the engine must reproduce exactly. Fractions are (num,
// den) pairs; field elements are table indices.

struct ProbRow {
  const char* obs;
  const char* state;
  int pn, pd;  // P(+)
  int mn, md;  // P(-)
  int en, ed;  // expectation
};

// Single-particle q = 2 table: A_ab, A_bc, A_ca against a, b, c.
inline const std::vector<ProbRow>& one_particle_q2() {
  static const std::vector<ProbRow> t{
      {"A_ab", "a", 0, 1, 1, 1, -1, 1}, {"A_ab", "b", 1, 1, 0, 1, 1, 1},
      {"A_ab", "c", 1, 2, 1, 2, 0, 1},  {"A_bc", "a", 1, 2, 1, 2, 0, 1},
      {"A_bc", "b", 0, 1, 1, 1, -1, 1}, {"A_bc", "c", 1, 1, 0, 1, 1, 1},
      {"A_ca", "a", 1, 1, 0, 1, 1, 1},  {"A_ca", "b", 1, 2, 1, 2, 0, 1},
      {"A_ca", "c", 0, 1, 1, 1, -1, 1},
  };
  return t;
}

struct CorrRow {
  const char* obs;    // "X1X2" style
  const char* state;  // entangled label
  int ppn, ppd, pmn, pmd, mpn, mpd, mmn, mmd;  // ++, +-, -+, --
  int en, ed;                                  // expectation
};

// Two-particle q = 2 table: nine X/Y/Z setting pairs against the six
// entangled states, 54 rows, first-particle setting major.
const std::vector<CorrRow>& two_particle_q2();

// Observable relabeling under the six label permutations of q = 2
// ("X -> -Y" as {"X", "Y", -1}).
struct RelabelRow {
  const char* perm;  // "(ab)", "(abc)", ...
  const char* from, *to;
  int sign;
};
const std::vector<RelabelRow>& relabel_q2();

// One-sided basis transformations on the singlet: applying sigma to either
// particle of S lands on a named entangled state.
struct LocalActionRow {
  const char* perm;
  int particle;
  const char* from, *to;
};
const std::vector<LocalActionRow>& local_actions_q2();

// Entangled-state coordinates, q = 2 (particle-1-major bits).
struct EntangledCoords {
  const char* label;
  std::array<int, 4> coords;
};
const std::vector<EntangledCoords>& entangled_q2();

// <dual_r | state_s> for every pair, as field element indices, for q = 3, 4,
// 5 (row r, column s, label order a, b, c, ...).
const std::vector<std::vector<int>>& dual_pairings(int q);

// GF(4) addition and multiplication tables, element order 0, 1, w, w^2.
const std::array<std::array<int, 4>, 4>& gf4_add();
const std::array<std::array<int, 4>, 4>& gf4_mul();

// Permutation-image census for q = 5 inside S6: cycle types in published
// order with their element counts.
struct CensusRow {
  const char* cycle_type;  // "4+1+1" style
  std::vector<int> cycles;
  int count;
};
const std::vector<CensusRow>& s6_census_q5();

}  // namespace gqm::ref
