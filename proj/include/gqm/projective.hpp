#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gqm/field.hpp"

namespace gqm {

using Vec = std::vector<Felt>;

// Point of PG(N-1, q): a nonzero vector up to nonzero scalar multiples.
// rep is the canonical representative (last nonzero coordinate scaled to 1);
// orbit lists all q-1 scalar multiples, scalar index ascending.
struct ProjPoint {
  std::string label;
  Vec rep;
  std::vector<Vec> orbit;
};

// Dual (row) vector paired with the state of the same label: the unique
// projective functional annihilating exactly that state.
struct DualPoint {
  std::string label;
  Vec coeffs;
};

// Scales v so its last nonzero coordinate is 1. Throws std::invalid_argument
// on the zero vector.
Vec canonicalize(const Field& f, Vec v);

bool proj_equal(const Field& f, const Vec& a, const Vec& b);

// Number of points of PG(n_levels - 1, q): (q^n - 1) / (q - 1).
std::size_t state_count(int q, int n_levels);

// All points of PG(n_levels - 1, q). Label order is fixed: the published
// catalogs for (n_levels == 2, q <= 5) and for (n_levels == 4, q == 2);
// lexicographic enumeration of canonical representatives otherwise.
std::vector<ProjPoint> enumerate_states(const Field& f, int n_levels);

// For n_levels == 2 only: dual of state [r0, r1] is [r1, -r0], which pairs
// to zero with its own state and nonzero with every other.
std::vector<DualPoint> derive_dual_basis(const Field& f, const std::vector<ProjPoint>& states);

// <dual|state> = sum_i dual_i state_i. Throws on dimension mismatch.
Felt bracket(const Field& f, const Vec& dual, const Vec& state);

// The 15-point catalog of PG(3, 2) used by the two-particle model: the nine
// products of single-particle labels followed by the six entangled states
// named after elements of the label-permutation group.
struct CatalogEntry {
  const char* label;
  int coords[4];
};
const std::vector<CatalogEntry>& pg32_catalog();

}  // namespace gqm
