#pragma once

#include <array>
#include <string>
#include <vector>

#include "gqm/group.hpp"
#include "gqm/projective.hpp"
#include "gqm/spin.hpp"

namespace gqm {

// Two-particle state over GF(q): four coordinates in particle-1-major order,
// coords[2i + j] multiplying |i>|j>, canonicalized projectively.
struct TwoState {
  std::string label;
  Vec coords;
  bool entangled = false;
};

// Every point of PG(3, q) with its product/entangled classification. For
// q = 2 the published 15-state catalog order (nine products, then the six
// entangled states); generic coordinate labels and lexicographic order
// otherwise. Owns a copy of the single-particle model.
class TwoParticleModel {
 public:
  static TwoParticleModel build(const SpinModel& spin);

  const SpinModel& spin() const { return spin_; }
  const std::vector<TwoState>& states() const { return states_; }
  const std::vector<int>& product_indices() const { return product_; }
  const std::vector<int>& entangled_indices() const { return entangled_; }

  int index_of(const Vec& coords) const;  // canonicalizes, throws if absent
  int index_of_label(const std::string& label) const;

 private:
  SpinModel spin_;
  std::vector<TwoState> states_;
  std::vector<int> product_, entangled_;
};

// Kronecker product of two single-particle states, canonicalized; label is
// the concatenation of the factor labels.
TwoState tensor(const SpinModel& m, const ProjPoint& s1, const ProjPoint& s2);

// A state is entangled iff its 2x2 coordinate matrix M[i][j] = coords[2i+j]
// has nonzero determinant, i.e. iff it is not a Kronecker product.
bool is_entangled(const Field& f, const Vec& coords);

// Applies the basis transformation g to one particle of a two-particle
// state: particle 1 maps M to gM, particle 2 maps M to M g^T.
Vec local_action_vec(const Field& f, const std::array<Felt, 4>& g, int particle, const Vec& coords);

// Same, resolving the label permutation through its unique matrix witness
// and returning the resulting catalog index.
int local_action(const TwoParticleModel& m, const PglGroup& g, const Perm& sigma, int particle,
                 int state);

// Applies sigma to both particles at once.
int diagonal_action(const TwoParticleModel& m, const PglGroup& g, const Perm& sigma, int state);

// Orbit of a state under all single-sided local actions, as sorted indices.
std::vector<int> local_orbit(const TwoParticleModel& m, const PglGroup& g, int state);

// Orbit under simultaneous two-sided actions.
std::vector<int> diagonal_orbit(const TwoParticleModel& m, const PglGroup& g, int state);

// q = 2 catalog split by diagonal-orbit structure: the invariant singlet S,
// the transposition triplet, and the 3-cycle doublet.
struct MultipletCatalog {
  int singlet = 0;
  std::array<int, 3> triplet{};
  std::array<int, 2> doublet{};
  std::array<int, 9> product{};
};
MultipletCatalog build_multiplets(const TwoParticleModel& m);

// All ways to write the singlet S as a sum of two or three distinct product
// states (it has four: ab+ba, bc+cb, ca+ac, aa+bb+cc).
std::vector<std::vector<std::string>> singlet_decompositions(const TwoParticleModel& m);

}  // namespace gqm
