#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gqm/field.hpp"
#include "gqm/projective.hpp"

namespace gqm {

// Permutation of {0..n-1}; perm[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& p, const Perm& q);  // (p*q)[i] = p[q[i]]
Perm inverse(const Perm& p);
int perm_order(const Perm& p);
std::vector<int> cycle_type(const Perm& p);  // partition of n, descending
int perm_parity(const Perm& p);              // +1 even, -1 odd

// Element of PGL(2, q): an invertible 2x2 matrix up to scalars, stored with
// the first nonzero entry (row-major) scaled to 1, together with its induced
// permutation of the q+1 single-particle state labels.
struct GroupElt {
  std::array<Felt, 4> mat;  // row-major: [m00, m01, m10, m11]
  Perm perm;
  int order = 0;
  std::vector<int> cycles;
  int parity = 0;
};

struct ClassInfo {
  int elt_order = 0;
  int size = 0;
  std::vector<int> cycles;  // cycle type of a representative
};

// Isomorphism-invariant summary: group order, multiset of (element order,
// class size) over conjugacy classes, and, for the permutation realization,
// the cycle-type census and the even/odd split.
struct GroupFingerprint {
  std::int64_t order = 0;
  std::multiset<std::pair<int, int>> class_data;
  std::map<std::vector<int>, int> cycle_census;
  int even_count = 0;
  int odd_count = 0;
};

class PglGroup {
 public:
  // Enumerates all q^4 matrices over GF(q), keeps the invertible ones, and
  // dedupes scalar multiples. Element order follows the canonical matrix
  // read as a base-q integer.
  static PglGroup build(const Field& f);

  const Field& field() const { return field_; }
  const std::vector<GroupElt>& elements() const { return elements_; }
  const std::vector<ProjPoint>& states() const { return states_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }

  // The unique group element inducing this label permutation, if any (the
  // action on states is faithful).
  const GroupElt* witness(const Perm& p) const;

  const std::vector<ClassInfo>& conjugacy_classes() const { return classes_; }
  GroupFingerprint fingerprint() const;

  // "S3", "A5", or "order-120 subgroup of S6 (mixed parity)" style verdict
  // for the permutation image inside S_{q+1}.
  std::string image_description() const;

  // Name of an abstract group with a matching fingerprint among S_k / A_k,
  // k <= 7, if one exists.
  std::optional<std::string> isomorphic_reference() const;

 private:
  Field field_;
  std::vector<ProjPoint> states_;
  std::vector<GroupElt> elements_;
  std::map<Perm, int> by_perm_;
  std::vector<ClassInfo> classes_;
};

// Reference groups built from raw permutations via std::next_permutation,
// independent of any matrix code. n <= 7 keeps brute-force conjugation sane.
GroupFingerprint symmetric_group_fingerprint(int n);
GroupFingerprint alternating_group_fingerprint(int n);

// Conjugacy classes of an arbitrary set of permutations closed under
// composition, by brute-force conjugation.
std::vector<ClassInfo> brute_force_classes(const std::vector<Perm>& elements);

// True iff group order and the (element order, class size) multisets agree.
bool fingerprint_match(const GroupFingerprint& a, const GroupFingerprint& b);

std::int64_t factorial(int n);

}  // namespace gqm
