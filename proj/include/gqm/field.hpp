#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gqm {

// Element of a finite field, identified by its index in the field's tables.
// For GF(p) the index is the residue itself; for GF(p^n) it encodes the
// polynomial representative c0 + c1 x + ... in base p (index = sum ci * p^i).
struct Felt {
  std::uint8_t idx = 0;
  friend constexpr bool operator==(Felt, Felt) = default;
  friend constexpr auto operator<=>(Felt, Felt) = default;
};

// GF(p^n) with dense lookup tables for all operations. Immutable after
// construction; safe to share across threads.
class Field {
 public:
  // Largest field order the dense-table representation accepts.
  static constexpr int kMaxQ = 16;

  // Empty placeholder (q() == 0); only make() yields a usable field.
  Field() = default;

  // Builds GF(p^n). For n > 1 the modulus is the lexicographically smallest
  // monic irreducible polynomial of degree n over GF(p) (smallest when its
  // coefficient vector is read as a base-p integer).
  static Field make(int p, int n = 1);

  // Same, with an explicit monic modulus given as coefficients c0..cn
  // (constant term first, cn == 1). Throws std::invalid_argument if the
  // polynomial is not monic of degree n or not irreducible over GF(p).
  static Field make(int p, int n, const std::vector<int>& irreducible);

  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }

  Felt zero() const { return Felt{0}; }
  Felt one() const { return Felt{1}; }
  Felt elt(int idx) const;

  Felt add(Felt a, Felt b) const { return Felt{add_[a.idx * q_ + b.idx]}; }
  Felt mul(Felt a, Felt b) const { return Felt{mul_[a.idx * q_ + b.idx]}; }
  Felt neg(Felt a) const { return Felt{neg_[a.idx]}; }
  Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }
  Felt inv(Felt a) const;  // throws std::domain_error on zero
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

  bool is_zero(Felt a) const { return a.idx == 0; }

  // The only absolute value compatible with |kl| = |k||l| and |k| = 0 iff
  // k = 0: indicator of being nonzero.
  int abs(Felt a) const { return a.idx == 0 ? 0 : 1; }

  const std::string& name(Felt a) const { return names_[a.idx]; }
  const std::vector<std::string>& names() const { return names_; }

  // Modulus coefficients c0..cn (for n == 1 this is x, i.e. {0, 1}).
  const std::vector<int>& irreducible() const { return irreducible_; }

 private:
  int p_ = 0, n_ = 0, q_ = 0;
  std::vector<int> irreducible_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
  std::vector<std::string> names_;
};

bool is_prime(int p);

// Coefficients c0..cn of the default modulus used by Field::make(p, n).
std::vector<int> default_irreducible(int p, int n);

}  // namespace gqm
