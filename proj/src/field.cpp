#include "gqm/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace gqm {
namespace {

// Polynomials over GF(p), little-endian coefficient vectors, no trailing
// zeros except for the zero polynomial (empty vector).
using Poly = std::vector<int>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(std::move(c));
}

// Remainder of a modulo monic m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(std::move(a));
  while (degree(a) >= degree(m)) {
    const int shift = degree(a) - degree(m);
    const int lead = a.back();
    for (std::size_t i = 0; i < m.size(); ++i) {
      int& c = a[i + shift];
      c = ((c - lead * m[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& f, int p) { return poly_mod(f, d, p).empty(); }

// Trial division by every monic polynomial of degree 1..deg(f)/2. Fine for
// the tiny degrees a <= 16 element field needs.
bool poly_is_irreducible(const Poly& f, int p) {
  const int n = degree(f);
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g(d + 1, 0);
      int v = low;
      for (int i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

int pow_int(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Poly poly_of_index(int idx, int p, int n) {
  Poly f(n, 0);
  for (int i = 0; i < n; ++i) {
    f[i] = idx % p;
    idx /= p;
  }
  return trim(std::move(f));
}

int index_of_poly(const Poly& f, int p) {
  int idx = 0;
  for (int i = degree(f); i >= 0; --i) idx = idx * p + f[i];
  return idx;
}

int mul_order(const Field& f, Felt a) {
  int k = 1;
  Felt x = a;
  while (x != f.one()) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

std::vector<std::string> element_names(const Field& f) {
  switch (f.q()) {
    case 2:
      return {"0", "1"};
    case 3:
      return {"0", "1", "-1"};
    case 4:
      return {"0", "1", "ω", "ω²"};
    case 5:
      return {"0", "1", "2", "-2", "-1"};
    default:
      break;
  }
  std::vector<std::string> names(f.q());
  names[0] = "0";
  if (f.n() == 1) {
    // Balanced residues read most naturally for prime fields.
    for (int i = 1; i < f.q(); ++i)
      names[i] = std::to_string(i <= f.q() / 2 ? i : i - f.q());
    return names;
  }
  Felt g{0};
  for (int i = 2; i < f.q(); ++i)
    if (mul_order(f, Felt{static_cast<std::uint8_t>(i)}) == f.q() - 1) {
      g = Felt{static_cast<std::uint8_t>(i)};
      break;
    }
  Felt x = f.one();
  for (int k = 0; k < f.q() - 1; ++k) {
    names[x.idx] = k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k));
    x = f.mul(x, g);
  }
  return names;
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> default_irreducible(int p, int n) {
  if (n == 1) return {0, 1};
  const int count = pow_int(p, n);
  for (int low = 0; low < count; ++low) {
    Poly f = poly_of_index(low, p, n);
    f.resize(n + 1, 0);
    f[n] = 1;
    if (poly_is_irreducible(f, p)) {
      std::vector<int> coeffs(f.begin(), f.end());
      return coeffs;
    }
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field Field::make(int p, int n) {
  // Validate before the modulus search so bad parameters fail the same way
  // on both overloads.
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (n < 1) throw std::invalid_argument("field extension degree must be >= 1");
  return make(p, n, default_irreducible(p, n));
}

Field Field::make(int p, int n, const std::vector<int>& irreducible) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (n < 1) throw std::invalid_argument("field extension degree must be >= 1");
  long q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxQ) throw std::invalid_argument("field order exceeds table limit of 16");
  }

  if (static_cast<int>(irreducible.size()) != n + 1 || irreducible[n] != 1)
    throw std::invalid_argument("modulus must be monic of degree n");
  for (int c : irreducible)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
  Poly m(irreducible.begin(), irreducible.end());
  if (!poly_is_irreducible(m, p)) throw std::invalid_argument("modulus polynomial is reducible");

  Field f;
  f.p_ = p;
  f.n_ = n;
  f.q_ = static_cast<int>(q);
  f.irreducible_ = irreducible;

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const Poly fa = poly_of_index(a, p, n);
    Poly na(n, 0);
    for (int i = 0; i <= degree(fa); ++i) na[i] = (p - fa[i]) % p;
    f.neg_[a] = static_cast<std::uint8_t>(index_of_poly(trim(std::move(na)), p));
    for (int b = 0; b < q; ++b) {
      const Poly fb = poly_of_index(b, p, n);
      Poly s(n, 0);
      for (int i = 0; i < n; ++i)
        s[i] = ((i <= degree(fa) ? fa[i] : 0) + (i <= degree(fb) ? fb[i] : 0)) % p;
      f.add_[a * q + b] = static_cast<std::uint8_t>(index_of_poly(trim(std::move(s)), p));
      const Poly prod = poly_mod(poly_mul(fa, fb, p), m, p);
      f.mul_[a * q + b] = static_cast<std::uint8_t>(index_of_poly(prod, p));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul_[a * q + b] == 1) {
        f.inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }

  f.names_ = element_names(f);
  return f;
}

Felt Field::elt(int idx) const {
  if (idx < 0 || idx >= q_) throw std::out_of_range("element index outside field");
  return Felt{static_cast<std::uint8_t>(idx)};
}

Felt Field::inv(Felt a) const {
  if (a.idx == 0) throw std::domain_error("inverse of zero field element");
  return Felt{inv_[a.idx]};
}

}  // namespace gqm
