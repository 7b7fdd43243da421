#include "gqm/projective.hpp"

#include <stdexcept>

namespace gqm {
namespace {

struct N2Entry {
  const char* label;
  int coords[2];
};

// Printed single-particle catalogs, one letter per state, [1,0] first and
// [1,1] last.
const std::vector<N2Entry>& n2_catalog(int q) {
  static const std::vector<N2Entry> q2{{"a", {1, 0}}, {"b", {0, 1}}, {"c", {1, 1}}};
  static const std::vector<N2Entry> q3{{"a", {1, 0}}, {"b", {0, 1}}, {"c", {2, 1}}, {"d", {1, 1}}};
  static const std::vector<N2Entry> q4{
      {"a", {1, 0}}, {"b", {0, 1}}, {"c", {2, 1}}, {"d", {3, 1}}, {"e", {1, 1}}};
  static const std::vector<N2Entry> q5{{"a", {1, 0}}, {"b", {0, 1}}, {"c", {2, 1}},
                                       {"d", {4, 1}}, {"e", {3, 1}}, {"f", {1, 1}}};
  switch (q) {
    case 2:
      return q2;
    case 3:
      return q3;
    case 4:
      return q4;
    default:
      return q5;
  }
}

std::string generic_label(std::size_t i, std::size_t total) {
  if (total <= 26) return std::string(1, static_cast<char>('a' + i));
  std::string s = std::to_string(i);
  while (s.size() < std::to_string(total - 1).size()) s.insert(s.begin(), '0');
  return "s" + s;
}

ProjPoint make_point(const Field& f, std::string label, Vec rep) {
  ProjPoint pt;
  pt.label = std::move(label);
  pt.rep = canonicalize(f, std::move(rep));
  for (int s = 1; s < f.q(); ++s) {
    Vec scaled(pt.rep.size());
    for (std::size_t i = 0; i < pt.rep.size(); ++i) scaled[i] = f.mul(f.elt(s), pt.rep[i]);
    pt.orbit.push_back(std::move(scaled));
  }
  return pt;
}

}  // namespace

Vec canonicalize(const Field& f, Vec v) {
  int last = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) last = static_cast<int>(i);
  if (last < 0) throw std::invalid_argument("zero vector has no projective representative");
  if (v[last] != f.one()) {
    const Felt s = f.inv(v[last]);
    for (auto& c : v) c = f.mul(c, s);
  }
  return v;
}

bool proj_equal(const Field& f, const Vec& a, const Vec& b) {
  return canonicalize(f, a) == canonicalize(f, b);
}

std::size_t state_count(int q, int n_levels) {
  std::size_t qn = 1;
  for (int i = 0; i < n_levels; ++i) qn *= static_cast<std::size_t>(q);
  return (qn - 1) / static_cast<std::size_t>(q - 1);
}

std::vector<ProjPoint> enumerate_states(const Field& f, int n_levels) {
  if (n_levels < 2) throw std::invalid_argument("need at least two levels");
  std::vector<ProjPoint> states;

  if (n_levels == 2 && f.q() <= 5) {
    for (const auto& e : n2_catalog(f.q()))
      states.push_back(make_point(f, e.label, Vec{f.elt(e.coords[0]), f.elt(e.coords[1])}));
    return states;
  }
  if (n_levels == 4 && f.q() == 2) {
    for (const auto& e : pg32_catalog())
      states.push_back(make_point(
          f, e.label, Vec{f.elt(e.coords[0]), f.elt(e.coords[1]), f.elt(e.coords[2]), f.elt(e.coords[3])}));
    return states;
  }

  const std::size_t total = state_count(f.q(), n_levels);
  std::size_t count = 1;
  for (int i = 0; i < n_levels; ++i) count *= static_cast<std::size_t>(f.q());
  for (std::size_t v = 1; v < count; ++v) {
    Vec rep(n_levels);
    std::size_t rem = v;
    for (int i = n_levels - 1; i >= 0; --i) {
      rep[i] = f.elt(static_cast<int>(rem % f.q()));
      rem /= f.q();
    }
    int last = -1;
    for (std::size_t i = 0; i < rep.size(); ++i)
      if (!f.is_zero(rep[i])) last = static_cast<int>(i);
    if (rep[last] != f.one()) continue;
    states.push_back(make_point(f, generic_label(states.size(), total), std::move(rep)));
  }
  return states;
}

std::vector<DualPoint> derive_dual_basis(const Field& f, const std::vector<ProjPoint>& states) {
  std::vector<DualPoint> duals;
  for (const auto& s : states) {
    if (s.rep.size() != 2) throw std::invalid_argument("dual basis is defined for two levels");
    duals.push_back({s.label, Vec{s.rep[1], f.neg(s.rep[0])}});
  }
  return duals;
}

Felt bracket(const Field& f, const Vec& dual, const Vec& state) {
  if (dual.size() != state.size()) throw std::invalid_argument("bracket dimension mismatch");
  Felt acc = f.zero();
  for (std::size_t i = 0; i < dual.size(); ++i) acc = f.add(acc, f.mul(dual[i], state[i]));
  return acc;
}

const std::vector<CatalogEntry>& pg32_catalog() {
  static const std::vector<CatalogEntry> catalog{
      {"aa", {1, 0, 0, 0}},    {"ab", {0, 1, 0, 0}},    {"ac", {1, 1, 0, 0}},
      {"ba", {0, 0, 1, 0}},    {"bb", {0, 0, 0, 1}},    {"bc", {0, 0, 1, 1}},
      {"ca", {1, 0, 1, 0}},    {"cb", {0, 1, 0, 1}},    {"cc", {1, 1, 1, 1}},
      {"S", {0, 1, 1, 0}},     {"(ab)", {1, 0, 0, 1}},  {"(bc)", {1, 1, 1, 0}},
      {"(ca)", {0, 1, 1, 1}},  {"(abc)", {1, 1, 0, 1}}, {"(acb)", {1, 0, 1, 1}},
  };
  return catalog;
}

}  // namespace gqm
