#include "gqm/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gqm {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

int perm_order(const Perm& p) {
  const Perm id = identity_perm(static_cast<int>(p.size()));
  Perm x = p;
  int k = 1;
  while (x != id) {
    x = compose(p, x);
    ++k;
  }
  return k;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int perm_parity(const Perm& p) {
  int transpositions = 0;
  for (int len : cycle_type(p)) transpositions += len - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

namespace {

void fill_invariants(GroupElt& e) {
  e.order = perm_order(e.perm);
  e.cycles = cycle_type(e.perm);
  e.parity = perm_parity(e.perm);
}

GroupFingerprint fingerprint_of(const std::vector<Perm>& perms,
                                const std::vector<ClassInfo>& classes) {
  GroupFingerprint fp;
  fp.order = static_cast<std::int64_t>(perms.size());
  for (const auto& c : classes) fp.class_data.insert({c.elt_order, c.size});
  for (const auto& p : perms) {
    ++fp.cycle_census[cycle_type(p)];
    (perm_parity(p) == 1 ? fp.even_count : fp.odd_count) += 1;
  }
  return fp;
}

std::vector<Perm> all_perms(int n) {
  Perm p = identity_perm(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<ClassInfo> brute_force_classes(const std::vector<Perm>& elements) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  std::vector<bool> assigned(elements.size(), false);
  std::vector<ClassInfo> classes;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (assigned[i]) continue;
    std::set<int> members;
    for (const auto& g : elements) {
      const Perm conj = compose(compose(g, elements[i]), inverse(g));
      const auto it = index.find(conj);
      if (it == index.end()) throw std::logic_error("element set not closed under conjugation");
      members.insert(it->second);
    }
    for (int m : members) assigned[static_cast<std::size_t>(m)] = true;
    classes.push_back({perm_order(elements[i]), static_cast<int>(members.size()),
                       cycle_type(elements[i])});
  }
  std::sort(classes.begin(), classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
    return std::tie(a.elt_order, a.size, a.cycles) < std::tie(b.elt_order, b.size, b.cycles);
  });
  return classes;
}

PglGroup PglGroup::build(const Field& f) {
  PglGroup g;
  g.field_ = f;
  g.states_ = enumerate_states(f, 2);

  std::map<Vec, int> state_index;
  for (std::size_t i = 0; i < g.states_.size(); ++i) state_index[g.states_[i].rep] = static_cast<int>(i);

  const int q = f.q();
  std::set<std::array<std::uint8_t, 4>> seen;
  for (int m0 = 0; m0 < q; ++m0)
    for (int m1 = 0; m1 < q; ++m1)
      for (int m2 = 0; m2 < q; ++m2)
        for (int m3 = 0; m3 < q; ++m3) {
          std::array<Felt, 4> m{f.elt(m0), f.elt(m1), f.elt(m2), f.elt(m3)};
          const Felt det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
          if (f.is_zero(det)) continue;
          Felt lead = f.zero();
          for (const Felt& c : m)
            if (!f.is_zero(c)) {
              lead = c;
              break;
            }
          if (lead != f.one()) {
            const Felt s = f.inv(lead);
            for (auto& c : m) c = f.mul(c, s);
          }
          if (!seen.insert({m[0].idx, m[1].idx, m[2].idx, m[3].idx}).second) continue;

          GroupElt e;
          e.mat = m;
          e.perm.resize(g.states_.size());
          for (std::size_t i = 0; i < g.states_.size(); ++i) {
            const Vec& r = g.states_[i].rep;
            Vec image{f.add(f.mul(m[0], r[0]), f.mul(m[1], r[1])),
                      f.add(f.mul(m[2], r[0]), f.mul(m[3], r[1]))};
            e.perm[i] = state_index.at(canonicalize(f, std::move(image)));
          }
          fill_invariants(e);
          g.elements_.push_back(std::move(e));
        }

  std::vector<Perm> perms;
  perms.reserve(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    g.by_perm_[g.elements_[i].perm] = static_cast<int>(i);
    perms.push_back(g.elements_[i].perm);
  }
  if (g.by_perm_.size() != g.elements_.size())
    throw std::logic_error("state action is not faithful");
  g.classes_ = brute_force_classes(perms);
  return g;
}

const GroupElt* PglGroup::witness(const Perm& p) const {
  const auto it = by_perm_.find(p);
  return it == by_perm_.end() ? nullptr : &elements_[static_cast<std::size_t>(it->second)];
}

GroupFingerprint PglGroup::fingerprint() const {
  std::vector<Perm> perms;
  perms.reserve(elements_.size());
  for (const auto& e : elements_) perms.push_back(e.perm);
  return fingerprint_of(perms, classes_);
}

std::string PglGroup::image_description() const {
  const int degree = static_cast<int>(states_.size());
  const std::int64_t full = factorial(degree);
  const auto fp = fingerprint();
  if (order() == full) return "S" + std::to_string(degree);
  if (order() == full / 2 && fp.odd_count == 0) return "A" + std::to_string(degree);
  std::string parity = fp.odd_count == 0 ? "even only"
                                         : std::to_string(fp.even_count) + " even / " +
                                               std::to_string(fp.odd_count) + " odd";
  return "order-" + std::to_string(order()) + " subgroup of S" + std::to_string(degree) + " (" +
         parity + ")";
}

std::optional<std::string> PglGroup::isomorphic_reference() const {
  const auto fp = fingerprint();
  for (int k = 3; k <= 7; ++k) {
    if (factorial(k) == fp.order && fingerprint_match(fp, symmetric_group_fingerprint(k)))
      return "S" + std::to_string(k);
    if (factorial(k) / 2 == fp.order && fingerprint_match(fp, alternating_group_fingerprint(k)))
      return "A" + std::to_string(k);
  }
  return std::nullopt;
}

GroupFingerprint symmetric_group_fingerprint(int n) {
  const auto perms = all_perms(n);
  return fingerprint_of(perms, brute_force_classes(perms));
}

GroupFingerprint alternating_group_fingerprint(int n) {
  std::vector<Perm> evens;
  for (auto& p : all_perms(n))
    if (perm_parity(p) == 1) evens.push_back(std::move(p));
  return fingerprint_of(evens, brute_force_classes(evens));
}

bool fingerprint_match(const GroupFingerprint& a, const GroupFingerprint& b) {
  return a.order == b.order && a.class_data == b.class_data;
}

}  // namespace gqm
