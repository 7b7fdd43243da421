#include "gqm/two_particle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gqm {

TwoParticleModel TwoParticleModel::build(const SpinModel& spin) {
  TwoParticleModel m;
  m.spin_ = spin;
  const Field& f = spin.field();
  for (auto& pt : enumerate_states(f, 4)) {
    TwoState s;
    s.label = std::move(pt.label);
    s.coords = std::move(pt.rep);
    s.entangled = is_entangled(f, s.coords);
    m.states_.push_back(std::move(s));
  }
  if (f.q() == 2) {
    for (std::size_t i = 0; i < m.states_.size(); ++i) {
      const bool catalog_entangled = i >= 9;
      if (m.states_[i].entangled != catalog_entangled)
        throw std::logic_error("catalog split disagrees with determinant criterion");
    }
  } else {
    for (auto& s : m.states_) {
      std::string lbl = "(";
      for (std::size_t i = 0; i < s.coords.size(); ++i) {
        if (i) lbl += ",";
        lbl += f.name(s.coords[i]);
      }
      s.label = lbl + ")";
    }
  }
  for (std::size_t i = 0; i < m.states_.size(); ++i)
    (m.states_[i].entangled ? m.entangled_ : m.product_).push_back(static_cast<int>(i));
  return m;
}

int TwoParticleModel::index_of(const Vec& coords) const {
  const Vec canon = canonicalize(spin_.field(), coords);
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i].coords == canon) return static_cast<int>(i);
  throw std::invalid_argument("coordinates outside the state catalog");
}

int TwoParticleModel::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown two-particle state label: " + label);
}

TwoState tensor(const SpinModel& m, const ProjPoint& s1, const ProjPoint& s2) {
  const Field& f = m.field();
  Vec coords(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) coords[static_cast<std::size_t>(2 * i + j)] = f.mul(s1.rep[static_cast<std::size_t>(i)], s2.rep[static_cast<std::size_t>(j)]);
  TwoState out;
  out.label = s1.label + s2.label;
  out.coords = canonicalize(f, std::move(coords));
  out.entangled = false;
  return out;
}

bool is_entangled(const Field& f, const Vec& coords) {
  if (coords.size() != 4) throw std::invalid_argument("two-particle state needs four coordinates");
  const Felt det = f.sub(f.mul(coords[0], coords[3]), f.mul(coords[1], coords[2]));
  return !f.is_zero(det);
}

Vec local_action_vec(const Field& f, const std::array<Felt, 4>& g, int particle, const Vec& coords) {
  if (coords.size() != 4) throw std::invalid_argument("two-particle state needs four coordinates");
  if (particle != 1 && particle != 2) throw std::invalid_argument("particle must be 1 or 2");
  Vec out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Felt acc = f.zero();
      for (int k = 0; k < 2; ++k) {
        // particle 1: out[i][j] = sum_k g[i][k] M[k][j]
        // particle 2: out[i][j] = sum_k M[i][k] g[j][k]   (right-multiply by g^T)
        const Felt left = particle == 1 ? g[static_cast<std::size_t>(2 * i + k)]
                                        : coords[static_cast<std::size_t>(2 * i + k)];
        const Felt right = particle == 1 ? coords[static_cast<std::size_t>(2 * k + j)]
                                         : g[static_cast<std::size_t>(2 * j + k)];
        acc = f.add(acc, f.mul(left, right));
      }
      out[static_cast<std::size_t>(2 * i + j)] = acc;
    }
  return canonicalize(f, std::move(out));
}

int local_action(const TwoParticleModel& m, const PglGroup& g, const Perm& sigma, int particle,
                 int state) {
  const GroupElt* w = g.witness(sigma);
  if (w == nullptr)
    throw std::invalid_argument("label permutation has no basis-transformation witness");
  return m.index_of(local_action_vec(m.spin().field(), w->mat, particle,
                                     m.states()[static_cast<std::size_t>(state)].coords));
}

int diagonal_action(const TwoParticleModel& m, const PglGroup& g, const Perm& sigma, int state) {
  return local_action(m, g, sigma, 2, local_action(m, g, sigma, 1, state));
}

namespace {

std::vector<int> orbit_closure(const TwoParticleModel& m, const PglGroup& g, int state,
                               bool diagonal) {
  std::set<int> seen{state};
  std::vector<int> frontier{state};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int s : frontier)
      for (const auto& e : g.elements()) {
        std::vector<int> images;
        if (diagonal) {
          images.push_back(diagonal_action(m, g, e.perm, s));
        } else {
          images.push_back(local_action(m, g, e.perm, 1, s));
          images.push_back(local_action(m, g, e.perm, 2, s));
        }
        for (int img : images)
          if (seen.insert(img).second) next.push_back(img);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<int> local_orbit(const TwoParticleModel& m, const PglGroup& g, int state) {
  return orbit_closure(m, g, state, false);
}

std::vector<int> diagonal_orbit(const TwoParticleModel& m, const PglGroup& g, int state) {
  return orbit_closure(m, g, state, true);
}

MultipletCatalog build_multiplets(const TwoParticleModel& m) {
  if (m.spin().q() != 2) throw std::invalid_argument("multiplet catalog is a q = 2 notion");
  MultipletCatalog c;
  c.singlet = m.index_of_label("S");
  c.triplet = {m.index_of_label("(ab)"), m.index_of_label("(bc)"), m.index_of_label("(ca)")};
  c.doublet = {m.index_of_label("(abc)"), m.index_of_label("(acb)")};
  for (int i = 0; i < 9; ++i) c.product[static_cast<std::size_t>(i)] = m.product_indices()[static_cast<std::size_t>(i)];
  return c;
}

std::vector<std::vector<std::string>> singlet_decompositions(const TwoParticleModel& m) {
  const Field& f = m.spin().field();
  const Vec& target = m.states()[static_cast<std::size_t>(m.index_of_label("S"))].coords;
  const auto& products = m.product_indices();
  std::vector<std::vector<std::string>> out;

  auto sum_matches = [&](const std::vector<int>& idxs) {
    Vec acc(4, f.zero());
    for (int idx : idxs)
      for (int i = 0; i < 4; ++i)
        acc[static_cast<std::size_t>(i)] = f.add(
            acc[static_cast<std::size_t>(i)],
            m.states()[static_cast<std::size_t>(idx)].coords[static_cast<std::size_t>(i)]);
    bool zero = true;
    for (const auto& c : acc) zero = zero && f.is_zero(c);
    return !zero && canonicalize(f, acc) == target;
  };
  // Only decompositions that never reuse a particle-1 or particle-2 factor
  // count; sums like aa+ab+ca also hit S but are not measurement-shaped.
  auto factors_distinct = [&](const std::vector<int>& idxs) {
    std::set<char> rows, cols;
    for (int idx : idxs) {
      const std::string& lbl = m.states()[static_cast<std::size_t>(idx)].label;
      rows.insert(lbl[0]);
      cols.insert(lbl[1]);
    }
    return rows.size() == idxs.size() && cols.size() == idxs.size();
  };

  auto consider = [&](std::vector<int> idxs) {
    if (!factors_distinct(idxs) || !sum_matches(idxs)) return;
    std::vector<std::string> labels;
    for (int idx : idxs) labels.push_back(m.states()[static_cast<std::size_t>(idx)].label);
    out.push_back(std::move(labels));
  };

  for (std::size_t i = 0; i < products.size(); ++i)
    for (std::size_t j = i + 1; j < products.size(); ++j) {
      consider({products[i], products[j]});
      for (std::size_t k = j + 1; k < products.size(); ++k)
        consider({products[i], products[j], products[k]});
    }
  return out;
}

}  // namespace gqm
