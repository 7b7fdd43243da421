#include "gqm/spin.hpp"

#include <stdexcept>

namespace gqm {

SpinModel SpinModel::build(const Field& f) {
  SpinModel m;
  m.field_ = f;
  m.states_ = enumerate_states(f, 2);
  m.duals_ = derive_dual_basis(f, m.states_);
  const int n = static_cast<int>(m.states_.size());
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      if (r != s) m.observables_.push_back({r, s});
  if (f.q() == 2) {
    m.canonical_ = {{0, 1}, {1, 2}, {2, 0}};  // A_ab, A_bc, A_ca
  } else {
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s) m.canonical_.push_back({r, s});
  }
  return m;
}

bool SpinModel::is_canonical(Observable o) const {
  if (q() != 2) return o.plus < o.minus;
  for (const auto& c : canonical_)
    if (c == o) return true;
  return false;
}

std::string SpinModel::display(Observable o) const {
  return "A_" + states_[static_cast<std::size_t>(o.plus)].label +
         states_[static_cast<std::size_t>(o.minus)].label;
}

std::string SpinModel::alias(Observable o) const {
  if (q() != 2) return display(o);
  static const char* names[3] = {"Z", "X", "Y"};  // A_ab, A_bc, A_ca
  for (int i = 0; i < 3; ++i) {
    if (o == canonical_[static_cast<std::size_t>(i)]) return names[i];
    if (o == negate(canonical_[static_cast<std::size_t>(i)])) return std::string("-") + names[i];
  }
  throw std::logic_error("observable outside alias set");
}

int SpinModel::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown state label: " + label);
}

Observable SpinModel::by_name(const std::string& name) const {
  if (q() == 2) {
    static const char* names[3] = {"Z", "X", "Y"};
    for (int i = 0; i < 3; ++i) {
      if (name == names[i]) return canonical_[static_cast<std::size_t>(i)];
      if (name == std::string("-") + names[i])
        return negate(canonical_[static_cast<std::size_t>(i)]);
    }
  }
  if (name.size() > 2 && name.rfind("A_", 0) == 0) {
    const std::string pair = name.substr(2);
    for (const auto& o : observables_)
      if (pair == states_[static_cast<std::size_t>(o.plus)].label +
                      states_[static_cast<std::size_t>(o.minus)].label)
        return o;
  }
  throw std::invalid_argument("unknown observable name: " + name);
}

OutcomeDistribution SpinModel::outcome_probabilities(Observable o, const Vec& psi) const {
  const Field& f = field_;
  const int wp = f.abs(bracket(f, duals_[static_cast<std::size_t>(o.plus)].coeffs, psi));
  const int wm = f.abs(bracket(f, duals_[static_cast<std::size_t>(o.minus)].coeffs, psi));
  const int total = wp + wm;
  if (total == 0) throw std::invalid_argument("state annihilated by both outcome duals");
  return {Rational(wp, total), Rational(wm, total)};
}

Rational SpinModel::expectation(Observable o, const Vec& psi) const {
  const auto d = outcome_probabilities(o, psi);
  return d.p_plus - d.p_minus;
}

SignedObservable SpinModel::relabel(const Perm& sigma, Observable o) const {
  if (sigma.size() != states_.size()) throw std::invalid_argument("permutation degree mismatch");
  const Observable mapped{sigma[static_cast<std::size_t>(o.plus)],
                          sigma[static_cast<std::size_t>(o.minus)]};
  if (is_canonical(mapped)) return {mapped, 1};
  return {negate(mapped), -1};
}

SignedObservable SpinModel::relabel_checked(const PglGroup& g, const Perm& sigma,
                                            Observable o) const {
  if (g.witness(sigma) == nullptr)
    throw std::invalid_argument("label permutation has no basis-transformation witness");
  return relabel(sigma, o);
}

std::vector<ProbTableRow> one_particle_table(const SpinModel& m) {
  std::vector<ProbTableRow> rows;
  const auto& obs = m.q() == 2 ? m.canonical_observables() : m.observables();
  for (const auto& o : obs)
    for (std::size_t s = 0; s < m.states().size(); ++s) {
      ProbTableRow row;
      row.obs = o;
      row.state = static_cast<int>(s);
      row.dist = m.outcome_probabilities(o, m.states()[s]);
      row.expectation = row.dist.p_plus - row.dist.p_minus;
      rows.push_back(row);
    }
  return rows;
}

}  // namespace gqm
