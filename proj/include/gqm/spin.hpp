#pragma once

#include <string>
#include <vector>

#include "gqm/field.hpp"
#include "gqm/group.hpp"
#include "gqm/projective.hpp"
#include "gqm/rational.hpp"

namespace gqm {

// Two-outcome observable A_rs: the dual of label r fires outcome +1, the
// dual of label s fires -1. Reversing the pair negates the observable.
struct Observable {
  int plus = 0;
  int minus = 0;
  friend constexpr bool operator==(const Observable&, const Observable&) = default;
  friend constexpr auto operator<=>(const Observable&, const Observable&) = default;
};

struct SignedObservable {
  Observable obs;
  int sign = 1;
};

struct OutcomeDistribution {
  Rational p_plus, p_minus;
};

// Single-particle model over GF(q) with two levels: q+1 states, their dual
// basis, and the (q+1)q ordered observables. Owns a copy of the field, so it
// is self-contained and freely copyable; immutable after build().
class SpinModel {
 public:
  static SpinModel build(const Field& f);

  const Field& field() const { return field_; }
  int q() const { return field_.q(); }
  const std::vector<ProjPoint>& states() const { return states_; }
  const std::vector<DualPoint>& duals() const { return duals_; }

  // All ordered pairs (r, s), r != s, lexicographic.
  const std::vector<Observable>& observables() const { return observables_; }
  // One representative per +/- pair: {A_ab, A_bc, A_ca} for q = 2 (the cyclic
  // convention behind the X/Y/Z aliases), r < s otherwise.
  const std::vector<Observable>& canonical_observables() const { return canonical_; }

  bool is_canonical(Observable o) const;
  Observable negate(Observable o) const { return {o.minus, o.plus}; }

  std::string display(Observable o) const;  // "A_ab"
  // q = 2: "X", "-Y", ...; otherwise same as display().
  std::string alias(Observable o) const;

  // Resolves "A_ab", an alias ("X", "-Z"), or an alias with particle suffix
  // stripped by the caller. Throws std::invalid_argument if unknown.
  Observable by_name(const std::string& name) const;
  int label_index(const std::string& label) const;

  // P(+|psi), P(-|psi) from the squared-bracket rule, normalized over the
  // two outcomes. Defined for any nonzero vector, not just catalog states.
  OutcomeDistribution outcome_probabilities(Observable o, const Vec& psi) const;
  OutcomeDistribution outcome_probabilities(Observable o, const ProjPoint& s) const {
    return outcome_probabilities(o, s.rep);
  }
  Rational expectation(Observable o, const Vec& psi) const;
  Rational expectation(Observable o, const ProjPoint& s) const { return expectation(o, s.rep); }

  // Label relabeling sigma sends A_rs to A_{sigma(r) sigma(s)}, reported as
  // a canonical observable with a sign.
  SignedObservable relabel(const Perm& sigma, Observable o) const;
  // Same, but rejects permutations with no matrix witness in PGL(2, q).
  SignedObservable relabel_checked(const PglGroup& g, const Perm& sigma, Observable o) const;

 private:
  Field field_;
  std::vector<ProjPoint> states_;
  std::vector<DualPoint> duals_;
  std::vector<Observable> observables_;
  std::vector<Observable> canonical_;
};

struct ProbTableRow {
  Observable obs;
  int state = 0;
  OutcomeDistribution dist;
  Rational expectation;
};

// For q = 2 the three canonical observables against the three states, in the
// published layout; for q > 2 every ordered observable against every state.
std::vector<ProbTableRow> one_particle_table(const SpinModel& m);

}  // namespace gqm
