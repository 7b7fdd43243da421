#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gqm/correlation.hpp"
#include "gqm/spin.hpp"
#include "gqm/two_particle.hpp"

namespace gqm {

// Deterministic-assignment test bench: one two-particle state and a set of
// observables per particle (canonical representatives; the reversed pair is
// the negated observable, so it carries no independent assignment).
struct HvScenario {
  const SpinModel* spin = nullptr;
  Vec state;
  std::string state_label;
  std::vector<Observable> obs1, obs2;
};

HvScenario make_scenario(const TwoParticleModel& m, int state,
                         const std::vector<Observable>& obs1,
                         const std::vector<Observable>& obs2);
// Default observable set: all canonical observables on both particles.
HvScenario make_scenario(const TwoParticleModel& m, int state);

// Outcome pair with probability exactly zero. i/j index obs1/obs2; x and y
// are +1 or -1.
struct ForbiddenOutcome {
  int i = 0, j = 0;
  int x = 0, y = 0;
};
std::vector<ForbiddenOutcome> forbidden_set(const HvScenario& sc);

// Assignments are bitmasks: bit k (k < obs1.size()) is particle 1's value
// for obs1[k], the following bits particle 2's; bit 0 means +1, bit 1 means
// -1. A mask survives iff no forbidden outcome pair is hit.
std::vector<std::uint32_t> surviving_assignments(const HvScenario& sc);  // ascending
std::uint64_t surviving_count(const HvScenario& sc);
int assignment_value(std::uint32_t mask, int bit);  // +1 or -1

// Zero-probability outcomes read as implications: P(O1 O2; x y) = 0 forces
// "O1 = x implies O2 = -y" and "O2 = y implies O1 = -x".
struct HvNode {
  int particle = 0;  // 1 or 2
  int obs = 0;       // index into the particle's observable list
  int value = 0;     // +1 or -1
  friend bool operator==(const HvNode&, const HvNode&) = default;
  friend auto operator<=>(const HvNode&, const HvNode&) = default;
};
struct Implication {
  HvNode from, to;
};
std::vector<Implication> implication_chart(const HvScenario& sc);

// A start node whose implication closure contains both some node and its
// negation, with the two witnessing chains.
struct ContradictionWitness {
  HvNode start;
  std::vector<HvNode> chain_a, chain_b;  // both begin at start, end at w / not-w
};
std::optional<ContradictionWitness> find_contradiction(const HvScenario& sc);

// The q = 2 restricted scenario: on S, with only {Y, Z} per particle, two
// assignments survive, yet neither realizes the quantum-possible outcomes
// (Y1, Z2) = (+, -) or (Z1, Y2) = (-, +).
struct RestrictedGapReport {
  std::vector<std::uint32_t> survivors;  // masks over (Y1, Z1, Y2, Z2)
  Rational p_y1z2_pm, p_z1y2_mp;         // quantum probabilities, both 1/3
  bool pm_realized = false, mp_realized = false;
};
RestrictedGapReport restricted_gap_check(const TwoParticleModel& m);

// Survivor count per entangled state under the full canonical observable
// sets. OpenMP across states; the serial variant is the reference.
std::vector<std::uint64_t> hv_sweep_entangled(const TwoParticleModel& m, int threads);
std::vector<std::uint64_t> hv_sweep_entangled_serial(const TwoParticleModel& m);

}  // namespace gqm
