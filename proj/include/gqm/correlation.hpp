#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gqm/rational.hpp"
#include "gqm/spin.hpp"
#include "gqm/two_particle.hpp"

namespace gqm {

// Joint measurement: first observable on particle 1, second on particle 2.
struct ProductObservable {
  Observable first, second;
};

// Probabilities of the four outcome pairs, in ++, +-, -+, -- order.
struct JointDistribution {
  std::array<Rational, 4> p{};
};

// Outcome (x, y) fires on the product dual (x-dual of first) x (y-dual of
// second); probabilities are normalized squared brackets over the four.
JointDistribution joint_probabilities(const SpinModel& m, ProductObservable po, const Vec& psi);

Rational correlation(const SpinModel& m, ProductObservable po, const Vec& psi);

// <A1 B1> + <A1 B2> + <A2 B1> - <A2 B2> on psi.
Rational chsh_value(const SpinModel& m, Observable a1, Observable a2, Observable b1,
                    Observable b2, const Vec& psi);

struct CorrTableRow {
  ProductObservable obs;
  int state = 0;  // index into the two-particle catalog
  JointDistribution joint;
  Rational expectation;
};

// q = 2 only: the nine X/Y/Z setting pairs against the six entangled states,
// first-particle setting major.
std::vector<CorrTableRow> two_particle_table(const TwoParticleModel& m);

struct ChshOptions {
  bool include_product = false;  // scan product states too, not just entangled
  bool prune = true;             // restrict settings to canonical observables
  int threads = 0;               // 0 = OpenMP default
  std::uint64_t max_achievers = 0;  // 0 = keep all
};

struct ChshAchiever {
  Observable a1, a2, b1, b2;
  int state = 0;
  Rational value;
};

struct ChshSearchResult {
  Rational max_abs;
  std::vector<ChshAchiever> achievers;  // states in catalog order, settings in scan order
  std::uint64_t achiever_count = 0;     // total found, regardless of max_achievers
  std::map<Rational, std::uint64_t> histogram;  // |value| -> evaluations
  std::uint64_t evaluations = 0;
};

// Exhaustive scan over ordered 4-tuples of settings and in-scope states.
// Integer kernel on a per-state common denominator, OpenMP across states;
// results are deterministic for any thread count.
ChshSearchResult chsh_search(const TwoParticleModel& m, const ChshOptions& opts);

// Slow reference: same scan through chsh_value's rational arithmetic,
// single-threaded. Kept as the oracle the kernel is tested against.
ChshSearchResult chsh_search_reference(const TwoParticleModel& m, const ChshOptions& opts);

}  // namespace gqm
