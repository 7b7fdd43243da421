#include "gqm/hidden_variables.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace gqm {
namespace {

// allowed[i][v1] = bitmask over particle-2 observable j's permitted values,
// 2 bits per j: bit (2j + y2bit). Forbidden (i, j, x, y) clears the pair.
struct PairConstraints {
  int n1 = 0, n2 = 0;
  // mask[i * 2 + v1bit][j] has bit y2bit set iff (v1, y2) is allowed.
  std::vector<std::uint8_t> allowed;
  std::uint8_t at(int i, int v1bit, int j) const {
    return allowed[static_cast<std::size_t>((i * 2 + v1bit) * n2 + j)];
  }
};

PairConstraints build_constraints(const HvScenario& sc) {
  PairConstraints pc;
  pc.n1 = static_cast<int>(sc.obs1.size());
  pc.n2 = static_cast<int>(sc.obs2.size());
  pc.allowed.assign(static_cast<std::size_t>(pc.n1 * 2 * pc.n2), 0b11);
  for (const auto& fo : forbidden_set(sc)) {
    const int v1bit = fo.x == 1 ? 0 : 1;
    const int y2bit = fo.y == 1 ? 0 : 1;
    pc.allowed[static_cast<std::size_t>((fo.i * 2 + v1bit) * pc.n2 + fo.j)] &=
        static_cast<std::uint8_t>(~(1u << y2bit));
  }
  return pc;
}

// Intersects the per-j allowed masks over all particle-1 observables for one
// particle-1 assignment. Empty mask for any j kills the assignment.
bool particle2_options(const PairConstraints& pc, std::uint32_t m1, std::vector<std::uint8_t>& opt) {
  opt.assign(static_cast<std::size_t>(pc.n2), 0b11);
  for (int i = 0; i < pc.n1; ++i) {
    const int v1bit = static_cast<int>((m1 >> i) & 1u);
    for (int j = 0; j < pc.n2; ++j) {
      opt[static_cast<std::size_t>(j)] &= pc.at(i, v1bit, j);
      if (opt[static_cast<std::size_t>(j)] == 0) return false;
    }
  }
  return true;
}

}  // namespace

HvScenario make_scenario(const TwoParticleModel& m, int state,
                         const std::vector<Observable>& obs1,
                         const std::vector<Observable>& obs2) {
  if (obs1.empty() || obs2.empty()) throw std::invalid_argument("empty observable set");
  if (obs1.size() + obs2.size() > 30)
    throw std::invalid_argument("assignment space too large for 32-bit masks");
  HvScenario sc;
  sc.spin = &m.spin();
  sc.state = m.states()[static_cast<std::size_t>(state)].coords;
  sc.state_label = m.states()[static_cast<std::size_t>(state)].label;
  sc.obs1 = obs1;
  sc.obs2 = obs2;
  return sc;
}

HvScenario make_scenario(const TwoParticleModel& m, int state) {
  const auto& canonical = m.spin().canonical_observables();
  return make_scenario(m, state, canonical, canonical);
}

std::vector<ForbiddenOutcome> forbidden_set(const HvScenario& sc) {
  std::vector<ForbiddenOutcome> out;
  for (std::size_t i = 0; i < sc.obs1.size(); ++i)
    for (std::size_t j = 0; j < sc.obs2.size(); ++j) {
      const JointDistribution d =
          joint_probabilities(*sc.spin, {sc.obs1[i], sc.obs2[j]}, sc.state);
      const int xs[4] = {1, 1, -1, -1};
      const int ys[4] = {1, -1, 1, -1};
      for (int k = 0; k < 4; ++k)
        if (d.p[static_cast<std::size_t>(k)].is_zero())
          out.push_back({static_cast<int>(i), static_cast<int>(j), xs[k], ys[k]});
    }
  return out;
}

int assignment_value(std::uint32_t mask, int bit) { return ((mask >> bit) & 1u) ? -1 : 1; }

std::vector<std::uint32_t> surviving_assignments(const HvScenario& sc) {
  const PairConstraints pc = build_constraints(sc);
  std::vector<std::uint32_t> out;
  std::vector<std::uint8_t> opt;
  for (std::uint32_t m1 = 0; m1 < (1u << pc.n1); ++m1) {
    if (!particle2_options(pc, m1, opt)) continue;
    // Expand every compatible particle-2 mask.
    std::vector<std::uint32_t> partial{0};
    for (int j = pc.n2 - 1; j >= 0; --j) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t m2 : partial)
        for (int bit = 0; bit < 2; ++bit)
          if (opt[static_cast<std::size_t>(j)] & (1u << bit))
            next.push_back((m2 << 1) | static_cast<std::uint32_t>(bit));
      partial = std::move(next);
    }
    for (std::uint32_t m2 : partial)
      out.push_back(m1 | (m2 << pc.n1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t surviving_count(const HvScenario& sc) {
  const PairConstraints pc = build_constraints(sc);
  std::uint64_t total = 0;
  std::vector<std::uint8_t> opt;
  for (std::uint32_t m1 = 0; m1 < (1u << pc.n1); ++m1) {
    if (!particle2_options(pc, m1, opt)) continue;
    std::uint64_t ways = 1;
    for (int j = 0; j < pc.n2; ++j)
      ways *= static_cast<std::uint64_t>(opt[static_cast<std::size_t>(j)] == 0b11 ? 2 : 1);
    total += ways;
  }
  return total;
}

std::vector<Implication> implication_chart(const HvScenario& sc) {
  std::vector<Implication> out;
  for (const auto& fo : forbidden_set(sc)) {
    out.push_back({{1, fo.i, fo.x}, {2, fo.j, -fo.y}});
    out.push_back({{2, fo.j, fo.y}, {1, fo.i, -fo.x}});
  }
  std::sort(out.begin(), out.end(), [](const Implication& a, const Implication& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return out;
}

std::optional<ContradictionWitness> find_contradiction(const HvScenario& sc) {
  const auto chart = implication_chart(sc);
  std::vector<HvNode> nodes;
  for (int p = 1; p <= 2; ++p) {
    const auto& obs = p == 1 ? sc.obs1 : sc.obs2;
    for (std::size_t i = 0; i < obs.size(); ++i)
      for (int v : {1, -1}) nodes.push_back({p, static_cast<int>(i), v});
  }

  for (const auto& start : nodes) {
    // BFS closure with parents for chain reconstruction.
    std::map<HvNode, HvNode> parent;
    std::deque<HvNode> queue{start};
    parent[start] = start;
    while (!queue.empty()) {
      const HvNode u = queue.front();
      queue.pop_front();
      for (const auto& imp : chart)
        if (imp.from == u && !parent.contains(imp.to)) {
          parent[imp.to] = u;
          queue.push_back(imp.to);
        }
    }
    auto chain_to = [&](HvNode v) {
      std::vector<HvNode> chain{v};
      while (!(v == start)) {
        v = parent.at(v);
        chain.push_back(v);
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    };
    for (const auto& [v, unused] : parent) {
      (void)unused;
      const HvNode neg{v.particle, v.obs, -v.value};
      if (parent.contains(neg)) {
        ContradictionWitness w;
        w.start = start;
        w.chain_a = chain_to(v);
        w.chain_b = chain_to(neg);
        return w;
      }
    }
  }
  return std::nullopt;
}

RestrictedGapReport restricted_gap_check(const TwoParticleModel& m) {
  if (m.spin().q() != 2) throw std::invalid_argument("restricted gap check is a q = 2 notion");
  const Observable Y = m.spin().by_name("Y");
  const Observable Z = m.spin().by_name("Z");
  const int s = m.index_of_label("S");
  const HvScenario sc = make_scenario(m, s, {Y, Z}, {Y, Z});

  RestrictedGapReport r;
  r.survivors = surviving_assignments(sc);
  const Vec& psi = m.states()[static_cast<std::size_t>(s)].coords;
  r.p_y1z2_pm = joint_probabilities(m.spin(), {Y, Z}, psi).p[1];
  r.p_z1y2_mp = joint_probabilities(m.spin(), {Z, Y}, psi).p[2];
  for (std::uint32_t mask : r.survivors) {
    // bits: 0 = Y1, 1 = Z1, 2 = Y2, 3 = Z2
    if (assignment_value(mask, 0) == 1 && assignment_value(mask, 3) == -1) r.pm_realized = true;
    if (assignment_value(mask, 1) == -1 && assignment_value(mask, 2) == 1) r.mp_realized = true;
  }
  return r;
}

std::vector<std::uint64_t> hv_sweep_entangled(const TwoParticleModel& m, int threads) {
  const auto& idx = m.entangled_indices();
  std::vector<std::uint64_t> counts(idx.size());
  const int n = static_cast<int>(idx.size());
  const int t = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(t)
  for (int k = 0; k < n; ++k)
    counts[static_cast<std::size_t>(k)] =
        surviving_count(make_scenario(m, idx[static_cast<std::size_t>(k)]));
  return counts;
}

std::vector<std::uint64_t> hv_sweep_entangled_serial(const TwoParticleModel& m) {
  const auto& idx = m.entangled_indices();
  std::vector<std::uint64_t> counts(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    counts[k] = surviving_count(make_scenario(m, idx[k]));
  return counts;
}

}  // namespace gqm
