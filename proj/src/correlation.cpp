#include "gqm/correlation.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gqm {
namespace {

// |<d x e | psi>| for duals d, e and a four-coordinate state.
int product_bracket_weight(const Field& f, const Vec& d, const Vec& e, const Vec& psi) {
  Felt acc = f.zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      acc = f.add(acc, f.mul(f.mul(d[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]),
                             psi[static_cast<std::size_t>(2 * i + j)]));
  return f.abs(acc);
}

// Correlation numerators for every ordered setting pair on one state, on the
// common denominator `den`. Each pairwise denominator is a sum of four 0/1
// weights, so den = lcm <= 12 and |chsh numerator| <= 4 * den.
struct CorrMatrix {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
  int n = 0;
  std::int64_t at(int i, int j) const { return num[static_cast<std::size_t>(i * n + j)]; }
};

CorrMatrix correlation_matrix(const SpinModel& m, const std::vector<Observable>& settings,
                              const Vec& psi) {
  const Field& f = m.field();
  const int labels = static_cast<int>(m.states().size());
  std::vector<int> w(static_cast<std::size_t>(labels * labels));
  for (int r = 0; r < labels; ++r)
    for (int t = 0; t < labels; ++t)
      w[static_cast<std::size_t>(r * labels + t)] =
          product_bracket_weight(f, m.duals()[static_cast<std::size_t>(r)].coeffs,
                                 m.duals()[static_cast<std::size_t>(t)].coeffs, psi);

  const int n = static_cast<int>(settings.size());
  std::vector<std::int64_t> nums(static_cast<std::size_t>(n * n));
  std::vector<std::int64_t> dens(static_cast<std::size_t>(n * n));
  std::int64_t lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Observable& oi = settings[static_cast<std::size_t>(i)];
      const Observable& oj = settings[static_cast<std::size_t>(j)];
      const int pp = w[static_cast<std::size_t>(oi.plus * labels + oj.plus)];
      const int pm = w[static_cast<std::size_t>(oi.plus * labels + oj.minus)];
      const int mp = w[static_cast<std::size_t>(oi.minus * labels + oj.plus)];
      const int mm = w[static_cast<std::size_t>(oi.minus * labels + oj.minus)];
      const int den = pp + pm + mp + mm;
      if (den == 0) throw std::logic_error("product duals cannot all annihilate a state");
      nums[static_cast<std::size_t>(i * n + j)] = pp - pm - mp + mm;
      dens[static_cast<std::size_t>(i * n + j)] = den;
      lcm = std::lcm(lcm, static_cast<std::int64_t>(den));
    }

  CorrMatrix c;
  c.n = n;
  c.den = lcm;
  c.num.resize(static_cast<std::size_t>(n * n));
  for (std::size_t k = 0; k < c.num.size(); ++k) c.num[k] = nums[k] * (lcm / dens[k]);
  return c;
}

struct StateScan {
  std::int64_t best_abs_num = -1;
  std::int64_t den = 1;
  std::vector<std::array<int, 4>> achievers;
  std::uint64_t achiever_count = 0;
  std::vector<std::uint64_t> histogram;  // indexed by |numerator| over den
  std::uint64_t evaluations = 0;
};

StateScan scan_state(const SpinModel& m, const std::vector<Observable>& settings, const Vec& psi,
                     std::uint64_t max_achievers) {
  const CorrMatrix c = correlation_matrix(m, settings, psi);
  StateScan out;
  out.den = c.den;
  out.histogram.assign(static_cast<std::size_t>(4 * c.den + 1), 0);
  const int n = c.n;
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
          const std::int64_t v = c.at(a1, b1) + c.at(a1, b2) + c.at(a2, b1) - c.at(a2, b2);
          const std::int64_t a = v < 0 ? -v : v;
          ++out.histogram[static_cast<std::size_t>(a)];
          if (a > out.best_abs_num) {
            out.best_abs_num = a;
            out.achievers.clear();
            out.achiever_count = 0;
          }
          if (a == out.best_abs_num) {
            ++out.achiever_count;
            if (max_achievers == 0 || out.achievers.size() < max_achievers)
              out.achievers.push_back({a1, a2, b1, b2});
          }
        }
  out.evaluations = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
                    static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  return out;
}

std::vector<int> scope_states(const TwoParticleModel& m, const ChshOptions& opts) {
  std::vector<int> idx = m.entangled_indices();
  if (opts.include_product) {
    idx.insert(idx.end(), m.product_indices().begin(), m.product_indices().end());
    std::sort(idx.begin(), idx.end());
  }
  return idx;
}

std::vector<Observable> scope_settings(const SpinModel& m, const ChshOptions& opts) {
  return opts.prune ? m.canonical_observables() : m.observables();
}

ChshSearchResult merge_scans(const TwoParticleModel& m, const std::vector<Observable>& settings,
                             const std::vector<int>& states, const std::vector<StateScan>& scans,
                             std::uint64_t max_achievers) {
  ChshSearchResult res;
  res.max_abs = Rational(-1);
  for (const auto& s : scans) {
    const Rational best(s.best_abs_num, s.den);
    if (best > res.max_abs) res.max_abs = best;
  }
  for (std::size_t k = 0; k < scans.size(); ++k) {
    const StateScan& s = scans[k];
    for (std::size_t a = 0; a < s.histogram.size(); ++a)
      if (s.histogram[a] > 0)
        res.histogram[Rational(static_cast<std::int64_t>(a), s.den)] += s.histogram[a];
    res.evaluations += s.evaluations;
    if (Rational(s.best_abs_num, s.den) != res.max_abs) continue;
    res.achiever_count += s.achiever_count;
    if (max_achievers != 0 && res.achievers.size() >= max_achievers) continue;
    const CorrMatrix c = correlation_matrix(
        m.spin(), settings, m.states()[static_cast<std::size_t>(states[k])].coords);
    for (const auto& t : s.achievers) {
      if (max_achievers != 0 && res.achievers.size() >= max_achievers) break;
      ChshAchiever a;
      a.a1 = settings[static_cast<std::size_t>(t[0])];
      a.a2 = settings[static_cast<std::size_t>(t[1])];
      a.b1 = settings[static_cast<std::size_t>(t[2])];
      a.b2 = settings[static_cast<std::size_t>(t[3])];
      a.state = states[k];
      a.value = Rational(c.at(t[0], t[2]) + c.at(t[0], t[3]) + c.at(t[1], t[2]) - c.at(t[1], t[3]),
                         c.den);
      res.achievers.push_back(std::move(a));
    }
  }
  return res;
}

}  // namespace

JointDistribution joint_probabilities(const SpinModel& m, ProductObservable po, const Vec& psi) {
  if (psi.size() != 4) throw std::invalid_argument("two-particle state needs four coordinates");
  const Field& f = m.field();
  const auto& duals = m.duals();
  const int pp = product_bracket_weight(f, duals[static_cast<std::size_t>(po.first.plus)].coeffs,
                                        duals[static_cast<std::size_t>(po.second.plus)].coeffs, psi);
  const int pm = product_bracket_weight(f, duals[static_cast<std::size_t>(po.first.plus)].coeffs,
                                        duals[static_cast<std::size_t>(po.second.minus)].coeffs, psi);
  const int mp = product_bracket_weight(f, duals[static_cast<std::size_t>(po.first.minus)].coeffs,
                                        duals[static_cast<std::size_t>(po.second.plus)].coeffs, psi);
  const int mm = product_bracket_weight(f, duals[static_cast<std::size_t>(po.first.minus)].coeffs,
                                        duals[static_cast<std::size_t>(po.second.minus)].coeffs, psi);
  const int total = pp + pm + mp + mm;
  if (total == 0) throw std::invalid_argument("state annihilated by all four product duals");
  return {{Rational(pp, total), Rational(pm, total), Rational(mp, total), Rational(mm, total)}};
}

Rational correlation(const SpinModel& m, ProductObservable po, const Vec& psi) {
  const auto d = joint_probabilities(m, po, psi);
  return d.p[0] - d.p[1] - d.p[2] + d.p[3];
}

Rational chsh_value(const SpinModel& m, Observable a1, Observable a2, Observable b1,
                    Observable b2, const Vec& psi) {
  return correlation(m, {a1, b1}, psi) + correlation(m, {a1, b2}, psi) +
         correlation(m, {a2, b1}, psi) - correlation(m, {a2, b2}, psi);
}

std::vector<CorrTableRow> two_particle_table(const TwoParticleModel& m) {
  if (m.spin().q() != 2)
    throw std::invalid_argument("the published correlation table is a q = 2 notion");
  std::vector<CorrTableRow> rows;
  const std::vector<Observable> settings{m.spin().by_name("X"), m.spin().by_name("Y"),
                                         m.spin().by_name("Z")};
  for (const Observable& o1 : settings)
    for (const Observable& o2 : settings)
      for (int s : m.entangled_indices()) {
        CorrTableRow row;
        row.obs = {o1, o2};
        row.state = s;
        row.joint =
            joint_probabilities(m.spin(), row.obs, m.states()[static_cast<std::size_t>(s)].coords);
        row.expectation = row.joint.p[0] - row.joint.p[1] - row.joint.p[2] + row.joint.p[3];
        rows.push_back(std::move(row));
      }
  return rows;
}

ChshSearchResult chsh_search(const TwoParticleModel& m, const ChshOptions& opts) {
  const std::vector<int> states = scope_states(m, opts);
  const std::vector<Observable> settings = scope_settings(m.spin(), opts);
  std::vector<StateScan> scans(states.size());

  const int count = static_cast<int>(states.size());
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int k = 0; k < count; ++k)
    scans[static_cast<std::size_t>(k)] = scan_state(
        m.spin(), settings,
        m.states()[static_cast<std::size_t>(states[static_cast<std::size_t>(k)])].coords,
        opts.max_achievers);

  return merge_scans(m, settings, states, scans, opts.max_achievers);
}

ChshSearchResult chsh_search_reference(const TwoParticleModel& m, const ChshOptions& opts) {
  const std::vector<int> states = scope_states(m, opts);
  const std::vector<Observable> settings = scope_settings(m.spin(), opts);

  ChshSearchResult res;
  res.max_abs = Rational(-1);
  std::vector<ChshAchiever> all;
  for (int s : states) {
    const Vec& psi = m.states()[static_cast<std::size_t>(s)].coords;
    Rational best(-1);
    std::vector<ChshAchiever> local;
    for (const auto& a1 : settings)
      for (const auto& a2 : settings)
        for (const auto& b1 : settings)
          for (const auto& b2 : settings) {
            const Rational v = chsh_value(m.spin(), a1, a2, b1, b2, psi);
            const Rational a = v.abs();
            ++res.histogram[a];
            ++res.evaluations;
            if (a > best) {
              best = a;
              local.clear();
            }
            if (a == best) local.push_back({a1, a2, b1, b2, s, v});
          }
    if (best > res.max_abs) res.max_abs = best;
    all.insert(all.end(), local.begin(), local.end());
  }
  for (const auto& a : all)
    if (a.value.abs() == res.max_abs) {
      ++res.achiever_count;
      if (opts.max_achievers == 0 || res.achievers.size() < opts.max_achievers)
        res.achievers.push_back(a);
    }
  return res;
}

}  // namespace gqm
