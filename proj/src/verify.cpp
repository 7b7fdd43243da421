#include "gqm/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gqm/correlation.hpp"
#include "gqm/field.hpp"
#include "gqm/geometry.hpp"
#include "gqm/group.hpp"
#include "gqm/hidden_variables.hpp"
#include "gqm/projective.hpp"
#include "gqm/rational.hpp"
#include "gqm/reference_tables.hpp"
#include "gqm/spin.hpp"
#include "gqm/two_particle.hpp"

namespace gqm {
namespace {

struct Ctx {
  Field field;
  SpinModel spin;
  TwoParticleModel two;
  PglGroup group;
  int threads = 0;
};

std::string obs_pair_name(const SpinModel& m, const ProductObservable& po) {
  const std::string a = m.alias(po.first);
  const std::string b = m.alias(po.second);
  return a + "1" + b + "2";
}

CheckResult check_field(const Ctx& c) {
  const Field& f = c.field;
  const int q = f.q();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (f.abs(f.mul(f.elt(a), f.elt(b))) != f.abs(f.elt(a)) * f.abs(f.elt(b)))
        return {"field-tables", false, "absolute value is not multiplicative"};
      for (int d = 0; d < q; ++d) {
        const Felt x = f.elt(a), y = f.elt(b), z = f.elt(d);
        if (f.mul(x, f.add(y, z)) != f.add(f.mul(x, y), f.mul(x, z)))
          return {"field-tables", false, "distributivity fails"};
      }
    }
  if (q == 4) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (f.add(f.elt(a), f.elt(b)).idx != ref::gf4_add()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
          return {"field-tables", false, "GF(4) addition deviates from the published table"};
        if (f.mul(f.elt(a), f.elt(b)).idx != ref::gf4_mul()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
          return {"field-tables", false, "GF(4) multiplication deviates from the published table"};
      }
  } else {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (f.add(f.elt(a), f.elt(b)).idx != (a + b) % q)
          return {"field-tables", false, "prime-field addition is not mod-q"};
        if (f.mul(f.elt(a), f.elt(b)).idx != (a * b) % q)
          return {"field-tables", false, "prime-field multiplication is not mod-q"};
      }
  }
  return {"field-tables", true, "q=" + std::to_string(q) + " tables verified"};
}

CheckResult check_pairing(const Ctx& c) {
  const Field& f = c.field;
  const auto& states = c.spin.states();
  const auto& duals = c.spin.duals();
  for (std::size_t r = 0; r < duals.size(); ++r)
    for (std::size_t s = 0; s < states.size(); ++s) {
      const Felt v = bracket(f, duals[r].coeffs, states[s].rep);
      if (f.abs(v) != (r == s ? 0 : 1))
        return {"dual-pairing", false,
                "|<" + duals[r].label + "-bar|" + states[s].label + ">| wrong"};
      if (f.q() >= 3 && f.q() <= 5 &&
          v.idx != ref::dual_pairings(f.q())[r][s])
        return {"dual-pairing", false,
                "<" + duals[r].label + "-bar|" + states[s].label + "> deviates from the published value"};
    }
  return {"dual-pairing", true, "pairing matrix verified"};
}

CheckResult check_eigenstates(const Ctx& c) {
  for (const auto& o : c.spin.observables()) {
    if (c.spin.expectation(o, c.spin.states()[static_cast<std::size_t>(o.plus)]) != Rational(-1))
      return {"eigenstates", false, "state carrying the +1 dual must have expectation -1"};
    if (c.spin.expectation(o, c.spin.states()[static_cast<std::size_t>(o.minus)]) != Rational(1))
      return {"eigenstates", false, "state carrying the -1 dual must have expectation +1"};
  }
  return {"eigenstates", true, "every observable is deterministic on its defining states"};
}

CheckResult check_state_counts(const Ctx& c) {
  const int q = c.field.q();
  if (static_cast<int>(c.spin.states().size()) != q + 1)
    return {"state-counts", false,
            "one-particle count " + std::to_string(c.spin.states().size())};
  const std::size_t total = static_cast<std::size_t>(q) * q * q +
                            static_cast<std::size_t>(q) * q + static_cast<std::size_t>(q) + 1;
  if (c.two.states().size() != total)
    return {"state-counts", false,
            "two-particle count " + std::to_string(c.two.states().size())};
  return {"state-counts", true,
          std::to_string(q + 1) + " single states, " + std::to_string(total) + " pair states"};
}

CheckResult check_one_particle_table(const Ctx& c) {
  if (c.spin.q() != 2) return {"one-particle-table", true, "skipped (published table is q=2)"};
  const auto rows = one_particle_table(c.spin);
  const auto& want = ref::one_particle_q2();
  if (rows.size() != want.size())
    return {"one-particle-table", false, "row count " + std::to_string(rows.size())};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& w = want[i];
    const std::string obs = c.spin.display(r.obs);
    const std::string state = c.spin.states()[static_cast<std::size_t>(r.state)].label;
    if (obs != w.obs || state != w.state)
      return {"one-particle-table", false, "row order mismatch at " + obs + "/" + state};
    if (r.dist.p_plus != Rational(w.pn, w.pd) || r.dist.p_minus != Rational(w.mn, w.md) ||
        r.expectation != Rational(w.en, w.ed))
      return {"one-particle-table", false, "values mismatch at " + obs + "/" + state};
  }
  return {"one-particle-table", true, "9 rows match"};
}

CheckResult check_two_particle_table(const Ctx& c) {
  if (c.spin.q() != 2) return {"two-particle-table", true, "skipped (published table is q=2)"};
  const auto rows = two_particle_table(c.two);
  const auto& want = ref::two_particle_q2();
  if (rows.size() != want.size())
    return {"two-particle-table", false, "row count " + std::to_string(rows.size())};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto& w = want[i];
    const std::string obs = obs_pair_name(c.spin, r.obs);
    const std::string state = c.two.states()[static_cast<std::size_t>(r.state)].label;
    if (obs != w.obs || state != w.state)
      return {"two-particle-table", false, "row order mismatch at " + obs + "/" + state};
    const Rational pp(w.ppn, w.ppd), pm(w.pmn, w.pmd), mp(w.mpn, w.mpd), mm(w.mmn, w.mmd);
    if (r.joint.p[0] != pp || r.joint.p[1] != pm || r.joint.p[2] != mp || r.joint.p[3] != mm ||
        r.expectation != Rational(w.en, w.ed))
      return {"two-particle-table", false, "values mismatch at " + obs + "/" + state};
  }
  return {"two-particle-table", true, "54 rows match"};
}

CheckResult check_relabeling(const Ctx& c) {
  if (c.spin.q() == 2) {
    for (const auto& w : ref::relabel_q2()) {
      const GroupElt* g = nullptr;
      for (const auto& e : c.group.elements()) {
        // Identify the witness by its label action written in cycle form.
        const Perm& p = e.perm;
        const std::string name = w.perm;
        if (name == "(ab)" && p == Perm{1, 0, 2}) g = &e;
        if (name == "(bc)" && p == Perm{0, 2, 1}) g = &e;
        if (name == "(ca)" && p == Perm{2, 1, 0}) g = &e;
        if (name == "(abc)" && p == Perm{1, 2, 0}) g = &e;
        if (name == "(acb)" && p == Perm{2, 0, 1}) g = &e;
        if (g == &e) break;
      }
      if (g == nullptr) return {"observable-relabeling", false, "missing witness"};
      const auto got = c.spin.relabel(g->perm, c.spin.by_name(w.from));
      if (c.spin.alias(got.obs) != w.to || got.sign != w.sign)
        return {"observable-relabeling", false,
                std::string(w.perm) + " on " + w.from + " gave " +
                    (got.sign < 0 ? "-" : "+") + c.spin.alias(got.obs)};
    }
  }
  // Transport invariance: P(sigma A; x | sigma psi) = P(A; x | psi).
  for (const auto& e : c.group.elements())
    for (const auto& o : c.spin.observables())
      for (const auto& s : c.spin.states()) {
        const Observable mapped{e.perm[static_cast<std::size_t>(o.plus)],
                                e.perm[static_cast<std::size_t>(o.minus)]};
        const auto before = c.spin.outcome_probabilities(o, s);
        const auto after = c.spin.outcome_probabilities(
            mapped, c.spin.states()[static_cast<std::size_t>(e.perm[static_cast<std::size_t>(
                        c.spin.label_index(s.label))])]);
        if (before.p_plus != after.p_plus || before.p_minus != after.p_minus)
          return {"observable-relabeling", false, "probabilities not transport-invariant"};
      }
  return {"observable-relabeling", true, "label action verified"};
}

CheckResult check_entanglement(const Ctx& c) {
  const Field& f = c.field;
  // Published coordinates for the q=2 entangled states.
  if (f.q() == 2) {
    for (const auto& w : ref::entangled_q2()) {
      const auto& s = c.two.states()[static_cast<std::size_t>(c.two.index_of_label(w.label))];
      for (int i = 0; i < 4; ++i)
        if (s.coords[static_cast<std::size_t>(i)].idx != w.coords[static_cast<std::size_t>(i)])
          return {"entanglement", false, std::string("coordinates of ") + w.label};
    }
  }
  // Determinant criterion == complement of the exhaustive product set.
  std::set<Vec> products;
  for (const auto& s1 : c.spin.states())
    for (const auto& s2 : c.spin.states()) products.insert(tensor(c.spin, s1, s2).coords);
  std::size_t product_count = 0;
  for (const auto& s : c.two.states()) {
    const bool is_product = products.count(s.coords) > 0;
    if (is_product == s.entangled)
      return {"entanglement", false, "determinant criterion disagrees on " + s.label};
    product_count += is_product ? 1 : 0;
  }
  const std::size_t expect_products =
      static_cast<std::size_t>((f.q() + 1) * (f.q() + 1));
  if (product_count != expect_products || c.two.product_indices().size() != expect_products)
    return {"entanglement", false, "product-state count"};
  return {"entanglement", true,
          std::to_string(c.two.product_indices().size()) + " product / " +
              std::to_string(c.two.entangled_indices().size()) + " entangled"};
}

CheckResult check_factorization(const Ctx& c) {
  const bool exhaustive = c.spin.q() <= 3;
  const auto& obs = exhaustive ? c.spin.observables() : c.spin.canonical_observables();
  for (const auto& s1 : c.spin.states())
    for (const auto& s2 : c.spin.states()) {
      const TwoState prod = tensor(c.spin, s1, s2);
      for (const auto& o1 : obs)
        for (const auto& o2 : obs) {
          const auto joint = joint_probabilities(c.spin, {o1, o2}, prod.coords);
          const auto d1 = c.spin.outcome_probabilities(o1, s1);
          const auto d2 = c.spin.outcome_probabilities(o2, s2);
          if (joint.p[0] != d1.p_plus * d2.p_plus || joint.p[1] != d1.p_plus * d2.p_minus ||
              joint.p[2] != d1.p_minus * d2.p_plus || joint.p[3] != d1.p_minus * d2.p_minus)
            return {"factorization", false,
                    "joint distribution does not factor on " + prod.label};
          if (correlation(c.spin, {o1, o2}, prod.coords) !=
              c.spin.expectation(o1, s1) * c.spin.expectation(o2, s2))
            return {"factorization", false, "correlation does not factor on " + prod.label};
        }
    }
  return {"factorization", true,
          exhaustive ? "all products, all observable pairs" : "all products, canonical pairs"};
}

CheckResult check_local_actions(const Ctx& c) {
  if (c.spin.q() != 2) return {"local-actions", true, "skipped (published actions are q=2)"};
  const auto perm_of = [&](const std::string& name) -> Perm {
    if (name == "(ab)") return {1, 0, 2};
    if (name == "(bc)") return {0, 2, 1};
    if (name == "(ca)") return {2, 1, 0};
    if (name == "(abc)") return {1, 2, 0};
    return {2, 0, 1};  // (acb)
  };
  for (const auto& w : ref::local_actions_q2()) {
    const int from = c.two.index_of_label(w.from);
    const int got = local_action(c.two, c.group, perm_of(w.perm), w.particle, from);
    if (c.two.states()[static_cast<std::size_t>(got)].label != w.to)
      return {"local-actions", false,
              std::string(w.perm) + " on particle " + std::to_string(w.particle) + " of " +
                  w.from + " gave " + c.two.states()[static_cast<std::size_t>(got)].label};
  }
  // Multiplet structure under the diagonal action and the single local orbit.
  const auto m = build_multiplets(c.two);
  if (diagonal_orbit(c.two, c.group, m.singlet).size() != 1)
    return {"local-actions", false, "S is not invariant under diagonal actions"};
  if (diagonal_orbit(c.two, c.group, m.triplet[0]).size() != 3)
    return {"local-actions", false, "transposition multiplet is not a 3-orbit"};
  if (diagonal_orbit(c.two, c.group, m.doublet[0]).size() != 2)
    return {"local-actions", false, "3-cycle multiplet is not a 2-orbit"};
  if (local_orbit(c.two, c.group, m.singlet).size() != 6)
    return {"local-actions", false, "one-sided actions do not reach all six entangled states"};
  const auto decomps = singlet_decompositions(c.two);
  if (decomps.size() != 4)
    return {"local-actions", false,
            "expected 4 singlet decompositions, got " + std::to_string(decomps.size())};
  return {"local-actions", true, "published one-sided actions and orbits verified"};
}

CheckResult check_geometry(const Ctx& c) {
  if (c.spin.q() != 2) return {"incidence-geometry", true, "skipped (geometry report is q=2)"};
  const Pg32 g = build_pg32(c.field);
  if (g.points.size() != 15 || g.lines.size() != 35 || g.planes.size() != 15)
    return {"incidence-geometry", false, "point/line/plane counts"};
  for (int pt = 0; pt < 15; ++pt)
    if (g.lines_through_point(pt) != 7)
      return {"incidence-geometry", false, "lines through " + g.points[static_cast<std::size_t>(pt)].label};
  for (const auto& p : g.planes)
    if (p.pts.size() != 7) return {"incidence-geometry", false, "plane size"};
  for (const auto& l : g.lines)
    if (g.planes_containing_line(l) != 3)
      return {"incidence-geometry", false, "planes containing a line"};
  const GridReport grid = product_grid_check(g);
  if (grid.product_lines.size() != 6 || !grid.rows_and_cols)
    return {"incidence-geometry", false, "product grid lines"};
  if (grid.max_product_lines_in_plane > 2)
    return {"incidence-geometry", false, "three grid lines share a plane"};
  for (const auto& d : grid.decompositions)
    if (!d.sums_to_state || !d.rows_distinct || !d.cols_distinct)
      return {"incidence-geometry", false, "decomposition of " + d.state};
  return {"incidence-geometry", true, "15/35/15 incidence and 3x3 grid verified"};
}

CheckResult check_chsh(const Ctx& c) {
  ChshOptions opts;
  opts.threads = c.threads;
  opts.max_achievers = 256;
  const auto pruned = chsh_search(c.two, opts);
  opts.prune = false;
  const auto full = chsh_search(c.two, opts);
  if (pruned.max_abs != full.max_abs)
    return {"chsh-bound", false, "pruned and full searches disagree on the maximum"};
  if (full.max_abs != Rational(2))
    return {"chsh-bound", false, "maximum |CHSH| is " + full.max_abs.str()};
  if (c.spin.q() == 2) {
    for (const auto& [value, count] : full.histogram) {
      (void)count;
      if (value != Rational(2) && value != Rational(2, 3))
        return {"chsh-bound", false, "unexpected |value| " + value.str()};
    }
    const Observable X = c.spin.by_name("X"), Y = c.spin.by_name("Y"), Z = c.spin.by_name("Z");
    const Vec& s = c.two.states()[static_cast<std::size_t>(c.two.index_of_label("S"))].coords;
    if (chsh_value(c.spin, X, Y, Y, X, s) != Rational(-2))
      return {"chsh-bound", false, "<X,Y;Y,X> on S"};
    if (chsh_value(c.spin, X, Z, Y, Z, s) != Rational(2))
      return {"chsh-bound", false, "<X,Z;Y,Z> on S"};
  }
  return {"chsh-bound", true, "max |CHSH| = 2 (" + std::to_string(full.evaluations) + " evaluations)"};
}

CheckResult check_hidden_variables(const Ctx& c) {
  const auto counts = hv_sweep_entangled(c.two, c.threads);
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0)
      return {"hidden-variables", false,
              std::to_string(counts[k]) + " assignments survive on " +
                  c.two.states()[static_cast<std::size_t>(c.two.entangled_indices()[k])].label};
  if (c.spin.q() == 2) {
    const auto sc = make_scenario(c.two, c.two.index_of_label("S"));
    const auto forbidden = forbidden_set(sc);
    auto has = [&](const char* o1, const char* o2, int x, int y) {
      for (const auto& fo : forbidden)
        if (sc.obs1[static_cast<std::size_t>(fo.i)] == c.spin.by_name(o1) &&
            sc.obs2[static_cast<std::size_t>(fo.j)] == c.spin.by_name(o2) && fo.x == x &&
            fo.y == y)
          return true;
      return false;
    };
    if (!has("X", "X", 1, 1) || !has("X", "Z", 1, -1) || !has("Y", "Z", -1, 1))
      return {"hidden-variables", false, "published forbidden outcomes missing on S"};
    if (!find_contradiction(sc))
      return {"hidden-variables", false, "no contradiction cycle found on S"};
    const auto gap = restricted_gap_check(c.two);
    if (gap.survivors != std::vector<std::uint32_t>{6, 9})
      return {"hidden-variables", false, "restricted {Y,Z} survivors"};
    if (gap.p_y1z2_pm != Rational(1, 3) || gap.p_z1y2_mp != Rational(1, 3) || gap.pm_realized ||
        gap.mp_realized)
      return {"hidden-variables", false, "restricted {Y,Z} gap"};
  }
  return {"hidden-variables", true, "0 surviving assignments on every entangled state"};
}

CheckResult check_group(const Ctx& c) {
  const int q = c.field.q();
  const auto expected_order = static_cast<std::int64_t>(q) * (q * q - 1);
  if (c.group.order() != expected_order)
    return {"symmetry-group", false, "order " + std::to_string(c.group.order())};
  const char* image = q == 2 ? "S3" : q == 3 ? "S4" : q == 4 ? "A5" : nullptr;
  if (image != nullptr && c.group.image_description() != image)
    return {"symmetry-group", false, "image " + c.group.image_description()};
  const auto iso = c.group.isomorphic_reference();
  const char* expected_iso = q == 2 ? "S3" : q == 3 ? "S4" : q == 4 ? "A5" : q == 5 ? "S5" : nullptr;
  if (expected_iso != nullptr && (!iso || *iso != expected_iso))
    return {"symmetry-group", false, "fingerprint match " + iso.value_or("(none)")};
  if (q == 5) {
    const auto fp = c.group.fingerprint();
    if (fp.even_count != 60 || fp.odd_count != 60)
      return {"symmetry-group", false, "parity split"};
    for (const auto& w : ref::s6_census_q5()) {
      const auto it = fp.cycle_census.find(w.cycles);
      const int got = it == fp.cycle_census.end() ? 0 : it->second;
      if (got != w.count)
        return {"symmetry-group", false,
                std::string("census at ") + w.cycle_type + ": " + std::to_string(got)};
    }
    // The even half on its own must look like A5.
    std::vector<Perm> evens;
    for (const auto& e : c.group.elements())
      if (e.parity == 1) evens.push_back(e.perm);
    GroupFingerprint even_fp;
    even_fp.order = static_cast<std::int64_t>(evens.size());
    for (const auto& cls : brute_force_classes(evens))
      even_fp.class_data.insert({cls.elt_order, cls.size});
    if (!fingerprint_match(even_fp, alternating_group_fingerprint(5)))
      return {"symmetry-group", false, "even half does not match A5"};
  }
  return {"symmetry-group", true,
          "order " + std::to_string(c.group.order()) + ", image " + c.group.image_description()};
}

CheckResult check_determinism(const Ctx& c) {
  ChshOptions a;
  a.threads = 1;
  ChshOptions b;
  b.threads = 4;
  const auto ra = chsh_search(c.two, a);
  const auto rb = chsh_search(c.two, b);
  const auto same_achievers = [&] {
    if (ra.achievers.size() != rb.achievers.size()) return false;
    for (std::size_t i = 0; i < ra.achievers.size(); ++i) {
      const auto& x = ra.achievers[i];
      const auto& y = rb.achievers[i];
      if (x.a1 != y.a1 || x.a2 != y.a2 || x.b1 != y.b1 || x.b2 != y.b2 || x.state != y.state ||
          x.value != y.value)
        return false;
    }
    return true;
  }();
  if (ra.max_abs != rb.max_abs || ra.histogram != rb.histogram ||
      ra.achiever_count != rb.achiever_count || !same_achievers)
    return {"determinism", false, "search results vary with thread count"};
  const auto hv1 = hv_sweep_entangled(c.two, 1);
  const auto hv4 = hv_sweep_entangled(c.two, 4);
  if (hv1 != hv4) return {"determinism", false, "assignment sweep varies with thread count"};
  return {"determinism", true, "1-thread and 4-thread results identical"};
}

}  // namespace

std::vector<CheckResult> verify_all(int q, int threads) {
  const int p = q == 4 ? 2 : q;
  const int n = q == 4 ? 2 : 1;
  Ctx c{Field::make(p, n), {}, {}, {}, threads};
  c.spin = SpinModel::build(c.field);
  c.two = TwoParticleModel::build(c.spin);
  c.group = PglGroup::build(c.field);

  std::vector<CheckResult> out;
  out.push_back(check_field(c));
  out.push_back(check_pairing(c));
  out.push_back(check_eigenstates(c));
  out.push_back(check_state_counts(c));
  out.push_back(check_one_particle_table(c));
  out.push_back(check_relabeling(c));
  out.push_back(check_entanglement(c));
  out.push_back(check_factorization(c));
  out.push_back(check_local_actions(c));
  out.push_back(check_geometry(c));
  out.push_back(check_two_particle_table(c));
  out.push_back(check_chsh(c));
  out.push_back(check_hidden_variables(c));
  out.push_back(check_group(c));
  out.push_back(check_determinism(c));
  return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace gqm
