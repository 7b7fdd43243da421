#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "gqm/field.hpp"
#include "gqm/group.hpp"
#include "gqm/projective.hpp"
#include "gqm/reference_tables.hpp"
#include "gqm/spin.hpp"
#include "gqm/two_particle.hpp"

using gqm::Field;
using gqm::Perm;
using gqm::SpinModel;
using gqm::TwoParticleModel;
using gqm::Vec;

namespace {

Field make_q(int q) { return q == 4 ? Field::make(2, 2) : Field::make(q); }

TwoParticleModel build(const Field& f) { return TwoParticleModel::build(SpinModel::build(f)); }

Vec vec(std::initializer_list<int> idx) {
  Vec v;
  for (const int i : idx) v.push_back(gqm::Felt{static_cast<std::uint8_t>(i)});
  return v;
}

Perm perm_of(const std::string& name) {
  if (name == "(ab)") return {1, 0, 2};
  if (name == "(bc)") return {0, 2, 1};
  if (name == "(ca)") return {2, 1, 0};
  if (name == "(abc)") return {1, 2, 0};
  if (name == "(acb)") return {2, 0, 1};
  return {0, 1, 2};
}

}  // namespace

TEST_SUITE("two_particle") {

TEST_CASE("catalog sizes and the product/entangled split") {
  const int totals[] = {15, 40, 85, 156};
  const int qs[] = {2, 3, 4, 5};
  for (int i = 0; i < 4; ++i) {
    const int q = qs[i];
    CAPTURE(q);
    const auto m = build(make_q(q));
    CHECK(m.states().size() == static_cast<std::size_t>(totals[i]));
    CHECK(m.product_indices().size() == static_cast<std::size_t>((q + 1) * (q + 1)));
    CHECK(m.entangled_indices().size() ==
          m.states().size() - m.product_indices().size());
  }
}

TEST_CASE("tensor products of catalog states") {
  const auto m2 = build(make_q(2));
  const auto& spin = m2.spin();
  CHECK(gqm::tensor(spin, spin.states()[0], spin.states()[0]).coords == vec({1, 0, 0, 0}));
  CHECK(gqm::tensor(spin, spin.states()[0], spin.states()[1]).coords == vec({0, 1, 0, 0}));
  CHECK(gqm::tensor(spin, spin.states()[2], spin.states()[2]).coords == vec({1, 1, 1, 1}));
  CHECK(gqm::tensor(spin, spin.states()[0], spin.states()[1]).label == "ab");

  // canonicalization absorbs scalars picked up by the product
  const auto m3 = build(make_q(3));
  const auto& spin3 = m3.spin();
  const auto cc = gqm::tensor(spin3, spin3.states()[2], spin3.states()[2]);
  CHECK(cc.coords == vec({1, 2, 2, 1}));  // [2,1]x[2,1] = [4,2,2,1], already last-1
  CHECK_FALSE(cc.entangled);
}

TEST_CASE("products are never entangled, for every field in range") {
  for (const int q : {2, 3, 4, 5}) {
    const auto m = build(make_q(q));
    const auto& spin = m.spin();
    for (const auto& s1 : spin.states())
      for (const auto& s2 : spin.states()) {
        const auto prod = gqm::tensor(spin, s1, s2);
        CHECK_FALSE(prod.entangled);
        CHECK_FALSE(m.states()[static_cast<std::size_t>(m.index_of(prod.coords))].entangled);
      }
  }
}

TEST_CASE("the determinant test agrees with an exhaustive product search") {
  for (const int q : {2, 3}) {
    const Field f = make_q(q);
    const auto m = build(f);
    std::set<Vec> products;
    for (const auto& s1 : m.spin().states())
      for (const auto& s2 : m.spin().states())
        products.insert(gqm::tensor(m.spin(), s1, s2).coords);
    for (const auto& s : m.states()) {
      CHECK(gqm::is_entangled(f, s.coords) == (products.count(s.coords) == 0));
      CHECK(s.entangled == gqm::is_entangled(f, s.coords));
    }
  }
}

TEST_CASE("published coordinates of the six entangled states") {
  const auto m = build(make_q(2));
  for (const auto& w : gqm::ref::entangled_q2()) {
    const auto& s = m.states()[static_cast<std::size_t>(m.index_of_label(w.label))];
    CHECK(s.entangled);
    for (int k = 0; k < 4; ++k) CHECK(s.coords[static_cast<std::size_t>(k)].idx == w.coords[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("label lookups") {
  const auto m = build(make_q(2));
  CHECK(m.index_of_label("S") == 9);
  CHECK(m.index_of(vec({0, 1, 1, 0})) == 9);
  CHECK_THROWS_AS(m.index_of_label("nope"), std::invalid_argument);
  CHECK_THROWS_AS(m.index_of(vec({0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("one-sided basis changes reproduce the published action table") {
  const auto m = build(make_q(2));
  const auto g = gqm::PglGroup::build(m.spin().field());
  for (const auto& w : gqm::ref::local_actions_q2()) {
    CAPTURE(w.perm);
    CAPTURE(w.particle);
    CAPTURE(w.from);
    const int got =
        gqm::local_action(m, g, perm_of(w.perm), w.particle, m.index_of_label(w.from));
    CHECK(m.states()[static_cast<std::size_t>(got)].label == w.to);
  }
}

TEST_CASE("local actions preserve entanglement and act invertibly") {
  for (const int q : {2, 3}) {
    const auto m = build(make_q(q));
    const auto g = gqm::PglGroup::build(m.spin().field());
    for (const auto& e : g.elements())
      for (int particle : {1, 2}) {
        std::set<int> image;
        for (int s = 0; s < static_cast<int>(m.states().size()); ++s) {
          const int t = m.index_of(gqm::local_action_vec(m.spin().field(), e.mat, particle,
                                                         m.states()[static_cast<std::size_t>(s)].coords));
          CHECK(m.states()[static_cast<std::size_t>(t)].entangled ==
                m.states()[static_cast<std::size_t>(s)].entangled);
          image.insert(t);
        }
        CHECK(image.size() == m.states().size());
      }
  }
}

TEST_CASE("orbit structure of the entangled states at q=2") {
  const auto m = build(make_q(2));
  const auto g = gqm::PglGroup::build(m.spin().field());
  const auto mult = gqm::build_multiplets(m);

  CHECK(m.states()[static_cast<std::size_t>(mult.singlet)].label == "S");
  CHECK(gqm::diagonal_orbit(m, g, mult.singlet).size() == 1);
  CHECK(gqm::diagonal_orbit(m, g, mult.triplet[0]).size() == 3);
  CHECK(gqm::diagonal_orbit(m, g, mult.doublet[0]).size() == 2);

  // under one-sided actions everything entangled merges into a single orbit
  const auto orbit = gqm::local_orbit(m, g, mult.singlet);
  std::vector<int> entangled = m.entangled_indices();
  std::sort(entangled.begin(), entangled.end());
  CHECK(orbit == entangled);

  // diagonal triplet orbit is exactly the three transposition states
  const auto triplet_orbit = gqm::diagonal_orbit(m, g, mult.triplet[0]);
  std::set<std::string> labels;
  for (const int s : triplet_orbit) labels.insert(m.states()[static_cast<std::size_t>(s)].label);
  CHECK(labels == std::set<std::string>{"(ab)", "(bc)", "(ca)"});
}

TEST_CASE("the invariant state decomposes in exactly four ways") {
  const auto m = build(make_q(2));
  const auto decomps = gqm::singlet_decompositions(m);
  REQUIRE(decomps.size() == 4);
  std::set<std::vector<std::string>> got(decomps.begin(), decomps.end());
  CHECK(got.count({"aa", "bb", "cc"}) == 1);
  CHECK(got.count({"ab", "ba"}) == 1);
  CHECK(got.count({"bc", "cb"}) == 1);
  CHECK(got.count({"ac", "ca"}) == 1);

  // and each of them really sums to S coordinatewise over GF(2)
  const Field& f = m.spin().field();
  const Vec s = m.states()[static_cast<std::size_t>(m.index_of_label("S"))].coords;
  for (const auto& d : decomps) {
    Vec acc = vec({0, 0, 0, 0});
    for (const auto& label : d) {
      const auto& c = m.states()[static_cast<std::size_t>(m.index_of_label(label))].coords;
      for (int k = 0; k < 4; ++k) acc[static_cast<std::size_t>(k)] = f.add(acc[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)]);
    }
    CHECK(acc == s);
  }
}

TEST_CASE("specific one-sided moves used in the narrative") {
  const auto m = build(make_q(2));
  const auto g = gqm::PglGroup::build(m.spin().field());
  const int s = m.index_of_label("S");
  // acting on particle 1 with a 3-cycle turns S into the other 3-cycle state
  CHECK(m.states()[static_cast<std::size_t>(gqm::local_action(m, g, perm_of("(acb)"), 1, s))].label ==
        "(abc)");
  // the same 3-cycle on particle 2 gives the partner state
  CHECK(m.states()[static_cast<std::size_t>(gqm::local_action(m, g, perm_of("(abc)"), 2, s))].label ==
        "(abc)");
}

}  // TEST_SUITE
