// Timing harness for the two parallel kernels against their serial
// references. Not a test: it prints a table and exits 0 unless a kernel
// disagrees with its reference on the cases where both run.

#include <omp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "gqm/correlation.hpp"
#include "gqm/field.hpp"
#include "gqm/hidden_variables.hpp"
#include "gqm/spin.hpp"
#include "gqm/two_particle.hpp"

namespace {

struct Models {
  gqm::Field field;
  gqm::SpinModel spin;
  gqm::TwoParticleModel two;
};

Models build(int q) {
  Models m{q == 4 ? gqm::Field::make(2, 2) : gqm::Field::make(q), {}, {}};
  m.spin = gqm::SpinModel::build(m.field);
  m.two = gqm::TwoParticleModel::build(m.spin);
  return m;
}

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same_search(const gqm::ChshSearchResult& a, const gqm::ChshSearchResult& b) {
  return a.max_abs == b.max_abs && a.histogram == b.histogram &&
         a.achiever_count == b.achiever_count && a.evaluations == b.evaluations;
}

int failures = 0;

void chsh_row(const char* name, int q, bool prune, bool include_product, bool with_reference) {
  const Models m = build(q);
  gqm::ChshOptions opts;
  opts.prune = prune;
  opts.include_product = include_product;
  opts.max_achievers = 16;

  gqm::ChshSearchResult ref, one, all;
  double t_ref = -1.0;
  if (with_reference) t_ref = seconds([&] { ref = gqm::chsh_search_reference(m.two, opts); });
  opts.threads = 1;
  const double t_one = seconds([&] { one = gqm::chsh_search(m.two, opts); });
  opts.threads = 0;
  const double t_all = seconds([&] { all = gqm::chsh_search(m.two, opts); });

  bool ok = same_search(one, all);
  if (with_reference) ok = ok && same_search(ref, one);
  if (!ok) ++failures;

  char refbuf[32];
  if (with_reference)
    std::snprintf(refbuf, sizeof refbuf, "%8.3f", t_ref);
  else
    std::snprintf(refbuf, sizeof refbuf, "%8s", "-");
  std::printf("%-34s %12llu %s %8.3f %8.3f %6.1fx  %s\n", name,
              static_cast<unsigned long long>(one.evaluations), refbuf, t_one, t_all,
              t_one / t_all, ok ? "ok" : "MISMATCH");
}

void hv_row(const char* name, int q) {
  const Models m = build(q);
  std::vector<std::uint64_t> ref, one, all;
  const double t_ref = seconds([&] { ref = gqm::hv_sweep_entangled_serial(m.two); });
  const double t_one = seconds([&] { one = gqm::hv_sweep_entangled(m.two, 1); });
  const double t_all = seconds([&] { all = gqm::hv_sweep_entangled(m.two, 0); });
  const bool ok = ref == one && one == all;
  if (!ok) ++failures;
  std::printf("%-34s %12zu %8.3f %8.3f %8.3f %6.1fx  %s\n", name, ref.size(), t_ref, t_one,
              t_all, t_one / t_all, ok ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-34s %12s %8s %8s %8s %7s\n", "case", "work", "serial", "1 thr",
              "all thr", "speedup");

  chsh_row("chsh q=3 all settings, entangled", 3, false, false, true);
  chsh_row("chsh q=4 canonical, entangled", 4, true, false, true);
  chsh_row("chsh q=4 all settings, all states", 4, false, true, false);
  chsh_row("chsh q=5 all settings, all states", 5, false, true, false);
  hv_row("hv sweep q=4 (entangled states)", 4);
  hv_row("hv sweep q=5 (entangled states)", 5);

  if (failures != 0) {
    std::printf("\n%d case(s) disagreed with the reference\n", failures);
    return 1;
  }
  return 0;
}
