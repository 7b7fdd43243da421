// Command-line front end: every subcommand builds one report and prints it
// as markdown (default), JSON, or bare csv. Exit codes: 0 success, 1
// verification failure or unwritable output, 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gqm/report.hpp"
#include "gqm/version.hpp"

namespace {

struct FormatFlags {
  bool json = false;
  bool csv = false;
  bool markdown = false;
};

void add_format_flags(CLI::App* cmd, FormatFlags* ff) {
  auto* j = cmd->add_flag("--json", ff->json, "emit the JSON document");
  auto* c = cmd->add_flag("--csv", ff->csv, "emit the bare csv table (flat tables only)");
  auto* m = cmd->add_flag("--markdown", ff->markdown, "emit markdown (the default)");
  j->excludes(c);
  j->excludes(m);
  c->excludes(m);
}

gqm::Format pick_format(const FormatFlags& ff) {
  if (ff.json) return gqm::Format::kJson;
  if (ff.csv) return gqm::Format::kCsv;
  return gqm::Format::kMarkdown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tables and searches for the finite-field two-level toy model"};
  app.set_version_flag("--version", std::string(gqm::kToolName) + " " + gqm::kVersion);
  app.require_subcommand(1);

  FormatFlags ff;
  std::string output;
  int q = 2, p = 2, n = 1, n_levels = 2, threads = 0;
  std::uint64_t max_achievers = 1000;
  bool include_product = false, no_prune = false;
  std::string state = "S";
  std::vector<std::string> observables;

  const auto add_common = [&](CLI::App* cmd) {
    add_format_flags(cmd, &ff);
    cmd->add_option("-o,--output", output, "write the document to this file");
  };

  auto* cmd_field = app.add_subcommand(
      "field-table", "addition and multiplication tables of GF(p^n)");
  cmd_field->add_option("--p", p, "characteristic (prime)")->required();
  cmd_field->add_option("--n", n, "extension degree")->default_val(1);
  add_common(cmd_field);

  auto* cmd_states =
      app.add_subcommand("states", "projective state catalog with dual vectors");
  cmd_states->add_option("--q", q, "field order")->required();
  cmd_states->add_option("--n-levels", n_levels, "vector-space dimension")->default_val(2);
  add_common(cmd_states);

  auto* cmd_geometry = app.add_subcommand(
      "geometry", "incidence counts of the 15-state space and its product grid");
  cmd_geometry->add_option("--q", q, "field order (2)")->default_val(2);
  add_common(cmd_geometry);

  auto* cmd_prob =
      app.add_subcommand("prob-table", "single-particle outcome probability table");
  cmd_prob->add_option("--q", q, "field order")->required();
  add_common(cmd_prob);

  auto* cmd_two = app.add_subcommand(
      "two-states", "two-particle states with the product/entangled split");
  cmd_two->add_option("--q", q, "field order (2..5)")->required();
  add_common(cmd_two);

  auto* cmd_corr = app.add_subcommand(
      "corr-table", "joint outcome probabilities on the entangled states");
  cmd_corr->add_option("--q", q, "field order (2)")->default_val(2);
  add_common(cmd_corr);

  auto* cmd_chsh = app.add_subcommand(
      "chsh", "exhaustive scan of the CHSH combination over settings and states");
  cmd_chsh->add_option("--q", q, "field order (2..5)")->required();
  cmd_chsh->add_flag("--include-product", include_product, "scan product states too");
  cmd_chsh->add_flag("--no-prune", no_prune,
                     "scan every ordered setting pair, not just canonical representatives");
  cmd_chsh->add_option("--threads", threads, "worker threads (0 = all cores)");
  cmd_chsh->add_option("--max-achievers", max_achievers,
                       "cap on listed maximal settings (0 = keep all)");
  add_common(cmd_chsh);

  auto* cmd_hv = app.add_subcommand(
      "hv-check", "deterministic-assignment test against zero-probability outcomes");
  cmd_hv->add_option("--q", q, "field order (2..5)")->default_val(2);
  cmd_hv->add_option("--state", state, "two-particle state label")->default_val("S");
  cmd_hv->add_option("--observables", observables,
                     "comma-separated observables used on both particles "
                     "(default: the full canonical set)")
      ->delimiter(',');
  add_common(cmd_hv);

  auto* cmd_group = app.add_subcommand(
      "group", "basis-change group: order, classes, permutation image");
  cmd_group->add_option("--q", q, "field order")->required();
  add_common(cmd_group);

  auto* cmd_census = app.add_subcommand(
      "s6-census", "cycle-type census of the q = 5 permutation image");
  cmd_census->add_option("--q", q, "field order (5)")->default_val(5);
  add_common(cmd_census);

  auto* cmd_verify = app.add_subcommand(
      "verify-all", "run every built-in consistency and regression check");
  cmd_verify->add_option("--q", q, "field order (2..5)")->required();
  cmd_verify->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_common(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  gqm::Report report;
  try {
    if (cmd_field->parsed()) {
      report = gqm::report_field_table(p, n);
    } else if (cmd_states->parsed()) {
      report = gqm::report_states(q, n_levels);
    } else if (cmd_geometry->parsed()) {
      report = gqm::report_geometry(q);
    } else if (cmd_prob->parsed()) {
      report = gqm::report_prob_table(q);
    } else if (cmd_two->parsed()) {
      report = gqm::report_two_states(q);
    } else if (cmd_corr->parsed()) {
      report = gqm::report_corr_table(q);
    } else if (cmd_chsh->parsed()) {
      gqm::ChshOptions opts;
      opts.include_product = include_product;
      opts.prune = !no_prune;
      opts.threads = threads;
      opts.max_achievers = max_achievers;
      report = gqm::report_chsh(q, opts);
    } else if (cmd_hv->parsed()) {
      report = gqm::report_hv_check(q, state, observables);
    } else if (cmd_group->parsed()) {
      report = gqm::report_group(q);
    } else if (cmd_census->parsed()) {
      report = gqm::report_s6_census(q);
    } else {
      report = gqm::report_verify_all(q, threads);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::string doc;
  try {
    doc = gqm::render(report, pick_format(ff), gqm::iso8601_utc_now());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (output.empty()) {
    std::cout << doc;
  } else {
    std::string path = output;
    if (const char* dir = std::getenv("GQM_OUTPUT_DIR"); dir != nullptr && *dir != '\0' &&
                                                         path.front() != '/')
      path = std::string(dir) + "/" + path;
    std::ofstream out(path, std::ios::binary);
    out << doc;
    out.flush();
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return 1;
    }
  }
  return report.ok ? 0 : 1;
}
