#include "gqm/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <stdexcept>
#include <utility>

#include "gqm/geometry.hpp"
#include "gqm/hidden_variables.hpp"
#include "gqm/projective.hpp"
#include "gqm/verify.hpp"
#include "gqm/version.hpp"

namespace gqm {
namespace {

Json json_rat(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> coord_names(const Field& f, const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Felt e : v) out.push_back(f.name(e));
  return out;
}

std::string coord_str(const Field& f, const Vec& v) {
  return "[" + join(coord_names(f, v), ", ") + "]";
}

using Row = std::vector<std::string>;

std::string md_table(const Row& header, const std::vector<Row>& rows) {
  std::string out = "|";
  for (const auto& h : header) out += " " + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : rows) {
    out += "|";
    for (const auto& cell : row) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_table(const Row& header, const std::vector<Row>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += csv_field(header[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

// Partitions of n, descending lexicographic (6; 5+1; 4+2; ...).
void partitions_into(int n, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_into(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(n, n, cur, out);
  return out;
}

std::string cycle_type_str(const std::vector<int>& cycles) {
  std::string out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(cycles[i]);
  }
  return out;
}

std::string poly_str(const std::vector<int>& coeffs) {
  std::vector<std::string> terms;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const int c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string t;
    if (i == 0 || c != 1) t += std::to_string(c);
    if (i >= 1) t += "x";
    if (i >= 2) t += "^" + std::to_string(i);
    terms.push_back(std::move(t));
  }
  return terms.empty() ? "0" : join(terms, " + ");
}

std::string obs_pair(const SpinModel& m, const ProductObservable& po) {
  return m.alias(po.first) + "1" + m.alias(po.second) + "2";
}

std::string sign_str(int v) { return v > 0 ? "+1" : "-1"; }

std::string node_str(const SpinModel& spin, const HvScenario& sc, const HvNode& n) {
  const Observable o = n.particle == 1 ? sc.obs1[static_cast<std::size_t>(n.obs)]
                                       : sc.obs2[static_cast<std::size_t>(n.obs)];
  return spin.alias(o) + std::to_string(n.particle) + "=" + sign_str(n.value);
}

struct PairModel {
  Field field;
  SpinModel spin;
  TwoParticleModel two;
};

PairModel build_pair_model(int q) {
  if (q < 2 || q > 5)
    throw std::invalid_argument("two-particle analysis supports q in {2, 3, 4, 5}");
  PairModel pm{field_for_q(q), {}, {}};
  pm.spin = SpinModel::build(pm.field);
  pm.two = TwoParticleModel::build(pm.spin);
  return pm;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string content_hash(const Report& r) {
  const std::uint64_t h =
      fnv1a64(r.subcommand + "\n" + r.config.dump() + "\n" + r.body.dump());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string iso8601_utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[24];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render(const Report& r, Format fmt, const std::string& timestamp) {
  switch (fmt) {
    case Format::kMarkdown: {
      std::string out = "# " + std::string(kToolName) + " " + r.subcommand + "\n\n";
      out += "- tool: " + std::string(kToolName) + " " + kVersion + "\n";
      out += "- config: " + r.config.dump() + "\n";
      out += "- generated: " + timestamp + "\n";
      out += "- content-hash: " + content_hash(r) + "\n\n";
      out += r.body_markdown;
      return out;
    }
    case Format::kJson: {
      Json doc;
      doc["tool"] = kToolName;
      doc["version"] = kVersion;
      doc["subcommand"] = r.subcommand;
      doc["config"] = r.config;
      doc["generated"] = timestamp;
      doc["content_hash"] = content_hash(r);
      doc["body"] = r.body;
      return doc.dump(2) + "\n";
    }
    case Format::kCsv:
      if (!r.body_csv)
        throw std::invalid_argument("csv output is only available for flat tables");
      return *r.body_csv;
  }
  throw std::invalid_argument("unknown format");
}

Field field_for_q(int q) {
  if (q >= 2 && q <= Field::kMaxQ)
    for (int p = 2; p <= q; ++p) {
      if (!is_prime(p) || q % p != 0) continue;
      int n = 0, m = q;
      while (m % p == 0) {
        m /= p;
        ++n;
      }
      if (m == 1) return Field::make(p, n);
      break;
    }
  throw std::invalid_argument("q must be a prime power at most " +
                              std::to_string(Field::kMaxQ));
}

Report report_field_table(int p, int n) {
  const Field f = Field::make(p, n);
  Report r;
  r.subcommand = "field-table";
  r.config = Json{{"p", p}, {"n", n}};

  Json add = Json::array(), mul = Json::array();
  for (int a = 0; a < f.q(); ++a) {
    Json ra = Json::array(), rm = Json::array();
    for (int b = 0; b < f.q(); ++b) {
      ra.push_back(f.add(f.elt(a), f.elt(b)).idx);
      rm.push_back(f.mul(f.elt(a), f.elt(b)).idx);
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  r.body = Json{{"p", p},     {"n", n},     {"q", f.q()}, {"irreducible", f.irreducible()},
                {"add", add}, {"mul", mul}, {"names", f.names()}};

  std::string md = "GF(" + std::to_string(f.q()) + ")";
  if (n > 1)
    md += " = GF(" + std::to_string(p) + "^" + std::to_string(n) + "), modulus " +
          poly_str(f.irreducible());
  else
    md += ", prime field";
  md += "\n\naddition:\n\n";
  const auto table_rows = [&](const Json& t) {
    std::vector<Row> rows;
    for (int a = 0; a < f.q(); ++a) {
      Row row{f.name(f.elt(a))};
      for (int b = 0; b < f.q(); ++b)
        row.push_back(f.name(f.elt(t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
                                        .get<int>())));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Row add_header{"+"}, mul_header{"*"};
  for (int b = 0; b < f.q(); ++b) {
    add_header.push_back(f.name(f.elt(b)));
    mul_header.push_back(f.name(f.elt(b)));
  }
  md += md_table(add_header, table_rows(add));
  md += "\nmultiplication:\n\n";
  md += md_table(mul_header, table_rows(mul));
  r.body_markdown = md;
  return r;
}

Report report_states(int q, int n_levels) {
  const Field f = field_for_q(q);
  if (n_levels < 2) throw std::invalid_argument("--n-levels must be at least 2");
  if (state_count(q, n_levels) > 10000)
    throw std::invalid_argument("state space too large to list");
  const auto states = enumerate_states(f, n_levels);
  const auto duals =
      n_levels == 2 ? derive_dual_basis(f, states) : std::vector<DualPoint>{};

  Report r;
  r.subcommand = "states";
  r.config = Json{{"q", q}, {"n_levels", n_levels}};

  Json jstates = Json::array();
  for (const auto& s : states)
    jstates.push_back(Json{{"label", s.label}, {"coords", coord_names(f, s.rep)}});
  r.body = Json{{"q", q}, {"n_levels", n_levels}, {"count", states.size()}, {"states", jstates}};
  if (n_levels == 2) {
    Json jduals = Json::array();
    for (const auto& d : duals)
      jduals.push_back(Json{{"label", d.label}, {"coeffs", coord_names(f, d.coeffs)}});
    r.body["duals"] = jduals;
  }

  std::string md = "points of PG(" + std::to_string(n_levels - 1) + ", " + std::to_string(q) +
                   "): " + std::to_string(states.size()) + "\n\n";
  std::vector<Row> rows;
  Row header{"state", "coordinates"};
  if (n_levels == 2) header.push_back("dual");
  for (std::size_t i = 0; i < states.size(); ++i) {
    Row row{states[i].label, coord_str(f, states[i].rep)};
    if (n_levels == 2) row.push_back(coord_str(f, duals[i].coeffs));
    rows.push_back(std::move(row));
  }
  md += md_table(header, rows);
  r.body_markdown = md;

  std::vector<Row> crows;
  for (std::size_t i = 0; i < states.size(); ++i) {
    Row row{states[i].label, join(coord_names(f, states[i].rep), " ")};
    if (n_levels == 2) row.push_back(join(coord_names(f, duals[i].coeffs), " "));
    crows.push_back(std::move(row));
  }
  Row cheader{"label", "coords"};
  if (n_levels == 2) cheader.push_back("dual");
  r.body_csv = csv_table(cheader, crows);
  return r;
}

Report report_geometry(int q) {
  if (q != 2) throw std::invalid_argument("the incidence report is defined for q = 2");
  const Field f = Field::make(2);
  const Pg32 g = build_pg32(f);
  const GridReport grid = product_grid_check(g);

  Report r;
  r.subcommand = "geometry";
  r.config = Json{{"q", q}};

  const auto line_labels = [&](const IncidenceLine& l) {
    std::vector<std::string> out;
    for (const int p : l.pts) out.push_back(g.points[static_cast<std::size_t>(p)].label);
    return out;
  };

  Json jlines = Json::array();
  for (const auto& l : grid.product_lines) jlines.push_back(line_labels(l));
  Json jdec = Json::array();
  for (const auto& d : grid.decompositions)
    jdec.push_back(Json{{"state", d.state},
                        {"points", std::vector<std::string>(d.points.begin(), d.points.end())},
                        {"sums_to_state", d.sums_to_state},
                        {"rows_distinct", d.rows_distinct},
                        {"cols_distinct", d.cols_distinct}});
  r.body = Json{{"points", g.points.size()},
                {"lines", g.lines.size()},
                {"planes", g.planes.size()},
                {"lines_per_point", g.lines_through_point(0)},
                {"points_per_plane", g.planes.front().pts.size()},
                {"planes_per_line", g.planes_containing_line(g.lines.front())},
                {"product_grid",
                 Json{{"product_lines", jlines},
                      {"rows_and_cols", grid.rows_and_cols},
                      {"max_product_lines_in_plane", grid.max_product_lines_in_plane},
                      {"decompositions", jdec}}}};

  std::string md;
  md += "- points: " + std::to_string(g.points.size()) + "\n";
  md += "- lines: " + std::to_string(g.lines.size()) + " (" +
        std::to_string(g.lines_through_point(0)) + " through each point)\n";
  md += "- planes: " + std::to_string(g.planes.size()) + " (" +
        std::to_string(g.planes.front().pts.size()) + " points each, " +
        std::to_string(g.planes_containing_line(g.lines.front())) +
        " containing each line)\n";
  md += "- product-only lines: " + std::to_string(grid.product_lines.size()) +
        (grid.rows_and_cols ? " (the three rows and three columns of the grid)" : "") + "\n";
  md += "- most grid lines in one plane: " +
        std::to_string(grid.max_product_lines_in_plane) + "\n\n";
  md += "grid lines:\n\n";
  std::vector<Row> lrows;
  for (const auto& l : grid.product_lines) lrows.push_back({join(line_labels(l), ", ")});
  md += md_table({"points"}, lrows);
  md += "\nentangled-state decompositions:\n\n";
  std::vector<Row> drows;
  for (const auto& d : grid.decompositions)
    drows.push_back({d.state, d.points[0] + " + " + d.points[1] + " + " + d.points[2],
                     d.sums_to_state ? "yes" : "no", d.rows_distinct ? "yes" : "no",
                     d.cols_distinct ? "yes" : "no"});
  md += md_table({"state", "as a sum", "sums to state", "rows distinct", "cols distinct"},
                 drows);
  r.body_markdown = md;
  return r;
}

Report report_prob_table(int q) {
  const Field f = field_for_q(q);
  const SpinModel m = SpinModel::build(f);
  const auto table = one_particle_table(m);

  Report r;
  r.subcommand = "prob-table";
  r.config = Json{{"q", q}};

  Json jrows = Json::array();
  std::vector<Row> rows;
  for (const auto& row : table) {
    const std::string obs = m.display(row.obs);
    const std::string state = m.states()[static_cast<std::size_t>(row.state)].label;
    jrows.push_back(Json{{"observable", obs},
                         {"state", state},
                         {"p_plus", json_rat(row.dist.p_plus)},
                         {"p_minus", json_rat(row.dist.p_minus)},
                         {"expectation", json_rat(row.expectation)}});
    rows.push_back({obs, state, row.dist.p_plus.str(), row.dist.p_minus.str(),
                    row.expectation.str()});
  }
  r.body = Json{{"q", q}, {"rows", jrows}};
  r.body_markdown = md_table({"observable", "state", "P(+1)", "P(-1)", "<A>"}, rows);
  r.body_csv = csv_table({"observable", "state", "p_plus", "p_minus", "expectation"}, rows);
  return r;
}

Report report_two_states(int q) {
  const PairModel pm = build_pair_model(q);

  Report r;
  r.subcommand = "two-states";
  r.config = Json{{"q", q}};

  Json jstates = Json::array();
  std::vector<Row> mrows, crows;
  for (const auto& s : pm.two.states()) {
    jstates.push_back(Json{{"label", s.label},
                           {"coords", coord_names(pm.field, s.coords)},
                           {"entangled", s.entangled}});
    mrows.push_back({s.label, coord_str(pm.field, s.coords),
                     s.entangled ? "entangled" : "product"});
    crows.push_back({s.label, join(coord_names(pm.field, s.coords), " "),
                     s.entangled ? "true" : "false"});
  }
  r.body = Json{{"states", jstates},
                {"total", pm.two.states().size()},
                {"product_count", pm.two.product_indices().size()},
                {"entangled_count", pm.two.entangled_indices().size()}};

  std::string md = md_table({"state", "coordinates", "type"}, mrows);
  md += "\n- total: " + std::to_string(pm.two.states().size()) + "\n";
  md += "- product: " + std::to_string(pm.two.product_indices().size()) + "\n";
  md += "- entangled: " + std::to_string(pm.two.entangled_indices().size()) + "\n";
  r.body_markdown = md;
  r.body_csv = csv_table({"label", "coords", "entangled"}, crows);
  return r;
}

Report report_corr_table(int q) {
  if (q != 2)
    throw std::invalid_argument("the joint-probability table is published for q = 2");
  const PairModel pm = build_pair_model(q);
  const auto table = two_particle_table(pm.two);

  Report r;
  r.subcommand = "corr-table";
  r.config = Json{{"q", q}};

  Json jrows = Json::array();
  std::vector<Row> rows;
  for (const auto& row : table) {
    const std::string obs = obs_pair(pm.spin, row.obs);
    const std::string state = pm.two.states()[static_cast<std::size_t>(row.state)].label;
    jrows.push_back(Json{{"observables", obs},
                         {"state", state},
                         {"p_pp", json_rat(row.joint.p[0])},
                         {"p_pm", json_rat(row.joint.p[1])},
                         {"p_mp", json_rat(row.joint.p[2])},
                         {"p_mm", json_rat(row.joint.p[3])},
                         {"expectation", json_rat(row.expectation)}});
    rows.push_back({obs, state, row.joint.p[0].str(), row.joint.p[1].str(),
                    row.joint.p[2].str(), row.joint.p[3].str(), row.expectation.str()});
  }
  r.body = Json{{"q", q}, {"rows", jrows}};
  r.body_markdown = md_table(
      {"observables", "state", "P(++)", "P(+-)", "P(-+)", "P(--)", "<A1 A2>"}, rows);
  r.body_csv =
      csv_table({"observables", "state", "p_pp", "p_pm", "p_mp", "p_mm", "expectation"}, rows);
  return r;
}

Report report_chsh(int q, const ChshOptions& opts) {
  const PairModel pm = build_pair_model(q);
  const ChshSearchResult res = chsh_search(pm.two, opts);

  Report r;
  r.subcommand = "chsh";
  r.config = Json{{"q", q},
                  {"include_product", opts.include_product},
                  {"prune", opts.prune},
                  {"max_achievers", opts.max_achievers}};

  Json jach = Json::array();
  std::vector<Row> arows;
  for (const auto& a : res.achievers) {
    const std::string state = pm.two.states()[static_cast<std::size_t>(a.state)].label;
    jach.push_back(Json{{"A1", pm.spin.alias(a.a1)},
                        {"A2", pm.spin.alias(a.a2)},
                        {"B1", pm.spin.alias(a.b1)},
                        {"B2", pm.spin.alias(a.b2)},
                        {"state", state},
                        {"value", json_rat(a.value)}});
    arows.push_back({pm.spin.alias(a.a1), pm.spin.alias(a.a2), pm.spin.alias(a.b1),
                     pm.spin.alias(a.b2), state, a.value.str()});
  }
  Json jhist = Json::array();
  std::vector<Row> hrows;
  for (const auto& [value, count] : res.histogram) {
    jhist.push_back(Json{{"value", json_rat(value)}, {"count", count}});
    hrows.push_back({value.str(), std::to_string(count)});
  }
  const bool truncated = res.achiever_count > res.achievers.size();
  r.body = Json{{"q", q},
                {"max_abs", json_rat(res.max_abs)},
                {"achievers", jach},
                {"histogram", jhist},
                {"achiever_count", res.achiever_count},
                {"achievers_truncated", truncated},
                {"evaluations", res.evaluations}};

  std::string md;
  md += "- max |CHSH|: " + res.max_abs.str() + "\n";
  md += "- evaluations: " + std::to_string(res.evaluations) + "\n";
  md += "- achievers: " + std::to_string(res.achiever_count) +
        (truncated ? " (showing first " + std::to_string(res.achievers.size()) + ")" : "") +
        "\n\n";
  md += "|value| distribution:\n\n";
  md += md_table({"|value|", "count"}, hrows);
  md += "\nmaximal settings:\n\n";
  md += md_table({"A1", "A2", "B1", "B2", "state", "value"}, arows);
  r.body_markdown = md;
  return r;
}

Report report_hv_check(int q, const std::string& state,
                       const std::vector<std::string>& observables) {
  const PairModel pm = build_pair_model(q);
  const int sidx = pm.two.index_of_label(state);
  HvScenario sc;
  if (observables.empty()) {
    sc = make_scenario(pm.two, sidx);
  } else {
    std::vector<Observable> obs;
    obs.reserve(observables.size());
    for (const auto& name : observables) obs.push_back(pm.spin.by_name(name));
    sc = make_scenario(pm.two, sidx, obs, obs);
  }
  const auto forbidden = forbidden_set(sc);
  const auto survivors = surviving_assignments(sc);
  const auto implications = implication_chart(sc);
  const auto contradiction = find_contradiction(sc);
  const int bits = static_cast<int>(sc.obs1.size() + sc.obs2.size());

  std::vector<std::string> names1, names2;
  for (const auto& o : sc.obs1) names1.push_back(pm.spin.alias(o));
  for (const auto& o : sc.obs2) names2.push_back(pm.spin.alias(o));

  Report r;
  r.subcommand = "hv-check";
  r.config = Json{{"q", q}, {"state", state}, {"observables", names1}};

  Json jforb = Json::array();
  std::vector<Row> frows;
  for (const auto& fo : forbidden) {
    const std::string o1 = names1[static_cast<std::size_t>(fo.i)] + "1";
    const std::string o2 = names2[static_cast<std::size_t>(fo.j)] + "2";
    jforb.push_back(Json{{"o1", names1[static_cast<std::size_t>(fo.i)]},
                         {"o2", names2[static_cast<std::size_t>(fo.j)]},
                         {"x", fo.x},
                         {"y", fo.y}});
    frows.push_back({"P(" + o1 + "=" + sign_str(fo.x) + ", " + o2 + "=" + sign_str(fo.y) +
                     ") = 0"});
  }

  constexpr std::size_t kMaxListed = 64;
  Json jsurv = Json::array();
  std::vector<Row> srows;
  for (std::size_t k = 0; k < survivors.size() && k < kMaxListed; ++k) {
    Json entry;
    std::vector<std::string> parts;
    for (int b = 0; b < bits; ++b) {
      const bool first = b < static_cast<int>(sc.obs1.size());
      const std::string name =
          first ? names1[static_cast<std::size_t>(b)] + "1"
                : names2[static_cast<std::size_t>(b) - sc.obs1.size()] + "2";
      const std::string value = sign_str(assignment_value(survivors[k], b));
      entry[name] = value;
      parts.push_back(name + "=" + value);
    }
    jsurv.push_back(std::move(entry));
    srows.push_back({join(parts, ", ")});
  }

  Json jimp = Json::array();
  for (const auto& imp : implications)
    jimp.push_back(node_str(pm.spin, sc, imp.from) + " => " + node_str(pm.spin, sc, imp.to));

  const std::string verdict = survivors.empty() ? "no-hidden-variables" : "survivors-exist";
  r.body = Json{{"forbidden", jforb},
                {"survivors", jsurv},
                {"implications", jimp},
                {"verdict", verdict},
                {"assignments", std::uint64_t{1} << bits},
                {"survivor_count", survivors.size()},
                {"survivors_truncated", survivors.size() > kMaxListed}};
  if (contradiction) {
    const auto chain = [&](const std::vector<HvNode>& nodes) {
      std::vector<std::string> parts;
      for (const auto& n : nodes) parts.push_back(node_str(pm.spin, sc, n));
      return parts;
    };
    r.body["contradiction"] = Json{{"start", node_str(pm.spin, sc, contradiction->start)},
                                   {"chain_a", chain(contradiction->chain_a)},
                                   {"chain_b", chain(contradiction->chain_b)}};
  } else {
    r.body["contradiction"] = nullptr;
  }

  std::string md;
  md += "state " + state + ", particle-1 observables {" + join(names1, ", ") +
        "}, particle-2 observables {" + join(names2, ", ") + "}\n\n";
  md += "forbidden outcomes (" + std::to_string(forbidden.size()) + "):\n\n";
  md += md_table({"zero-probability outcome"}, frows);
  md += "\nimplications:\n\n";
  for (const auto& line : jimp) md += "- " + line.get<std::string>() + "\n";
  md += "\nsurviving assignments: " + std::to_string(survivors.size()) + " of " +
        std::to_string(std::uint64_t{1} << bits) + "\n";
  if (!srows.empty()) {
    md += "\n";
    md += md_table({"assignment"}, srows);
  }
  md += "\nverdict: " + verdict + "\n";
  if (contradiction) {
    const auto chain_str = [&](const std::vector<HvNode>& nodes) {
      std::vector<std::string> parts;
      for (const auto& n : nodes) parts.push_back(node_str(pm.spin, sc, n));
      return join(parts, " => ");
    };
    md += "\ncontradiction from " + node_str(pm.spin, sc, contradiction->start) + ":\n\n";
    md += "- " + chain_str(contradiction->chain_a) + "\n";
    md += "- " + chain_str(contradiction->chain_b) + "\n";
  }
  r.body_markdown = md;
  return r;
}

Report report_group(int q) {
  const Field f = field_for_q(q);
  const PglGroup g = PglGroup::build(f);
  const GroupFingerprint fp = g.fingerprint();
  const auto iso = g.isomorphic_reference();

  Report r;
  r.subcommand = "group";
  r.config = Json{{"q", q}};

  Json jclasses = Json::array();
  std::vector<Row> crows;
  for (const auto& c : g.conjugacy_classes()) {
    jclasses.push_back(Json{{"element_order", c.elt_order},
                            {"size", c.size},
                            {"cycle_type", cycle_type_str(c.cycles)}});
    crows.push_back({std::to_string(c.elt_order), std::to_string(c.size),
                     cycle_type_str(c.cycles)});
  }
  r.body = Json{{"q", q},
                {"order", g.order()},
                {"degree", g.states().size()},
                {"image", g.image_description()},
                {"isomorphic_to", iso ? Json(*iso) : Json(nullptr)},
                {"parity", Json{{"even", fp.even_count}, {"odd", fp.odd_count}}},
                {"class_count", g.conjugacy_classes().size()},
                {"classes", jclasses}};

  std::string md;
  md += "- order: " + std::to_string(g.order()) + "\n";
  md += "- acting on " + std::to_string(g.states().size()) + " states\n";
  md += "- image: " + g.image_description() + "\n";
  md += "- isomorphic to: " + (iso ? *iso : std::string("(no S_k/A_k match)")) + "\n";
  md += "- parity: " + std::to_string(fp.even_count) + " even / " +
        std::to_string(fp.odd_count) + " odd\n\n";
  md += "conjugacy classes (" + std::to_string(g.conjugacy_classes().size()) + "):\n\n";
  md += md_table({"element order", "class size", "cycle type"}, crows);
  r.body_markdown = md;
  return r;
}

Report report_s6_census(int q) {
  if (q != 5) throw std::invalid_argument("the cycle-type census is published for q = 5");
  const Field f = field_for_q(q);
  const PglGroup g = PglGroup::build(f);
  const GroupFingerprint fp = g.fingerprint();

  Report r;
  r.subcommand = "s6-census";
  r.config = Json{{"q", q}};

  Json jrows = Json::array();
  std::vector<Row> rows;
  int nonzero = 0;
  for (const auto& part : partitions(static_cast<int>(g.states().size()))) {
    const auto it = fp.cycle_census.find(part);
    const int count = it == fp.cycle_census.end() ? 0 : it->second;
    nonzero += count > 0 ? 1 : 0;
    jrows.push_back(Json{{"cycle_type", cycle_type_str(part)}, {"count", count}});
    rows.push_back({cycle_type_str(part), std::to_string(count)});
  }
  r.body = Json{{"q", q},
                {"order", g.order()},
                {"rows", jrows},
                {"nonzero_types", nonzero},
                {"parity", Json{{"even", fp.even_count}, {"odd", fp.odd_count}}}};

  std::string md = md_table({"cycle type", "elements"}, rows);
  md += "\n- total: " + std::to_string(g.order()) + "\n";
  md += "- nonzero cycle types: " + std::to_string(nonzero) + "\n";
  md += "- parity: " + std::to_string(fp.even_count) + " even / " +
        std::to_string(fp.odd_count) + " odd\n";
  r.body_markdown = md;
  r.body_csv = csv_table({"cycle_type", "count"}, rows);
  return r;
}

Report report_verify_all(int q, int threads) {
  if (q < 2 || q > 5)
    throw std::invalid_argument("verification covers q in {2, 3, 4, 5}");
  const auto checks = verify_all(q, threads);
  const bool ok = all_pass(checks);

  Report r;
  r.subcommand = "verify-all";
  r.config = Json{{"q", q}};
  r.ok = ok;

  Json jchecks = Json::array();
  std::vector<Row> rows;
  for (const auto& c : checks) {
    jchecks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    rows.push_back({c.name, c.pass ? "pass" : "FAIL", c.detail});
  }
  r.body = Json{{"q", q}, {"checks", jchecks}, {"all_pass", ok}};

  std::string md = md_table({"check", "status", "detail"}, rows);
  md += "\nRESULT: " + std::string(ok ? "PASS" : "FAIL") + " (" +
        std::to_string(std::count_if(checks.begin(), checks.end(),
                                     [](const CheckResult& c) { return c.pass; })) +
        "/" + std::to_string(checks.size()) + " checks)\n";
  r.body_markdown = md;
  return r;
}

}  // namespace gqm
