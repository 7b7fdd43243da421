#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gqm/correlation.hpp"
#include "gqm/field.hpp"

namespace gqm {

using Json = nlohmann::ordered_json;

// One CLI report: a semantic JSON body plus its presentation renderings.
// The content hash covers subcommand, config, and body; the timestamp and
// the thread count never enter it, so identical configs hash identically
// no matter how the work was scheduled.
struct Report {
  std::string subcommand;
  Json config;  // semantic flags only (no threads, no output path)
  Json body;
  std::string body_markdown;            // tables below the metadata header
  std::optional<std::string> body_csv;  // flat tabular bodies only
  bool ok = true;                       // false => process exit code 1
};

enum class Format { kMarkdown, kJson, kCsv };

std::uint64_t fnv1a64(std::string_view s);
std::string content_hash(const Report& r);
std::string iso8601_utc_now();

// Full document in the requested format. Markdown and JSON carry the
// metadata wrapper (tool, config echo, timestamp, content hash); csv is the
// bare table. Throws std::invalid_argument when csv is requested for a
// report without a tabular body.
std::string render(const Report& r, Format fmt, const std::string& timestamp);

// Maps a field order to GF(p^n). Throws std::invalid_argument unless q is a
// prime power at most Field::kMaxQ.
Field field_for_q(int q);

Report report_field_table(int p, int n);
Report report_states(int q, int n_levels);
Report report_geometry(int q);
Report report_prob_table(int q);
Report report_two_states(int q);
Report report_corr_table(int q);
Report report_chsh(int q, const ChshOptions& opts);
// Empty observable list means the canonical set on both particles. Names
// accept aliases ("X") and pair labels ("A_ab").
Report report_hv_check(int q, const std::string& state,
                       const std::vector<std::string>& observables);
Report report_group(int q);
Report report_s6_census(int q);
Report report_verify_all(int q, int threads);

}  // namespace gqm
