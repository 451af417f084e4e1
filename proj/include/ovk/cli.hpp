#pragma once

#include "ovk/open_invariants.hpp"
#include "ovk/rational.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ovk::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

/// Worker cap: OVK_THREADS when set to a positive integer, else the hardware count.
unsigned worker_count();

/// {"num": "...", "den": "..."}
Json rational_json(const Rational& value);
Rational rational_from_json(const Json& value);

/// Row with the key fields g, h, d, parts, a followed by value and path.
Json invariant_row(const OpenInvariantKey& key, const Rational& value, const std::string& path);

/// Renders a document. JSON keeps `header` and nests the rows under "rows";
/// CSV and text print the rows only.
std::string render(const Json& header, const std::vector<Json>& rows, Format format);

/// Optional range flags; unset fields take per-suite defaults.
struct SuiteRanges {
  std::optional<int> gmax;
  std::optional<int> dmax;
  std::optional<int> hmax;
  std::optional<long> amin;
  std::optional<long> amax;
  std::optional<int> mmax;
  std::optional<int> samples;
};

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();

/// Runs one verification suite, fanning cases out over worker threads.
/// Results come back in generation order. Throws InvalidArgument on bad ranges.
std::vector<CaseResult> run_suite(const std::string& suite, const SuiteRanges& ranges);

/// Table rows as emitted by `table bg|nd|open`.
std::vector<Json> bg_rows(int gmax);
std::vector<Json> nd_rows(long framing, int dmax);
std::vector<Json> open_rows(int genus, int boundaries, int dmin, int dmax, long framing, const std::string& path);

/// Recomputes every row of a table document and returns the re-rendered JSON text.
std::string recompute_table(const Json& document);

/// Entry point of the `ovk` executable. Exit codes: 0 success, 1 failed
/// check, 2 malformed input or unsupported request.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ovk::cli
