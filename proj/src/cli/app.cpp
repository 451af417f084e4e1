#include "ovk/cli.hpp"
#include "ovk/errors.hpp"
#include "ovk/localization.hpp"
#include "ovk/maslov.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

namespace ovk::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

struct Output {
  std::string format = "text";
  std::string path;
};

void add_output_options(CLI::App* cmd, Output& output) {
  cmd->add_option("--format", output.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", output.path, "write to this file instead of stdout");
}

/// Writes `text` to the output path or `out`. False if the file cannot be written.
bool emit(const Output& output, const std::string& text, std::ostream& out, std::ostream& err) {
  if (output.path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(output.path, std::ios::binary);
  if (!file) {
    err << "ovk: cannot write '" << output.path << "'\n";
    return false;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "ovk: cannot write '" << output.path << "'\n";
    return false;
  }
  return true;
}

struct InvariantArgs {
  int g = 0;
  std::optional<int> h;
  std::optional<int> d;
  std::vector<int> parts;
  long a = 0;
  bool symbolic = false;
  bool cross_check = false;
  std::string path = "closed-form";
  Output output;
};

int cmd_invariant(const InvariantArgs& args, std::ostream& out, std::ostream& err) {
  const int h = args.h.value_or(static_cast<int>(args.parts.size()));
  const int d = args.d.value_or(std::accumulate(args.parts.begin(), args.parts.end(), 0));
  const OpenInvariantKey key(args.g, h, d, args.parts, args.a);
  const Format format = parse_format(args.output.format);

  if (args.symbolic) {
    const SymbolicIntegrand integrand = symbolic_integrand(key);
    std::string text;
    if (format == Format::Text) {
      text = integrand.str() + "\n";
    } else {
      Json row;
      row["g"] = key.genus();
      row["h"] = key.boundaries();
      row["d"] = key.degree();
      row["parts"] = key.parts();
      row["a"] = key.framing();
      row["integrand"] = integrand.integrand.str();
      row["reduced_hodge"] = integrand.reduced_class_part().str();
      row["integrable"] = integrand.integrable();
      row["path"] = "symbolic";
      text = format == Format::Json ? row.dump(2) + "\n" : render(Json(), {row}, Format::Csv);
    }
    return emit(args.output, text, out, err) ? kOk : kMalformed;
  }

  Rational value;
  std::string path = args.path;
  bool mismatch = false;
  if (args.cross_check) {
    const Rational closed = open_invariant(key);
    const Rational localized = localize_open(key);
    mismatch = closed != localized;
    if (mismatch) err << "ovk: " << key.str() << " closed-form " << closed << " != localization " << localized << "\n";
    value = args.path == "localization" ? localized : closed;
    path = mismatch ? "mismatch" : "closed-form+localization";
  } else if (args.path == "localization") {
    value = localize_open(key);
  } else {
    value = open_invariant(key);
  }

  const Json row = invariant_row(key, value, path);
  std::string text;
  switch (format) {
    case Format::Json:
      text = row.dump(2) + "\n";
      break;
    case Format::Csv:
      text = render(Json(), {row}, Format::Csv);
      break;
    case Format::Text:
      text = value.str() + " " + path + "\n";
      break;
  }
  if (!emit(args.output, text, out, err)) return kMalformed;
  return mismatch ? kFailed : kOk;
}

struct VerifyArgs {
  std::string suite;
  SuiteRanges ranges;
  Output output;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(args.output.format);
  const auto results = run_suite(args.suite, args.ranges);
  const auto failed = std::count_if(results.begin(), results.end(), [](const CaseResult& r) { return !r.pass; });
  std::string text;
  if (format == Format::Text) {
    std::ostringstream os;
    for (const auto& r : results) os << (r.pass ? "PASS " : "FAIL ") << args.suite << " " << r.id << "  " << r.detail << "\n";
    os << args.suite << ": " << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
    text = os.str();
  } else {
    std::vector<Json> rows;
    for (const auto& r : results) {
      Json row;
      row["suite"] = args.suite;
      row["case"] = r.id;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    Json header;
    header["suite"] = args.suite;
    header["cases"] = results.size();
    header["failed"] = failed;
    text = render(header, rows, format);
  }
  if (!emit(args.output, text, out, err)) return kMalformed;
  return failed == 0 ? kOk : kFailed;
}

struct TableArgs {
  std::string kind;
  int gmax = 10;
  int g = 0;
  int h = 1;
  int dmin = 1;
  int dmax = 6;
  long a = 0;
  std::string path = "closed-form";
  std::string input;
  Output output;
};

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
  if (args.kind == "check") {
    std::ifstream file(args.input, std::ios::binary);
    if (!file) {
      err << "ovk: cannot read '" << args.input << "'\n";
      return kMalformed;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string original = buffer.str();
    Json document;
    try {
      document = Json::parse(original);
    } catch (const Json::exception& e) {
      err << "ovk: " << args.input << ": " << e.what() << "\n";
      return kMalformed;
    }
    std::string recomputed;
    try {
      recomputed = recompute_table(document);
    } catch (const Json::exception& e) {
      err << "ovk: " << args.input << ": " << e.what() << "\n";
      return kMalformed;
    }
    const bool same = recomputed == original;
    out << (same ? "PASS " : "FAIL ") << args.input << " " << document.at("rows").size() << " rows"
        << (same ? " re-verified byte-identically" : " differ after recomputation") << "\n";
    return same ? kOk : kFailed;
  }

  std::vector<Json> rows;
  Json header;
  header["table"] = args.kind;
  if (args.kind == "bg") {
    header["gmax"] = args.gmax;
    rows = bg_rows(args.gmax);
  } else if (args.kind == "nd") {
    header["a"] = args.a;
    header["dmax"] = args.dmax;
    rows = nd_rows(args.a, args.dmax);
  } else {
    header["g"] = args.g;
    header["h"] = args.h;
    header["dmin"] = args.dmin;
    header["dmax"] = args.dmax;
    header["a"] = args.a;
    rows = open_rows(args.g, args.h, args.dmin, args.dmax, args.a, args.path);
  }
  return emit(args.output, render(header, rows, parse_format(args.output.format)), out, err) ? kOk : kMalformed;
}

struct MaslovArgs {
  std::string spec;
  std::string family;
  long m = 0;
  long d = 1;
  std::optional<int> samples;
  int budget = MaslovOptions{}.sample_budget;
  double floor = MaslovOptions{}.relative_floor;
  Output output;
};

MatrixLoop loop_from_json(const Json& spec, std::optional<int> samples) {
  const auto& matrix = spec.at("matrix");
  if (!matrix.is_array() || matrix.empty()) throw InvalidArgument("\"matrix\" must be a non-empty array of rows");
  std::vector<std::vector<LoopEntry>> entries;
  for (const auto& row : matrix) {
    if (!row.is_array()) throw InvalidArgument("matrix rows must be arrays");
    std::vector<LoopEntry> parsed;
    for (const auto& cell : row) parsed.push_back(parse_loop_entry(cell.is_string() ? cell.get<std::string>() : cell.dump()));
    entries.push_back(std::move(parsed));
  }
  const int n = samples.value_or(spec.contains("samples") ? spec.at("samples").get<int>() : 64);
  return MatrixLoop(std::move(entries), n);
}

int cmd_maslov(const MaslovArgs& args, std::ostream& out, std::ostream& err) {
  const MaslovOptions options{args.budget, args.floor};
  Json row;
  bool ok = true;
  if (!args.spec.empty()) {
    std::ifstream file(args.spec);
    if (!file) {
      err << "ovk: cannot read '" << args.spec << "'\n";
      return kMalformed;
    }
    Json spec;
    try {
      spec = Json::parse(file);
    } catch (const Json::exception& e) {
      err << "ovk: " << args.spec << ": " << e.what() << "\n";
      return kMalformed;
    }
    row["loop"] = args.spec;
    if (spec.contains("symbolic_phase")) {
      const auto phases = spec.at("symbolic_phase").get<std::vector<long>>();
      row["rank"] = phases.size();
      row["mu"] = maslov_index_symbolic(phases);
      row["path"] = "symbolic-phase";
    } else if (spec.contains("matrix")) {
      const MatrixLoop loop = loop_from_json(spec, args.samples);
      const auto exact = maslov_index_exact(loop);
      const int numeric = maslov_index(loop, options);
      row["rank"] = loop.dimension();
      row["mu"] = exact.value_or(numeric);
      row["numeric"] = numeric;
      row["samples"] = loop.sample_count();
      row["path"] = exact ? "exact" : "numeric";
      if (exact && *exact != numeric) {
        err << "ovk: exact index " << *exact << " disagrees with sampled index " << numeric << "\n";
        ok = false;
      }
    } else {
      throw InvalidArgument("loop spec needs \"symbolic_phase\" or \"matrix\"");
    }
  } else {
    ExampleBundle bundle;
    long parameter;
    MatrixLoop loop = line_loop(0);
    std::string name;
    if (args.family == "L") {
      if (args.m >= 0) {
        bundle = ExampleBundle::Line;
        parameter = args.m;
      } else {
        bundle = ExampleBundle::DualLine;
        parameter = -args.m - 1;
      }
      loop = line_loop(args.m, args.samples.value_or(64));
      name = "L(" + std::to_string(args.m) + ")";
    } else if (args.family == "N") {
      if (args.d < 1) throw InvalidArgument("N(d) needs --d >= 1");
      bundle = ExampleBundle::Normal;
      parameter = args.d;
      loop = normal_loop(args.d, args.samples.value_or(64));
      name = "N(" + std::to_string(args.d) + ")";
    } else {
      throw InvalidArgument("give --spec FILE or --family L|N");
    }
    const auto exact = maslov_index_exact(loop);
    const int numeric = maslov_index(loop, options);
    const int n = example_rank(bundle);
    const CohomologyDims dims = example_cohomology_dims(bundle, static_cast<int>(parameter));
    const long chi = bordered_rr_chi(*exact, n, BorderedType{0, 1});
    row["loop"] = name;
    row["rank"] = n;
    row["mu"] = *exact;
    row["numeric"] = numeric;
    row["double_degree"] = double_degree(loop, options);
    row["chi"] = chi;
    row["h0"] = dims.h0;
    row["h1"] = dims.h1;
    row["path"] = "exact";
    ok = *exact == numeric && chi == dims.h0 - dims.h1;
  }
  const Format format = parse_format(args.output.format);
  std::string text = format == Format::Json ? row.dump(2) + "\n" : render(Json(), {row}, format);
  if (!emit(args.output, text, out, err)) return kMalformed;
  return ok ? kOk : kFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ovk: exact framed disc and sphere multiple-cover invariants"};
  app.set_config("--config", "", "flat key = value file mirroring the flags; flags win");
  app.require_subcommand(1);
  // Subcommands inherit this; a short -h would collide with --h.
  app.set_help_flag("--help", "print help and exit");

  InvariantArgs inv;
  auto* invariant = app.add_subcommand("invariant", "evaluate C(g;h|d;n|a)");
  invariant->add_option("--g", inv.g, "genus")->required();
  invariant->add_option("--h", inv.h, "boundary components (defaults to the number of parts)");
  invariant->add_option("--d", inv.d, "degree (defaults to the sum of parts)");
  invariant->add_option("--parts", inv.parts, "winding numbers, comma separated")->required()->delimiter(',');
  invariant->add_option("--a", inv.a, "framing")->required();
  invariant->add_flag("--symbolic", inv.symbolic, "print the localization integrand instead of a value");
  invariant->add_flag("--cross-check", inv.cross_check, "run closed form and localization, fail on mismatch");
  invariant->add_option("--path", inv.path, "closed-form or localization")
      ->check(CLI::IsMember({"closed-form", "localization"}));
  add_output_options(invariant, inv.output);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", ver.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--gmax", ver.ranges.gmax);
  verify->add_option("--dmax", ver.ranges.dmax);
  verify->add_option("--hmax", ver.ranges.hmax);
  verify->add_option("--amin", ver.ranges.amin);
  verify->add_option("--amax", ver.ranges.amax);
  verify->add_option("--mmax", ver.ranges.mmax);
  verify->add_option("--samples", ver.ranges.samples, "initial Maslov sample count");
  add_output_options(verify, ver.output);

  TableArgs tab;
  auto* table = app.add_subcommand("table", "emit bg, nd or open tables, or re-verify one");
  table->add_option("kind", tab.kind)->required()->check(CLI::IsMember({"bg", "nd", "open", "check"}));
  table->add_option("--gmax", tab.gmax);
  table->add_option("--g", tab.g);
  table->add_option("--h", tab.h);
  table->add_option("--dmin", tab.dmin);
  table->add_option("--dmax", tab.dmax);
  table->add_option("--a", tab.a);
  table->add_option("--path", tab.path)->check(CLI::IsMember({"closed-form", "localization"}));
  table->add_option("--input", tab.input, "table JSON for `table check`");
  add_output_options(table, tab.output);

  MaslovArgs mas;
  auto* maslov = app.add_subcommand("maslov", "Maslov index of a boundary loop");
  maslov->add_option("--spec", mas.spec, "loop spec JSON");
  maslov->add_option("--family", mas.family, "built-in family L or N")->check(CLI::IsMember({"L", "N"}));
  maslov->add_option("--m", mas.m);
  maslov->add_option("--d", mas.d);
  maslov->add_option("--samples", mas.samples);
  maslov->add_option("--budget", mas.budget, "sample budget for refinement");
  maslov->add_option("--floor", mas.floor, "relative determinant floor");
  add_output_options(maslov, mas.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kMalformed;
  }

  try {
    if (invariant->parsed()) return cmd_invariant(inv, out, err);
    if (verify->parsed()) return cmd_verify(ver, out, err);
    if (table->parsed()) {
      if (tab.kind == "check" && tab.input.empty()) {
        err << "ovk: table check needs --input\n";
        return kMalformed;
      }
      return cmd_table(tab, out, err);
    }
    if (maslov->parsed()) return cmd_maslov(mas, out, err);
  } catch (const UnsupportedRegime& e) {
    err << "ovk: unsupported: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidArgument& e) {
    err << "ovk: " << e.what() << "\n";
    return kMalformed;
  } catch (const DegenerateFrame& e) {
    err << "ovk: degenerate frame: " << e.what() << "\n";
    return kFailed;
  } catch (const NonConvergent& e) {
    err << "ovk: non-convergent: " << e.what() << "\n";
    return kFailed;
  } catch (const Json::exception& e) {
    err << "ovk: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    err << "ovk: " << e.what() << "\n";
    return kFailed;
  }
  return kMalformed;
}

}  // namespace ovk::cli
