#include "ncnn/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <limits>
#include <ostream>

#include "ncnn/decimal.hpp"
#include "ncnn/enumerate.hpp"
#include "ncnn/errors.hpp"
#include "ncnn/growth.hpp"
#include "ncnn/recurrences.hpp"
#include "ncnn/sequence_io.hpp"
#include "ncnn/series.hpp"
#include "ncnn/verify.hpp"

namespace ncnn::cli {

const char* provenance_name(Provenance provenance) {
  switch (provenance) {
    case Provenance::BruteForce:
      return "BRUTE_FORCE";
    case Provenance::Recurrence:
      return "RECURRENCE";
    case Provenance::Series:
      return "SERIES";
    case Provenance::ClosedForm:
      return "CLOSED_FORM";
  }
  return "?";
}

std::string OutputRecord::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) doc["parameters"][key] = value;
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& item : results) {
    doc["results"].push_back(
        {{"name", item.name}, {"values", item.values}, {"provenance", provenance_name(item.provenance)}});
  }
  return doc.dump();
}

namespace {

// Thrown by handlers for problems CLI11 cannot catch at parse time.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  bool json = false;
};

void emit(const OutputRecord& record, const Settings& settings, std::ostream& out) {
  if (settings.json) {
    out << record.to_json() << '\n';
    return;
  }
  for (const auto& item : record.results) {
    for (std::size_t i = 0; i < item.values.size(); ++i) out << (i ? " " : "") << item.values[i];
    out << '\n';
  }
  if (!record.results.empty()) {
    out << "# provenance:";
    for (const auto& item : record.results) out << ' ' << item.name << '=' << provenance_name(item.provenance);
    out << '\n';
  }
}

Provenance provenance_of_family(const std::string& family) {
  return family.starts_with("q122") ? Provenance::ClosedForm : Provenance::Recurrence;
}

std::vector<std::string> as_strings(const SequenceTable& table) {
  std::vector<std::string> out;
  out.reserve(table.values.size());
  for (const BigInt& v : table.values) out.push_back(v.get_str(10));
  return out;
}

BuiltinEquation parse_equation(const std::string& which) {
  if (which == "non-nesting") return BuiltinEquation::NonNesting231;
  if (which == "non-crossing") return BuiltinEquation::NonCrossing231;
  throw UsageError("unknown equation '" + which + "' (expected non-nesting or non-crossing)");
}

Family parse_family(const std::string& which) {
  if (which == "non-nesting") return Family::NonNesting;
  if (which == "non-crossing") return Family::NonCrossing;
  throw UsageError("unknown family '" + which + "' (expected non-nesting or non-crossing)");
}

void check_sequence_cap(std::size_t n, bool force) {
  if (n > kMaxSequenceN && !force) {
    throw ResourceLimitError("N = " + std::to_string(n) + " exceeds the default limit " +
                             std::to_string(kMaxSequenceN) + "; pass --force to run anyway");
  }
}

std::filesystem::path resolve_output(const std::string& requested, const std::string& default_name) {
  std::filesystem::path path = requested.empty() ? std::filesystem::path(default_name) : std::filesystem::path(requested);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of pattern-avoiding non-crossing and non-nesting permutations"};
  app.require_subcommand(1);
  Settings settings;
  app.add_flag("--json", settings.json, "Emit the full output record as JSON");

  std::function<int()> action;

  // count
  auto* count = app.add_subcommand("count", "Brute-force count of avoiders");
  bool non_crossing = false;
  bool non_nesting = false;
  std::vector<std::string> avoid;
  bool first_is_one = false;
  bool last_is_n = false;
  std::size_t count_n = 0;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t workers = 1;
  bool force = false;
  auto* nc_flag = count->add_flag("--non-crossing", non_crossing, "Count non-crossing words");
  auto* nn_flag = count->add_flag("--non-nesting", non_nesting, "Count non-nesting words");
  nc_flag->excludes(nn_flag);
  count->add_option("--avoid", avoid, "Forbidden pattern (repeatable), e.g. 231");
  count->add_flag("--first-is-1", first_is_one, "Only words starting with 1");
  count->add_flag("--last-is-n", last_is_n, "Only words ending with n");
  count->add_option("-n", count_n, "Semilength")->required();
  count->add_option("--cap", cap, "Enumeration cap")->capture_default_str();
  count->add_option("--workers", workers, "Worker threads")->capture_default_str();
  count->add_flag("--force", force, "Ignore the enumeration cap");
  count->callback([&] {
    action = [&]() -> int {
      if (!non_crossing && !non_nesting) throw UsageError("count needs --non-crossing or --non-nesting");
      CountQuery query;
      query.semilength = count_n;
      query.family = non_crossing ? Family::NonCrossing : Family::NonNesting;
      for (const auto& p : avoid) {
        const Pattern pattern = Pattern::parse(p);
        if (std::find(query.forbidden.begin(), query.forbidden.end(), pattern) == query.forbidden.end()) {
          query.forbidden.push_back(pattern);
        }
      }
      query.constraint = first_is_one && last_is_n ? Constraint::FirstIsOneAndLastIsN
                         : first_is_one            ? Constraint::FirstIsOne
                         : last_is_n               ? Constraint::LastIsN
                                                   : Constraint::None;
      CountOptions options;
      options.cap = force ? std::numeric_limits<std::size_t>::max() : cap;
      options.workers = workers;
      BigInt total;
      try {
        total = count_avoiders(query, options);
      } catch (const ResourceLimitError& e) {
        throw ResourceLimitError(std::string(e.what()) + " (try `seq`, or --force to enumerate anyway)");
      }

      OutputRecord record{"count", {}, {}};
      record.parameters = {{"family", family_name(query.family)},
                           {"avoid", [&] {
                              std::string s;
                              for (const auto& p : query.forbidden) s += (s.empty() ? "" : ",") + p.to_string();
                              return s;
                            }()},
                           {"first_is_1", first_is_one ? "true" : "false"},
                           {"last_is_n", last_is_n ? "true" : "false"},
                           {"n", std::to_string(count_n)}};
      record.results.push_back({"count", {total.get_str(10)}, Provenance::BruteForce});
      emit(record, settings, out);
      return kSuccess;
    };
  });

  // seq
  auto* seq = app.add_subcommand("seq", "Sequence values from recurrences or closed forms");
  std::string seq_family;
  std::size_t seq_n = 0;
  std::string seq_format = "plain";
  bool seq_force = false;
  seq->add_option("family", seq_family, "p231, q231, r231, rprime231, pbar231, qbar231, q122[,sigma]")
      ->required();
  seq->add_option("-N", seq_n, "Largest index")->required();
  seq->add_option("--format", seq_format, "plain, bfile, csv or json")->capture_default_str();
  seq->add_flag("--force", seq_force, "Allow N above the default limit");
  seq->callback([&] {
    action = [&]() -> int {
      check_sequence_cap(seq_n, seq_force);
      const SequenceTable table = compute_family(seq_family, seq_n);
      if (seq_format != "plain") {
        write_table(table, parse_table_format(seq_format), out);
        return kSuccess;
      }
      OutputRecord record{"seq", {{"family", seq_family}, {"N", std::to_string(seq_n)}}, {}};
      record.results.push_back({table.name, as_strings(table), provenance_of_family(seq_family)});
      emit(record, settings, out);
      return kSuccess;
    };
  });

  // series
  auto* series = app.add_subcommand("series", "Solve a built-in algebraic equation as a power series");
  std::string series_which;
  std::size_t series_n = 0;
  std::string series_format = "plain";
  bool series_force = false;
  series->add_option("which", series_which, "non-nesting or non-crossing")
      ->required();
  series->add_option("-N", series_n, "Order")->required();
  series->add_option("--format", series_format, "plain, poly or json")->capture_default_str();
  series->add_flag("--force", series_force, "Allow N above the default limit");
  series->callback([&] {
    action = [&]() -> int {
      check_sequence_cap(series_n, series_force);
      const TruncatedSeries solution = solve_algebraic(builtin_equation(parse_equation(series_which)), 1, series_n);
      if (series_format == "poly") {
        out << solution.render() << '\n';
        return kSuccess;
      }
      if (series_format == "json") {
        out << solution.to_json() << '\n';
        return kSuccess;
      }
      if (series_format != "plain") throw UsageError("unknown series format '" + series_format + "'");
      OutputRecord record{"series", {{"which", series_which}, {"N", std::to_string(series_n)}}, {}};
      std::vector<std::string> values;
      for (const Rational& c : solution.coefficients()) values.push_back(to_decimal(c));
      record.results.push_back({"coefficients", std::move(values), Provenance::Series});
      emit(record, settings, out);
      return kSuccess;
    };
  });

  // growth
  auto* growth = app.add_subcommand("growth", "Growth rate from the radicand's minimal positive root");
  std::string growth_which;
  unsigned growth_places = 5;
  std::string growth_tol = "0.000000000001";
  growth->add_option("which", growth_which, "non-nesting or non-crossing")->required();
  growth->add_option("--places", growth_places, "Decimal places")->capture_default_str();
  growth->add_option("--tol", growth_tol, "Root bracket width (plain decimal)")->capture_default_str();
  growth->callback([&] {
    action = [&]() -> int {
      const Family family = parse_family(growth_which);
      const Rational tol = parse_decimal(growth_tol);
      const RootBracket root = minimal_positive_root(builtin_radicand(family), tol);
      const DecimalApprox rate = reciprocal_approx(root.lower, root.upper, places_for(tol));
      OutputRecord record{"growth", {{"which", growth_which}, {"tol", growth_tol}}, {}};
      record.results.push_back(
          {"growth_rate", {format_decimal((rate.lower + rate.upper) / 2, growth_places)}, Provenance::Series});
      if (settings.json) {
        record.results.push_back({"minimal_root", {root.approx.value, root.approx.error_bound}, Provenance::Series});
        record.results.push_back({"growth_rate_bracket", {rate.value, rate.error_bound}, Provenance::Series});
        record.parameters.emplace_back("stripped_x_power", std::to_string(root.stripped_power));
      }
      emit(record, settings, out);
      return kSuccess;
    };
  });

  // ratio
  auto* ratio_cmd = app.add_subcommand("ratio", "Consecutive-term ratio s(n)/s(n-1)");
  std::string ratio_family;
  std::size_t ratio_n = 0;
  unsigned ratio_places = 5;
  ratio_cmd->add_option("family", ratio_family, "Sequence family")->required();
  ratio_cmd->add_option("n", ratio_n, "Index")->required();
  ratio_cmd->add_option("--places", ratio_places, "Decimal places")->capture_default_str();
  ratio_cmd->callback([&] {
    action = [&]() -> int {
      check_sequence_cap(ratio_n, false);
      const SequenceTable table = compute_family(ratio_family, ratio_n);
      const DecimalApprox value = ratio(table, ratio_n, ratio_places);
      OutputRecord record{"ratio", {{"family", ratio_family}, {"n", std::to_string(ratio_n)}}, {}};
      record.results.push_back({"ratio", {value.value}, provenance_of_family(ratio_family)});
      emit(record, settings, out);
      return kSuccess;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check brute force, recurrences and series");
  bool quick = false;
  bool full = false;
  std::size_t verify_workers = 1;
  auto* quick_flag = verify->add_flag("--quick", quick, "Small oracles, order-20 series (default)");
  auto* full_flag = verify->add_flag("--full", full, "n <= 6 oracles, order-60 series");
  quick_flag->excludes(full_flag);
  verify->add_option("--workers", verify_workers, "Worker threads for brute force");
  verify->callback([&] {
    action = [&]() -> int {
      VerifyOptions options;
      options.level = full ? VerifyLevel::Full : VerifyLevel::Quick;
      options.workers = verify_workers;
      const VerifyReport report = run_verification(options);
      for (const auto& check : report.checks) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.description << '\n';
      }
      if (const CheckResult* failure = report.first_failure()) {
        err << "verification failed in " << failure->name << ": " << failure->failure << '\n';
        return kVerificationFailed;
      }
      out << "all " << report.checks.size() << " checks passed\n";
      return kSuccess;
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "Write a sequence table to a file");
  std::string export_family;
  std::size_t export_n = 0;
  std::string export_format = "bfile";
  std::string export_path;
  bool export_force = false;
  exp->add_option("family", export_family, "Sequence family")->required();
  exp->add_option("-N", export_n, "Largest index")->required();
  exp->add_option("--format", export_format, "bfile, csv or json")->capture_default_str();
  exp->add_option("-o,--output", export_path, "Output path (relative paths honour $NCNN_OUTPUT_DIR)");
  exp->add_flag("--force", export_force, "Allow N above the default limit");
  exp->callback([&] {
    action = [&]() -> int {
      check_sequence_cap(export_n, export_force);
      const TableFormat format = parse_table_format(export_format);
      const SequenceTable table = compute_family(export_family, export_n);
      const char* extension = format == TableFormat::BFile ? ".txt" : format == TableFormat::Csv ? ".csv" : ".json";
      const auto path = resolve_output(export_path, export_family + extension);
      export_table(table, format, path);
      OutputRecord record{"export",
                          {{"family", export_family},
                           {"N", std::to_string(export_n)},
                           {"format", table_format_name(format)},
                           {"path", path.string()}},
                          {}};
      if (settings.json) {
        record.results.push_back({table.name, as_strings(table), provenance_of_family(export_family)});
        out << record.to_json() << '\n';
      } else {
        out << "wrote " << table.values.size() << " terms of " << table.name << " to " << path.string() << '\n';
      }
      return kSuccess;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("ncnn");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ncnn::cli
