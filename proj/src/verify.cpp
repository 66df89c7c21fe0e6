#include "ncnn/verify.hpp"

#include <algorithm>

#include "ncnn/enumerate.hpp"
#include "ncnn/series.hpp"
#include "ncnn/structure.hpp"

namespace ncnn {

namespace {

std::string mismatch(std::size_t n, const std::string& family, const BigInt& expected, const BigInt& got) {
  return "n=" + std::to_string(n) + " family=" + family + " expected=" + to_decimal(expected) +
         " got=" + to_decimal(got);
}

class Checker {
 public:
  Checker(std::string name, std::string description) {
    result_.name = std::move(name);
    result_.description = std::move(description);
  }

  // Records the first failure only.
  void expect_equal(std::size_t n, const std::string& family, const BigInt& expected, const BigInt& got) {
    if (result_.passed && expected != got) fail(mismatch(n, family, expected, got));
  }

  void fail(std::string detail) {
    if (!result_.passed) return;
    result_.passed = false;
    result_.failure = std::move(detail);
  }

  bool ok() const { return result_.passed; }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

BigInt brute(std::size_t n, Family family, const PatternSet& forbidden, Constraint constraint,
             std::size_t workers) {
  CountOptions options;
  options.cap = std::max(n, kDefaultEnumerationCap);
  options.workers = workers;
  return count_avoiders(CountQuery{n, family, forbidden, constraint}, options);
}

const std::vector<std::string>& closed_form_names() {
  static const std::vector<std::string> names{"q122",     "q122,132", "q122,213", "q122,231",
                                              "q122,123", "q122,312", "q122,321"};
  return names;
}

PatternSet closed_form_patterns(const std::string& family) {
  PatternSet set{Pattern::parse("122")};
  if (family.size() > 5) set.push_back(Pattern::parse(family.substr(5)));
  return set;
}

CheckResult check_baseline(std::size_t limit, std::size_t workers) {
  Checker c("baseline", "unrestricted counts equal n! * Catalan(n) for both families");
  for (Family family : {Family::NonNesting, Family::NonCrossing}) {
    for (std::size_t n = 0; n <= limit && c.ok(); ++n) {
      c.expect_equal(n, std::string(family_name(family)) + "/all", factorial(n) * catalan(n),
                     brute(n, family, {}, Constraint::None, workers));
    }
  }
  return c.take();
}

CheckResult check_nonnesting(const VerifyTables& t, std::size_t limit, std::size_t workers) {
  Checker c("nonnesting-231", "p, q, r, r' recurrences agree with brute force");
  const PatternSet avoid{Pattern::parse("231")};
  const std::pair<const SequenceTable*, Constraint> rows[] = {
      {&t.nonnesting.p, Constraint::None},
      {&t.nonnesting.q, Constraint::FirstIsOne},
      {&t.nonnesting.r, Constraint::LastIsN},
      {&t.nonnesting.rprime, Constraint::FirstIsOneAndLastIsN},
  };
  for (std::size_t n = 0; n <= limit && c.ok(); ++n) {
    for (const auto& [table, constraint] : rows) {
      c.expect_equal(n, table->name, brute(n, Family::NonNesting, avoid, constraint, workers), table->at(n));
    }
  }
  return c.take();
}

CheckResult check_noncrossing(const VerifyTables& t, std::size_t limit, std::size_t workers) {
  Checker c("noncrossing-231", "pbar and qbar recurrences agree with brute force");
  const PatternSet avoid{Pattern::parse("231")};
  for (std::size_t n = 0; n <= limit && c.ok(); ++n) {
    c.expect_equal(n, t.noncrossing.pbar.name, brute(n, Family::NonCrossing, avoid, Constraint::None, workers),
                   t.noncrossing.pbar.at(n));
    c.expect_equal(n, t.noncrossing.qbar.name,
                   brute(n, Family::NonCrossing, avoid, Constraint::FirstIsOne, workers),
                   t.noncrossing.qbar.at(n));
  }
  return c.take();
}

CheckResult check_closed_forms(const VerifyTables& t, std::size_t limit, std::size_t workers) {
  Checker c("closed-forms-122", "closed forms for non-crossing 122-avoiders agree with brute force");
  for (const auto& name : closed_form_names()) {
    const SequenceTable& table = t.closed_forms.at(name);
    const PatternSet avoid = closed_form_patterns(name);
    for (std::size_t n = 1; n <= limit && c.ok(); ++n) {
      c.expect_equal(n, name, brute(n, Family::NonCrossing, avoid, Constraint::None, workers), table.at(n));
    }
  }
  return c.take();
}

CheckResult check_series(BuiltinEquation which, const SequenceTable& table, std::size_t order) {
  const bool nonnesting = which == BuiltinEquation::NonNesting231;
  Checker c(nonnesting ? "series-nonnesting" : "series-noncrossing",
            "algebraic equation solved to order " + std::to_string(order) +
                ": zero residual, integer coefficients, equal to " + table.name);
  const BivariatePolynomial equation = builtin_equation(which);
  const TruncatedSeries solution = solve_algebraic(equation, 1, order);
  if (!residual(equation, solution).is_zero()) c.fail("residual is not zero");
  if (!solution.is_integral()) c.fail("solution has non-integer coefficients");
  for (std::size_t n = 0; n <= order && c.ok(); ++n) {
    c.expect_equal(n, table.name, solution[n].get_num(), table.at(n));
  }
  return c.take();
}

CheckResult check_identities(const VerifyTables& t, std::size_t order) {
  Checker c("generating-function-identities",
            "R = xP/(1-x), R' = (x + xQ)/(1-x), and qbar equals its composition sum");
  const auto& nn = t.nonnesting;
  BigInt running_p = 0;
  BigInt running_q = 0;
  for (std::size_t n = 1; n <= order && c.ok(); ++n) {
    running_p += nn.p.at(n - 1);
    running_q += nn.q.at(n - 1);
    c.expect_equal(n, nn.r.name, running_p, nn.r.at(n));
    c.expect_equal(n, nn.rprime.name, running_q + 1, nn.rprime.at(n));
  }
  const std::size_t composition_limit = std::min<std::size_t>(order, 12);
  const SequenceTable compositions = qbar_via_compositions(composition_limit);
  for (std::size_t n = 0; n <= composition_limit && c.ok(); ++n) {
    c.expect_equal(n, t.noncrossing.qbar.name, compositions.at(n), t.noncrossing.qbar.at(n));
  }
  return c.take();
}

CheckResult check_structure(std::size_t limit) {
  Checker c("n-arc-structure",
            "in non-nesting 231-avoiders at most one arc closes and at most one opens inside the "
            "n-arc; a closing arc carries the largest label to the left, an opening arc the "
            "smallest label to the right");
  const Pattern avoid = Pattern::parse("231");
  for (std::size_t n = 1; n <= limit && c.ok(); ++n) {
    LabeledWordStream stream(n, Family::NonNesting);
    while (auto word = stream.next()) {
      if (contains(*word, avoid)) continue;
      std::string problem = check_interior_counts(*word);
      if (problem.empty()) problem = check_interior_extremes(*word);
      if (!problem.empty()) {
        c.fail("n=" + std::to_string(n) + " " + problem);
        break;
      }
    }
  }
  return c.take();
}

CheckResult check_decreasing_labeling(std::size_t limit) {
  Checker c("decreasing-labeling",
            "each non-crossing matching has exactly one 122-avoiding labeling, the decreasing one");
  const PatternSet avoid{Pattern::parse("122")};
  for (std::size_t n = 1; n <= limit && c.ok(); ++n) {
    for (const DyckWord& shape : dyck_words(n)) {
      const auto labelings = avoiding_labelings(shape, Pairing::Stack, avoid);
      if (labelings.size() != 1 || labelings.front() != decreasing_labeling(n)) {
        c.fail("n=" + std::to_string(n) + " shape " + shape.to_string() + " has " +
               std::to_string(labelings.size()) + " avoiding labelings");
        break;
      }
    }
  }
  return c.take();
}

}  // namespace

VerifyLimits limits_for(VerifyLevel level) {
  if (level == VerifyLevel::Full) return {6, 60, 5};
  return {4, 20, 4};
}

VerifyTables compute_verify_tables(std::size_t max_n) {
  VerifyTables t;
  t.nonnesting = nonnesting_231_system(max_n);
  t.noncrossing = noncrossing_231_system(max_n);
  for (const auto& name : closed_form_names()) t.closed_forms.emplace(name, compute_family(name, max_n));
  return t;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const VerifyLimits limits = limits_for(options.level);
  VerifyTables tables = compute_verify_tables(std::max(limits.oracle_n, limits.series_order));
  if (options.tamper) options.tamper(tables);

  VerifyReport report;
  report.checks.push_back(check_baseline(limits.oracle_n, options.workers));
  report.checks.push_back(check_nonnesting(tables, limits.oracle_n, options.workers));
  report.checks.push_back(check_noncrossing(tables, limits.oracle_n, options.workers));
  report.checks.push_back(check_closed_forms(tables, limits.oracle_n, options.workers));
  report.checks.push_back(
      check_series(BuiltinEquation::NonNesting231, tables.nonnesting.p, limits.series_order));
  report.checks.push_back(
      check_series(BuiltinEquation::NonCrossing231, tables.noncrossing.pbar, limits.series_order));
  report.checks.push_back(check_identities(tables, limits.series_order));
  report.checks.push_back(check_structure(limits.structure_n));
  report.checks.push_back(check_decreasing_labeling(limits.oracle_n));
  return report;
}

}  // namespace ncnn
