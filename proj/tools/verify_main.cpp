#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "sta/expr.hpp"
#include "sta/suites.hpp"

// verify: identity-verification suites, an expression evaluator and the
// Cayley-table printer for the GA3 / STA kernel.
//
//   verify run --suite <name> [--algebra sta|ga3] [--seed N] [--trials N]
//              [--tol X] [--format json|text] [--parallel]
//   verify eval "<expr>" [--algebra sta|ga3] [--format json|text]
//   verify table [--algebra sta|ga3] [--format json|text]

namespace {

sta::AlgebraPtr algebra_by_name(const std::string& name) {
  if (name == "sta")
    return sta::Algebra::sta();
  if (name == "ga3")
    return sta::Algebra::ga3();
  throw sta::lookup_error("unknown algebra: " + name);
}

std::string eval_to_json(const sta::Multivector& m, const std::string& algebra) {
  std::string out = "{\n  \"algebra\": \"" + algebra + "\",\n  \"coefficients\": {";
  bool first = true;
  for (unsigned k = 0; k < m.size(); ++k) {
    if (m[k] == 0.0)
      continue;
    if (!first)
      out += ", ";
    first = false;
    out += "\"" + m.algebra()->blade_name(k) +
           "\": " + sta::detail::format_double17(m[k]);
  }
  out += "}\n}\n";
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-kernel verification toolkit (Cl(3,0) and Cl(1,3))"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run a verification suite");
  std::string suite;
  std::string run_algebra;
  sta::suites::SuiteOptions opts;
  std::string run_format = "text";
  run->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(sta::suites::available_suites()));
  run->add_option("--algebra", run_algebra, "expected algebra of the suite (sta|ga3)")
      ->check(CLI::IsMember({"sta", "ga3", "both"}));
  run->add_option("--seed", opts.seed, "random seed (default 42)");
  run->add_option("--trials", opts.trials, "random trials per check (default 1000)")
      ->check(CLI::PositiveNumber);
  run->add_option("--tol", opts.tol, "algebraic tolerance (default 1e-12)")
      ->check(CLI::PositiveNumber);
  run->add_option("--format", run_format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_flag("--parallel", opts.parallel, "run the checks concurrently");

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate an expression");
  std::string expr_src;
  std::string eval_algebra = "sta";
  std::string eval_format = "text";
  ev->add_option("expr", expr_src, "expression source")->required();
  ev->add_option("--algebra", eval_algebra, "algebra (sta|ga3, default sta)")
      ->check(CLI::IsMember({"sta", "ga3"}));
  ev->add_option("--format", eval_format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));

  // table
  auto* tab = app.add_subcommand("table", "print the signed blade product table");
  std::string table_algebra = "sta";
  std::string table_format = "text";
  tab->add_option("--algebra", table_algebra, "algebra (sta|ga3, default sta)")
      ->check(CLI::IsMember({"sta", "ga3"}));
  tab->add_option("--format", table_format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const std::string natural = sta::suites::detail::suite_algebra(suite);
      if (!run_algebra.empty() && run_algebra != natural) {
        std::fprintf(stderr, "suite '%s' runs over algebra '%s', not '%s'\n", suite.c_str(),
                     natural.c_str(), run_algebra.c_str());
        return 2;
      }
      const sta::SuiteReport report = sta::suites::run_suite(suite, opts);
      const std::string out =
          run_format == "json" ? sta::to_json(report) : sta::to_text(report);
      std::fputs(out.c_str(), stdout);
      return report.passed ? 0 : 1;
    }
    if (*ev) {
      const sta::AlgebraPtr alg = algebra_by_name(eval_algebra);
      const sta::Multivector value = sta::expr::eval_string(expr_src, alg);
      if (eval_format == "json")
        std::fputs(eval_to_json(value, eval_algebra).c_str(), stdout);
      else
        std::printf("%s\n", sta::expr::format_multivector(value).c_str());
      return 0;
    }
    if (*tab) {
      const sta::AlgebraPtr alg = algebra_by_name(table_algebra);
      const auto table = sta::suites::cayley_table(alg);
      std::fputs((table_format == "json" ? sta::suites::to_json(table)
                                         : sta::suites::to_text(table))
                     .c_str(),
                 stdout);
      return 0;
    }
  } catch (const sta::expr::parse_error& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
