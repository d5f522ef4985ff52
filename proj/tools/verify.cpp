// Command-line front end: runs the named verification scenarios, writes the
// certificates as JSON or markdown, and exposes the root-isolation kernel on
// ad hoc polynomials. Exit codes: 0 verified, 1 a scenario failed, 2 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bihar/report.hpp"
#include "bihar/realalg.hpp"

namespace {

using namespace bihar;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output path: " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

struct CommonOpts {
  ScenarioParams params;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--seed", opts.params.seed, "seed for the sampled specializations");
  cmd->add_option("--precision-bits", opts.params.precision_bits,
                  "binary precision of printed radii")
      ->check(CLI::Range(4u, 256u));
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "md"}));
  cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
  cmd->add_flag("--timings", opts.params.timings,
                "record wall-clock step times (breaks byte-identical reports)");
}

int report_exit(const std::string& status) { return status == "pass" ? 0 : 1; }

int run_roots(const std::string& poly_text, const std::string& interval_text,
              const std::string& width_text) {
  MultiPoly p;
  RationalInterval domain = RationalInterval::whole();
  Rational width;
  const char* arg_name = "--poly";
  try {
    p = MultiPoly::parse(poly_text);
    arg_name = "--interval";
    domain = RationalInterval::parse(interval_text);
    arg_name = "--width";
    width = Rational::parse(width_text);
  } catch (const std::exception& e) {
    std::cerr << "parse error in " << arg_name << ": " << e.what() << "\n";
    return 2;
  }
  if (width.sign() <= 0) {
    std::cerr << "width must be positive\n";
    return 2;
  }
  auto vars = p.variables();
  if (vars.size() != 1) {
    std::cerr << "the polynomial must be univariate\n";
    return 2;
  }
  const Var v = *vars.begin();
  try {
    RootIsolation iso = isolate_roots(p, v, domain);
    std::cout << "polynomial: " << p.str() << "\n";
    std::cout << "interval:   " << domain.str() << "\n";
    std::cout << "roots:      " << iso.roots.size() << "\n";
    for (std::size_t i = 0; i < iso.roots.size(); ++i) {
      const auto& root = iso.roots[i];
      RationalInterval refined = refine_root(p, v, root.interval, width);
      std::cout << "  root " << i + 1 << ": isolated " << root.interval.str() << ", refined "
                << refined.str() << ", multiplicity " << root.multiplicity << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the biharmonic hypersurface classification"};
  app.require_subcommand(1);

  CommonOpts all_opts;
  CLI::App* all = app.add_subcommand("all", "run every scenario and aggregate");
  add_common(all, all_opts);

  CommonOpts tube_opts;
  std::string family_text;
  unsigned tube_n = 0;
  std::optional<unsigned> tube_m;
  CLI::App* tube = app.add_subcommand("tube", "verify one model hypersurface");
  tube->add_option("--family", family_text, "model family letter")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "D", "E"}));
  tube->add_option("--n", tube_n, "ambient complex dimension")->required();
  tube->add_option("--m", tube_m, "core dimension (family A)");
  add_common(tube, tube_opts);

  CommonOpts chain_opts;
  unsigned chain_case = 0;
  CLI::App* chain = app.add_subcommand("chain", "replay one derivation chain");
  chain->add_option("--case", chain_case, "chain selector")->required()->check(CLI::Range(1u, 2u));
  chain->add_option("--d-samples", chain_opts.params.d_samples,
                    "rational specializations of the trace constant");
  add_common(chain, chain_opts);

  CommonOpts ruled_opts;
  unsigned ruled_n = 0;
  CLI::App* ruled = app.add_subcommand("ruled", "replay the ruled minimality argument");
  ruled->add_option("--n", ruled_n, "ambient complex dimension")->required();
  add_common(ruled, ruled_opts);

  std::string poly_text, interval_text, width_text = "1/1000000";
  CLI::App* roots = app.add_subcommand("roots", "isolate and refine real roots");
  roots->add_option("--poly", poly_text, "polynomial text")->required();
  roots->add_option("--interval", interval_text, "domain, e.g. (0,inf)")->required();
  roots->add_option("--width", width_text, "refinement width (rational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);   // prints the message, 0 for --help/--version
    return code == 0 ? 0 : 2;
  }

  try {
    if (all->parsed()) {
      AggregateReport report = run_all(all_opts.params);
      const std::string text =
          all_opts.format == "md" ? to_markdown(report) : to_json(report);
      int io = emit(text, all_opts.out_path);
      return io != 0 ? io : report_exit(report.status);
    }
    if (tube->parsed()) {
      auto family = family_from_name(family_text);
      VerificationReport report = tube_report(*family, tube_n, tube_m, tube_opts.params);
      const std::string text =
          tube_opts.format == "md" ? to_markdown(report) : to_json(report);
      int io = emit(text, tube_opts.out_path);
      return io != 0 ? io : report_exit(report.status);
    }
    if (chain->parsed()) {
      const ScenarioId id = chain_case == 1 ? ScenarioId::thm2_nonhopf_case1
                                            : ScenarioId::thm2_nonhopf_case2;
      VerificationReport report = run_scenario(id, chain_opts.params);
      const std::string text =
          chain_opts.format == "md" ? to_markdown(report) : to_json(report);
      int io = emit(text, chain_opts.out_path);
      return io != 0 ? io : report_exit(report.status);
    }
    if (ruled->parsed()) {
      ruled_opts.params.n = ruled_n;
      VerificationReport report = run_scenario(ScenarioId::ruled, ruled_opts.params);
      const std::string text =
          ruled_opts.format == "md" ? to_markdown(report) : to_json(report);
      int io = emit(text, ruled_opts.out_path);
      return io != 0 ? io : report_exit(report.status);
    }
    if (roots->parsed()) return run_roots(poly_text, interval_text, width_text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
