#include "lacunary/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lacunary/bench.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/pipeline.hpp"
#include "lacunary/poly_parser.hpp"
#include "lacunary/report_format.hpp"

namespace lacunary {

namespace {

struct FactorArgs {
  unsigned degree = 0;
  std::string strategy = "variant";
  bool stats = false;
  std::string format = "text";
  std::size_t max_span = kDefaultMaxSpan;
  bool verify = false;
  std::string bench;
  std::uint64_t seed = 1;
  std::string input;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

SparsePoly load_input(const FactorArgs& args, std::istream& in) {
  if (!args.bench.empty()) return bench_generate(parse_rational(args.bench), args.seed);
  if (args.input.empty()) return parse_poly(read_all(in));
  std::error_code ec;
  if (std::filesystem::is_regular_file(args.input, ec)) {
    std::ifstream file(args.input);
    if (!file) throw InputError("cannot read " + args.input);
    return parse_poly(read_all(file));
  }
  return parse_poly(args.input);
}

int run_factor(const FactorArgs& args, std::istream& in, std::ostream& out) {
  PipelineConfig cfg;
  if (args.strategy == "lenstra") cfg.strategy = Strategy::lenstra;
  if (args.strategy == "paranoid") cfg.gap.mode = GapMode::paranoid;
  cfg.max_span = args.max_span;
  if (const char* env = std::getenv("LACUNARY_MAX_SPAN"); env && *env) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(env).size()) throw InputError("LACUNARY_MAX_SPAN is not a number");
    cfg.max_span = static_cast<std::size_t>(v);
  }

  const SparsePoly f = load_input(args, in);
  if (f.is_zero()) throw InputError("the zero polynomial has no factorization");
  auto [report, stats] = bounded_degree_factors(f, args.degree, cfg);
  FormatFlags flags;
  flags.format = args.format == "json" ? OutputFormat::json : OutputFormat::text;
  flags.stats = args.stats;
  out << format_report(report, stats, flags);
  if (args.verify) {
    const bool ok = verify_report(f, report);
    if (flags.format == OutputFormat::text) out << "verified: " << (ok ? "yes" : "no") << "\n";
    if (!ok) throw InternalError("verification failed");
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded-degree factors of lacunary polynomials", "lacunary"};
  app.require_subcommand(1);
  FactorArgs args;
  CLI::App* factor = app.add_subcommand("factor", "List the irreducible factors of degree <= d");
  factor->add_option("-d,--degree", args.degree, "Degree bound d >= 1")->required()->check(CLI::PositiveNumber);
  factor->add_option("--strategy", args.strategy, "variant | lenstra | paranoid")
      ->check(CLI::IsMember({"variant", "lenstra", "paranoid"}));
  factor->add_flag("--stats", args.stats, "Print the phase timing table");
  factor->add_option("--format", args.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  factor->add_option("--max-span", args.max_span, "Largest dense expansion allowed (coefficients)");
  factor->add_flag("--verify", args.verify, "Check the report independently");
  factor->add_option("--bench", args.bench, "Factor the generated benchmark at this scale, e.g. 1/100");
  factor->add_option("--seed", args.seed, "Benchmark seed");
  factor->add_option("input", args.input, "File or expression (default: standard input)");

  std::vector<std::string> rest;
  for (int i = argc - 1; i > 0; --i) rest.emplace_back(argv[i]);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    return run_factor(args, in, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace lacunary
