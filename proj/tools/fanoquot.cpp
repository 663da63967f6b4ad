// fanoquot: terminality of P^{n-1}/G for permutation groups G, plus the
// power-map endomorphism certificate.

#include <fanoquot/report.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using fanoquot::AnalysisRequest;

  CLI::App app{"Reid-Tai age analysis of permutation quotients of projective space"};
  app.require_subcommand(1);

  AnalysisRequest req;
  std::string format = "text";
  auto* analyze = app.add_subcommand("analyze", "analyze a permutation group");
  auto* gens = analyze->add_option("--generators", req.generators,
                                   "JSON {\"degree\":n,\"generators\":[...]}, JSON array, or cycles separated by ';'");
  auto* table = analyze->add_option("--table", req.table_path, "multiplication table JSON file (regular representation)");
  auto* family = analyze->add_option("--family", req.family,
                                     "named family, e.g. heisenberg:3 or dihedral:4*cyclic:2^6 (regular representation)");
  gens->excludes(table, family);
  table->excludes(family);
  analyze->add_option("--degree", req.degree, "degree for --generators (default: largest point)");
  analyze->add_flag("--fixed-point", req.fixed_point, "add one extra fixed coordinate");
  analyze->add_option("--endo-d", req.endo_d, "power-map exponent d for the endomorphism certificate")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  analyze->add_option("--cap", req.cap, "maximum group order")->capture_default_str();
  analyze->add_flag("--oracle", req.oracle, "cross-check chart ages numerically");
  analyze->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  analyze->add_flag("--verbose", req.verbose, "list every element");
  analyze->add_flag("--timing", req.timing, "include wall-clock time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fanoquot::kExitInputError;
  }

  if (gens->count() + table->count() + family->count() != 1) {
    std::cerr << "error: exactly one of --generators, --table, --family is required\n";
    return fanoquot::kExitInputError;
  }
  if (table->count()) req.source = AnalysisRequest::Source::Table;
  if (family->count()) req.source = AnalysisRequest::Source::Family;
  req.format = format == "json" ? fanoquot::OutputFormat::Json : fanoquot::OutputFormat::Text;

  const auto result = fanoquot::run(req);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  return result.exit_code;
}
