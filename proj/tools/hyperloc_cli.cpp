#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hyperloc/report.hpp"

using hyperloc::RunConfig;

namespace {

void add_source(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "monomial_full | monomial_deletion | boolean | braid");
  sub->add_option("--poly", cfg.poly, "defining polynomial, e.g. \"x1*x2*(x1^2-x2^2)*(x1^2-x3^2)*(x2^2-x3^2)\"");
  sub->add_option("--input", cfg.input, "arrangement JSON file");
  sub->add_option("--r", cfg.r, "order r of the monomial families");
  sub->add_option("--dim", cfg.dim, "ambient dimension");
}

void add_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", cfg.out, "write the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic varieties and translated tori of hyperplane arrangements"};
  app.set_version_flag("--version", std::string(hyperloc::kToolVersion));
  app.require_subcommand(1);
  RunConfig cfg;

  auto* lattice = app.add_subcommand("lattice", "flats, Poincare polynomial, deletion-restriction check");
  add_source(lattice, cfg);
  lattice->add_option("--pivot", cfg.pivot, "hyperplane label or 1-based index for the triple");
  add_output(lattice, cfg);

  auto* resonance = app.add_subcommand("resonance", "local components and neighborly partitions");
  add_source(resonance, cfg);
  resonance->add_option("--max-partition-size", cfg.max_partition_size, "largest arrangement searched exhaustively");
  add_output(resonance, cfg);

  auto* theorem = app.add_subcommand("theorem", "certificates for the translated components C_q of D_r");
  theorem->add_option("--r", cfg.r, "order r >= 2")->required();
  theorem->add_option("--q", cfg.q, "single q in 1..r-1 (default: all)");
  theorem->add_flag("--oracle", cfg.oracle, "confirm membership with the presentation oracle where possible");
  theorem->add_option("--max-partition-size", cfg.max_partition_size, "largest arrangement searched exhaustively");
  add_output(theorem, cfg);

  auto* sigma = app.add_subcommand("sigma-test", "decide membership in Sigma_1 with the presentation oracle");
  add_source(sigma, cfg);
  sigma->add_option("--q", cfg.q, "q for --character Cq");
  sigma->add_option("--m", cfg.m, "depth m >= 1");
  sigma->add_option("--pivot", cfg.pivot, "hyperplane to decone at");
  sigma->add_option("--character", cfg.character, "character JSON (file or inline), 'trivial', or 'Cq'")->required();
  add_output(sigma, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hyperloc::kExitValidation;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const hyperloc::Report report = hyperloc::run_command(cfg);
    const std::string rendered = hyperloc::render(report, cfg.format);
    if (cfg.out) {
      std::ofstream out(*cfg.out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << *cfg.out << "'\n";
        return hyperloc::kExitValidation;
      }
      out << rendered;
    } else {
      std::cout << rendered;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hyperloc::exit_code_for(e);
  }
  return hyperloc::kExitOk;
}
