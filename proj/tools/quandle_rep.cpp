#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_source_options(CLI::App* cmd, qrep::cli::QuandleSource& src) {
  cmd->add_option("--dihedral", src.dihedral, "dihedral quandle R_N");
  cmd->add_option("--alexander", src.alexander, "Alexander quandle Z_N with x*y = u x + (1-u) y, given as N,U");
  cmd->add_option("--table", src.table_file, "operation table file (first line n, then n rows, 1-indexed)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qrep::cli;
  CLI::App app{"Regular representations of finite quandles"};
  app.name("quandle-rep");
  app.require_subcommand(1);

  QuandleSource source;
  std::optional<double> tol_flag;
  std::uint64_t seed = 0;
  bool json = false;
  std::string range;
  int m = 0;

  auto* info = app.add_subcommand("info", "order, axioms, inner group and orbits");
  add_source_options(info, source);
  info->add_flag("--json", json, "machine-readable output");

  auto* decompose = app.add_subcommand("decompose", "split the regular representation into irreducibles");
  add_source_options(decompose, source);
  decompose->add_option("--seed", seed, "random seed")->capture_default_str();
  decompose->add_option("--tol", tol_flag, "tolerance (overrides QUANDLE_REP_TOL)");
  decompose->add_flag("--json", json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "check the dihedral decomposition over a range of orders");
  verify->add_option("--range", range, "orders A..B")->required();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--tol", tol_flag, "tolerance (overrides QUANDLE_REP_TOL)");
  verify->add_flag("--json", json, "machine-readable output");

  auto* catalog = app.add_subcommand("catalog", "irreducible classes of D_M");
  catalog->add_option("--m", m, "group parameter M >= 3")->required();
  catalog->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(source, json, std::cout, std::cerr);
    if (*catalog) return cmd_catalog(m, json, std::cout, std::cerr);
    const qrep::Tolerances tol = resolve_tolerances(tol_flag);
    if (*decompose) return cmd_decompose(source, seed, tol, json, std::cout, std::cerr);
    if (*verify) return cmd_verify(range, seed, tol, json, std::cout, std::cerr);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
