// spgeo: command-line front end. Exit status 0 when every check passes, 1 when
// a verification fails, 2 on malformed input or arguments.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "reports.hpp"

namespace {

using spgeo::cli::InputError;
using spgeo::cli::json;
using spgeo::cli::Outcome;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::filesystem::path report_dir() {
  const char* d = std::getenv("SPGEO_REPORT_DIR");
  return (d && *d) ? std::filesystem::path(d) : std::filesystem::path(".");
}

int emit(const std::string& name, const Outcome& o) {
  const auto path = report_dir() / (name + ".json");
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    return 2;
  }
  out << o.report.dump(2) << "\n";
  for (const auto& line : o.summary) std::cout << line << "\n";
  std::cout << (o.pass ? "PASS" : "FAIL") << "  (report: " << path.string() << ")\n";
  return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta functions and Hecke operators on the building of GSp(4)"};
  app.require_subcommand(1);

  long p = 2;
  int radius = 1, order = 12;
  double tol = 1e-9;
  std::string out_path, types, input;

  auto* cosets = app.add_subcommand("verify-cosets", "Generate and check the coset families for p");
  cosets->add_option("--p", p, "Residue characteristic (2, 3 or 5)")->required();

  auto* ballcmd = app.add_subcommand("building-ball", "Write a ball of the building and check its local structure");
  ballcmd->add_option("--p", p, "Residue characteristic (2, 3 or 5)")->required();
  ballcmd->add_option("--radius", radius, "Radius in the 1-skeleton (0..3)")->required();
  ballcmd->add_option("--out", out_path, "Output JSON path")->required();

  auto* table3 = app.add_subcommand("verify-table3", "Recompute the operator spectra and zeta contributions");
  table3->add_option("--types", types, "Comma-separated type list, e.g. I,IIa,VId (default: all)");

  auto* identity = app.add_subcommand("verify-identity", "Check the symbolic zeta identity and its exponents");

  auto* zetacmd = app.add_subcommand("zeta", "Compare both sides of the zeta identities for supplied operators");
  zetacmd->add_option("--input", input, "Complex data JSON")->required()->check(CLI::ExistingFile);
  zetacmd->add_option("--order", order, "Series order (0..24)");

  auto* raman = app.add_subcommand("ramanujan", "Classify zeros against the Ramanujan bands");
  raman->add_option("--input", input, "Zeros, roots or representation JSON")->required()->check(CLI::ExistingFile);
  raman->add_option("--tol", tol, "Relative tolerance for numeric zeros");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cosets) return emit("verify-cosets", spgeo::cli::verify_cosets(p));
    if (*ballcmd) return emit("building-ball", spgeo::cli::building_ball(p, radius, out_path));
    if (*table3) {
      auto list = types.empty() ? spgeo::all_rep_types() : spgeo::cli::parse_type_list(types);
      return emit("verify-table3", spgeo::cli::verify_table3(list));
    }
    if (*identity) return emit("verify-identity", spgeo::cli::verify_identity());
    if (*zetacmd) return emit("zeta", spgeo::cli::zeta(read_json(input), order));
    if (*raman) return emit("ramanujan", spgeo::cli::ramanujan(read_json(input), tol));
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
