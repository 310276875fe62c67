// icopt: optimal linear index codes over GF(2).
//
// Exit codes: 0 success, 1 bad input or I/O, 2 enumeration budget exceeded,
// 64 usage error, 70 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "icopt/analysis.hpp"
#include "icopt/examples.hpp"
#include "icopt/netcode.hpp"
#include "icopt/problem.hpp"
#include "icopt/report.hpp"
#include "icopt/solver.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

icopt::IndexCodingProblem load(const std::string& path) {
  return icopt::to_single_unicast(icopt::load_problem(path));
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw icopt::InputError("cannot write '" + path.string() + "'");
  }
  out << content;
  if (!out.flush()) {
    throw icopt::InputError("failed writing '" + path.string() + "'");
  }
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw icopt::InputError("cannot create directory '" + dir.string() + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal-length linear index codes over GF(2)", "icopt"};
  app.require_subcommand(0, 1);

  std::string seed_dir;
  app.add_option("--seed-examples", seed_dir, "Write the built-in example problems into DIR")->type_name("DIR");

  std::string file;
  std::size_t length = 0;

  auto* solve = app.add_subcommand("solve", "Optimal length, column-space count and every optimal code");
  solve->add_option("file", file, "Problem file (JSON)")->required();

  auto* verify = app.add_subcommand("verify", "Classify a length by scanning the right inverses of A^T");
  verify->add_option("file", file, "Problem file (JSON)")->required();
  verify->add_option("--length,-c", length, "Code length")->required()->check(CLI::PositiveNumber);
  bool with_candidates = false;
  verify->add_flag("--candidates", with_candidates, "Also list every candidate matrix");

  auto* exporter = app.add_subcommand("export", "Write the network graph or its matrices");
  exporter->add_option("file", file, "Problem file (JSON)")->required();
  exporter->add_option("--length,-c", length, "Code length")->required()->check(CLI::PositiveNumber);
  std::string format;
  exporter->add_option("--format", format, "dot or matrices")->required()->check(CLI::IsMember({"dot", "matrices"}));
  std::string out_dir = ".";
  exporter->add_option("--out", out_dir, "Output directory")->capture_default_str()->type_name("DIR");

  auto* analyze = app.add_subcommand("analyze", "Per-receiver transmission counts for every optimal code");
  analyze->add_option("file", file, "Problem file (JSON)")->required();
  bool minmax = false;
  analyze->add_flag("--minmax", minmax, "Select the codes minimizing the worst receiver's count");

  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-check (n <= 5)");
  oracle->group("");
  oracle->add_option("file", file, "Problem file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!seed_dir.empty()) {
      ensure_directory(seed_dir);
      for (const auto& [stem, problem] : icopt::examples::all()) {
        write_file(fs::path(seed_dir) / (stem + ".json"), icopt::serialize_problem(problem));
      }
    }
    const auto budget = icopt::Budget::from_env();

    if (*solve) {
      std::cout << icopt::render_solve(icopt::full_report(load(file), budget));
    } else if (*verify) {
      const auto p = load(file);
      std::cout << icopt::render_verify(icopt::theorem1_verify(p, length, budget, with_candidates));
    } else if (*exporter) {
      const auto p = load(file);
      ensure_directory(out_dir);
      if (format == "dot") {
        const auto path = fs::path(out_dir) / "graph.dot";
        write_file(path, icopt::export_dot(icopt::build_graph(p, length)));
        std::cerr << "wrote " << path.string() << "\n";
      } else {
        const auto path = fs::path(out_dir) / "matrices.json";
        write_file(path, icopt::render_matrices(p, length, budget));
        std::cerr << "wrote " << path.string() << "\n";
      }
    } else if (*analyze) {
      std::cout << icopt::render_analysis(icopt::select_best_codes(load(file), budget), minmax);
    } else if (*oracle) {
      std::cout << icopt::render_oracle(load(file));
    } else if (seed_dir.empty()) {
      std::cerr << app.help();
      return kExitUsage;
    }
  } catch (const icopt::BudgetExceeded& e) {
    std::cerr << "icopt: " << e.what() << "\n";
    return kExitBudget;
  } catch (const icopt::InputError& e) {
    std::cerr << "icopt: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "icopt: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "icopt: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "icopt: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
