#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nprox/cli.hpp"
#include "nprox/json_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Newton-structured polynomial projectors"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  bool check = false;

  const char* names[][2] = {
      {"points", "Leja and Chebyshev node sequences"},
      {"ortho", "orthonormal bases and Bernstein-Markov diagnostics"},
      {"project", "build a projector and apply it to a test function"},
      {"converge", "sup-norm errors against degree"},
      {"cylinder", "Kergin x Lagrange on the cylinder"},
      {"polya", "Newton series of exp(lambda x) at the integers"},
      {"gelfond", "Gelfond constant c(omega)"},
      {"rho", "estimate the Bernstein-Walsh radius of f"},
      {"density", "omega-density of a point sequence"},
  };
  for (auto& [name, help] : names) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_flag("--check", check, "exit with status 2 when verification fails");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? nprox::kExitOk : nprox::kExitError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  nlohmann::json config;
  try {
    config = nprox::read_json_file(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return nprox::kExitError;
  }
  return nprox::run_subcommand(name, config, std::filesystem::path(out_dir), check, std::cerr);
}
