#include <exception>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scarpi/run_config.hpp"

namespace {

struct SubCommand {
  CLI::App* app = nullptr;
  scarpi::cli::Command command = scarpi::cli::Command::Kernel;
  std::map<std::string, std::string> values;
  std::vector<std::pair<std::string, CLI::Option*>> options;
  std::string config_path;
};

const std::map<std::string, std::string> kKeyHelp = {
    {"transition", "transition kind: exp, mlf, erf or const"},
    {"a1", "initial order alpha1 (also the constant order for 'const')"},
    {"a2", "asymptotic order alpha2"},
    {"c", "transition rate c > 0"},
    {"beta", "Mittag-Leffler exponent in (0,1] (mlf only)"},
    {"tmin", "grid start"},
    {"tmax", "grid end"},
    {"points", "number of grid points"},
    {"spacing", "grid spacing: linear or log"},
    {"eps", "target accuracy of the contour inversion"},
    {"output", "output CSV path"},
    {"which", "kernel side: phi or psi"},
    {"lambda", "relaxation rate lambda >= 0"},
    {"y0", "initial value"},
    {"step_h", "quadrature step h"},
    {"n", "order index / weight count"},
    {"j", "auxiliary kernel index in [0, n-1]"},
    {"generator", "convolution-quadrature generator: bdf1 or bdf2"},
    {"expr", "built-in transform: recip_s, recip_s2, recip_s_plus_1, pow_s"},
    {"power", "exponent for expr=pow_s (must be negative)"},
    {"t", "single evaluation time (prints the value instead of a CSV)"},
    {"mesh", "convolution mesh cells per half interval"},
    {"grading", "mesh grading exponent >= 1"},
};

void add_keys(SubCommand& sub, const std::vector<std::string>& keys) {
  for (const std::string& key : keys) {
    CLI::Option* opt = sub.app->add_option("--" + key, sub.values[key],
                                           kKeyHelp.at(key));
    sub.options.emplace_back(key, opt);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "scarpi: variable-order fractional derivatives and integrals via "
      "Laplace-domain kernel representations"};
  app.require_subcommand(1);

  using scarpi::cli::Command;
  const std::vector<std::string> transition_keys = {"transition", "a1", "a2",
                                                    "c", "beta"};
  const std::vector<std::string> grid_keys = {"tmin", "tmax", "points",
                                              "spacing"};
  const std::vector<std::string> io_keys = {"eps", "output"};

  std::vector<std::unique_ptr<SubCommand>> subs;
  auto add_sub = [&](const std::string& name, Command cmd,
                     const std::string& help,
                     const std::vector<std::string>& extra,
                     bool with_transition = true,
                     bool with_grid = true) -> SubCommand& {
    auto sub = std::make_unique<SubCommand>();
    sub->command = cmd;
    sub->app = app.add_subcommand(name, help);
    if (with_transition) add_keys(*sub, transition_keys);
    if (with_grid) add_keys(*sub, grid_keys);
    add_keys(*sub, io_keys);
    add_keys(*sub, extra);
    sub->app->add_option("--config", sub->config_path,
                         "config file with 'key = value' lines");
    subs.push_back(std::move(sub));
    return *subs.back();
  };

  add_sub("transition", Command::Transition,
          "evaluate the variable order alpha(t) on a grid", {});
  add_sub("kernel", Command::Kernel,
          "evaluate a time-domain kernel (phi or psi) on a grid",
          {"which", "n", "j"});
  add_sub("sonine", Command::Sonine,
          "convolution check of the kernel pair against its target",
          {"mesh", "grading", "n"});
  add_sub("spectral", Command::Spectral,
          "spectral density of the derivative kernel across the branch cut",
          {});
  add_sub("kochubei", Command::Kochubei,
          "sampled Stieltjes-representation conditions A1-A4", {"n"});
  add_sub("relax", Command::Relax,
          "solve the variable-order relaxation equation (with constant-order "
          "references)",
          {"lambda", "y0"});
  add_sub("invert", Command::Invert, "invert a built-in test transform",
          {"expr", "power", "t"}, /*with_transition=*/false);
  add_sub("cqweights", Command::CqWeights,
          "convolution-quadrature weights generated from the integral kernel",
          {"step_h", "n", "generator"}, /*with_transition=*/true,
          /*with_grid=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& sub : subs) {
      if (!sub->app->parsed()) continue;
      scarpi::cli::RunConfig cfg;
      cfg.command = sub->command;
      if (!sub->config_path.empty()) {
        for (const auto& [key, value] :
             scarpi::cli::parse_config_file(sub->config_path)) {
          scarpi::cli::apply_key(cfg, key, value);
        }
      }
      for (const auto& [key, opt] : sub->options) {
        if (opt->count() > 0) {
          scarpi::cli::apply_key(cfg, key, sub->values.at(key));
        }
      }
      const std::string written = scarpi::cli::run(cfg);
      if (!written.empty()) std::cerr << "wrote " << written << "\n";
      return 0;
    }
    std::cerr << "no command given\n";
    return 2;
  } catch (const scarpi::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
