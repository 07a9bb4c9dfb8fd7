#include "scarpi/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scarpi/kernels.hpp"
#include "scarpi/relaxation.hpp"
#include "scarpi/sonine.hpp"
#include "scarpi/special_functions.hpp"
#include "scarpi/transitions.hpp"

namespace scarpi::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw UsageError("type mismatch for key '" + key + "': expected a number, got '" + value + "'");
  }
  if (used != value.size()) {
    throw UsageError("type mismatch for key '" + key + "': expected a number, got '" + value + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(value, &used);
  } catch (const std::exception&) {
    throw UsageError("type mismatch for key '" + key + "': expected an integer, got '" + value + "'");
  }
  if (used != value.size()) {
    throw UsageError("type mismatch for key '" + key + "': expected an integer, got '" + value + "'");
  }
  return v;
}

Command parse_command(const std::string& value) {
  if (value == "transition") return Command::Transition;
  if (value == "kernel") return Command::Kernel;
  if (value == "sonine") return Command::Sonine;
  if (value == "spectral") return Command::Spectral;
  if (value == "kochubei") return Command::Kochubei;
  if (value == "relax") return Command::Relax;
  if (value == "invert") return Command::Invert;
  if (value == "cqweights") return Command::CqWeights;
  throw UsageError("unknown command '" + value + "'");
}

std::string command_name(Command c) {
  switch (c) {
    case Command::Transition: return "transition";
    case Command::Kernel: return "kernel";
    case Command::Sonine: return "sonine";
    case Command::Spectral: return "spectral";
    case Command::Kochubei: return "kochubei";
    case Command::Relax: return "relax";
    case Command::Invert: return "invert";
    case Command::CqWeights: return "cqweights";
  }
  return "run";
}

bool needs_transition(Command c) {
  return c != Command::Invert;
}

TransitionFunction build_transition(const RunConfig& cfg) {
  if (cfg.transition.empty()) {
    throw UsageError("missing required key 'transition' for command '" +
                     command_name(cfg.command) + "'");
  }
  if (cfg.transition == "exp") return make_exponential(cfg.a1, cfg.a2, cfg.c);
  if (cfg.transition == "mlf") {
    return make_mittag_leffler(cfg.a1, cfg.a2, cfg.c, cfg.beta);
  }
  if (cfg.transition == "erf") return make_erf(cfg.a1, cfg.a2, cfg.c);
  if (cfg.transition == "const") return make_constant(cfg.a1);
  throw UsageError("unknown transition '" + cfg.transition +
                   "' (expected exp, mlf, erf or const)");
}

KernelPair build_pair(const RunConfig& cfg) {
  const TransitionFunction tr = build_transition(cfg);
  return cfg.n > 1 ? higher_order_pair(tr, cfg.n) : make_kernel_pair(tr);
}

double effective_eps(const RunConfig& cfg) {
  return cfg.eps == 0.0 ? kDefaultEps : cfg.eps;
}

std::string resolve_output(const RunConfig& cfg) {
  std::string path = cfg.output.empty()
                         ? command_name(cfg.command) + ".csv"
                         : cfg.output;
  if (path.front() != '/') {
    if (const char* dir = std::getenv("SCARPI_OUTPUT_DIR")) {
      if (*dir != '\0') path = std::string(dir) + "/" + path;
    }
  }
  return path;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path)
      : out_(path, std::ios::binary), path_(path) {
    if (!out_) throw std::runtime_error("cannot open output file " + path);
  }
  void header(const std::string& line) { out_ << line << "\n"; }
  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ << ",";
      out_ << format_value(values[i]);
    }
    out_ << "\n";
  }
  void raw_row(const std::string& line) { out_ << line << "\n"; }
  const std::string& path() const { return path_; }

 private:
  std::ofstream out_;
  std::string path_;
};

LaplaceFunction builtin_transform(const RunConfig& cfg) {
  if (cfg.expr == "recip_s") {
    return {[](std::complex<double> s) { return 1.0 / s; }, "pole at s=0"};
  }
  if (cfg.expr == "recip_s2") {
    return {[](std::complex<double> s) { return 1.0 / (s * s); },
            "double pole at s=0"};
  }
  if (cfg.expr == "recip_s_plus_1") {
    return {[](std::complex<double> s) { return 1.0 / (s + 1.0); },
            "pole at s=-1 on the negative real axis"};
  }
  if (cfg.expr == "pow_s") {
    if (!(cfg.power < 0.0)) {
      throw UsageError("pow_s requires power < 0 for an invertible transform");
    }
    const double p = cfg.power;
    return {[p](std::complex<double> s) { return std::pow(s, p); },
            "branch point at s=0, cut on the negative real axis"};
  }
  throw UsageError("unknown expr '" + cfg.expr +
                   "' (expected recip_s, recip_s2, recip_s_plus_1 or pow_s)");
}

}  // namespace

const std::vector<std::string>& valid_keys() {
  static const std::vector<std::string> keys = {
      "command", "transition", "a1",     "a2",    "c",      "beta",
      "tmin",    "tmax",       "points", "spacing", "eps",  "output",
      "which",   "lambda",     "y0",     "step_h", "n",     "j",
      "generator", "expr",     "power",  "t",     "mesh",   "grading",
  };
  return keys;
}

std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config " + path + ":" + std::to_string(lineno) +
                       ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw UsageError("config " + path + ":" + std::to_string(lineno) +
                       ": empty key");
    }
    pairs.emplace_back(key, value);
  }
  return pairs;
}

void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& value) {
  if (key == "command") { cfg.command = parse_command(value); return; }
  if (key == "transition") { cfg.transition = value; return; }
  if (key == "a1") { cfg.a1 = parse_double(key, value); return; }
  if (key == "a2") { cfg.a2 = parse_double(key, value); return; }
  if (key == "c") { cfg.c = parse_double(key, value); return; }
  if (key == "beta") { cfg.beta = parse_double(key, value); return; }
  if (key == "tmin") { cfg.tmin = parse_double(key, value); return; }
  if (key == "tmax") { cfg.tmax = parse_double(key, value); return; }
  if (key == "points") { cfg.points = parse_int(key, value); return; }
  if (key == "spacing") { cfg.spacing = value; return; }
  if (key == "eps") { cfg.eps = parse_double(key, value); return; }
  if (key == "output") { cfg.output = value; return; }
  if (key == "which") { cfg.which = value; return; }
  if (key == "lambda") { cfg.lambda = parse_double(key, value); return; }
  if (key == "y0") { cfg.y0 = parse_double(key, value); return; }
  if (key == "step_h") { cfg.step_h = parse_double(key, value); return; }
  if (key == "n") { cfg.n = parse_int(key, value); return; }
  if (key == "j") { cfg.j = parse_int(key, value); return; }
  if (key == "generator") { cfg.generator = value; return; }
  if (key == "expr") { cfg.expr = value; return; }
  if (key == "power") { cfg.power = parse_double(key, value); return; }
  if (key == "t") { cfg.t_single = parse_double(key, value); return; }
  if (key == "mesh") { cfg.mesh = parse_int(key, value); return; }
  if (key == "grading") { cfg.grading = parse_double(key, value); return; }

  std::string msg = "unknown key '" + key + "'; valid keys:";
  for (const auto& k : valid_keys()) msg += " " + k;
  throw UsageError(msg);
}

void validate(const RunConfig& cfg) {
  if (cfg.spacing != "linear" && cfg.spacing != "log") {
    throw UsageError("spacing must be 'linear' or 'log'");
  }
  if (cfg.points < 2) throw UsageError("points must be >= 2");
  if (!(cfg.tmax > cfg.tmin)) throw UsageError("tmax must exceed tmin");
  if (cfg.spacing == "log" && !(cfg.tmin > 0.0)) {
    throw UsageError("tmin must be positive for log spacing");
  }
  const bool positive_grid = cfg.command != Command::Transition;
  if (positive_grid && !(cfg.tmin > 0.0)) {
    throw UsageError("tmin must be positive for command '" +
                     command_name(cfg.command) + "'");
  }
  if (cfg.tmin < 0.0) throw UsageError("tmin must be non-negative");
  if (cfg.eps != 0.0 && !(cfg.eps > 0.0 && cfg.eps < 1.0)) {
    throw UsageError("eps must lie in (0,1)");
  }
  if (needs_transition(cfg.command) && cfg.transition.empty()) {
    throw UsageError("missing required key 'transition' for command '" +
                     command_name(cfg.command) + "'");
  }
  if (cfg.command == Command::Kernel && cfg.which != "phi" &&
      cfg.which != "psi") {
    throw UsageError("which must be 'phi' or 'psi'");
  }
  if (cfg.generator != "bdf1" && cfg.generator != "bdf2") {
    throw UsageError("generator must be 'bdf1' or 'bdf2'");
  }
  if (cfg.command == Command::Invert && cfg.t_single < 0.0) {
    throw UsageError("t must be positive");
  }
}

std::vector<double> make_grid(const RunConfig& cfg) {
  std::vector<double> grid(cfg.points);
  if (cfg.spacing == "log") {
    const double la = std::log(cfg.tmin);
    const double lb = std::log(cfg.tmax);
    for (int i = 0; i < cfg.points; ++i) {
      grid[i] = std::exp(la + (lb - la) * i / (cfg.points - 1));
    }
  } else {
    for (int i = 0; i < cfg.points; ++i) {
      grid[i] = cfg.tmin + (cfg.tmax - cfg.tmin) * i / (cfg.points - 1);
    }
  }
  return grid;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string run(const RunConfig& cfg) {
  validate(cfg);
  const double eps = effective_eps(cfg);

  switch (cfg.command) {
    case Command::Transition: {
      const TransitionFunction tr = build_transition(cfg);
      const std::vector<double> grid = make_grid(cfg);
      CsvWriter csv(resolve_output(cfg));
      csv.header("t,alpha");
      for (double t : grid) csv.row({t, tr(t)});
      return csv.path();
    }

    case Command::Kernel: {
      const KernelPair pair = build_pair(cfg);
      const std::vector<double> grid = make_grid(cfg);
      std::vector<double> values;
      std::string column = cfg.which;
      if (cfg.j >= 0) {
        if (cfg.which != "phi") {
          throw UsageError("j selects an auxiliary derivative kernel and "
                           "requires which = phi");
        }
        values = phi_j_kernel(pair, cfg.j, grid, eps);
        column = "phi_" + std::to_string(cfg.j);
      } else {
        values = cfg.which == "phi" ? phi_kernel(pair, grid, eps)
                                    : psi_kernel(pair, grid, eps);
      }
      CsvWriter csv(resolve_output(cfg));
      csv.header("t," + column);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        csv.row({grid[i], values[i]});
      }
      return csv.path();
    }

    case Command::Sonine: {
      const KernelPair pair = build_pair(cfg);
      const std::vector<double> checkpoints = make_grid(cfg);
      const double factorial = gamma_fn(static_cast<double>(pair.order_index()));
      CsvWriter csv(resolve_output(cfg));
      csv.header("t,convolution,target,deviation");
      for (double t : checkpoints) {
        const double s = sonine_convolve(pair, t, cfg.mesh, cfg.grading, eps);
        const double target =
            std::pow(t, pair.order_index() - 1.0) / factorial;
        csv.row({t, s, target, std::abs(s - target)});
      }
      return csv.path();
    }

    case Command::Spectral: {
      const KernelPair pair = build_pair(cfg);
      const std::vector<double> grid = make_grid(cfg);
      const std::vector<double> density = spectral_density(pair, grid);
      CsvWriter csv(resolve_output(cfg));
      csv.header("r,density");
      for (std::size_t i = 0; i < grid.size(); ++i) {
        csv.row({grid[i], density[i]});
      }
      return csv.path();
    }

    case Command::Kochubei: {
      const KernelPair pair = build_pair(cfg);
      const std::vector<double> r_grid = make_grid(cfg);
      std::vector<double> sigma_grid;
      for (int e = -6; e <= 6; ++e) sigma_grid.push_back(std::pow(10.0, e));
      const KochubeiReport rep = kochubei_check(pair, r_grid, sigma_grid);
      CsvWriter csv(resolve_output(cfg));
      csv.header("condition,passed,witness");
      csv.raw_row("A1," + std::to_string(rep.a1_finite ? 1 : 0) + "," +
                  format_value(rep.phi_at_sigma_max));
      csv.raw_row("A2," + std::to_string(rep.a2_nonnegative ? 1 : 0) + "," +
                  format_value(rep.min_density));
      csv.raw_row("A3," + std::to_string(rep.a3_decay_at_inf ? 1 : 0) + "," +
                  format_value(rep.sigma_phi_at_sigma_max));
      csv.raw_row("A4," + std::to_string(rep.a4_blowup_at_zero ? 1 : 0) + "," +
                  format_value(rep.sigma_phi_at_sigma_min));
      return csv.path();
    }

    case Command::Relax: {
      const TransitionFunction tr = build_transition(cfg);
      const RelaxationProblem problem(tr, cfg.lambda, cfg.y0);
      const std::vector<double> grid = make_grid(cfg);
      const TimeSeries y = solve_lt(problem, grid, eps);
      const TimeSeries y1 = reference_constant_solution(
          tr.alpha_initial(), cfg.lambda, cfg.y0, grid);
      const TimeSeries y2 = reference_constant_solution(
          tr.alpha_final(), cfg.lambda, cfg.y0, grid);
      CsvWriter csv(resolve_output(cfg));
      csv.header("t,y,y1_ref,y2_ref");
      for (std::size_t i = 0; i < grid.size(); ++i) {
        csv.row({grid[i], y.values[i], y1.values[i], y2.values[i]});
      }
      return csv.path();
    }

    case Command::Invert: {
      const LaplaceFunction f = builtin_transform(cfg);
      if (cfg.t_single > 0.0) {
        std::cout << format_value(invert_at(f, cfg.t_single, eps)) << "\n";
        return "";
      }
      const std::vector<double> grid = make_grid(cfg);
      const std::vector<double> values = invert(f, grid, eps);
      CsvWriter csv(resolve_output(cfg));
      csv.header("t,f");
      for (std::size_t i = 0; i < grid.size(); ++i) {
        csv.row({grid[i], values[i]});
      }
      return csv.path();
    }

    case Command::CqWeights: {
      // here n is the weight count, not an order index; the base pair applies
      const KernelPair pair = make_kernel_pair(build_transition(cfg));
      const CQGenerator gen = cfg.generator == "bdf2" ? CQGenerator::BDF2
                                                      : CQGenerator::BDF1;
      const CQScheme scheme = cq_weights(
          [&pair](std::complex<double> s) { return pair.psi_laplace(s); },
          cfg.step_h, cfg.n, gen);
      CsvWriter csv(resolve_output(cfg));
      csv.header("n,omega");
      for (std::size_t i = 0; i < scheme.weights.size(); ++i) {
        csv.row({static_cast<double>(i), scheme.weights[i]});
      }
      return csv.path();
    }
  }
  throw std::runtime_error("run: unhandled command");
}

}  // namespace scarpi::cli
