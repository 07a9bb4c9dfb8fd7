#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scarpi::cli {

/// Invalid flags, config keys or option values. Mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command {
  Transition,
  Kernel,
  Sonine,
  Spectral,
  Kochubei,
  Relax,
  Invert,
  CqWeights,
};

/// One fully-resolved run: command, transition spec, grid spec and the
/// command-specific options. Values come from defaults, then a config file,
/// then command-line flags, each layer overriding the previous one.
struct RunConfig {
  Command command = Command::Kernel;

  // transition spec ("exp", "mlf", "erf", "const"; empty = not set)
  std::string transition;
  double a1 = 0.6;
  double a2 = 0.8;
  double c = 2.0;
  double beta = 0.7;

  // grid spec
  double tmin = 0.01;
  double tmax = 5.0;
  int points = 200;
  std::string spacing = "linear";  // "linear" | "log"

  double eps = 0.0;  // 0 = library default
  std::string output;  // empty = "<command>.csv"

  // command-specific options
  std::string which = "psi";  // kernel: "phi" | "psi"
  double lambda = 1.0;
  double y0 = 1.0;
  double step_h = 1e-3;
  int n = 1;   // order index (kernel family) or weight count (cqweights)
  int j = -1;  // auxiliary kernel index; -1 = plain phi/psi kernel
  std::string generator = "bdf1";  // "bdf1" | "bdf2"
  std::string expr = "recip_s";    // invert built-ins
  double power = -0.7;             // exponent for expr = pow_s
  double t_single = 0.0;           // invert --t; 0 = not set
  int mesh = 4096;                 // sonine
  double grading = 2.0;            // sonine
};

/// Keys accepted by config files and, one-to-one, by long flags.
const std::vector<std::string>& valid_keys();

/// Reads a line-oriented `key = value` file ('#' starts a comment, blank
/// lines ignored) and returns the pairs in file order. Throws UsageError if
/// the file is missing or a line is malformed.
std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path);

/// Applies one key/value pair. Unknown keys raise UsageError listing the
/// valid keys; unparseable values raise UsageError naming the key.
void apply_key(RunConfig& config, const std::string& key,
               const std::string& value);

/// Cross-field validation for the chosen command (grid sanity, required
/// keys, enum values). Throws UsageError.
void validate(const RunConfig& config);

/// Executes the run: writes the CSV (or prints a single value for
/// `invert` with t set) and returns the output path ("" when nothing was
/// written to disk). Numerical failures propagate as exceptions.
std::string run(const RunConfig& config);

/// The time (or r) grid described by the config.
std::vector<double> make_grid(const RunConfig& config);

/// Doubles rendered with 17 significant digits, round-trip exact.
std::string format_value(double v);

}  // namespace scarpi::cli
