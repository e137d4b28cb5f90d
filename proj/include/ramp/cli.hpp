#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramp/options.hpp"
#include "ramp/output.hpp"

namespace ramp::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kIoError = 3,
  kConfigError = 4,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Threshold as given on the command line: an absolute count, or a fraction
/// of the transaction count when written with a decimal point or exponent.
struct MinSupport {
  std::optional<Support> absolute;
  double fraction = 0.0;

  Support resolve(std::size_t transaction_count) const;
};

/// Throws ConfigError for negative, out-of-range or malformed values and
/// for fractions outside (0, 1].
MinSupport parse_min_sup(const std::string& text);

struct MineConfig {
  Mode mode = Mode::all;
  MinSupport min_sup;
  std::string input;   // empty: read the supplied input stream
  std::string output;  // empty: write the supplied output stream
  MineOptions options;
  unsigned word_width = 64;
  bool sorted = false;
  bool print_stats = false;
  std::size_t buffer = OutputBuffer::kDefaultThreshold;
};

/// Rejects toggles that do not apply to the configured mode.
void validate(const MineConfig& config);

/// Region width from RAMP_WORD_WIDTH (32 or 64, default 64).
unsigned word_width_from_env();

/// Mines and writes results; the summary goes to `err`. Returns an ExitCode.
int run_mine(const MineConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ramp::cli
