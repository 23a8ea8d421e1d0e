#ifndef QWALK_CLI_HPP
#define QWALK_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Accepted deviation of |alpha_l|^2 + |alpha_r|^2 from 1 for command-line
/// input. Accepted vectors are rescaled to unit norm before use.
inline constexpr double kInitialNormTolerance = 1e-6;

enum class Command { simulate, asymptotic, compare, density, spectrum };
enum class Format { csv, json };

std::string_view to_string(Command c);

struct RunConfig {
  Command command = Command::simulate;
  std::string tau1 = "0.5";
  std::string tau2 = "0";
  std::int64_t steps = 100;
  std::string initial = "0.7071067811865476,0,0.7071067811865476,0";
  std::string output;  // empty: standard output
  Format format = Format::csv;
  std::optional<std::int64_t> nodes;
  bool two_saddle = true;
  std::optional<std::uint64_t> seed;
  std::int64_t grid = 401;  // density: number of y samples
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decimal ("0.75", "1e-1") or rational ("3/4") string to double, rounded once.
double parse_tau(std::string_view text);

/// "re,im,re,im" for (alpha_left, alpha_right). Throws UsageError when the
/// text is malformed and DomainError when the norm is off by more than
/// kInitialNormTolerance.
Spinor parse_initial(std::string_view text);

struct Column {
  std::string name;
  bool integer = false;
};

struct SummaryEntry {
  std::string key;
  double value;
};

/// Output of one command: named columns, rows ordered by the first column,
/// and scalar summary values written as header comments.
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  std::vector<SummaryEntry> summary;
};

/// Validates the configuration; every violated precondition produces one line.
/// Returns the exit code the violations map to (kExitOk when none).
int validate(const RunConfig &config, std::vector<std::string> &problems);

/// Runs the configured command. Assumes validate() passed.
Table build_table(const RunConfig &config);

void write_csv(std::ostream &os, const RunConfig &config, const Table &table);
void write_json(std::ostream &os, const RunConfig &config, const Table &table);

/// Validate, compute, write. Diagnostics go to `err`; output goes to
/// config.output, or to `out` when that is empty.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Full command-line entry point.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qwalk::cli

#endif  // QWALK_CLI_HPP
