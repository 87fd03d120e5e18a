#ifndef QPD_REPORT_HPP
#define QPD_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qpd/numeric_oracle.hpp"

namespace qpd {

enum class Mode { Auto, Binary, Ternary, OracleOnly, Inequalities, Sweep };
enum class OutputFormat { Text, Json };

std::string_view to_string(Mode m);
/// Throws InvalidConfig for unknown names.
Mode parse_mode(std::string_view text);

struct RunRequest {
  std::filesystem::path input_path;  ///< unused by inequalities and sweep
  Mode mode = Mode::Auto;
  OracleConfig oracle_cfg;
  OutputFormat output_format = OutputFormat::Text;
  bool use_oracle = true;
  int samples = 10'000;  ///< inequalities mode
  std::uint64_t seed = 1;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kConflict = 2;
}  // namespace exit_code

struct Report {
  nlohmann::ordered_json body;
  int exit_code = exit_code::kOk;
};

/// Executes the request. Input errors (unreadable or malformed files,
/// dimension mismatches, bad config) are reported as an "error" body with
/// exit code 1 rather than thrown.
Report run(const RunRequest& request);

/// JSON text (two-space indent, trailing newline) or a plain-text summary.
std::string render(const Report& report, OutputFormat format);

}  // namespace qpd

#endif  // QPD_REPORT_HPP
