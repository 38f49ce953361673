#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altkurepa::cli {

/// Process exit codes.
enum ExitStatus : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// One evaluated point, as emitted by `eval` and `table`.
struct OutputRecord {
  double x;
  double re_A;
  double im_A;
  double beta;
  double gamma;
  double abs_err;
};

inline constexpr const char* kCsvHeader = "x,re_A,im_A,beta,gamma,abs_err";

/// 15 significant digits, scientific ("%.14e"); negative zero prints as zero.
std::string format_sig15(double v);

std::string to_csv_row(const OutputRecord& r);
std::string to_json_object(const OutputRecord& r);

/// Parses the CSV emitted by `table` (header line required).
std::vector<OutputRecord> parse_csv(const std::string& text);

/// Runs the command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altkurepa::cli
