#ifndef MEANFORGE_CLI_SUPPORT_HPP
#define MEANFORGE_CLI_SUPPORT_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "meanforge/quadrature.hpp"
#include "meanforge/representations.hpp"

/// Parsing, configuration precedence, and table formatting for the
/// meanforge command-line tool.  Kept apart from main() so the pieces
/// are unit-testable.
namespace meanforge::cli {

enum class OutputFormat { csv, json };

struct CliConfig {
  OutputFormat format = OutputFormat::csv;
  quad::QuadConfig quad;
  int threads = 0;  // 0 = leave runtime default
};

/// key=value lines; '#' starts a comment, blank lines ignored.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Applies MEANFORGE_CONFIG (when set) on top of built-in defaults.
/// Flag values parsed later override these.
CliConfig config_from_environment();

/// Accepted forms: "v", "a,b,c", "lo:hi:n" (linear), "log:lo:hi:n".
std::vector<double> parse_range(const std::string& spec);

/// "re" or "re,im".
std::complex<double> parse_complex(const std::string& spec);

std::string format_number(double v);  // %.17g
std::string format_complex(std::complex<double> z);

/// Fixed 11-column row schema shared by verify/grid/contour output:
/// identity,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_res,rel_res,
/// err_est,evals,converged
std::string csv_header();
std::string csv_row(const repr::ResidualReport& r);
std::string json_row(const repr::ResidualReport& r);

/// Default pass tolerance per identity class (single / double / triple
/// nesting); am-gm and a-l are judged on the absolute residual.
struct Tolerance {
  double value;
  bool absolute;
};
Tolerance identity_tolerance(const std::string& identity);

bool row_passes(const repr::ResidualReport& r);

}  // namespace meanforge::cli

#endif  // MEANFORGE_CLI_SUPPORT_HPP
