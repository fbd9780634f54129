// Command-line front end (the sbf tool).

#ifndef SEMIBAND_CLI_HPP
#define SEMIBAND_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace semiband {

  enum class ReportFormat { text, json };

  struct CliConfig {
    std::string              subcommand;
    std::vector<std::string> inputs;
    std::string              output;
    std::size_t              max_order = 3;
    std::uint64_t            seed      = 0;
    ReportFormat             format    = ReportFormat::text;
  };

  // Exit codes: 0 success / all claims pass, 1 a claim failed (or iso
  // found no isomorphism), 2 bad usage or bad input.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);
  int run_cli(int argc, char const* const* argv);

}  // namespace semiband

#endif  // SEMIBAND_CLI_HPP
