#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fusionburnside {

struct RunConfig
{
  std::string subcommand;
  std::string group_file;
  std::string catalog_name;
  std::optional<int> prime;
  std::string format = "text";
  std::uint64_t seed = 20240101;
  std::string element_file;
  bool verbose = false;
};

/// Exit status: 0 success, 1 module error or failed check, 2 malformed input.
int run(RunConfig const &config, std::ostream &out, std::ostream &err);

/// Parses command-line arguments (without the program name) and runs.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace fusionburnside
