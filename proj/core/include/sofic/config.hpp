#ifndef SOFIC_CONFIG_HPP_
#define SOFIC_CONFIG_HPP_

#include <cstdint>
#include <string>

namespace sofic {

/// Runtime options shared by the CLI commands.
struct Config {
  long long budget = 10'000'000;  // search node budget
  int oracle_bound = 0;           // 0: derive from the instance
  std::string format = "json";    // json | text
  std::string dot_dir;            // empty: no DOT output
  bool raw_semigroup = false;
  bool exhaustive = false;
  std::uint64_t seed = 1;         // corpus generation
};

}  // namespace sofic

#endif  // SOFIC_CONFIG_HPP_
