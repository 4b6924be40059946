#ifndef MAGNUS_SUITE_HPP
#define MAGNUS_SUITE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "magnus/twist_johnson.hpp"

namespace magnus {

/// One numbered acceptance check made of several certificates.
struct SuiteEntry {
  int id;
  std::string title;
  std::vector<Certificate> checks;
  double seconds = 0;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
};

inline constexpr int kSuiteSize = 14;

/// Runs check `id` in [1, kSuiteSize]. Randomized checks use fixed seeds.
SuiteEntry run_suite_entry(int id);

/// "all" or a comma-separated list of ids such as "1,4,12".
/// Throws std::invalid_argument on anything else.
std::vector<int> parse_suite_selection(std::string_view text);

}  // namespace magnus

#endif  // MAGNUS_SUITE_HPP
