#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jones::lab {

struct PropertyResult {
  std::string suite;
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 1;
  std::string suite;  // empty runs every suite
  std::string fault;  // "lipschitz" patches the Lipschitz bound to 1/2
};

std::vector<std::string> suite_names();

/// Runs the property suites. Throws InputError on an unknown suite or fault.
std::vector<PropertyResult> verify_all(const VerifyOptions& opt);

/// Plain-text summary table.
std::string format_results(const std::vector<PropertyResult>& results);

}  // namespace jones::lab
