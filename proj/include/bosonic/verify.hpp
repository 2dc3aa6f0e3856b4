#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bosonic {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool ok() const;
};

struct VerifyOptions {
  std::vector<std::string> types;  // empty: the suite's default list
  int len = -1;                    // garside word length / well-definedness length
  int max_deg = -1;                // orthogonality degree bound
  int samples = -1;                // random pairs per type
  std::uint64_t seed = 20240917;
  int max_height = 10;
  std::string cache_dir;
};

// Suite names in acceptance order: suite_names()[n-1] runs criterion n.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace bosonic
