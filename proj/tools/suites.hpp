#pragma once

#include <cstdint>
#include <string>

namespace sl3t::cli {

struct SuiteResult {
  bool pass = false;
  std::string json;  // details, a JSON object
};

struct SuiteOptions {
  std::size_t samples = 1000;
  std::int64_t range = 50;
  std::uint64_t seed = 0;
  int scan = 6;
};

SuiteResult suite_pentagon(const SuiteOptions& o);
SuiteResult suite_naturality(const SuiteOptions& o);
SuiteResult suite_involution(const SuiteOptions& o);
SuiteResult suite_relations(const SuiteOptions& o);
SuiteResult suite_sectors(const SuiteOptions& o);
SuiteResult suite_cornerless(const SuiteOptions& o);

}  // namespace sl3t::cli
