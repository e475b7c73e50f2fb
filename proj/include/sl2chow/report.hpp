#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2chow/abvar.hpp"

namespace sl2chow {

// One verified identity. `id` is a stable dotted key; `digest` is an FNV-1a
// hash of the check's inputs so golden files detect input drift.
struct CheckRecord {
  std::string id;
  std::string digest;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int g = 0;
  std::vector<long> type;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;  // sorted by id before emission

  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
};

// Stable key-value format, one "record:" line per identity, sorted by id.
std::string format_structured(const SuiteReport& report);
// Human-oriented lines, same order.
std::string format_text(const SuiteReport& report);

}  // namespace sl2chow
