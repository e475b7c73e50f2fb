#include "sl2chow/report.hpp"

#include <algorithm>
#include <sstream>

#include "sl2chow/rng.hpp"

namespace sl2chow {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::size_t SuiteReport::failed() const {
  std::size_t n = 0;
  for (const auto& r : records)
    if (!r.pass) ++n;
  return n;
}

namespace {

std::string type_string(const std::vector<long>& type) {
  std::string out;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(type[i]);
  }
  return out;
}

std::vector<CheckRecord> sorted_records(const SuiteReport& report) {
  std::vector<CheckRecord> records = report.records;
  std::sort(records.begin(), records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return records;
}

}  // namespace

std::string format_structured(const SuiteReport& report) {
  std::ostringstream out;
  out << "format: 1\n";
  out << "suite: " << report.suite << "\n";
  out << "g: " << report.g << "\n";
  out << "type: " << type_string(report.type) << "\n";
  out << "seed: " << report.seed << "\n";
  for (const auto& r : sorted_records(report)) {
    out << "record: " << r.id << " " << (r.pass ? "pass" : "fail") << " " << r.digest;
    if (!r.detail.empty()) out << " " << r.detail;
    out << "\n";
  }
  out << "summary: checks=" << report.records.size() << " failed=" << report.failed() << "\n";
  out << "status: " << (report.all_pass() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string format_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " (g=" << report.g << ", type=" << type_string(report.type)
      << ", seed=" << report.seed << ")\n";
  for (const auto& r : sorted_records(report)) {
    out << "  [" << (r.pass ? " ok " : "FAIL") << "] " << r.id;
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
  }
  out << (report.all_pass() ? "all checks passed" : std::to_string(report.failed()) + " checks failed")
      << " (" << report.records.size() << " total)\n";
  return out.str();
}

}  // namespace sl2chow
