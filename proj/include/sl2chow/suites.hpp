#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2chow/report.hpp"

namespace sl2chow {

// Suite names: brackets, sl2z, formulas12, kunneth, fourier, lefschetz,
// demazure, isogeny, all. Deterministic given the seed. Throws
// dimension_guard when g exceeds the named suite's limit; "all" runs every
// suite whose limit allows the given g. Worker threads are taken from the
// SL2CHOW_WORKERS environment variable (default 1); record order is
// independent of scheduling.
SuiteReport run_suite(const std::string& name, int g, std::vector<long> type,
                      std::uint64_t seed);

std::vector<std::string> suite_names();
int suite_max_g(const std::string& name);

}  // namespace sl2chow
