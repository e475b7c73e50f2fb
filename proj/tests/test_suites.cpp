#include <doctest.h>

#include "sl2chow/suites.hpp"

using namespace sl2chow;

TEST_CASE("suite names and guards") {
  auto names = suite_names();
  CHECK(names.size() == 9);
  CHECK(suite_max_g("sl2z") == 2);
  CHECK(suite_max_g("brackets") == 4);
  CHECK_THROWS_AS(suite_max_g("bogus"), Error);
  CHECK_THROWS_AS(run_suite("bogus", 1, {1}, 0), Error);

  try {
    run_suite("brackets", 9, std::vector<long>(9, 1), 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::dimension_guard);
  }
  try {
    run_suite("sl2z", 3, {1, 1, 1}, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::dimension_guard);
  }
}

TEST_CASE("every named suite passes at g=1") {
  for (const std::string& name : suite_names()) {
    SuiteReport report = run_suite(name, 1, {1}, 7);
    CHECK(report.all_pass());
    CHECK(!report.records.empty());
  }
}

TEST_CASE("sl2z suite passes for g=2 types") {
  CHECK(run_suite("sl2z", 2, {1, 1}, 1).all_pass());
  CHECK(run_suite("sl2z", 2, {1, 2}, 1).all_pass());
}

TEST_CASE("reports are deterministic given the seed") {
  SuiteReport a = run_suite("fourier", 2, {1, 2}, 99);
  SuiteReport b = run_suite("fourier", 2, {1, 2}, 99);
  CHECK(format_structured(a) == format_structured(b));
  CHECK(format_text(a) == format_text(b));

  SuiteReport c = run_suite("fourier", 2, {1, 2}, 100);
  CHECK(format_structured(a) != format_structured(c));  // digests shift with inputs

  // Worker fan-out does not change the report.
  setenv("SL2CHOW_WORKERS", "4", 1);
  SuiteReport d = run_suite("fourier", 2, {1, 2}, 99);
  unsetenv("SL2CHOW_WORKERS");
  CHECK(format_structured(a) == format_structured(d));
}

TEST_CASE("records are sorted by id in the structured format") {
  SuiteReport r = run_suite("kunneth", 1, {1}, 5);
  std::string out = format_structured(r);
  std::size_t pos = 0;
  std::string prev;
  while ((pos = out.find("record: ", pos)) != std::string::npos) {
    std::size_t start = pos + 8;
    std::size_t end = out.find(' ', start);
    std::string id = out.substr(start, end - start);
    CHECK(prev <= id);
    prev = id;
    pos = end;
  }
  CHECK(!prev.empty());
}

TEST_CASE("all-suite runs every in-range family at g=3") {
  SuiteReport report = run_suite("all", 3, {1, 1, 2}, 7);
  CHECK(report.all_pass());
  bool has_brackets = false, has_sl2z = false, has_isogeny = false;
  for (const auto& rec : report.records) {
    if (rec.id.rfind("brackets.", 0) == 0) has_brackets = true;
    if (rec.id.rfind("sl2z.", 0) == 0) has_sl2z = true;
    if (rec.id.rfind("isogeny.", 0) == 0) has_isogeny = true;
  }
  CHECK(has_brackets);
  CHECK(!has_sl2z);  // guarded to g <= 2
  CHECK(has_isogeny);
}
