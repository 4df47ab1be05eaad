#include <doctest.h>

#include <stdexcept>

#include "borsuk/verify_suite.hpp"

using namespace borsuk;

namespace {

const CheckResult* find_check(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("suite at n = 4 runs the geometric checks only and passes") {
  auto checks = run_verify_suite(4, 1);
  CHECK(checks.size() == 12);
  CHECK(all_pass(checks));
  CHECK(find_check(checks, "nondivisibility") == nullptr);  // n/4 = 1 is not prime
}

TEST_CASE("suite at n = 8: every check passes except nondivisibility") {
  auto checks = run_verify_suite(8, 1);
  CHECK(checks.size() == 16);
  CHECK_FALSE(all_pass(checks));
  for (const auto& c : checks) {
    if (c.name == "nondivisibility") {
      CHECK_FALSE(c.pass);
      CHECK(c.detail.find("masks 0 and 6") != std::string::npos);
    } else {
      CHECK(c.pass);
    }
  }
}

TEST_CASE("suite at n = 12 passes fully and is seed-stable") {
  auto checks = run_verify_suite(12, 7);
  CHECK(checks.size() == 16);
  CHECK(all_pass(checks));

  auto rerun = run_verify_suite(12, 7);
  REQUIRE(rerun.size() == checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CHECK(rerun[i].name == checks[i].name);
    CHECK(rerun[i].pass == checks[i].pass);
    CHECK(rerun[i].detail == checks[i].detail);
  }
}

TEST_CASE("suite rejects unsupported dimensions") {
  CHECK_THROWS_AS(run_verify_suite(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_verify_suite(16, 0), std::invalid_argument);
}
