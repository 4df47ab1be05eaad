#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>

#include "borsuk/bound_engine.hpp"
#include "borsuk/fw_poly.hpp"
#include "borsuk/ortho_graph.hpp"

using namespace borsuk;

TEST_CASE("binomial routes agree") {
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial_pascal(n, k));
    }
  }
  CHECK(binomial(7, 1) == 7);
  CHECK(binomial(11, 2) == 55);
  CHECK(binomial(51, 12) == BigNat("158753389900"));
  CHECK(binomial(51, 12) == binomial_pascal(51, 12));
  CHECK(binomial(5, 9) == 0);
}

TEST_CASE("bignat helpers") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(50) == BigNat("1125899906842624"));
  CHECK(ceil_div(BigNat(64), BigNat(8)) == 8);
  CHECK(ceil_div(BigNat(1024), BigNat(67)) == 16);
  CHECK(ceil_div(BigNat(0), BigNat(3)) == 0);
  CHECK_THROWS_AS(ceil_div(BigNat(1), BigNat(0)), std::invalid_argument);

  for (std::uint64_t prime : {2, 3, 5, 7, 11, 13, 9973}) CHECK(is_prime(prime));
  for (std::uint64_t composite : {0, 1, 4, 9, 91, 561}) CHECK_FALSE(is_prime(composite));
}

TEST_CASE("threshold report for small primes") {
  auto r2 = check_threshold(2);
  CHECK(r2.n == 8);
  CHECK(r2.alpha_n == 8);
  CHECK(r2.m_size == 64);
  CHECK(r2.parts_needed == 8);
  CHECK(r2.borsuk_bound == 65);
  CHECK_FALSE(r2.counterexample);
  CHECK(r2.dimension == 64);
  CHECK(r2.symmetric_dimension == 28);

  auto r3 = check_threshold(3);
  CHECK(r3.alpha_n == 67);
  CHECK(r3.m_size == 1024);
  CHECK(r3.parts_needed == 16);
  CHECK(r3.borsuk_bound == 145);
  CHECK_FALSE(r3.counterexample);

  CHECK_THROWS_AS(check_threshold(4), std::invalid_argument);
  CHECK_THROWS_AS(check_threshold(1), std::invalid_argument);
}

TEST_CASE("verdict formulations coincide") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    auto r = check_threshold(p);
    CHECK(r.counterexample == (r.parts_needed > r.borsuk_bound));
    CHECK(r.counterexample == (r.alpha_n * r.borsuk_bound < r.m_size));
    CHECK(r.parts_needed == ceil_div(r.m_size, r.alpha_n));
  }
}

TEST_CASE("the ascending scan flips exactly at p = 13") {
  auto scan = threshold_scan();
  REQUIRE(scan.size() == 6);  // primes 2, 3, 5, 7, 11, 13
  for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
    CHECK_FALSE(scan[i].counterexample);
    CHECK(scan[i].p < scan[i + 1].p);
  }
  const auto& last = scan.back();
  CHECK(last.counterexample);
  CHECK(last.p == 13);
  CHECK(last.n == 52);
  CHECK(last.dimension == 2704);
  CHECK(last.symmetric_dimension == 1326);
  CHECK(last.alpha_n == BigNat("222972599812"));
  CHECK(last.parts_needed == 5050);

  CHECK(find_min_counterexample() == last);
}

TEST_CASE("parts_lower_bound matches the report arithmetic across modules") {
  for (int p : {2, 3, 13}) {
    auto r = check_threshold(p);
    CHECK(parts_lower_bound(4 * p) == r.parts_needed);
  }
  // At the threshold prime the lower bound exceeds n^2 + 1.
  CHECK(parts_lower_bound(52) == 5050);
  CHECK(parts_lower_bound(52) > BigNat(52) * 52 + 1);
  CHECK(alpha(4) == 1);  // single-summand case, equals (n/4) C(n-1, n/4-1)
}

TEST_CASE("threshold verdicts re-verified by an independent route") {
  // Route B: Pascal-row binomials and direct product comparison.
  for (const auto& r : threshold_scan()) {
    BigNat alpha_pascal = 0;
    for (int k = 0; k < r.n / 4; ++k) {
      alpha_pascal +=
          binomial_pascal(static_cast<unsigned>(r.n - 1), static_cast<unsigned>(k));
    }
    CHECK(alpha_pascal == r.alpha_n);
    CHECK((alpha_pascal * (BigNat(r.n) * r.n + 1) < pow2(static_cast<unsigned>(r.n - 2))) ==
          r.counterexample);
  }
}

TEST_CASE("decimal arithmetic route") {
  CHECK(decimal_pow2(0) == "1");
  CHECK(decimal_pow2(10) == "1024");
  CHECK(decimal_pow2(50) == "1125899906842624");
  CHECK(decimal_mul_u64("999", 2) == "1998");
  CHECK(decimal_mul_u64("0", 5) == "0");
  CHECK(decimal_mul_u64("123456789123456789", 1000000007) ==
        "123456789987654312864197523");
  CHECK(decimal_less("9", "10"));
  CHECK_FALSE(decimal_less("10", "9"));
  CHECK_FALSE(decimal_less("42", "42"));
  CHECK(decimal_less("0042", "00043"));
  CHECK_THROWS_AS(decimal_mul_u64("12x", 3), std::invalid_argument);

  // The p = 13 verdict through decimal strings alone.
  CHECK(decimal_less(decimal_mul_u64("222972599812", 2705), decimal_pow2(50)));
  CHECK_FALSE(decimal_less(decimal_mul_u64("2665685155", 1937), decimal_pow2(42)));
}

TEST_CASE("stirling estimate") {
  // Exact at n = 8: both alpha terms are handled without approximation.
  CHECK(stirling_estimate(8) == doctest::Approx(3.0).epsilon(1e-9));

  // Within 10% of the exact value at the threshold prime.
  auto star = find_min_counterexample();
  double exact = static_cast<double>(star.n - 2) -
                 std::log2(star.alpha_n.convert_to<double>());
  CHECK(std::abs(star.stirling_estimate - exact) / exact < 0.10);

  // Monotone increasing over n = 8, 12, ..., 400.
  double prev = stirling_estimate(8);
  for (int n = 12; n <= 400; n += 4) {
    double cur = stirling_estimate(n);
    CHECK(cur > prev);
    prev = cur;
  }

  CHECK_THROWS_AS(stirling_estimate(4), std::invalid_argument);
  CHECK_THROWS_AS(stirling_estimate(10), std::invalid_argument);
}

TEST_CASE("estimator sign agrees with the exact verdict for p <= 100") {
  for (int p = 2; p <= 100; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    auto r = check_threshold(p);
    bool estimated = r.stirling_estimate > std::log2(static_cast<double>(r.n) * r.n + 1.0);
    CHECK(estimated == r.counterexample);
  }
}

TEST_CASE("report JSON shape") {
  auto r = check_threshold(13);
  auto j = nlohmann::ordered_json::parse(report_to_json(r));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"p", "n", "alpha_n", "m_size", "parts_needed",
                                         "borsuk_bound", "counterexample", "dimension",
                                         "symmetric_dimension", "stirling_estimate"});
  CHECK(j["alpha_n"] == "222972599812");
  CHECK(j["m_size"] == "1125899906842624");
  CHECK(j["counterexample"] == true);
  CHECK(j["dimension"] == 2704);

  // Exact rerun reproducibility, bit for bit.
  CHECK(report_to_json(check_threshold(13)) == report_to_json(r));
}

TEST_CASE("markdown table shape") {
  auto scan = threshold_scan();
  auto md = scan_to_markdown(scan);
  CHECK(md.find("| p | n | alpha(n) |") != std::string::npos);
  CHECK(md.find("| 13 | 52 | 222972599812 |") != std::string::npos);
  CHECK(md.find("counterexample") != std::string::npos);
  std::size_t rows = 0;
  for (char c : md)
    if (c == '\n') ++rows;
  CHECK(rows == scan.size() + 2);
}
