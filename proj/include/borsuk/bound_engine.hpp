#ifndef BORSUK_BOUND_ENGINE_HPP
#define BORSUK_BOUND_ENGINE_HPP

#include <string>
#include <vector>

#include "borsuk/bignat.hpp"

namespace borsuk {

/// Exact evaluation of the counting inequality for one prime p, n = 4p.
/// The counterexample verdict means: any partition of f(M) into parts of
/// smaller diameter needs more than n^2 + 1 parts, so the n^2-dimensional
/// construction violates the d+1-parts conjecture in dimension d = n^2.
/// Every verdict field is exact integer arithmetic; stirling_estimate is
/// advisory only and never feeds a verdict.
struct ThresholdReport {
  int p = 0;
  int n = 0;                // 4p
  BigNat alpha_n;           // C(n-1,0) + ... + C(n-1, n/4-1)
  BigNat m_size;            // 2^(n-2)
  BigNat parts_needed;      // ceil(m_size / alpha_n)
  BigNat borsuk_bound;      // n^2 + 1
  bool counterexample = false;  // alpha_n * (n^2+1) < 2^(n-2)
  long long dimension = 0;            // n^2, the certified dimension
  long long symmetric_dimension = 0;  // n(n-1)/2, informational refinement
  double stirling_estimate = 0.0;     // advisory log2(m_size / alpha_n)

  friend bool operator==(const ThresholdReport&, const ThresholdReport&) = default;
};

/// Builds the report for one prime. Also verifies, exactly, the
/// intermediate inequality alpha(n) < (n/4) C(n-1, n/4-1) for n/4 >= 2
/// (equality at n = 4) and the agreement of the two verdict formulations
/// (product comparison vs. ceiling comparison); a violation would be an
/// internal arithmetic fault and throws std::logic_error.
ThresholdReport check_threshold(int p);

/// Prime scan guardrail; the threshold is provably far below.
inline constexpr int kMaxThresholdPrime = 10000;

/// Reports for ascending primes 2, 3, 5, ... up to and including the first
/// counterexample.
std::vector<ThresholdReport> threshold_scan();

/// The first report with counterexample = true. Every prior prime is
/// re-verified as a non-counterexample and the threshold comparison is
/// re-done through an independent decimal-string arithmetic route before
/// the result is returned.
ThresholdReport find_min_counterexample();

/// Advisory Stirling-formula estimate of log2(2^(n-2) / alpha(n)): each
/// binomial in alpha is approximated through ln m! ~ 0.5 ln(2 pi m) +
/// m(ln m - 1) and the sum is taken in log space. Never used in verdicts.
double stirling_estimate(int n);

/// JSON object with BigNat fields as decimal strings, stable field order.
std::string report_to_json(const ThresholdReport& report);

/// Markdown table of an ascending scan: p, n, alpha(n), 2^(n-2),
/// parts_needed, n^2+1, verdict.
std::string scan_to_markdown(const std::vector<ThresholdReport>& scan);

// Independent big-integer comparison route: decimal strings with
// hand-rolled doubling, long multiplication and lexicographic compare.
// Used for double-entry verification of the threshold verdict.
std::string decimal_pow2(unsigned e);
std::string decimal_mul_u64(const std::string& a, std::uint64_t m);
bool decimal_less(const std::string& a, const std::string& b);

}  // namespace borsuk

#endif  // BORSUK_BOUND_ENGINE_HPP
