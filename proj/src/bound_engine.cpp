#include "borsuk/bound_engine.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "borsuk/fw_poly.hpp"

namespace borsuk {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

ThresholdReport check_threshold(int p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("check_threshold: p must be prime, got " + std::to_string(p));
  }
  int n = 4 * p;
  ThresholdReport report;
  report.p = p;
  report.n = n;
  report.alpha_n = alpha(n);
  report.m_size = pow2(static_cast<unsigned>(n - 2));
  report.borsuk_bound = BigNat(n) * n + 1;
  report.parts_needed = ceil_div(report.m_size, report.alpha_n);
  report.counterexample = report.alpha_n * report.borsuk_bound < report.m_size;
  report.dimension = static_cast<long long>(n) * n;
  report.symmetric_dimension = static_cast<long long>(n) * (n - 1) / 2;
  report.stirling_estimate = stirling_estimate(n);

  // The two formulations of the verdict must coincide: more parts than
  // n^2+1 are needed iff alpha_n(n^2+1) falls short of 2^(n-2).
  if ((report.parts_needed > report.borsuk_bound) != report.counterexample) {
    throw std::logic_error("check_threshold: verdict formulations disagree");
  }
  // Exact form of the intermediate estimate: each of the n/4 summands of
  // alpha(n) is at most the largest, strictly for two or more summands.
  BigNat middle = BigNat(n / 4) * binomial(static_cast<unsigned>(n - 1),
                                           static_cast<unsigned>(n / 4 - 1));
  bool middle_ok = (n == 4) ? (report.alpha_n == middle) : (report.alpha_n < middle);
  if (!middle_ok) {
    throw std::logic_error("check_threshold: intermediate binomial bound violated");
  }
  return report;
}

std::vector<ThresholdReport> threshold_scan() {
  std::vector<ThresholdReport> scan;
  for (int p = 2; p <= kMaxThresholdPrime; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    scan.push_back(check_threshold(p));
    if (scan.back().counterexample) return scan;
  }
  throw std::runtime_error("threshold_scan: no counterexample below p = " +
                           std::to_string(kMaxThresholdPrime));
}

ThresholdReport find_min_counterexample() {
  auto scan = threshold_scan();
  // Double-entry check of every verdict through decimal-string arithmetic,
  // independent of the big-integer library.
  for (const auto& report : scan) {
    std::string product = decimal_mul_u64(
        report.alpha_n.str(),
        static_cast<std::uint64_t>(report.dimension) + 1);
    std::string power = decimal_pow2(static_cast<unsigned>(report.n - 2));
    if (decimal_less(product, power) != report.counterexample) {
      throw std::logic_error("find_min_counterexample: decimal re-check disagrees at p = " +
                             std::to_string(report.p));
    }
  }
  return scan.back();
}

double stirling_estimate(int n) {
  if (n < 8 || n % 4 != 0) {
    throw std::invalid_argument("stirling_estimate: n must be a multiple of 4, at least 8");
  }
  int m = n - 1;
  auto log2_factorial = [](int x) {
    // Stirling: ln x! ~ 0.5 ln(2 pi x) + x (ln x - 1)
    double xd = x;
    return (0.5 * std::log(2.0 * std::numbers::pi * xd) + xd * (std::log(xd) - 1.0)) /
           std::numbers::ln2;
  };
  auto log2_binom = [&](int k) {
    if (k == 0) return 0.0;
    if (k == 1) return std::log2(static_cast<double>(m));
    return log2_factorial(m) - log2_factorial(k) - log2_factorial(m - k);
  };
  double peak = 0.0;
  for (int k = 0; k < n / 4; ++k) peak = std::max(peak, log2_binom(k));
  double scaled_sum = 0.0;
  for (int k = 0; k < n / 4; ++k) scaled_sum += std::exp2(log2_binom(k) - peak);
  double log2_alpha = peak + std::log2(scaled_sum);
  return static_cast<double>(n - 2) - log2_alpha;
}

std::string report_to_json(const ThresholdReport& report) {
  nlohmann::ordered_json j;
  j["p"] = report.p;
  j["n"] = report.n;
  j["alpha_n"] = report.alpha_n.str();
  j["m_size"] = report.m_size.str();
  j["parts_needed"] = report.parts_needed.str();
  j["borsuk_bound"] = report.borsuk_bound.str();
  j["counterexample"] = report.counterexample;
  j["dimension"] = report.dimension;
  j["symmetric_dimension"] = report.symmetric_dimension;
  j["stirling_estimate"] = format_double(report.stirling_estimate);
  return j.dump(2) + "\n";
}

std::string scan_to_markdown(const std::vector<ThresholdReport>& scan) {
  std::ostringstream out;
  out << "| p | n | alpha(n) | 2^(n-2) | parts_needed | n^2+1 | verdict |\n";
  out << "|---|---|----------|---------|--------------|-------|---------|\n";
  for (const auto& r : scan) {
    out << "| " << r.p << " | " << r.n << " | " << r.alpha_n.str() << " | "
        << r.m_size.str() << " | " << r.parts_needed.str() << " | "
        << r.borsuk_bound.str() << " | "
        << (r.counterexample ? "counterexample" : "no") << " |\n";
  }
  return out.str();
}

std::string decimal_pow2(unsigned e) {
  std::string digits = "1";  // most significant first
  for (unsigned step = 0; step < e; ++step) {
    int carry = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      int d = (*it - '0') * 2 + carry;
      *it = static_cast<char>('0' + d % 10);
      carry = d / 10;
    }
    if (carry) digits.insert(digits.begin(), static_cast<char>('0' + carry));
  }
  return digits;
}

std::string decimal_mul_u64(const std::string& a, std::uint64_t m) {
  if (a.empty() || a.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("decimal_mul_u64: not a decimal string");
  }
  if (m == 0) return "0";
  std::string out;
  unsigned __int128 carry = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    unsigned __int128 v = static_cast<unsigned __int128>(*it - '0') * m + carry;
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    carry = v / 10;
  }
  while (carry) {
    out.push_back(static_cast<char>('0' + static_cast<int>(carry % 10)));
    carry /= 10;
  }
  std::reverse(out.begin(), out.end());
  std::size_t nz = out.find_first_not_of('0');
  return nz == std::string::npos ? "0" : out.substr(nz);
}

bool decimal_less(const std::string& a, const std::string& b) {
  auto strip = [](const std::string& s) {
    std::size_t nz = s.find_first_not_of('0');
    return nz == std::string::npos ? std::string("0") : s.substr(nz);
  };
  std::string x = strip(a), y = strip(b);
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

}  // namespace borsuk
