#ifndef BORSUK_BIGNAT_HPP
#define BORSUK_BIGNAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace borsuk {

/// Arbitrary-precision nonnegative integer. All verdict arithmetic in this
/// project is exact; BigNat values are never rounded through floating point.
using BigNat = boost::multiprecision::cpp_int;

/// Signed exact integer, for characteristic-0 polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) by the multiplicative formula, multiplying and dividing one
/// factor at a time (each intermediate quotient is an exact integer).
BigNat binomial(unsigned n, unsigned k);

/// C(n, k) by building Pascal's row n from additions only. Independent of
/// binomial(): the two routes are cross-checked wherever a verdict depends
/// on a binomial value.
BigNat binomial_pascal(unsigned n, unsigned k);

/// 2^e as an exact integer.
BigNat pow2(unsigned e);

/// ceil(a / b) for a >= 0, b > 0.
BigNat ceil_div(const BigNat& a, const BigNat& b);

/// Deterministic primality test for word-sized integers (trial division).
bool is_prime(std::uint64_t x);

}  // namespace borsuk

#endif  // BORSUK_BIGNAT_HPP
