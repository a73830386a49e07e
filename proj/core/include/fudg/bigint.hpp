#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fudg {

using BigInt = boost::multiprecision::cpp_int;

/// Natural logarithm of a positive integer, accurate to about 1e-15
/// relative error for any magnitude.
double log_bigint(const BigInt& x);

/// `base` raised to `exp`.
BigInt pow_bigint(std::uint64_t base, std::uint64_t exp);

std::string to_string(const BigInt& x);

}  // namespace fudg
