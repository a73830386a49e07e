#include "fudg/bigint.hpp"

#include <cmath>

#include "fudg/error.hpp"

namespace fudg {

double log_bigint(const BigInt& x) {
  if (x <= 0) throw Error(ErrorCode::InvalidArgument, "logarithm of a non-positive integer");
  const auto bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
  if (bits <= 53) return std::log(x.convert_to<double>());
  // Keep the leading 53 bits as the mantissa and add the dropped exponent.
  const auto shift = bits - 53;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

BigInt pow_bigint(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace fudg
