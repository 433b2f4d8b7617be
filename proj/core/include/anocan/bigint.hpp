#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace anocan {

using BigInt = mpz_class;

/// base^exp, exact.
BigInt power(std::uint64_t base, unsigned exp);

std::string to_decimal(const BigInt& n);

/// Parses an unsigned decimal string. Throws std::invalid_argument on any
/// character outside [0-9] or on empty input.
BigInt from_decimal(std::string_view text);

/// Number of base-`base` digits of n (1 for n == 0).
unsigned digit_count(const BigInt& n, std::uint64_t base);

}  // namespace anocan
