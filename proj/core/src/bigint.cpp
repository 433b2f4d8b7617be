#include "anocan/bigint.hpp"

#include <stdexcept>

namespace anocan {

BigInt power(std::uint64_t base, unsigned exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

BigInt from_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty decimal string");
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not a decimal integer: " + std::string(text));
    }
  }
  return BigInt(std::string(text), 10);
}

unsigned digit_count(const BigInt& n, std::uint64_t base) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2");
  }
  if (n < 0) {
    throw std::invalid_argument("digit_count of a negative number");
  }
  // mpz_sizeinbase may overshoot by one for non-powers of two; fix it up.
  unsigned count = 1;
  if (base <= 62) {
    count = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), static_cast<int>(base)));
    if (count > 1 && n < power(base, count - 1)) {
      --count;
    }
    return count;
  }
  BigInt bound = base;
  while (n >= bound) {
    bound *= base;
    ++count;
  }
  return count;
}

}  // namespace anocan
