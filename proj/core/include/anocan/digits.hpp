#pragma once

// Positional base-B representations and the three-block split
//
//     N = [a_1 ... a_l  b  c_1 ... c_k] = a * B^(k+1) + b * B^k + c
//
// Digits are stored most-significant first throughout. Widths (l, k) are
// always explicit: the same integer may be read as N_{1;2} or N_{2;1}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anocan/bigint.hpp"

namespace anocan {

using Digit = std::uint64_t;

/// A positional base, B >= 2.
class Base {
 public:
  explicit Base(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend auto operator<=>(const Base&, const Base&) = default;

 private:
  std::uint64_t value_;
};

/// Non-empty most-significant-first digit sequence, each digit in [0, base).
class DigitString {
 public:
  DigitString(Base base, std::vector<Digit> digits);

  Base base() const noexcept { return base_; }
  std::span<const Digit> digits() const& noexcept { return digits_; }
  std::span<const Digit> digits() const&& = delete;  // the span would dangle
  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const { return digits_.at(i); }
  Digit front() const { return digits_.front(); }
  Digit back() const { return digits_.back(); }

  /// "[1 6 4]"
  std::string to_string() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  Base base_;
  std::vector<Digit> digits_;
};

/// sum x_i * B^(size - i). Rejects digits outside [0, base).
BigInt concat(const DigitString& digits);
BigInt concat(Base base, std::span<const Digit> digits);

/// Most-significant-first digits of n, left-padded to `width` when given.
/// Throws std::invalid_argument when n < 0 or n >= base^width.
DigitString to_digits(const BigInt& n, Base base, std::optional<std::size_t> width = std::nullopt);

/// The block decomposition N_{l;k} = [a b c]. Immutable once built; obtain one
/// through assemble() or disassemble().
class CancellationNumber {
 public:
  Base base() const noexcept { return base_; }
  const BigInt& a() const noexcept { return a_; }
  Digit b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  unsigned width_l() const noexcept { return l_; }
  unsigned width_k() const noexcept { return k_; }

  BigInt value() const;

  DigitString digits() const;
  DigitString a_digits() const;  // exactly width_l() digits
  DigitString c_digits() const;  // exactly width_k() digits

  friend bool operator==(const CancellationNumber& x, const CancellationNumber& y);

 private:
  friend CancellationNumber assemble(BigInt a, Digit b, BigInt c, Base base, unsigned l, unsigned k);

  CancellationNumber(Base base, BigInt a, Digit b, BigInt c, unsigned l, unsigned k)
      : base_(base), a_(std::move(a)), b_(b), c_(std::move(c)), l_(l), k_(k) {}

  Base base_;
  BigInt a_;
  Digit b_;
  BigInt c_;
  unsigned l_;
  unsigned k_;
};

/// Builds N_{l;k} from its blocks. Requires 0 <= a < B^l, 0 <= b < B,
/// 0 <= c < B^k, l, k >= 1, and a == 0 or a >= B^(l-1).
CancellationNumber assemble(BigInt a, Digit b, BigInt c, Base base, unsigned l, unsigned k);

/// Splits an (l+k+1)-digit number into its blocks. Throws on digit-count
/// mismatch.
CancellationNumber disassemble(const BigInt& n, Base base, unsigned l, unsigned k);

/// Numeric order on value(); only meaningful within a fixed base.
bool value_less(const CancellationNumber& x, const CancellationNumber& y);

}  // namespace anocan
