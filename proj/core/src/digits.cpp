#include "anocan/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace anocan {

Base::Base(std::uint64_t value) : value_(value) {
  if (value < 2) {
    throw std::invalid_argument("base must be at least 2, got " + std::to_string(value));
  }
}

DigitString::DigitString(Base base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {
  if (digits_.empty()) {
    throw std::invalid_argument("digit string must be non-empty");
  }
  for (Digit d : digits_) {
    if (d >= base_.value()) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                  std::to_string(base_.value()));
    }
  }
}

std::string DigitString::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(digits_[i]);
  }
  out += ']';
  return out;
}

BigInt concat(const DigitString& digits) {
  BigInt out = 0;
  const std::uint64_t base = digits.base().value();
  for (Digit d : digits.digits()) {
    out *= base;
    out += d;
  }
  return out;
}

BigInt concat(Base base, std::span<const Digit> digits) {
  return concat(DigitString(base, std::vector<Digit>(digits.begin(), digits.end())));
}

DigitString to_digits(const BigInt& n, Base base, std::optional<std::size_t> width) {
  if (n < 0) {
    throw std::invalid_argument("to_digits of a negative number");
  }
  const std::uint64_t radix = base.value();
  std::vector<Digit> digits;
  BigInt rest = n;
  do {
    digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), radix));
  } while (rest != 0);

  if (width) {
    if (*width == 0 || digits.size() > *width) {
      throw std::invalid_argument(to_decimal(n) + " does not fit in " + std::to_string(*width) +
                                  " base-" + std::to_string(radix) + " digits");
    }
    digits.resize(*width, 0);
  }
  std::reverse(digits.begin(), digits.end());
  return DigitString(base, std::move(digits));
}

BigInt CancellationNumber::value() const {
  BigInt out = a_ * base_.value() + b_;
  BigInt scale = power(base_.value(), k_);
  out *= scale;
  out += c_;
  return out;
}

DigitString CancellationNumber::digits() const {
  std::vector<Digit> out;
  out.reserve(l_ + k_ + 1);
  const auto head = a_digits();
  const auto tail = c_digits();
  out.insert(out.end(), head.digits().begin(), head.digits().end());
  out.push_back(b_);
  out.insert(out.end(), tail.digits().begin(), tail.digits().end());
  return DigitString(base_, std::move(out));
}

DigitString CancellationNumber::a_digits() const { return to_digits(a_, base_, l_); }

DigitString CancellationNumber::c_digits() const { return to_digits(c_, base_, k_); }

bool operator==(const CancellationNumber& x, const CancellationNumber& y) {
  return x.base_ == y.base_ && x.l_ == y.l_ && x.k_ == y.k_ && x.b_ == y.b_ && x.a_ == y.a_ && x.c_ == y.c_;
}

CancellationNumber assemble(BigInt a, Digit b, BigInt c, Base base, unsigned l, unsigned k) {
  if (l == 0 || k == 0) {
    throw std::invalid_argument("block widths must be at least 1");
  }
  const std::uint64_t radix = base.value();
  if (b >= radix) {
    throw std::invalid_argument("central digit " + std::to_string(b) + " out of range for base " +
                                std::to_string(radix));
  }
  if (a < 0 || a >= power(radix, l)) {
    throw std::invalid_argument("block a = " + to_decimal(a) + " does not fit in " + std::to_string(l) + " digits");
  }
  if (a > 0 && a < power(radix, l - 1)) {
    throw std::invalid_argument("block a = " + to_decimal(a) + " has a leading zero at width " + std::to_string(l));
  }
  if (c < 0 || c >= power(radix, k)) {
    throw std::invalid_argument("block c = " + to_decimal(c) + " does not fit in " + std::to_string(k) + " digits");
  }
  return CancellationNumber(base, std::move(a), b, std::move(c), l, k);
}

CancellationNumber disassemble(const BigInt& n, Base base, unsigned l, unsigned k) {
  if (l == 0 || k == 0) {
    throw std::invalid_argument("block widths must be at least 1");
  }
  const std::uint64_t radix = base.value();
  if (n < power(radix, l + k) || n >= power(radix, l + k + 1)) {
    throw std::invalid_argument(to_decimal(n) + " does not have exactly " + std::to_string(l + k + 1) +
                                " base-" + std::to_string(radix) + " digits");
  }
  const BigInt scale = power(radix, k);
  BigInt head;
  BigInt c;
  mpz_fdiv_qr(head.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t(), scale.get_mpz_t());
  const Digit b = mpz_fdiv_q_ui(head.get_mpz_t(), head.get_mpz_t(), radix);
  return assemble(std::move(head), b, std::move(c), base, l, k);
}

bool value_less(const CancellationNumber& x, const CancellationNumber& y) { return x.value() < y.value(); }

}  // namespace anocan
