#include "anocan/generator.hpp"

#include <stdexcept>

#include "anocan/predicate.hpp"

namespace anocan {

std::string to_string(TupleClass cls) {
  switch (cls) {
    case TupleClass::NonGenerating:
      return "none";
    case TupleClass::FullSolution:
      return "full";
    case TupleClass::ShortSolution:
      return "short";
  }
  return "?";
}

std::optional<DerivedBlocks> blocks_from_tuple(Digit b, Digit ck, Base base, unsigned k) {
  const std::uint64_t radix = base.value();
  if (!(1 < ck && ck < b && b < radix)) {
    throw std::invalid_argument("generating tuple (" + std::to_string(b) + ", " + std::to_string(ck) +
                                ") outside 1 < ck < b < " + std::to_string(radix));
  }
  if (k == 0) {
    throw std::invalid_argument("block width k must be at least 1");
  }

  DerivedBlocks out;
  const BigInt scale = power(radix, k - 1);  // B^(k-1)
  out.m = (scale * radix - radix) / (radix - 1);
  out.c = out.m * b + ck;

  // b M / B = b (B^(k-1) - 1) / (B - 1) is always integral.
  const BigInt head = BigInt((scale - 1) / (radix - 1)) * b;
  // bB - (B-1)ck = B(b - ck) + ck > 0 since b > ck.
  const BigInt denominator = BigInt(radix) * (b - ck) + ck;
  const BigInt numerator = BigInt(b) * ck * scale;
  if (mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  out.a = head + numerator / denominator;

  if (out.a * denominator != out.c * b) {
    throw std::logic_error("closed-form blocks violate a (bB - (B-1)ck) = b c");
  }
  return out;
}

GeneratingTuple classify_tuple(Digit b, Digit ck, Base base, unsigned k) {
  GeneratingTuple cell;
  cell.b = b;
  cell.ck = ck;
  auto blocks = blocks_from_tuple(b, ck, base, k);
  if (!blocks || blocks->a <= 0) {
    return cell;
  }
  cell.raw_integral = true;

  const unsigned width = digit_count(blocks->a, base.value());
  if (width > k) {
    throw std::logic_error("tuple (" + std::to_string(b) + ", " + std::to_string(ck) +
                           ") produced a block a wider than k = " + std::to_string(k));
  }
  const auto number = assemble(blocks->a, b, blocks->c, base, width, k);
  if (!has_property_p_star(number)) {
    return cell;
  }
  cell.cls = width == k ? TupleClass::FullSolution : TupleClass::ShortSolution;
  cell.block_a = std::move(blocks->a);
  cell.block_c = std::move(blocks->c);
  cell.width_l = width;
  return cell;
}

CancellationNumber extend(const CancellationNumber& n) {
  if (n.a() == 0 && n.b() != 0) {
    throw std::invalid_argument("cannot extend a number whose block a is zero");
  }
  const std::uint64_t radix = n.base().value();
  BigInt a = n.a() * radix + n.b();
  BigInt c = power(radix, n.width_k()) * n.b() + n.c();
  return assemble(std::move(a), n.b(), std::move(c), n.base(), n.width_l() + 1, n.width_k() + 1);
}

std::optional<CancellationNumber> reduce(const CancellationNumber& n) {
  if (n.width_l() < 2 || n.width_k() < 2) {
    return std::nullopt;
  }
  const std::uint64_t radix = n.base().value();
  BigInt a;
  const Digit a_last = mpz_fdiv_q_ui(a.get_mpz_t(), n.a().get_mpz_t(), radix);

  const BigInt tail_scale = power(radix, n.width_k() - 1);
  BigInt c1;
  BigInt c;
  mpz_fdiv_qr(c1.get_mpz_t(), c.get_mpz_t(), n.c().get_mpz_t(), tail_scale.get_mpz_t());

  if (a_last != n.b() || c1 != n.b()) {
    return std::nullopt;
  }
  return assemble(std::move(a), n.b(), std::move(c), n.base(), n.width_l() - 1, n.width_k() - 1);
}

std::optional<CancellationNumber> strip_trailing_zero(const CancellationNumber& n) {
  if (n.width_k() < 2) {
    throw std::invalid_argument("strip_trailing_zero needs k >= 2");
  }
  if (!has_property_p(n)) {
    throw std::domain_error("strip_trailing_zero: " + to_decimal(n.value()) + " is not a P solution");
  }
  const std::uint64_t radix = n.base().value();
  BigInt c;
  if (mpz_fdiv_q_ui(c.get_mpz_t(), n.c().get_mpz_t(), radix) != 0) {
    return std::nullopt;
  }
  return assemble(n.a(), n.b(), std::move(c), n.base(), n.width_l(), n.width_k() - 1);
}

std::vector<CancellationNumber> composite_family(Base base, unsigned k) {
  if (k == 0) {
    throw std::invalid_argument("block width k must be at least 1");
  }
  const std::uint64_t radix = base.value();
  const BigInt scale = power(radix, k - 1);
  std::vector<CancellationNumber> out;
  for (std::uint64_t m = 2; m * 2 <= radix; ++m) {
    if (radix % m != 0) {
      continue;
    }
    const std::uint64_t cofactor = radix / m;
    out.push_back(assemble(BigInt(scale * m - 1), radix - 1, BigInt(scale * radix - cofactor), base, k, k));
  }
  for (const auto& n : out) {
    if (!has_property_p_star(n)) {
      throw std::logic_error("composite family member " + to_decimal(n.value()) + " failed the predicate");
    }
  }
  return out;
}

CancellationNumber largest_solution(Base base, unsigned k) {
  const std::uint64_t radix = base.value();
  if (radix % 2 != 0 || radix < 4) {
    throw std::invalid_argument("largest_solution needs an even base >= 4, got " + std::to_string(radix));
  }
  if (k == 0) {
    throw std::invalid_argument("block width k must be at least 1");
  }
  const BigInt full = power(radix, k);
  return assemble(BigInt(full / 2 - 1), radix - 1, BigInt(full - 2), base, k, k);
}

CancellationNumber involution(const CancellationNumber& n) {
  if (n.width_l() != 1 || n.width_k() != 1 || !has_property_p_star(n)) {
    throw std::domain_error("involution needs a non-trivial solution with l = k = 1, got " + n.digits().to_string());
  }
  const Digit a = n.a().get_ui();
  const Digit c = n.c().get_ui();
  const Digit b = n.b();
  // b is the largest digit of any non-trivial two-digit solution.
  if (a > b || c > b) {
    throw std::logic_error("solution " + n.digits().to_string() + " has a digit above b");
  }
  return assemble(BigInt(b - c), b, BigInt(b - a), n.base(), 1, 1);
}

}  // namespace anocan
