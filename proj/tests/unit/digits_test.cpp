#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "anocan/digits.hpp"
#include "oracles.hpp"

using namespace anocan;

namespace {

DigitString ds(std::uint64_t base, std::vector<Digit> digits) { return DigitString(Base(base), std::move(digits)); }

}  // namespace

TEST_CASE("base rejects values below two") {
  CHECK_THROWS_AS(Base(0), std::invalid_argument);
  CHECK_THROWS_AS(Base(1), std::invalid_argument);
  CHECK(Base(2).value() == 2);
}

TEST_CASE("digit strings validate their digits") {
  CHECK_THROWS_AS(ds(10, {}), std::invalid_argument);
  CHECK_THROWS_AS(ds(10, {1, 10}), std::invalid_argument);
  CHECK_THROWS_AS(ds(2, {2}), std::invalid_argument);
  CHECK(ds(10, {1, 6, 4}).to_string() == "[1 6 4]");
}

TEST_CASE("concat evaluates positional notation") {
  CHECK(concat(ds(10, {1, 6, 4})) == 164);
  CHECK(concat(ds(10, {0})) == 0);
  CHECK(concat(ds(9, {2, 8, 6})) == 240);
  const std::vector<Digit> bad = {3, 9};
  CHECK_THROWS_AS(concat(Base(9), bad), std::invalid_argument);
}

TEST_CASE("to_digits expands and pads") {
  CHECK(to_digits(164, Base(10)) == ds(10, {1, 6, 4}));
  CHECK(to_digits(5, Base(10), 3) == ds(10, {0, 0, 5}));
  CHECK(to_digits(240, Base(9)) == ds(9, {2, 8, 6}));
  CHECK(to_digits(0, Base(7)) == ds(7, {0}));
  CHECK_THROWS_AS(to_digits(1000, Base(10), 3), std::invalid_argument);
  CHECK_THROWS_AS(to_digits(-1, Base(10)), std::invalid_argument);
}

TEST_CASE("assemble places the blocks") {
  CHECK(assemble(24, 9, 96, Base(10), 2, 2).value() == 24996);
  CHECK(assemble(0, 0, 0, Base(10), 1, 1).value() == 0);
  CHECK(assemble(499, 9, 998, Base(10), 3, 3).value() == 4999998);

  CHECK_THROWS_AS(assemble(100, 1, 1, Base(10), 2, 1), std::invalid_argument);  // a too wide
  CHECK_THROWS_AS(assemble(1, 10, 1, Base(10), 1, 1), std::invalid_argument);   // b not a digit
  CHECK_THROWS_AS(assemble(1, 1, 10, Base(10), 1, 1), std::invalid_argument);   // c too wide
  CHECK_THROWS_AS(assemble(5, 1, 1, Base(10), 2, 1), std::invalid_argument);    // phantom leading zero
  CHECK_THROWS_AS(assemble(1, 1, 1, Base(10), 0, 1), std::invalid_argument);
}

TEST_CASE("disassemble splits by width") {
  const auto n = disassemble(21775, Base(10), 2, 2);
  CHECK(n.a() == 21);
  CHECK(n.b() == 7);
  CHECK(n.c() == 75);

  const auto m = disassemble(164, Base(10), 1, 1);
  CHECK(m.a() == 1);
  CHECK(m.b() == 6);
  CHECK(m.c() == 4);

  const auto z = disassemble(1000, Base(10), 1, 2);
  CHECK(z.a() == 1);
  CHECK(z.b() == 0);
  CHECK(z.c() == 0);

  // Same value, different widths.
  CHECK(disassemble(1000, Base(10), 2, 1).a() == 10);
  CHECK_THROWS_AS(disassemble(164, Base(10), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(disassemble(99, Base(10), 1, 1), std::invalid_argument);
}

TEST_CASE("block digits are padded to their widths") {
  const auto n = assemble(1, 0, 5, Base(10), 1, 3);
  CHECK(n.c_digits() == ds(10, {0, 0, 5}));
  CHECK(n.digits() == ds(10, {1, 0, 0, 0, 5}));
}

TEST_CASE("positional identity holds for random values and bases up to 2^16") {
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<std::uint64_t> base_dist(2, 1u << 16);
  std::uniform_int_distribution<unsigned> limbs_dist(0, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    const Base base(base_dist(rng));
    BigInt n = 0;
    for (unsigned limb = limbs_dist(rng); limb > 0; --limb) {
      n <<= 64;
      n += static_cast<unsigned long>(rng());
    }
    const auto digits = to_digits(n, base);
    REQUIRE(concat(digits) == n);
    if (n > 0) CHECK(digits.front() != 0);
    CHECK(digit_count(n, base.value()) == digits.size());
  }
}

TEST_CASE("digits agree with the naive expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t base = 2 + rng() % 100;
    const std::uint64_t value = rng() >> 8;
    const auto expected = anocan::testing::naive_digits(value, base);
    const auto got = to_digits(BigInt(static_cast<unsigned long>(value)), Base(base));
    CHECK(std::equal(expected.begin(), expected.end(), got.digits().begin(), got.digits().end()));
  }
}

TEST_CASE("disassemble round-trips and enforces the width law") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint64_t radix = 2 + rng() % 40;
    const Base base(radix);
    const unsigned l = 1 + rng() % 4;
    const unsigned k = 1 + rng() % 4;
    const unsigned width = 1 + rng() % 12;
    // Random number with exactly `width` digits.
    std::vector<Digit> digits(width);
    for (auto& d : digits) d = rng() % radix;
    digits[0] = 1 + rng() % (radix - 1);
    const BigInt n = concat(DigitString(base, digits));

    if (width == l + k + 1) {
      const auto split = disassemble(n, base, l, k);
      CHECK(split.value() == n);
      CHECK(assemble(split.a(), split.b(), split.c(), base, l, k) == split);
      CHECK(split.digits() == DigitString(base, digits));
    } else {
      CHECK_THROWS_AS(disassemble(n, base, l, k), std::invalid_argument);
    }
  }
}

TEST_CASE("from_decimal rejects junk") {
  CHECK(from_decimal("340277776") == 340277776);
  CHECK_THROWS_AS(from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(from_decimal("12a"), std::invalid_argument);
  CHECK_THROWS_AS(from_decimal("-5"), std::invalid_argument);
}

// A span into a temporary expansion would dangle.
template <typename T>
concept HasDigitSpan = requires(T&& d) { std::forward<T>(d).digits(); };
static_assert(HasDigitSpan<const DigitString&>);
static_assert(!HasDigitSpan<DigitString>);
