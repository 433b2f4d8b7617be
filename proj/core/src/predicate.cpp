#include "anocan/predicate.hpp"

#include <algorithm>
#include <stdexcept>

namespace anocan {
namespace {

bool divides(const BigInt& divisor, const BigInt& value) {
  if (divisor == 0) {
    return true;
  }
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

void require_p(const CancellationNumber& n, const char* what) {
  if (!has_property_p(n)) {
    throw std::domain_error(std::string(what) + ": " + to_decimal(n.value()) + " is not a solution of P_{" +
                            std::to_string(n.width_l()) + ";" + std::to_string(n.width_k()) + "}");
  }
}

}  // namespace

std::string to_string(Triviality kind) {
  switch (kind) {
    case Triviality::NonTrivial:
      return "NonTrivial";
    case Triviality::AllDigitsEqual:
      return "AllDigitsEqual";
    case Triviality::ZeroBlocks:
      return "ZeroBlocks";
  }
  return "?";
}

std::string to_string(const TrivialityClass& cls) {
  std::string out = to_string(cls.kind);
  if (cls.kind == Triviality::ZeroBlocks) {
    std::string names;
    for (auto [flag, name] : {std::pair{cls.zeros.a, "a"}, {cls.zeros.b, "b"}, {cls.zeros.c, "c"}}) {
      if (flag) {
        if (!names.empty()) names += ',';
        names += name;
      }
    }
    out += '{' + names + '}';
  }
  return out;
}

bool has_property_p(const CancellationNumber& n) {
  const std::uint64_t radix = n.base().value();
  const BigInt lhs = (n.a() * radix + n.b()) * n.c();
  const BigInt rhs = n.a() * (power(radix, n.width_k()) * n.b() + n.c());
  return lhs == rhs;
}

TrivialityClass classify_triviality(const CancellationNumber& n) {
  require_p(n, "classify_triviality");

  ZeroBlockSet zeros{n.a() == 0, n.b() == 0, n.c() == 0};
  if (zeros.count() >= 2) {
    return {Triviality::ZeroBlocks, zeros};
  }
  if (n.width_l() == n.width_k()) {
    const auto digits = n.digits();
    const auto span = digits.digits();
    if (std::all_of(span.begin(), span.end(), [&](Digit d) { return d == n.b(); })) {
      return {Triviality::AllDigitsEqual, {}};
    }
  }
  return {Triviality::NonTrivial, {}};
}

bool has_property_p_star(const CancellationNumber& n) {
  return has_property_p(n) && classify_triviality(n).kind == Triviality::NonTrivial;
}

DivisibilityReport divisibility_report(const CancellationNumber& n) {
  require_p(n, "divisibility_report");

  const std::uint64_t radix = n.base().value();
  const BigInt a = n.a();
  const BigInt b = n.b();
  const BigInt& c = n.c();
  const BigInt bc = b * c;

  DivisibilityReport report;
  report.a_divides_bc = divides(a, bc);
  report.b_divides_ac_base_minus_1 = divides(b, BigInt(a * c * (radix - 1)));
  report.c_divides_ab_base_pow_k = divides(c, BigInt(a * b * power(radix, n.width_k())));
  if (a > 0 && b > 0 && c > 0 && report.a_divides_bc) {
    report.ratio_d = BigInt(bc / a);
  }
  return report;
}

}  // namespace anocan
