#pragma once

// The cancellation property
//
//     [a_1..a_l b] * [c_1..c_k] == [a_1..a_l] * [b c_1..c_k]
//     <=>  (aB + b) c == a (b B^k + c)
//
// and its non-trivial refinement. All comparisons are exact.

#include <optional>
#include <string>

#include "anocan/bigint.hpp"
#include "anocan/digits.hpp"

namespace anocan {

enum class Triviality { NonTrivial, AllDigitsEqual, ZeroBlocks };

/// Which blocks vanish; meaningful for Triviality::ZeroBlocks.
struct ZeroBlockSet {
  bool a = false;
  bool b = false;
  bool c = false;

  int count() const noexcept { return int(a) + int(b) + int(c); }
  friend bool operator==(const ZeroBlockSet&, const ZeroBlockSet&) = default;
};

struct TrivialityClass {
  Triviality kind = Triviality::NonTrivial;
  ZeroBlockSet zeros;

  friend bool operator==(const TrivialityClass&, const TrivialityClass&) = default;
};

std::string to_string(Triviality kind);
std::string to_string(const TrivialityClass& cls);  // e.g. "ZeroBlocks{b,c}"

struct DivisibilityReport {
  bool a_divides_bc = false;
  bool b_divides_ac_base_minus_1 = false;
  bool c_divides_ab_base_pow_k = false;
  /// d = bc / a, present when a, b, c > 0 and a | bc.
  std::optional<BigInt> ratio_d;
};

bool has_property_p(const CancellationNumber& n);

/// Throws std::domain_error unless has_property_p(n).
TrivialityClass classify_triviality(const CancellationNumber& n);

bool has_property_p_star(const CancellationNumber& n);

/// Throws std::domain_error unless has_property_p(n). A zero divisor block
/// counts as dividing.
DivisibilityReport divisibility_report(const CancellationNumber& n);

}  // namespace anocan
