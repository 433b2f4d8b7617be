#pragma once

// Constructive side: every non-trivial solution of P_k has the shape
// [a_1..a_k b b..b c_k], so it is pinned down by the pair (b, c_k):
//
//     M = (B^k - B) / (B - 1)
//     c = b M + c_k
//     a = b M / B + b c_k B^(k-1) / (b B - (B - 1) c_k)
//
// Everything returned here is re-checked with has_property_p_star().

#include <optional>
#include <string>
#include <vector>

#include "anocan/bigint.hpp"
#include "anocan/digits.hpp"

namespace anocan {

enum class TupleClass { NonGenerating, FullSolution, ShortSolution };

/// "none", "full", "short"
std::string to_string(TupleClass cls);

struct DerivedBlocks {
  BigInt m;
  BigInt a;
  BigInt c;
};

struct GeneratingTuple {
  Digit b = 0;
  Digit ck = 0;
  TupleClass cls = TupleClass::NonGenerating;
  std::optional<BigInt> block_a;   // absent iff NonGenerating
  std::optional<BigInt> block_c;
  std::optional<unsigned> width_l; // digit count of block_a
  /// The closed form for a produced a positive integer (before the
  /// predicate check).
  bool raw_integral = false;
};

/// Candidate blocks for (b, c_k) at width k, or nothing when the closed form
/// is not integral. Requires 1 < ck < b < B and k >= 1.
std::optional<DerivedBlocks> blocks_from_tuple(Digit b, Digit ck, Base base, unsigned k);

/// blocks_from_tuple() plus the verdict on the assembled number with
/// l = digit count of a.
GeneratingTuple classify_tuple(Digit b, Digit ck, Base base, unsigned k);

/// [a b c] -> [a b b b c] at widths (l+1, k+1). Throws std::invalid_argument
/// when a == 0 < b, since the result would carry a leading zero in a.
CancellationNumber extend(const CancellationNumber& n);

/// Inverse of extend(): drops the copies of b flanking the centre when
/// a_l == b == c_1. Nothing when l < 2, k < 2 or the digits differ.
std::optional<CancellationNumber> reduce(const CancellationNumber& n);

/// [a b c_1..c_k] -> [a b c_1..c_{k-1}] for a solution with c_k == 0.
/// Nothing when c_k != 0; throws std::invalid_argument when k < 2 and
/// std::domain_error when n is not a P solution.
std::optional<CancellationNumber> strip_trailing_zero(const CancellationNumber& n);

/// (m B^(k-1) - 1, B - 1, B^k - n) for every ordered factorisation B = m n,
/// m, n > 1, ordered by m. Empty iff B is prime.
std::vector<CancellationNumber> composite_family(Base base, unsigned k);

/// (B^k / 2 - 1, B - 1, B^k - 2). Requires B even and B >= 4.
CancellationNumber largest_solution(Base base, unsigned k);

/// (a, b, c) -> (b - c, b, b - a) on non-trivial solutions with l = k = 1.
CancellationNumber involution(const CancellationNumber& n);

}  // namespace anocan
