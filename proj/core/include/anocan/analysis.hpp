#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "anocan/digits.hpp"
#include "anocan/enumeration.hpp"

namespace anocan {

/// max{5, 2 log2(B - 1) + 2}. `value` is for display only; `ceiling` is
/// computed with integer powers of two and is exact.
struct SaturationBound {
  double value = 0;
  unsigned ceiling = 0;
};

SaturationBound saturation_bound(std::uint64_t base);

struct SolutionCount {
  unsigned k = 0;
  std::size_t solutions = 0;
  std::size_t primitives = 0;
  std::vector<CancellationNumber> new_primitives;  // ascending by value
};

struct SaturationReport {
  Base base;
  SaturationBound bound;
  unsigned k_max = 0;
  std::vector<SolutionCount> counts_by_k;  // k = 1 .. k_max
  std::optional<unsigned> last_new_primitive_k;
};

/// Runs structured_solutions() for k = 1..k_max and tracks which solutions
/// are not extensions of a shorter one.
SaturationReport empirical_saturation(Base base, unsigned k_max, const EngineOptions& options = {},
                                      WorkStats* stats = nullptr);

struct StructureAudit {
  CancellationNumber solution;
  // a_1 < B/2
  bool leading_digit_ok = false;
  // b = c_1 = .. = c_{k-1} > c_k > 1
  bool last_block_ok = false;
  // gcd(c_k, B) > 1
  bool last_digit_gcd_ok = false;
  // gcd(a_k - b, B) > 1 whenever a_k != b
  bool trailing_a_gcd_ok = false;

  Digit a1 = 0;
  Digit ak = 0;
  Digit ck = 0;
  std::uint64_t gcd_ck_base = 0;
  std::optional<std::uint64_t> gcd_ak_minus_b_base;  // absent when a_k == b

  bool all_ok() const noexcept {
    return leading_digit_ok && last_block_ok && last_digit_gcd_ok && trailing_a_gcd_ok;
  }
};

/// Requires l == k. Does not check that n is a solution.
StructureAudit audit_solution(const CancellationNumber& n);

/// One audit per member; throws std::invalid_argument when the set has l != k.
std::vector<StructureAudit> audit_structure(const SolutionSet& set);

/// For B = p^n: every solution of P*_k reduces k - 1 times to a solution of
/// P*_1, reads [a_1 b..b b b..b c_k], and has p | c_k. Throws
/// std::invalid_argument when p is not prime or n < 2, and WorkLimitExceeded
/// when the tuple count of p^n exceeds options.work_limit.
bool prime_power_audit(std::uint64_t p, unsigned n, unsigned k, const EngineOptions& options = {});

struct ProbeVerdict {
  bool composite = false;
  std::optional<CancellationNumber> witness;  // present iff composite
  std::uint64_t tuples_tested = 0;
};

/// Tests the tuples (B - 1, c_k), c_k ascending, at k = 1. The first one that
/// generates a solution is the witness of compositeness.
ProbeVerdict primality_probe(Base base);

struct ConsecutiveStep {
  unsigned k = 0;
  bool new_primitives = false;
};

struct ConsecutiveScan {
  std::vector<ConsecutiveStep> steps;
  /// Each k with no new primitives at k but some at k + 1.
  std::vector<unsigned> counterexamples;

  bool pattern_holds() const noexcept { return counterexamples.empty(); }
};

ConsecutiveScan consecutive_saturation_scan(const SaturationReport& report);

/// Requires k_max >= 2.
ConsecutiveScan consecutive_saturation_scan(Base base, unsigned k_max, const EngineOptions& options = {});

/// Trial division.
bool is_prime(std::uint64_t n);

}  // namespace anocan
