#pragma once

// Two independent routes to the solution set of P*_{l;k}:
//
//  * brute_force_solutions() scans every (a, b, c) with exactly l+k+1 digits;
//  * structured_solutions() evaluates the (B-2)(B-3)/2 generating tuples.
//
// Both partition their search space over worker threads and merge results in
// value order, so output never depends on the thread count.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "anocan/bigint.hpp"
#include "anocan/digits.hpp"
#include "anocan/generator.hpp"

namespace anocan {

inline constexpr std::uint64_t kDefaultWorkLimit = 1'000'000'000;

struct EngineOptions {
  unsigned jobs = 0;  // 0: std::thread::hardware_concurrency()
  std::uint64_t work_limit = kDefaultWorkLimit;
};

struct WorkStats {
  std::uint64_t predicate_evaluations = 0;
};

class WorkLimitExceeded : public std::runtime_error {
 public:
  WorkLimitExceeded(const BigInt& required, std::uint64_t limit);

  const BigInt& required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  BigInt required_;
  std::uint64_t limit_;
};

struct SolutionSet {
  Base base;
  unsigned width_l;
  unsigned width_k;
  std::vector<CancellationNumber> solutions;  // strictly ascending by value
  std::vector<bool> primitive;                // reduce() yields nothing

  std::size_t size() const noexcept { return solutions.size(); }
  bool empty() const noexcept { return solutions.empty(); }
};

struct TupleGrid {
  Base base;
  unsigned width_k;
  std::vector<GeneratingTuple> cells;  // ordered by (b, ck)

  struct Counts {
    std::size_t non_generating = 0;
    std::size_t full = 0;
    std::size_t short_solution = 0;
    std::size_t raw_integral = 0;
  };
  Counts counts() const;
};

/// Exhaustive scan. Throws WorkLimitExceeded when the number of candidates
/// (B^l - B^(l-1)) * B^(k+1) exceeds options.work_limit.
SolutionSet brute_force_solutions(Base base, unsigned l, unsigned k, const EngineOptions& options = {},
                                  WorkStats* stats = nullptr);

/// Solutions of P*_k via generating tuples (full-width cells only).
SolutionSet structured_solutions(Base base, unsigned k, const EngineOptions& options = {},
                                 WorkStats* stats = nullptr);

/// Every (b, ck) cell with 1 < ck < b < B, classified. Requires B >= 4.
TupleGrid tuple_grid(Base base, unsigned k, const EngineOptions& options = {}, WorkStats* stats = nullptr);

/// (B-2)(B-3)/2, the number of generating tuples; 0 for B <= 3.
std::uint64_t count_bound(Base base);

/// Builds a SolutionSet from arbitrary solutions: sorts, deduplicates and
/// fills the primitive flags.
SolutionSet make_solution_set(Base base, unsigned l, unsigned k, std::vector<CancellationNumber> solutions);

}  // namespace anocan
