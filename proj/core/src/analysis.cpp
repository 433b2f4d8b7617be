#include "anocan/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "anocan/generator.hpp"
#include "anocan/predicate.hpp"

namespace anocan {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

SaturationBound saturation_bound(std::uint64_t base) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2");
  }
  const std::uint64_t below = base - 1;
  SaturationBound out;
  out.value = std::max(5.0, 2.0 * std::log2(static_cast<double>(below)) + 2.0);

  // ceil(2 log2(B-1) + 2) = 2 + min{ j : 2^j >= (B-1)^2 }
  __extension__ typedef unsigned __int128 Wide;
  const Wide square = static_cast<Wide>(below) * below;
  unsigned j = 0;
  if (square >> 127) {
    j = 128;
  } else {
    while ((static_cast<Wide>(1) << j) < square) {
      ++j;
    }
  }
  out.ceiling = std::max(5u, j + 2);
  return out;
}

SaturationReport empirical_saturation(Base base, unsigned k_max, const EngineOptions& options, WorkStats* stats) {
  if (k_max < 1) {
    throw std::invalid_argument("k_max must be at least 1");
  }
  SaturationReport report{base, saturation_bound(base.value()), k_max, {}, std::nullopt};
  report.counts_by_k.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    const auto set = structured_solutions(base, k, options, stats);
    SolutionCount row;
    row.k = k;
    row.solutions = set.size();
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set.primitive[i]) {
        row.new_primitives.push_back(set.solutions[i]);
      }
    }
    row.primitives = row.new_primitives.size();
    if (row.primitives > 0) {
      report.last_new_primitive_k = k;
    }
    report.counts_by_k.push_back(std::move(row));
  }
  return report;
}

StructureAudit audit_solution(const CancellationNumber& n) {
  if (n.width_l() != n.width_k()) {
    throw std::invalid_argument("structure audit needs l == k");
  }
  const std::uint64_t radix = n.base().value();
  const auto a = n.a_digits();
  const auto c = n.c_digits();
  const Digit b = n.b();

  StructureAudit audit{n, false, false, false, false, 0, 0, 0, 0, std::nullopt};
  audit.a1 = a.front();
  audit.ak = a.back();
  audit.ck = c.back();

  audit.leading_digit_ok = 2 * audit.a1 < radix;

  bool repeated = true;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    repeated = repeated && c[i] == b;
  }
  audit.last_block_ok = repeated && b > audit.ck && audit.ck > 1;

  audit.gcd_ck_base = std::gcd(audit.ck, radix);
  audit.last_digit_gcd_ok = audit.gcd_ck_base > 1;

  if (audit.ak == b) {
    audit.trailing_a_gcd_ok = true;
  } else {
    const std::uint64_t gap = audit.ak > b ? audit.ak - b : b - audit.ak;
    audit.gcd_ak_minus_b_base = std::gcd(gap, radix);
    audit.trailing_a_gcd_ok = *audit.gcd_ak_minus_b_base > 1;
  }
  return audit;
}

std::vector<StructureAudit> audit_structure(const SolutionSet& set) {
  if (set.width_l != set.width_k) {
    throw std::invalid_argument("structure audit needs l == k");
  }
  std::vector<StructureAudit> out;
  out.reserve(set.size());
  for (const auto& n : set.solutions) {
    out.push_back(audit_solution(n));
  }
  return out;
}

bool prime_power_audit(std::uint64_t p, unsigned n, unsigned k, const EngineOptions& options) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  if (n < 2) {
    throw std::invalid_argument("prime_power_audit needs exponent n >= 2");
  }
  const BigInt big_base = power(p, n);
  if (big_base > BigInt(1ul << 32)) {
    throw WorkLimitExceeded(big_base * big_base / 2, options.work_limit);
  }
  const Base base(big_base.get_ui());
  if (count_bound(base) > options.work_limit) {
    throw WorkLimitExceeded(BigInt(count_bound(base)), options.work_limit);
  }

  const auto set = structured_solutions(base, k, options);
  for (const auto& solution : set.solutions) {
    CancellationNumber core = solution;
    for (unsigned step = 1; step < k; ++step) {
      auto shorter = reduce(core);
      if (!shorter) return false;
      core = std::move(*shorter);
    }
    if (core.width_k() != 1 || !has_property_p_star(core)) return false;

    const auto a = solution.a_digits();
    const auto c = solution.c_digits();
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (a[i] != solution.b()) return false;
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i] != solution.b()) return false;
    }
    if (c.back() % p != 0) return false;
  }
  return true;
}

ProbeVerdict primality_probe(Base base) {
  const std::uint64_t radix = base.value();
  ProbeVerdict verdict;
  if (radix < 4) {
    return verdict;
  }
  const Digit b = radix - 1;
  for (Digit ck = 2; ck < b; ++ck) {
    ++verdict.tuples_tested;
    const auto cell = classify_tuple(b, ck, base, 1);
    if (cell.cls == TupleClass::FullSolution) {
      verdict.composite = true;
      verdict.witness = assemble(*cell.block_a, b, *cell.block_c, base, 1, 1);
      break;
    }
  }
  return verdict;
}

ConsecutiveScan consecutive_saturation_scan(const SaturationReport& report) {
  ConsecutiveScan scan;
  for (const auto& row : report.counts_by_k) {
    scan.steps.push_back({row.k, row.primitives > 0});
  }
  for (std::size_t i = 0; i + 1 < scan.steps.size(); ++i) {
    if (!scan.steps[i].new_primitives && scan.steps[i + 1].new_primitives) {
      scan.counterexamples.push_back(scan.steps[i].k);
    }
  }
  return scan;
}

ConsecutiveScan consecutive_saturation_scan(Base base, unsigned k_max, const EngineOptions& options) {
  if (k_max < 2) {
    throw std::invalid_argument("consecutive_saturation_scan needs k_max >= 2");
  }
  return consecutive_saturation_scan(empirical_saturation(base, k_max, options));
}

}  // namespace anocan
