#include "anocan/enumeration.hpp"

#include <algorithm>

#include "anocan/predicate.hpp"
#include "parallel.hpp"

namespace anocan {
namespace {

__extension__ typedef unsigned __int128 Wide;

Wide wide_power(std::uint64_t base, unsigned exp) {
  Wide out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

BigInt to_big(Wide x) {
  BigInt out = static_cast<unsigned long>(x >> 64);
  out <<= 64;
  out += static_cast<unsigned long>(x);
  return out;
}

struct Cell {
  Digit b;
  Digit ck;
};

std::vector<Cell> tuple_cells(std::uint64_t radix) {
  std::vector<Cell> cells;
  cells.reserve(count_bound(Base(radix)));
  for (Digit b = 3; b < radix; ++b) {
    for (Digit ck = 2; ck < b; ++ck) {
      cells.push_back({b, ck});
    }
  }
  return cells;
}

std::vector<GeneratingTuple> classify_cells(Base base, unsigned k, const EngineOptions& options) {
  const auto cells = tuple_cells(base.value());
  std::vector<GeneratingTuple> out(cells.size());
  detail::parallel_chunks(cells.size(), options.jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (auto i = begin; i < end; ++i) {
      out[i] = classify_tuple(cells[i].b, cells[i].ck, base, k);
    }
  });
  return out;
}

}  // namespace

WorkLimitExceeded::WorkLimitExceeded(const BigInt& required, std::uint64_t limit)
    : std::runtime_error("exhaustive scan needs " + to_decimal(required) + " predicate evaluations, limit is " +
                         std::to_string(limit)),
      required_(required),
      limit_(limit) {}

TupleGrid::Counts TupleGrid::counts() const {
  Counts out;
  for (const auto& cell : cells) {
    switch (cell.cls) {
      case TupleClass::NonGenerating:
        ++out.non_generating;
        break;
      case TupleClass::FullSolution:
        ++out.full;
        break;
      case TupleClass::ShortSolution:
        ++out.short_solution;
        break;
    }
    if (cell.raw_integral) ++out.raw_integral;
  }
  return out;
}

std::uint64_t count_bound(Base base) {
  const std::uint64_t radix = base.value();
  if (radix <= 3) {
    return 0;
  }
  return (radix - 2) * (radix - 3) / 2;
}

SolutionSet make_solution_set(Base base, unsigned l, unsigned k, std::vector<CancellationNumber> solutions) {
  std::vector<std::pair<BigInt, CancellationNumber>> keyed;
  keyed.reserve(solutions.size());
  for (auto& n : solutions) {
    BigInt v = n.value();
    keyed.emplace_back(std::move(v), std::move(n));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());

  SolutionSet set{base, l, k, {}, {}};
  set.solutions.reserve(keyed.size());
  set.primitive.reserve(keyed.size());
  for (auto& [value, n] : keyed) {
    set.primitive.push_back(!reduce(n).has_value());
    set.solutions.push_back(std::move(n));
  }
  return set;
}

SolutionSet brute_force_solutions(Base base, unsigned l, unsigned k, const EngineOptions& options, WorkStats* stats) {
  if (l == 0 || k == 0) {
    throw std::invalid_argument("block widths must be at least 1");
  }
  const std::uint64_t radix = base.value();
  const BigInt a_begin_big = power(radix, l - 1);
  const BigInt a_end_big = power(radix, l);
  const BigInt required = (a_end_big - a_begin_big) * power(radix, k + 1);
  if (required > BigInt(options.work_limit)) {
    throw WorkLimitExceeded(required, options.work_limit);
  }

  // required <= 2^64 bounds B^(l+k+1) <= 2^65, so every product below fits.
  const std::uint64_t a_begin = a_begin_big.get_ui();
  const std::uint64_t a_count = BigInt(a_end_big - a_begin_big).get_ui();
  const Wide c_end = wide_power(radix, k);

  const unsigned workers = detail::worker_count(a_count, options.jobs);
  std::vector<std::vector<CancellationNumber>> found(workers);
  detail::parallel_chunks(a_count, options.jobs, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const Wide a = a_begin + i;
      for (Digit b = 0; b < radix; ++b) {
        // (aB + b) c == a (b B^k + c), walked incrementally in c.
        const Wide left_step = a * radix + b;
        Wide left = 0;
        Wide right = a * b * c_end;
        for (Wide c = 0; c < c_end; ++c, left += left_step, right += a) {
          if (left != right) continue;
          auto n = assemble(to_big(a), b, to_big(c), base, l, k);
          if (has_property_p_star(n)) {
            found[w].push_back(std::move(n));
          }
        }
      }
    }
  });

  if (stats) stats->predicate_evaluations += required.get_ui();

  std::vector<CancellationNumber> all;
  for (auto& part : found) {
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  return make_solution_set(base, l, k, std::move(all));
}

SolutionSet structured_solutions(Base base, unsigned k, const EngineOptions& options, WorkStats* stats) {
  if (k == 0) {
    throw std::invalid_argument("block width k must be at least 1");
  }
  const auto cells = classify_cells(base, k, options);
  if (stats) stats->predicate_evaluations += cells.size();

  std::vector<CancellationNumber> solutions;
  for (const auto& cell : cells) {
    if (cell.cls != TupleClass::FullSolution) continue;
    solutions.push_back(assemble(*cell.block_a, cell.b, *cell.block_c, base, k, k));
  }
  return make_solution_set(base, k, k, std::move(solutions));
}

TupleGrid tuple_grid(Base base, unsigned k, const EngineOptions& options, WorkStats* stats) {
  if (base.value() < 4) {
    throw std::invalid_argument("tuple_grid needs base >= 4");
  }
  if (k == 0) {
    throw std::invalid_argument("block width k must be at least 1");
  }
  TupleGrid grid{base, k, classify_cells(base, k, options)};
  if (stats) stats->predicate_evaluations += grid.cells.size();
  return grid;
}

}  // namespace anocan
