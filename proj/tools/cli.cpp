#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "output.hpp"

namespace anocan::cli {
namespace {

struct Settings {
  std::string format = "json";
  std::uint64_t work_limit = kDefaultWorkLimit;
  unsigned jobs = 0;
  bool no_timing = false;

  EngineOptions engine() const { return {jobs, work_limit}; }
};

/// What a command hands back for rendering.
struct CommandOutput {
  OutputRecord record;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string plain;
  int exit_code = kExitOk;
};

class EngineDisagreement : public std::runtime_error {
 public:
  explicit EngineDisagreement(CommandOutput output)
      : std::runtime_error("oracle and structured engines disagree"), output_(std::move(output)) {}
  const CommandOutput& output() const { return output_; }

 private:
  CommandOutput output_;
};

Json solution_list(const SolutionSet& set) {
  Json list = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    list.push_back(solution_json(set.solutions[i], set.primitive[i]));
  }
  return list;
}

std::string plain_solution(const CancellationNumber& n) {
  std::ostringstream line;
  line << dec(n.value()) << "  " << n.digits().to_string() << "  a=" << dec(n.a()) << " b=" << n.b()
       << " c=" << dec(n.c());
  return line.str();
}

// Values present in `left` but not in `right`; both ascending.
Json set_difference(const SolutionSet& left, const SolutionSet& right) {
  Json out = Json::array();
  std::size_t j = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    const BigInt v = left.solutions[i].value();
    while (j < right.size() && right.solutions[j].value() < v) ++j;
    if (j == right.size() || right.solutions[j].value() != v) {
      out.push_back(solution_json(left.solutions[i], left.primitive[i]));
    }
  }
  return out;
}

CommandOutput cmd_enumerate(std::uint64_t base_value, unsigned k, const std::string& engine, const Settings& settings,
                            WorkStats& stats) {
  const Base base(base_value);
  if (k == 0) throw std::invalid_argument("--k must be at least 1");

  CommandOutput result;
  result.record.command = "enumerate";
  result.record.parameters["base"] = dec(base_value);
  result.record.parameters["k"] = dec(k);
  result.record.parameters["engine"] = engine;

  std::optional<SolutionSet> oracle;
  std::optional<SolutionSet> structured;
  if (engine == "oracle" || engine == "both") {
    oracle = brute_force_solutions(base, k, k, settings.engine(), &stats);
  }
  if (engine == "structured" || engine == "both") {
    structured = structured_solutions(base, k, settings.engine(), &stats);
  }
  const SolutionSet& shown = structured ? *structured : *oracle;

  Json& results = result.record.results;
  results["count"] = dec(shown.size());
  results["solutions"] = solution_list(shown);
  bool agree = true;
  if (oracle && structured) {
    Json diff = Json::object();
    diff["oracleOnly"] = set_difference(*oracle, *structured);
    diff["structuredOnly"] = set_difference(*structured, *oracle);
    agree = diff["oracleOnly"].empty() && diff["structuredOnly"].empty();
    results["diff"] = std::move(diff);
  }

  result.csv_header = kSolutionCsvHeader;
  for (const auto& s : results["solutions"]) {
    result.csv_rows.push_back(solution_csv_row(s));
  }
  std::ostringstream plain;
  plain << shown.size() << " solution(s) of P*_" << k << " in base " << base_value << '\n';
  for (std::size_t i = 0; i < shown.size(); ++i) {
    plain << "  " << plain_solution(shown.solutions[i]) << (shown.primitive[i] ? "  primitive" : "  extension")
          << '\n';
  }
  if (oracle && structured) {
    plain << (agree ? "engines agree\n" : "ENGINES DISAGREE\n");
  }
  result.plain = plain.str();

  if (!agree) {
    result.exit_code = kExitEngineDisagreement;
    throw EngineDisagreement(std::move(result));
  }
  return result;
}

Json audit_json(const StructureAudit& audit) {
  Json out = Json::object();
  out["leadingDigitBelowHalfBase"] = audit.leading_digit_ok;
  out["lastBlockRepeatsB"] = audit.last_block_ok;
  out["gcdLastDigitBase"] = audit.last_digit_gcd_ok;
  out["gcdTrailingADigitMinusB"] = audit.trailing_a_gcd_ok;
  out["a1"] = dec(audit.a1);
  out["ak"] = dec(audit.ak);
  out["ck"] = dec(audit.ck);
  out["gcdCkBase"] = dec(audit.gcd_ck_base);
  out["gcdAkMinusBBase"] = audit.gcd_ak_minus_b_base ? Json(dec(*audit.gcd_ak_minus_b_base)) : Json(nullptr);
  out["allHold"] = audit.all_ok();
  return out;
}

CommandOutput cmd_verify(const std::string& number, std::uint64_t base_value, unsigned l, unsigned k,
                         WorkStats& stats) {
  const Base base(base_value);
  const auto n = disassemble(from_decimal(number), base, l, k);

  CommandOutput result;
  result.record.command = "verify";
  result.record.parameters["number"] = number;
  result.record.parameters["base"] = dec(base_value);
  result.record.parameters["l"] = dec(l);
  result.record.parameters["k"] = dec(k);

  const bool p = has_property_p(n);
  ++stats.predicate_evaluations;
  const auto triviality = p ? std::optional(classify_triviality(n)) : std::nullopt;
  const bool p_star = p && triviality->kind == Triviality::NonTrivial;

  Json& results = result.record.results;
  results["number"] = solution_json(n);
  results["propertyP"] = p;
  results["triviality"] = triviality ? Json(to_string(*triviality)) : Json(nullptr);
  results["propertyPStar"] = p_star;
  if (p) {
    const auto report = divisibility_report(n);
    Json div = Json::object();
    div["aDividesBC"] = report.a_divides_bc;
    div["bDividesACBaseMinus1"] = report.b_divides_ac_base_minus_1;
    div["cDividesABBasePowK"] = report.c_divides_ab_base_pow_k;
    div["ratioD"] = report.ratio_d ? Json(dec(*report.ratio_d)) : Json(nullptr);
    results["divisibility"] = std::move(div);
  } else {
    results["divisibility"] = nullptr;
  }
  std::optional<StructureAudit> audit;
  if (p_star && l == k) {
    audit = audit_solution(n);
    results["structureAudit"] = audit_json(*audit);
  } else {
    results["structureAudit"] = nullptr;
  }

  result.csv_header = {"field", "value"};
  result.csv_rows = {{"value", dec(n.value())},
                     {"propertyP", p ? "true" : "false"},
                     {"triviality", triviality ? to_string(*triviality) : ""},
                     {"propertyPStar", p_star ? "true" : "false"}};
  if (audit) {
    result.csv_rows.push_back({"structureAudit", audit->all_ok() ? "true" : "false"});
  }

  std::ostringstream plain;
  plain << plain_solution(n) << '\n';
  plain << "P: " << (p ? "yes" : "no") << '\n';
  if (triviality) plain << "class: " << to_string(*triviality) << '\n';
  plain << "P*: " << (p_star ? "yes" : "no") << '\n';
  if (audit) plain << "structure constraints: " << (audit->all_ok() ? "all hold" : "VIOLATED") << '\n';
  result.plain = plain.str();
  return result;
}

CommandOutput cmd_grid(std::uint64_t base_value, unsigned k, const Settings& settings, WorkStats& stats) {
  const Base base(base_value);
  const auto grid = tuple_grid(base, k, settings.engine(), &stats);
  const auto counts = grid.counts();

  CommandOutput result;
  result.record.command = "grid";
  result.record.parameters["base"] = dec(base_value);
  result.record.parameters["k"] = dec(k);

  Json& results = result.record.results;
  results["cellCount"] = dec(grid.cells.size());
  results["counts"] = {{"none", dec(counts.non_generating)},
                       {"full", dec(counts.full)},
                       {"short", dec(counts.short_solution)},
                       {"rawIntegral", dec(counts.raw_integral)}};
  Json cells = Json::array();
  result.csv_header = kGridCsvHeader;
  for (const auto& cell : grid.cells) {
    const std::string l = cell.width_l ? dec(*cell.width_l) : "";
    const std::string a = cell.block_a ? dec(*cell.block_a) : "";
    Json row = Json::object();
    row["b"] = dec(cell.b);
    row["ck"] = dec(cell.ck);
    row["class"] = to_string(cell.cls);
    row["l"] = cell.width_l ? Json(l) : Json(nullptr);
    row["a"] = cell.block_a ? Json(a) : Json(nullptr);
    cells.push_back(std::move(row));
    result.csv_rows.push_back({dec(cell.b), dec(cell.ck), to_string(cell.cls), l, a});
  }
  results["cells"] = std::move(cells);

  std::ostringstream plain;
  plain << grid.cells.size() << " generating tuples for base " << base_value << ", k = " << k << ": " << counts.full
        << " full, " << counts.short_solution << " short, " << counts.non_generating << " non-generating\n";
  for (const auto& cell : grid.cells) {
    if (cell.cls == TupleClass::NonGenerating) continue;
    plain << "  (" << cell.b << ", " << cell.ck << ") " << to_string(cell.cls) << " l=" << *cell.width_l << '\n';
  }
  result.plain = plain.str();
  return result;
}

std::string fixed(double value, int places) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(places) << value;
  return out.str();
}

CommandOutput cmd_saturate(std::uint64_t base_value, unsigned k_max, const Settings& settings, WorkStats& stats) {
  const Base base(base_value);
  const auto report = empirical_saturation(base, k_max, settings.engine(), &stats);
  const auto scan = consecutive_saturation_scan(report);

  CommandOutput result;
  result.record.command = "saturate";
  result.record.parameters["base"] = dec(base_value);
  result.record.parameters["kmax"] = dec(k_max);

  std::size_t max_count = 0;
  Json rows = Json::array();
  result.csv_header = {"k", "solutions", "primitives", "newPrimitives"};
  for (const auto& row : report.counts_by_k) {
    max_count = std::max(max_count, row.solutions);
    Json fresh = Json::array();
    std::string fresh_field;
    for (const auto& n : row.new_primitives) {
      fresh.push_back(dec(n.value()));
      if (!fresh_field.empty()) fresh_field += ' ';
      fresh_field += dec(n.value());
    }
    rows.push_back({{"k", dec(row.k)},
                    {"solutions", dec(row.solutions)},
                    {"primitives", dec(row.primitives)},
                    {"newPrimitives", std::move(fresh)}});
    result.csv_rows.push_back({dec(row.k), dec(row.solutions), dec(row.primitives), fresh_field});
  }

  const std::uint64_t bound = count_bound(base);
  Json& results = result.record.results;
  results["bound"] = {{"value", fixed(report.bound.value, 6)}, {"ceiling", dec(report.bound.ceiling)}};
  results["countBound"] = dec(bound);
  results["maxCount"] = dec(max_count);
  results["maxCountOverBound"] = bound ? Json(fixed(double(max_count) / double(bound), 6)) : Json(nullptr);
  results["countsByK"] = std::move(rows);
  results["lastNewPrimitiveK"] = report.last_new_primitive_k ? Json(dec(*report.last_new_primitive_k)) : Json(nullptr);
  Json fresh_at = Json::array();
  for (const auto& step : scan.steps) {
    if (step.new_primitives) fresh_at.push_back(dec(step.k));
  }
  Json counterexamples = Json::array();
  for (unsigned k : scan.counterexamples) counterexamples.push_back(dec(k));
  results["consecutive"] = {{"newPrimitivesAt", std::move(fresh_at)},
                            {"counterexamples", std::move(counterexamples)},
                            {"patternHolds", scan.pattern_holds()}};

  std::ostringstream plain;
  plain << "base " << base_value << ": saturation bound " << fixed(report.bound.value, 3) << " (ceiling "
        << report.bound.ceiling << ")\n";
  for (const auto& row : report.counts_by_k) {
    plain << "  k=" << row.k << "  solutions=" << row.solutions << "  new=" << row.primitives << '\n';
  }
  plain << "last new primitive at k = "
        << (report.last_new_primitive_k ? std::to_string(*report.last_new_primitive_k) : std::string("none")) << '\n';
  plain << "consecutive-saturation pattern " << (scan.pattern_holds() ? "holds" : "BROKEN") << '\n';
  result.plain = plain.str();
  return result;
}

CommandOutput cmd_probe(std::uint64_t base_value, WorkStats& stats) {
  const Base base(base_value);
  const auto verdict = primality_probe(base);
  stats.predicate_evaluations += verdict.tuples_tested;

  CommandOutput result;
  result.record.command = "probe";
  result.record.parameters["base"] = dec(base_value);
  Json& results = result.record.results;
  results["verdict"] = verdict.composite ? "composite" : "prime";
  results["witness"] = verdict.witness ? solution_json(*verdict.witness) : Json(nullptr);
  results["tuplesTested"] = dec(verdict.tuples_tested);

  result.csv_header = {"base", "verdict", "witness"};
  result.csv_rows = {{dec(base_value), results["verdict"].get<std::string>(),
                      verdict.witness ? digit_field(verdict.witness->digits()) : ""}};
  result.plain = std::to_string(base_value) + ": " + results["verdict"].get<std::string>() +
                 (verdict.witness ? ", witness " + verdict.witness->digits().to_string() : std::string()) + '\n';
  result.exit_code = verdict.composite ? kExitOk : kExitProbePrime;
  return result;
}

void render(const CommandOutput& output, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << output.record.to_json().dump(2) << '\n';
      break;
    case Format::Csv:
      out << csv_document(output.csv_header, output.csv_rows);
      break;
    case Format::Plain:
      out << output.plain;
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings settings;
  CLI::App app{"Enumerate and analyse anomalous-cancellation numbers in arbitrary bases"};
  app.name("anocan");
  app.require_subcommand(1);
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--work-limit", settings.work_limit, "Maximum predicate evaluations for the exhaustive oracle");
  app.add_option("--jobs", settings.jobs, "Worker threads (0: all cores); affects speed only");
  app.add_flag("--no-timing", settings.no_timing, "Omit wall time from workStats");

  std::uint64_t base = 0;
  unsigned k = 0;
  unsigned l = 0;
  unsigned k_max = 0;
  std::string engine = "structured";
  std::string number;

  auto* enumerate = app.add_subcommand("enumerate", "List the non-trivial solutions for a base and block width");
  enumerate->add_option("--base", base, "Base B >= 2")->required();
  enumerate->add_option("--k", k, "Width of the trailing block c")->required();
  enumerate->add_option("--engine", engine, "Solver; both compares the two (default structured)")->check(CLI::IsMember({"oracle", "structured", "both"}));

  auto* verify = app.add_subcommand("verify", "Check one number against the cancellation property");
  verify->add_option("number", number, "Decimal value of the number")->required();
  verify->add_option("--base", base, "Base B >= 2")->required();
  verify->add_option("--l", l, "Width of the leading block a")->required();
  verify->add_option("--k", k, "Width of the trailing block c")->required();

  auto* grid = app.add_subcommand("grid", "Classify every generating tuple (b, ck)");
  grid->add_option("--base", base, "Base B >= 2")->required();
  grid->add_option("--k", k, "Width of the trailing block c")->required();

  auto* saturate = app.add_subcommand("saturate", "Track solution counts and new primitives over k = 1..kmax");
  saturate->add_option("--base", base, "Base B >= 2")->required();
  saturate->add_option("--kmax", k_max, "Largest k to scan")->required();

  auto* probe = app.add_subcommand("probe", "Decide primality of a base from the existence of solutions");
  probe->add_option("base", base, "Base to test")->required();

  for (auto* sub : {enumerate, verify, grid, saturate, probe}) {
    sub->fallthrough();
  }

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("anocan");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  WorkStats stats;
  const auto started = std::chrono::steady_clock::now();
  CommandOutput output;
  try {
    const Format format = parse_format(settings.format);
    if (*enumerate) {
      output = cmd_enumerate(base, k, engine, settings, stats);
    } else if (*verify) {
      output = cmd_verify(number, base, l, k, stats);
    } else if (*grid) {
      output = cmd_grid(base, k, settings, stats);
    } else if (*saturate) {
      output = cmd_saturate(base, k_max, settings, stats);
    } else {
      output = cmd_probe(base, stats);
    }
    output.record.predicate_evaluations = stats.predicate_evaluations;
    output.record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    output.record.include_timing = !settings.no_timing;
    render(output, format, out);
    return output.exit_code;
  } catch (const EngineDisagreement& e) {
    CommandOutput failed = e.output();
    failed.record.predicate_evaluations = stats.predicate_evaluations;
    failed.record.include_timing = !settings.no_timing;
    render(failed, parse_format(settings.format), out);
    err << "anocan: " << e.what() << '\n';
    return kExitEngineDisagreement;
  } catch (const WorkLimitExceeded& e) {
    err << "anocan: refused: " << e.what() << " (raise --work-limit to override)\n";
    return kExitWorkLimit;
  } catch (const std::invalid_argument& e) {
    err << "anocan: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "anocan: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "anocan: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace anocan::cli
