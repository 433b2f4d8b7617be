#include "output.hpp"

#include <stdexcept>

namespace anocan::cli {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "plain") return Format::Plain;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or plain)");
}

Json OutputRecord::to_json() const {
  Json stats = Json::object();
  stats["predicateEvaluations"] = dec(predicate_evaluations);
  if (include_timing) {
    stats["wallSeconds"] = wall_seconds;
  }
  Json out = Json::object();
  out["schemaVersion"] = kSchemaVersion;
  out["command"] = command;
  out["parameters"] = parameters;
  out["results"] = results;
  out["workStats"] = std::move(stats);
  return out;
}

std::string dec(const BigInt& n) { return to_decimal(n); }
std::string dec(std::uint64_t n) { return std::to_string(n); }

std::string digit_field(const DigitString& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(digits[i]);
  }
  return out;
}

Json solution_json(const CancellationNumber& n) {
  Json digits = Json::array();
  const auto expansion = n.digits();
  for (Digit d : expansion.digits()) {
    digits.push_back(dec(d));
  }
  Json out = Json::object();
  out["value"] = dec(n.value());
  out["base"] = dec(n.base().value());
  out["l"] = dec(n.width_l());
  out["k"] = dec(n.width_k());
  out["a"] = dec(n.a());
  out["b"] = dec(n.b());
  out["c"] = dec(n.c());
  out["digits"] = std::move(digits);
  return out;
}

Json solution_json(const CancellationNumber& n, bool primitive) {
  Json out = solution_json(n);
  out["primitive"] = primitive;
  return out;
}

std::vector<std::string> solution_csv_row(const Json& solution) {
  std::string digits;
  for (const auto& d : solution["digits"]) {
    if (!digits.empty()) digits += ' ';
    digits += d.get<std::string>();
  }
  std::string primitive;
  if (solution.contains("primitive")) {
    primitive = solution["primitive"].get<bool>() ? "true" : "false";
  }
  return {solution["value"], solution["base"], solution["l"], solution["k"],
          solution["a"],     solution["b"],    solution["c"], digits,
          primitive};
}

std::string csv_document(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto join = [](const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) line += ',';
      line += fields[i];
    }
    line += '\n';
    return line;
  };
  std::string out = join(header);
  for (const auto& row : rows) {
    out += join(row);
  }
  return out;
}

}  // namespace anocan::cli
