#pragma once

// Serialisation of command results. Every integer in a results payload is
// written as a decimal string so that values past 2^53 survive JSON readers.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "anocan/anocan.hpp"

namespace anocan::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum class Format { Json, Csv, Plain };

Format parse_format(const std::string& name);

struct OutputRecord {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::uint64_t predicate_evaluations = 0;
  double wall_seconds = 0;
  bool include_timing = true;

  Json to_json() const;
};

std::string dec(const BigInt& n);
std::string dec(std::uint64_t n);

Json solution_json(const CancellationNumber& n, bool primitive);
Json solution_json(const CancellationNumber& n);  // no primitive flag

/// "2 4 9 9 6"
std::string digit_field(const DigitString& digits);

/// Rows joined with '\n', fields with ','; fields never contain commas.
std::string csv_document(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

inline const std::vector<std::string> kSolutionCsvHeader = {"value", "base", "l", "k", "a", "b", "c", "digits", "primitive"};
inline const std::vector<std::string> kGridCsvHeader = {"b", "ck", "class", "l", "a"};

std::vector<std::string> solution_csv_row(const Json& solution);

}  // namespace anocan::cli
