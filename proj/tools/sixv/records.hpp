#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sixv::cli {

using Json = nlohmann::ordered_json;

/// One output row: {query, backend, route, value, agreement, runtime_ms}.
struct Record {
  Json query;
  std::string backend;
  std::string route;
  std::string value;
  Json agreement;  // null, bool, or {route: bool}
  std::optional<double> runtime_ms;

  Json to_json() const;
};

void write_json(std::ostream& out, const std::vector<Record>& records);
void write_csv(std::ostream& out, const std::vector<Record>& records);

/// Writes to `path`, or to stdout when it is empty.
void emit(const std::vector<Record>& records, const std::string& format, const std::string& path);

}  // namespace sixv::cli
