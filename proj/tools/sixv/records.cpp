#include "records.hpp"

#include <sixv/error.hpp>

#include <fstream>
#include <iostream>

namespace sixv::cli {

Json Record::to_json() const {
  Json j;
  j["query"] = query;
  j["backend"] = backend;
  j["route"] = route;
  j["value"] = value;
  j["agreement"] = agreement;
  j["runtime_ms"] = runtime_ms ? Json(*runtime_ms) : Json(nullptr);
  return j;
}

void write_json(std::ostream& out, const std::vector<Record>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(r.to_json());
  out << arr.dump(2) << '\n';
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string agreement_cell(const Json& a) {
  if (a.is_null()) return "";
  if (a.is_boolean()) return a.get<bool>() ? "true" : "false";
  std::string out;
  for (const auto& [k, v] : a.items()) {
    if (!out.empty()) out += ';';
    out += k + "=" + (v.get<bool>() ? "true" : "false");
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<Record>& records) {
  out << "query,backend,route,value,agreement,runtime_ms\n";
  for (const auto& r : records) {
    out << csv_field(r.query.dump()) << ',' << csv_field(r.backend) << ',' << csv_field(r.route) << ','
        << csv_field(r.value) << ',' << csv_field(agreement_cell(r.agreement)) << ','
        << (r.runtime_ms ? Json(*r.runtime_ms).dump() : std::string()) << '\n';
  }
}

void emit(const std::vector<Record>& records, const std::string& format, const std::string& path) {
  auto write = [&](std::ostream& out) {
    if (format == "csv") write_csv(out, records);
    else write_json(out, records);
  };
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file " + path);
  write(f);
  if (!f) throw Error("failed writing " + path);
}

}  // namespace sixv::cli
