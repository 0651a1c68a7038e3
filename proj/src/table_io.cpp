#include "loghodge/table_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "loghodge/error.hpp"

namespace loghodge::io {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kSchema = "loghodge/1";

int effective_jmax(const BigradedTable& t) { return t.j_max ? *t.j_max : std::max(t.max_j(), 0); }

}  // namespace

std::string to_json(const BigradedTable& t) {
  ojson doc;
  doc["schema"] = kSchema;
  ojson src = ojson::object();
  for (const auto& [k, v] : t.source) src[k] = v;
  doc["source"] = src;
  doc["jmax"] = effective_jmax(t);
  ojson entries = ojson::array();
  for (const auto& [key, dim] : t.sorted_entries()) {
    ojson e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["dim"] = dim;
    entries.push_back(e);
  }
  doc["entries"] = entries;
  if (t.strip) {
    ojson s;
    s["q"] = t.strip->q;
    s["r"] = t.strip->r;
    doc["strip"] = s;
  }
  ojson sums = ojson::object();
  for (const auto& [j, e] : t.euler_checksums) sums[std::to_string(j)] = e;
  doc["checksums"] = sums;
  return doc.dump() + "\n";
}

std::string to_csv(const BigradedTable& t) {
  std::ostringstream os;
  os << "i,j,dim\n";
  for (const auto& [key, dim] : t.sorted_entries()) os << key.first << "," << key.second << "," << dim << "\n";
  return os.str();
}

std::string to_pretty(const BigradedTable& t) {
  const int jmax = effective_jmax(t);
  std::size_t width = 1;
  for (const auto& [key, dim] : t.entries()) width = std::max(width, std::to_string(dim).size());
  width = std::max(width, std::to_string(jmax).size());
  auto cell = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };

  std::ostringstream os;
  for (const auto& [k, v] : t.source) os << "# " << k << " = " << v << "\n";
  const std::string corner = "i\\j";
  os << corner;
  for (int j = 0; j <= jmax; ++j) os << cell(std::to_string(j));
  os << "\n";
  int imax = jmax;
  for (const auto& [key, dim] : t.entries()) imax = std::max(imax, key.first);
  for (int i = 0; i <= imax; ++i) {
    std::string label = std::to_string(i);
    os << label << std::string(corner.size() - std::min(corner.size(), label.size()), ' ');
    std::string row;
    for (int j = 0; j <= jmax; ++j) {
      const std::uint64_t d = t.at(i, j);
      if (i > j && d == 0)
        row += cell("");
      else
        row += cell(d == 0 ? "." : std::to_string(d));
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    os << row << "\n";
  }
  return os.str();
}

BigradedTable from_json(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("table is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.value("schema", "") != kSchema)
      throw InputError(std::string("table schema must be \"") + kSchema + "\"");
    BigradedTable t;
    if (doc.contains("source"))
      for (const auto& [k, v] : doc.at("source").items())
        t.source.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    if (doc.contains("jmax")) t.j_max = doc.at("jmax").get<int>();
    for (const auto& e : doc.at("entries")) {
      const int i = e.at("i").get<int>();
      const int j = e.at("j").get<int>();
      if (!e.at("dim").is_number_unsigned()) throw InputError("table dimensions must be non-negative integers");
      const auto dim = e.at("dim").get<std::uint64_t>();
      if (t.at(i, j) != 0) throw InputError("duplicate table entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      t.set(i, j, dim);
    }
    if (doc.contains("strip"))
      t.strip = StripParams{doc.at("strip").at("q").get<unsigned>(), doc.at("strip").at("r").get<unsigned>()};
    if (doc.contains("checksums"))
      for (const auto& [k, v] : doc.at("checksums").items()) t.euler_checksums[std::stoi(k)] = v.get<std::int64_t>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed table document: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed checksum key in table document");
  }
}

}  // namespace loghodge::io
