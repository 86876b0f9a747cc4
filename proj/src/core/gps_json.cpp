#include "gpw/gps_json.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gpw {

using nlohmann::json;

namespace {

std::size_t element_id(const json& v, std::size_t n, const char* where) {
  if (!v.is_number_integer()) throw InputError(std::string(where) + ": element ids must be integers");
  const auto id = v.get<std::int64_t>();
  if (id < 0 || static_cast<std::size_t>(id) >= n)
    throw InputError(std::string(where) + ": element " + std::to_string(id) + " out of range");
  return static_cast<std::size_t>(id);
}

}  // namespace

RawStructure parse_gps(const json& doc) {
  if (!doc.is_object()) throw InputError("GPS-JSON document must be an object");
  for (const char* key : {"n", "gamma", "ops", "leq"})
    if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");

  RawStructure raw;
  const auto& jn = doc.at("n");
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 1) throw InputError("'n' must be an integer >= 1");
  if (jn.get<std::int64_t>() > static_cast<std::int64_t>(kMaxCarrier))
    throw InputError("'n' exceeds " + std::to_string(kMaxCarrier));
  raw.n = jn.get<std::size_t>();
  const std::size_t n = raw.n;

  const auto& jg = doc.at("gamma");
  if (!jg.is_array()) throw InputError("'gamma' must be an array of labels");
  for (const auto& g : jg) {
    if (!g.is_string()) throw InputError("'gamma' entries must be strings");
    raw.gamma_names.push_back(g.get<std::string>());
  }

  const auto& jops = doc.at("ops");
  if (!jops.is_object()) throw InputError("'ops' must be an object keyed by label");
  if (jops.size() != raw.gamma_names.size()) throw InputError("'ops' keys must match 'gamma' exactly");
  for (const auto& label : raw.gamma_names) {
    if (!jops.contains(label)) throw InputError("'ops' has no table for '" + label + "'");
    const auto& jt = jops.at(label);
    if (!jt.is_array() || jt.size() != n) throw InputError("table '" + label + "' must have n rows");
    std::vector<std::vector<int>> table;
    for (const auto& row : jt) {
      if (!row.is_array() || row.size() != n) throw InputError("table '" + label + "' is not square");
      std::vector<int> r;
      for (const auto& v : row) r.push_back(static_cast<int>(element_id(v, n, "ops")));
      table.push_back(std::move(r));
    }
    raw.tables.push_back(std::move(table));
  }

  raw.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) raw.leq[a][a] = true;
  const auto& jl = doc.at("leq");
  if (!jl.is_array()) throw InputError("'leq' must be an array of pairs");
  for (const auto& pair : jl) {
    if (!pair.is_array() || pair.size() != 2) throw InputError("'leq' entries must be [a, b] pairs");
    raw.leq[element_id(pair[0], n, "leq")][element_id(pair[1], n, "leq")] = true;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      if (raw.leq[a][m])
        for (std::size_t b = 0; b < n; ++b)
          if (raw.leq[m][b]) raw.leq[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (raw.leq[a][b] && raw.leq[b][a])
        throw InputError("'leq' is not antisymmetric: " + std::to_string(a) + " and " + std::to_string(b) +
                         " are mutually below each other");
  return raw;
}

Structure load_gps(const json& doc) { return Structure::from_raw(parse_gps(doc)); }

Structure load_gps_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return load_gps(doc);
}

Structure load_gps_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_gps_text(buf.str());
}

json to_gps_json(const Structure& s) {
  const std::size_t n = s.size();
  json ops = json::object();
  for (std::size_t g = 0; g < s.gamma_count(); ++g) {
    json rows = json::array();
    for (Element a = 0; a < n; ++a) {
      json row = json::array();
      for (Element b = 0; b < n; ++b) row.push_back(s.mul(a, g, b));
      rows.push_back(std::move(row));
    }
    ops[s.gamma_names()[g]] = std::move(rows);
  }
  json leq = json::array();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b && s.leq(a, b)) leq.push_back({a, b});
  return json{{"n", n}, {"gamma", s.gamma_names()}, {"ops", std::move(ops)}, {"leq", std::move(leq)}};
}

std::string canonical_dump(const json& doc) { return doc.dump(); }

std::uint64_t fnv1a64_update(std::uint64_t state, const std::string& bytes) {
  for (unsigned char c : bytes) {
    state ^= c;
    state *= 0x100000001b3ULL;
  }
  return state;
}

std::string hex64(std::uint64_t v) {
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(v));
  return out;
}

std::string fnv1a64_hex(const std::string& bytes) { return hex64(fnv1a64_update(kFnvOffset, bytes)); }

std::string structure_digest(const Structure& s) {
  return "fnv1a64:" + fnv1a64_hex(canonical_dump(to_gps_json(s)));
}

}  // namespace gpw
