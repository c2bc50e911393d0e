#include "rrs/json_io.hpp"

#include <fstream>
#include <vector>

namespace rrs {

using nlohmann::json;

namespace {

json table_json(const OpTable& t) {
  json a = json::array();
  for (Element e : t.entries()) a.push_back(static_cast<int>(e));
  return a;
}

json relation_bits(const BinRel& r) {
  json a = json::array();
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      a.push_back(r.holds(static_cast<Element>(x), static_cast<Element>(y)) ? 1 : 0);
    }
  }
  return a;
}

std::vector<int> int_array(const json& j, const char* field) {
  if (!j.contains(field)) throw Error(std::string("missing field \"") + field + "\"");
  const json& a = j.at(field);
  if (!a.is_array()) throw Error(std::string("field \"") + field + "\" must be an array");
  std::vector<int> out;
  out.reserve(a.size());
  for (const json& v : a) {
    if (!v.is_number_integer()) {
      throw Error(std::string("field \"") + field + "\" must hold integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

std::size_t read_size(const json& j) {
  if (!j.is_object()) throw Error("expected a JSON object");
  if (!j.contains("size") || !j.at("size").is_number_integer()) {
    throw Error("missing integer field \"size\"");
  }
  const auto size = j.at("size").get<long long>();
  if (size < 1 || static_cast<std::size_t>(size) > kMaxUniverse) {
    throw Error("size " + std::to_string(size) + " out of range");
  }
  return static_cast<std::size_t>(size);
}

Element read_element(const json& j, const char* field, std::size_t size) {
  const json& v = j.at(field);
  if (!v.is_number_integer()) throw Error(std::string("field \"") + field + "\" must be an integer");
  const auto e = v.get<long long>();
  if (e < 0 || static_cast<std::size_t>(e) >= size) {
    throw Error(std::string("field \"") + field + "\" = " + std::to_string(e) +
                " outside the carrier");
  }
  return static_cast<Element>(e);
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": malformed JSON: " + e.what());
  }
}

}  // namespace

json to_json(const Model& m) {
  json j;
  j["size"] = m.size;
  j["unit"] = static_cast<int>(m.unit);
  j["zero"] = m.zero ? json(static_cast<int>(*m.zero)) : json(nullptr);
  j["mul"] = table_json(m.mul);
  j["arrow"] = table_json(m.arrow);
  j["rel"] = relation_bits(m.rel);
  j["join"] = m.join ? table_json(*m.join) : json(nullptr);
  return j;
}

json to_json(const BinRel& r) {
  json j;
  j["size"] = r.size();
  j["rel"] = relation_bits(r);
  return j;
}

json to_json(const SubsetMask& s) {
  json a = json::array();
  for (Element e : s.elements()) a.push_back(static_cast<int>(e));
  return a;
}

json to_json(const PropertyReport& report) {
  json j = json::object();
  for (const auto& item : report.items()) {
    json entry;
    entry["status"] = std::string(to_string(item.status));
    if (item.status == Status::fails) {
      json w = json::array();
      for (Element e : item.witness) w.push_back(static_cast<int>(e));
      entry["witness"] = w;
    }
    if (!item.note.empty()) entry["note"] = item.note;
    j[item.id] = entry;
  }
  return j;
}

Model model_from_json(const json& j) {
  const std::size_t n = read_size(j);
  Model m;
  m.size = n;
  if (!j.contains("unit")) throw Error("missing field \"unit\"");
  m.unit = read_element(j, "unit", n);
  if (j.contains("zero") && !j.at("zero").is_null()) m.zero = read_element(j, "zero", n);
  m.mul = OpTable::from_entries(n, int_array(j, "mul"));
  m.arrow = OpTable::from_entries(n, int_array(j, "arrow"));
  m.rel = BinRel::from_matrix(n, int_array(j, "rel"));
  if (j.contains("join") && !j.at("join").is_null()) {
    m.join = OpTable::from_entries(n, int_array(j, "join"));
  }
  return m;
}

BinRel relation_from_json(const json& j) {
  const std::size_t n = read_size(j);
  return BinRel::from_matrix(n, int_array(j, "rel"));
}

SubsetMask subset_from_json(std::size_t size, const json& j) {
  if (!j.is_array()) throw Error("subset must be an array of element indices");
  SubsetMask s(size);
  for (const json& v : j) {
    if (!v.is_number_integer()) throw Error("subset entries must be integers");
    const auto e = v.get<long long>();
    if (e < 0 || static_cast<std::size_t>(e) >= size) throw Error("subset element out of range");
    s.insert(static_cast<Element>(e));
  }
  return s;
}

Model load_model(const std::filesystem::path& path) { return model_from_json(parse_file(path)); }

BinRel load_relation(const std::filesystem::path& path) {
  return relation_from_json(parse_file(path));
}

}  // namespace rrs
