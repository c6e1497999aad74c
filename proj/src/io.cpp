#include "etm/io.hpp"

#include <cstdlib>
#include <fstream>

#include "etm/zoo.hpp"
#include "json.hpp"

namespace etm {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  out << j.dump(1) << "\n";
}

Perm parse_generator(const json& spec, int degree) {
  if (spec.is_string()) return Perm::from_cycles(spec.get<std::string>(), degree);
  if (spec.is_array()) {
    std::vector<int> img = spec.get<std::vector<int>>();
    if (static_cast<int>(img.size()) != degree)
      throw error("generator image array has wrong length");
    return Perm(std::move(img));
  }
  throw error("generator must be an image array or a cycle string");
}

}  // namespace

PermGroup load_group_file(const std::string& path) {
  json j = read_json(path);
  if (!j.contains("degree") || !j.contains("generators"))
    throw error("group file " + path + ": missing degree/generators");
  int degree = j["degree"].get<int>();
  std::vector<Perm> gens;
  for (const auto& spec : j["generators"]) gens.push_back(parse_generator(spec, degree));
  PermGroup g(degree, std::move(gens), j.value("name", std::string{}));
  if (j.contains("asserted_order")) {
    uint64_t asserted = j["asserted_order"].get<uint64_t>();
    if (g.order() != asserted)
      throw error("group file " + path + ": stabilizer-chain order " +
                  std::to_string(g.order()) + " contradicts asserted order " +
                  std::to_string(asserted));
  }
  return g;
}

void save_group_file(const PermGroup& g, const std::string& path,
                     std::optional<uint64_t> asserted_order,
                     const std::string& provenance,
                     std::optional<uint64_t> aut_order) {
  json j;
  j["degree"] = g.degree();
  j["name"] = g.name();
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  j["generators"] = std::move(gens);
  if (asserted_order) j["asserted_order"] = *asserted_order;
  if (!provenance.empty()) j["provenance"] = provenance;
  if (aut_order) j["aut_order"] = *aut_order;
  write_json(j, path);
}

std::optional<uint64_t> group_file_aut_order(const std::string& path) {
  json j = read_json(path);
  if (j.contains("aut_order")) return j["aut_order"].get<uint64_t>();
  return std::nullopt;
}

FlagMap load_map_file(const std::string& path) {
  json j = read_json(path);
  for (const char* key : {"flags", "r0", "r1", "r2"})
    if (!j.contains(key)) throw error("map file " + path + ": missing " + key);
  int n = j["flags"].get<int>();
  auto get = [&](const char* key) {
    std::vector<int> img = j[key].get<std::vector<int>>();
    if (static_cast<int>(img.size()) != n)
      throw error("map file " + path + ": " + key + " has wrong length");
    return Perm(std::move(img));
  };
  return FlagMap(get("r0"), get("r1"), get("r2"), j.value("name", std::string{}));
}

void save_map_file(const FlagMap& m, const std::string& path) {
  json j;
  j["flags"] = m.flag_count();
  j["name"] = m.name();
  j["r0"] = m.r(0).images();
  j["r1"] = m.r(1).images();
  j["r2"] = m.r(2).images();
  write_json(j, path);
}

TupleFile load_tuple_file(const std::string& path) {
  json j = read_json(path);
  TupleFile t;
  t.class_label = j.at("class").get<std::string>();
  t.group_ref = j.at("group").get<std::string>();
  for (const auto& img : j.at("images"))
    t.images.push_back(img.get<std::vector<int>>());
  return t;
}

void save_tuple_file(const GeneratorTuple& t, const std::string& group_ref,
                     const std::string& path) {
  json j;
  j["class"] = class_label(t.cls);
  j["group"] = group_ref;
  json images = json::array();
  for (const auto& p : t.images) images.push_back(p.images());
  j["images"] = std::move(images);
  write_json(j, path);
}

std::string default_data_dir() {
  if (const char* env = std::getenv("ETM_DATA_DIR")) return env;
  return "data";
}

namespace {

PermGroup load_fixture_checked(const std::string& name, const std::string& dir) {
  std::string path = dir + "/groups/" + name + ".json";
  PermGroup g = load_group_file(path);
  // never trust fixture data beyond what was just recomputed
  if (name == "m11") {
    if (g.degree() != 11 || g.order() != 7920)
      throw error("fixture m11: wrong degree/order");
    if (!g.is_primitive()) throw error("fixture m11: not primitive");
    if (!g.is_perfect()) throw error("fixture m11: not perfect");
  } else if (name == "u3_3") {
    if (g.degree() != 28 || g.order() != 6048)
      throw error("fixture u3_3: wrong degree/order");
    if (!g.is_primitive()) throw error("fixture u3_3: not primitive");
    if (!g.is_perfect()) throw error("fixture u3_3: not perfect");
    uint64_t inv = g.count_elements_of_order(2);
    if (inv != 63)
      throw error("fixture u3_3: involution count " + std::to_string(inv));
  } else if (name == "u3_3_36") {
    if (g.degree() != 36 || g.order() != 6048)
      throw error("fixture u3_3_36: wrong degree/order");
    if (!g.is_primitive()) throw error("fixture u3_3_36: not primitive");
  } else if (name == "u3_3_aut") {
    if (g.degree() != 28 || g.order() != 12096)
      throw error("fixture u3_3_aut: wrong degree/order");
  }
  return g;
}

}  // namespace

PermGroup resolve_group(const std::string& name, const std::string& data_dir) {
  if (name.find('/') != std::string::npos ||
      (name.size() > 5 && name.substr(name.size() - 5) == ".json"))
    return load_group_file(name);
  if (name.size() == 2 && name[0] == 'A' && isdigit(name[1]))
    return alternating(name[1] - '0');
  if (name.size() == 3 && name[0] == 'A')
    return alternating(std::stoi(name.substr(1)));
  if (name.size() == 2 && name[0] == 'S' && isdigit(name[1]))
    return symmetric(name[1] - '0');
  if (name.rfind("psl2_", 0) == 0) return psl2(std::stoul(name.substr(5)));
  if (name.rfind("pgl2_", 0) == 0) return pgl2(std::stoul(name.substr(5)));
  if (name.rfind("pgammal2_", 0) == 0)
    return pgammal2(std::stoul(name.substr(9)));
  if (name == "L3_2") {
    PermGroup g = psl2(7);
    return PermGroup(g.degree(), g.generators(), "L3_2");
  }
  if (name == "M11") return load_fixture_checked("m11", data_dir);
  if (name == "U3_3") return load_fixture_checked("u3_3", data_dir);
  if (name == "U3_3_36") return load_fixture_checked("u3_3_36", data_dir);
  if (name == "U3_3_aut") return load_fixture_checked("u3_3_aut", data_dir);
  throw error("unknown group or fixture name: " + name);
}

uint64_t file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open file: " + path);
  uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace etm
