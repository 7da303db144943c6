#include "gkpack/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gk {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON");
  return j;
}

long long get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw parse_error(std::string("missing or non-integer field \"") + key + "\"");
  return j.at(key).get<long long>();
}

bool get_bool(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean())
    throw parse_error(std::string("field \"") + key + "\" must be a boolean");
  return j.at(key).get<bool>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path);
  out << text;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j = parse_json(text);
  Instance inst;
  inst.N = get_int(j, "n");
  if (inst.N < 1) throw parse_error("\"n\" must be >= 1");
  inst.rotations = get_bool(j, "rotations", false);
  if (!j.contains("items") || !j.at("items").is_array())
    throw parse_error("missing \"items\" array");
  std::set<int> ids;
  for (const auto& je : j.at("items")) {
    Item it;
    it.id = static_cast<int>(get_int(je, "id"));
    it.w = get_int(je, "w");
    it.h = get_int(je, "h");
    it.p = get_int(je, "p");
    if (it.w < 1 || it.h < 1) throw parse_error("item " + std::to_string(it.id) + ": sides must be >= 1");
    if (it.p < 0) throw parse_error("item " + std::to_string(it.id) + ": profit must be >= 0");
    bool fits = it.w <= inst.N && it.h <= inst.N;
    if (inst.rotations) fits = fits || (it.h <= inst.N && it.w <= inst.N);
    if (!fits) throw parse_error("item " + std::to_string(it.id) + " does not fit the knapsack");
    if (!ids.insert(it.id).second)
      throw parse_error("duplicate item id " + std::to_string(it.id));
    inst.items.push_back(it);
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json items = json::array();
  for (const auto& it : inst.items)
    items.push_back({{"id", it.id}, {"w", it.w}, {"h", it.h}, {"p", it.p}});
  json j = {{"n", inst.N}, {"rotations", inst.rotations}, {"items", items}};
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }
void save_instance(const std::string& path, const Instance& inst) {
  write_file(path, serialize_instance(inst));
}

Packing parse_packing(const std::string& text) {
  json j = parse_json(text);
  Packing p;
  if (!j.contains("region")) throw parse_error("missing \"region\"");
  const json& r = j.at("region");
  p.region = {get_int(r, "x"), get_int(r, "y"), get_int(r, "w"), get_int(r, "h")};
  if (!j.contains("placements") || !j.at("placements").is_array())
    throw parse_error("missing \"placements\" array");
  std::set<int> ids;
  for (const auto& je : j.at("placements")) {
    Placement pl;
    pl.item_id = static_cast<int>(get_int(je, "id"));
    pl.x = get_int(je, "x");
    pl.y = get_int(je, "y");
    pl.rotated = get_bool(je, "rot", false);
    if (!ids.insert(pl.item_id).second)
      throw parse_error("duplicate placement for item " + std::to_string(pl.item_id));
    p.placements.push_back(pl);
  }
  return p;
}

std::string serialize_packing(const Packing& packing) {
  Packing canon = packing;
  canon.canonicalize();
  json pls = json::array();
  for (const auto& pl : canon.placements)
    pls.push_back({{"id", pl.item_id}, {"x", pl.x}, {"y", pl.y}, {"rot", pl.rotated}});
  json j = {{"region",
             {{"x", canon.region.x}, {"y", canon.region.y}, {"w", canon.region.w}, {"h", canon.region.h}}},
            {"placements", pls}};
  return j.dump(2) + "\n";
}

Packing load_packing(const std::string& path) { return parse_packing(read_file(path)); }
void save_packing(const std::string& path, const Packing& packing) {
  write_file(path, serialize_packing(packing));
}

}  // namespace gk
