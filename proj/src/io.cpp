#include "qhall/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qhall {

using nlohmann::json;

json rational_json(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational rational_of_json(const json& j) {
  return Rational(j.get<std::string>());
}

json laurent_json(const Laurent& x) {
  json terms = json::array();
  for (auto& [e, c] : x.coeffs()) terms.push_back({e, rational_json(c)});
  return terms;
}

Laurent laurent_of_json(const json& j) {
  Laurent x;
  for (auto& t : j) x += Laurent::term(rational_of_json(t.at(1)), t.at(0).get<int>());
  return x;
}

json ksclass_json(const KSClass& c) {
  json out = json::array();
  for (auto& [r, m] : c) out.push_back({r, m});
  return out;
}

KSClass ksclass_of_json(const json& j) {
  KSClass c;
  for (auto& t : j) c[t.at(0).get<int>()] = t.at(1).get<int>();
  return c;
}

json ihall_json(const IHallElt& x) {
  json out = json::array();
  for (auto& [k, cf] : x.c)
    out.push_back({json(k.first), ksclass_json(k.second), laurent_json(cf)});
  return out;
}

IHallElt ihall_of_json(const json& j) {
  IHallElt x;
  for (auto& t : j) {
    IBasisKey k{t.at(0).get<IntVec>(), ksclass_of_json(t.at(1))};
    x.c[k] = laurent_of_json(t.at(2));
  }
  x.trim();
  return x;
}

Cache::Cache() {
  const char* d = std::getenv("QHALL_CACHE_DIR");
  if (d && *d) dir_ = d;
}

Cache::Cache(std::string dir) : dir_(std::move(dir)) {}

std::string Cache::path_of(const json& key) const {
  // FNV-1a over the canonical dump; stable across runs and platforms
  std::string s = key.dump();
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return dir_ + "/" + os.str() + ".json";
}

std::optional<json> Cache::get(const json& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_of(key));
  if (!in) return std::nullopt;
  json doc = json::parse(in);
  if (doc.at("schema") != kSchema) throw std::runtime_error("stale cache schema");
  if (doc.at("key") != key) return std::nullopt;  // hash collision
  return doc.at("value");
}

void Cache::put(const json& key, const json& value) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  json doc{{"schema", kSchema}, {"key", key}, {"value", value}};
  std::ofstream out(path_of(key));
  out << doc.dump(1) << "\n";
}

}  // namespace qhall
