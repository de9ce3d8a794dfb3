#pragma once

// JSON serialization of the exact coefficient data and a content-addressed
// file cache for expensive tables.

#include <optional>
#include <string>

#include "json.hpp"
#include "qhall/hall.hpp"
#include "qhall/ihall.hpp"

namespace qhall {

nlohmann::json rational_json(const Rational& r);
Rational rational_of_json(const nlohmann::json& j);

nlohmann::json laurent_json(const Laurent& x);
Laurent laurent_of_json(const nlohmann::json& j);

nlohmann::json ksclass_json(const KSClass& c);
KSClass ksclass_of_json(const nlohmann::json& j);

nlohmann::json ihall_json(const IHallElt& x);
IHallElt ihall_of_json(const nlohmann::json& j);

// Keys are arbitrary JSON values; entries are stored one file per key under
// the cache directory with a fixed schema tag.  A file carrying a different
// schema tag is an error, never silently reused.
class Cache {
 public:
  static constexpr const char* kSchema = "qhall-cache-v1";

  Cache();  // directory from QHALL_CACHE_DIR; unset disables the cache
  explicit Cache(std::string dir);

  bool enabled() const { return !dir_.empty(); }
  std::optional<nlohmann::json> get(const nlohmann::json& key) const;
  void put(const nlohmann::json& key, const nlohmann::json& value) const;

 private:
  std::string dir_;
  std::string path_of(const nlohmann::json& key) const;
};

}  // namespace qhall
