#pragma once

// Persistent bound cache: a versioned JSON file keyed by "(q,v,d)" or
// "(q,v,d,k)". Values are stored as decimal strings.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "subspace/derivation.hpp"

namespace subspace {

struct CacheEntry {
  BigInt value;
  bool exact = false;
  Method method = Method::trivial;
  std::string timestamp;  // ISO 8601, UTC
  std::optional<nlohmann::json> derivation;
};

class CacheFile {
public:
  static constexpr int kVersion = 1;

  static std::string key(std::int64_t q, int v, int d, std::optional<int> k = {});

  /// Missing file gives an empty cache; a wrong version or bad JSON throws.
  static CacheFile load(const std::string& path);
  void save(const std::string& path) const;

  nlohmann::json to_json() const;
  static CacheFile from_json(const nlohmann::json& j);

  std::optional<CacheEntry> find(const std::string& key) const;
  void put(const std::string& key, const BoundResult& r);

  /// Rebuilds the stored derivation, if any.
  std::optional<BoundResult> restore(const std::string& key) const;

  std::size_t size() const { return entries_.size(); }

  /// Identifies the fact configuration the entries were computed under.
  const std::string& profile() const { return profile_; }
  /// Switching to a different profile drops all entries.
  void set_profile(const std::string& p);

private:
  std::string profile_;
  std::map<std::string, CacheEntry> entries_;
};

/// $SUBSPACE_BOUNDS_CACHE, or empty.
std::string default_cache_path();

}  // namespace subspace
