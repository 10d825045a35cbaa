#include "subspace/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace subspace {

namespace {

std::string utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string CacheFile::key(std::int64_t q, int v, int d, std::optional<int> k) {
  std::string s = "(" + std::to_string(q) + "," + std::to_string(v) + "," + std::to_string(d);
  if (k) s += "," + std::to_string(*k);
  return s + ")";
}

CacheFile CacheFile::load(const std::string& path) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache " + path);
  return from_json(nlohmann::json::parse(in));
}

void CacheFile::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache " + path);
    out << to_json().dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::json CacheFile::to_json() const {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [k, e] : entries_) {
    nlohmann::json j;
    j["value"] = to_string(e.value);
    j["exact"] = e.exact;
    j["method"] = to_string(e.method);
    j["timestamp"] = e.timestamp;
    if (e.derivation) j["derivation"] = *e.derivation;
    entries[k] = std::move(j);
  }
  return {{"version", kVersion}, {"profile", profile_}, {"entries", std::move(entries)}};
}

CacheFile CacheFile::from_json(const nlohmann::json& j) {
  const int version = j.at("version").get<int>();
  if (version != kVersion)
    throw std::runtime_error("unsupported cache version " + std::to_string(version));
  CacheFile c;
  c.profile_ = j.value("profile", std::string());
  for (const auto& [k, e] : j.at("entries").items()) {
    CacheEntry ce;
    ce.value = parse_bigint(e.at("value").get<std::string>());
    ce.exact = e.at("exact").get<bool>();
    ce.method = method_from_string(e.at("method").get<std::string>());
    ce.timestamp = e.value("timestamp", std::string());
    if (e.contains("derivation")) ce.derivation = e.at("derivation");
    c.entries_[k] = std::move(ce);
  }
  return c;
}

std::optional<CacheEntry> CacheFile::find(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CacheFile::put(const std::string& key, const BoundResult& r) {
  entries_[key] = CacheEntry{r.value, r.exact, r.method, utc_now(), subspace::to_json(r)};
}

std::optional<BoundResult> CacheFile::restore(const std::string& key) const {
  auto e = find(key);
  if (!e || !e->derivation) return std::nullopt;
  return bound_from_json(*e->derivation);
}

void CacheFile::set_profile(const std::string& p) {
  if (p == profile_) return;
  entries_.clear();
  profile_ = p;
}

std::string default_cache_path() {
  const char* p = std::getenv("SUBSPACE_BOUNDS_CACHE");
  return p ? p : "";
}

}  // namespace subspace
