#pragma once

// Curated known values: exact values, upper bounds and forbidden dimension
// distributions, each with a citation. Two tiers: "paper" facts are always
// used, "external" ones (best-known table entries) can be switched off.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "subspace/qarith.hpp"

namespace subspace {

enum class FactKind { upper, exact, lower, forbidden_distribution };
enum class FactTier { paper, external };

/// Polynomial in q with integer coefficients, low degree first.
using QPoly = std::vector<BigInt>;

struct FactRecord {
  std::optional<std::int64_t> q;  // empty: holds for every q
  int v = 0;
  int d = 0;
  std::optional<int> k;  // constant dimension facts only
  FactKind kind = FactKind::upper;
  FactTier tier = FactTier::paper;
  QPoly value;                    // upper / exact / lower
  std::vector<QPoly> distribution;  // forbidden_distribution, dims 0..
  std::string source;

  bool applies_to(std::int64_t field) const { return !q || *q == field; }
  BigInt value_at(std::int64_t field) const;
  std::vector<BigInt> distribution_at(std::int64_t field) const;
};

FactRecord fact_from_json(const nlohmann::json& j, FactTier default_tier);
nlohmann::json fact_to_json(const FactRecord& f);

struct ForbiddenDistribution {
  int d;
  std::vector<BigInt> distribution;
  std::string source;
};

class FactStore {
public:
  FactStore() = default;

  /// The shipped paper and external fact files (compiled in).
  static FactStore builtin(bool use_external = true);

  void add(FactRecord f) { records_.push_back(std::move(f)); }
  void load_json(const nlohmann::json& doc);
  void load_file(const std::string& path);

  void set_use_external(bool on) { use_external_ = on; }
  bool use_external() const { return use_external_; }

  const std::vector<FactRecord>& records() const { return records_; }

  /// Tightest active upper/exact record for A_q(v,d;k); d compared as given.
  std::optional<FactRecord> cdc_fact(std::int64_t q, int v, int d, int k) const;
  /// Tightest active upper/exact record for A_q(v,d).
  std::optional<FactRecord> mdc_fact(std::int64_t q, int v, int d) const;
  /// Largest known code size for A_q(v,d), informational only.
  std::optional<BigInt> mdc_lower(std::int64_t q, int v, int d) const;
  /// Forbidden distributions in F_q^v valid for minimum distance d, i.e.
  /// recorded for some distance <= d.
  std::vector<ForbiddenDistribution> forbidden(std::int64_t q, int v, int d) const;

private:
  bool active(const FactRecord& f) const {
    return use_external_ || f.tier != FactTier::external;
  }

  std::vector<FactRecord> records_;
  bool use_external_ = true;
};

}  // namespace subspace
