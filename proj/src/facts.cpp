#include "subspace/facts.hpp"

#include <fstream>
#include <stdexcept>

#include "facts_embedded.hpp"

namespace subspace {

namespace {

QPoly poly_from_json(const nlohmann::json& j) {
  QPoly p;
  if (j.is_array()) {
    for (const auto& c : j)
      p.push_back(c.is_string() ? parse_bigint(c.get<std::string>())
                                : BigInt(c.get<long>()));
  } else if (j.is_string()) {
    p.push_back(parse_bigint(j.get<std::string>()));
  } else {
    p.push_back(BigInt(j.get<long>()));
  }
  return p;
}

nlohmann::json poly_to_json(const QPoly& p) {
  if (p.size() == 1) return p[0].fits_slong_p() ? nlohmann::json(p[0].get_si())
                                                : nlohmann::json(to_string(p[0]));
  auto arr = nlohmann::json::array();
  for (const auto& c : p)
    arr.push_back(c.fits_slong_p() ? nlohmann::json(c.get_si())
                                   : nlohmann::json(to_string(c)));
  return arr;
}

FactKind kind_from_string(const std::string& s) {
  if (s == "upper") return FactKind::upper;
  if (s == "exact") return FactKind::exact;
  if (s == "lower") return FactKind::lower;
  if (s == "forbidden_distribution") return FactKind::forbidden_distribution;
  throw std::invalid_argument("unknown fact kind: " + s);
}

const char* kind_name(FactKind k) {
  switch (k) {
    case FactKind::upper: return "upper";
    case FactKind::exact: return "exact";
    case FactKind::lower: return "lower";
    case FactKind::forbidden_distribution: return "forbidden_distribution";
  }
  return "?";
}

FactTier tier_from_string(const std::string& s) {
  if (s == "paper") return FactTier::paper;
  if (s == "external") return FactTier::external;
  throw std::invalid_argument("unknown fact tier: " + s);
}

bool bounds_above(FactKind k) { return k == FactKind::upper || k == FactKind::exact; }

bool tighter(const std::optional<FactRecord>& have, const FactRecord& cand,
             std::int64_t q) {
  if (!have) return true;
  BigInt a = cand.value_at(q), b = have->value_at(q);
  if (a != b) return a < b;
  return cand.kind == FactKind::exact && have->kind != FactKind::exact;
}

}  // namespace

BigInt FactRecord::value_at(std::int64_t field) const {
  return eval_poly(value, field);
}

std::vector<BigInt> FactRecord::distribution_at(std::int64_t field) const {
  std::vector<BigInt> out;
  for (const auto& p : distribution) out.push_back(eval_poly(p, field));
  return out;
}

FactRecord fact_from_json(const nlohmann::json& j, FactTier default_tier) {
  FactRecord f;
  const auto& q = j.at("q");
  if (q.is_string()) {
    if (q.get<std::string>() != "any")
      throw std::invalid_argument("fact q must be an integer or \"any\"");
  } else {
    f.q = q.get<std::int64_t>();
    require_prime_power(*f.q);
  }
  f.v = j.at("v").get<int>();
  f.d = j.at("d").get<int>();
  if (j.contains("k")) f.k = j.at("k").get<int>();
  f.kind = kind_from_string(j.at("kind").get<std::string>());
  f.tier = j.contains("tier") ? tier_from_string(j.at("tier").get<std::string>())
                              : default_tier;
  f.source = j.at("source").get<std::string>();
  if (f.source.empty()) throw std::invalid_argument("fact without a source");
  if (f.kind == FactKind::forbidden_distribution) {
    for (const auto& x : j.at("distribution")) f.distribution.push_back(poly_from_json(x));
  } else if (j.contains("value_poly")) {
    f.value = poly_from_json(j.at("value_poly"));
  } else {
    f.value = poly_from_json(j.at("value"));
  }
  return f;
}

nlohmann::json fact_to_json(const FactRecord& f) {
  nlohmann::json j;
  if (f.q) j["q"] = *f.q;
  else j["q"] = "any";
  j["v"] = f.v;
  j["d"] = f.d;
  if (f.k) j["k"] = *f.k;
  j["kind"] = kind_name(f.kind);
  j["tier"] = f.tier == FactTier::paper ? "paper" : "external";
  if (f.kind == FactKind::forbidden_distribution) {
    auto arr = nlohmann::json::array();
    for (const auto& p : f.distribution) arr.push_back(poly_to_json(p));
    j["distribution"] = arr;
  } else if (f.value.size() == 1) {
    j["value"] = poly_to_json(f.value);
  } else {
    j["value_poly"] = poly_to_json(f.value);
  }
  j["source"] = f.source;
  return j;
}

void FactStore::load_json(const nlohmann::json& doc) {
  FactTier tier = tier_from_string(doc.value("tier", std::string("paper")));
  for (const auto& f : doc.at("facts")) add(fact_from_json(f, tier));
}

void FactStore::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fact file " + path);
  load_json(nlohmann::json::parse(in));
}

FactStore FactStore::builtin(bool use_external) {
  FactStore s;
  s.load_json(nlohmann::json::parse(embedded::kPaperFacts));
  s.load_json(nlohmann::json::parse(embedded::kExternalFacts));
  s.set_use_external(use_external);
  return s;
}

std::optional<FactRecord> FactStore::cdc_fact(std::int64_t q, int v, int d,
                                              int k) const {
  std::optional<FactRecord> best;
  for (const auto& f : records_) {
    if (!active(f) || !f.applies_to(q) || !bounds_above(f.kind))
      continue;
    if (!f.k || f.v != v || f.d != d) continue;
    if (*f.k != k && *f.k != v - k) continue;
    if (tighter(best, f, q)) best = f;
  }
  return best;
}

std::optional<FactRecord> FactStore::mdc_fact(std::int64_t q, int v, int d) const {
  std::optional<FactRecord> best;
  for (const auto& f : records_) {
    if (!active(f) || !f.applies_to(q) || !bounds_above(f.kind))
      continue;
    if (f.k || f.v != v || f.d != d) continue;
    if (tighter(best, f, q)) best = f;
  }
  return best;
}

std::optional<BigInt> FactStore::mdc_lower(std::int64_t q, int v, int d) const {
  std::optional<BigInt> best;
  for (const auto& f : records_) {
    if (!active(f) || !f.applies_to(q) || f.k || f.v != v || f.d != d) continue;
    if (f.kind != FactKind::lower && f.kind != FactKind::exact) continue;
    BigInt x = f.value_at(q);
    if (!best || x > *best) best = x;
  }
  return best;
}

std::vector<ForbiddenDistribution> FactStore::forbidden(std::int64_t q, int v,
                                                        int d) const {
  std::vector<ForbiddenDistribution> out;
  for (const auto& f : records_) {
    if (!active(f) || !f.applies_to(q) || f.kind != FactKind::forbidden_distribution)
      continue;
    if (f.v != v || f.d > d) continue;
    out.push_back({f.d, f.distribution_at(q), f.source});
  }
  return out;
}

}  // namespace subspace
