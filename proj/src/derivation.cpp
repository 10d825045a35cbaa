#include "subspace/derivation.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace subspace {

namespace {

constexpr std::array<std::pair<Method, const char*>, 17> kMethodNames{{
    {Method::spread, "spread"},
    {Method::thm1, "thm1"},
    {Method::thm2, "thm2"},
    {Method::johnson, "johnson"},
    {Method::johnson_divisible, "johnson_divisible"},
    {Method::anticode, "anticode"},
    {Method::trivial, "trivial"},
    {Method::override_fact, "override"},
    {Method::duality, "duality"},
    {Method::exact_formula, "exact"},
    {Method::decomposition, "decomposition"},
    {Method::ev_ilp, "ev_ilp"},
    {Method::johnson_mdc, "johnson_mdc"},
    {Method::score, "score"},
    {Method::analytic, "analytic"},
    {Method::monotone, "monotone"},
    {Method::case_split, "case_split"},
}};

constexpr std::array<std::pair<Combine, const char*>, 5> kCombineNames{{
    {Combine::formula, "formula"},
    {Combine::min, "min"},
    {Combine::max, "max"},
    {Combine::sum, "sum"},
    {Combine::same, "same"},
}};

}  // namespace

std::string to_string(Method m) {
  for (auto [k, name] : kMethodNames)
    if (k == m) return name;
  return "?";
}

Method method_from_string(const std::string& s) {
  for (auto [k, name] : kMethodNames)
    if (s == name) return k;
  throw std::invalid_argument("unknown method: " + s);
}

BoundResult BoundResult::leaf(std::string query, BigInt value, bool exact,
                              Method method, std::string note) {
  BoundResult r;
  r.query = std::move(query);
  r.value = std::move(value);
  r.exact = exact;
  r.method = method;
  r.note = std::move(note);
  return r;
}

BoundResult& BoundResult::add(BoundResult child) {
  children.push_back(std::make_shared<const BoundResult>(std::move(child)));
  return *this;
}

BoundResult& BoundResult::add(BoundPtr child) {
  children.push_back(std::move(child));
  return *this;
}

std::string BoundResult::headline() const {
  std::ostringstream os;
  os << query << (exact ? " = " : " ≤ ") << to_string(value) << " ["
     << to_string(method) << "]";
  return os.str();
}

std::string BoundResult::render(int indent) const {
  std::ostringstream os;
  os << std::string(2 * indent, ' ') << headline();
  if (!note.empty()) os << "  " << note;
  os << '\n';
  for (const auto& c : children) os << c->render(indent + 1);
  return os.str();
}

bool recheck(const BoundResult& r, std::string* where) {
  for (const auto& c : r.children)
    if (!recheck(*c, where)) return false;
  if (r.combine == Combine::formula) return true;
  if (r.children.empty()) {
    if (where) *where = r.query + ": combining node without children";
    return false;
  }
  BigInt acc = r.children.front()->value;
  for (std::size_t i = 1; i < r.children.size(); ++i) {
    const BigInt& x = r.children[i]->value;
    switch (r.combine) {
      case Combine::min: if (x < acc) acc = x; break;
      case Combine::max: if (x > acc) acc = x; break;
      case Combine::sum: acc += x; break;
      case Combine::same: break;
      case Combine::formula: break;
    }
  }
  acc += r.offset;
  if (acc != r.value) {
    if (where) *where = r.query + ": stored " + to_string(r.value) +
                        ", recomputed " + to_string(acc);
    return false;
  }
  return true;
}

nlohmann::json to_json(const BoundResult& r) {
  nlohmann::json j;
  j["query"] = r.query;
  j["method"] = to_string(r.method);
  for (auto [k, name] : kCombineNames)
    if (k == r.combine) j["combine"] = name;
  j["value"] = to_string(r.value);
  if (sgn(r.offset) != 0) j["offset"] = to_string(r.offset);
  j["exact"] = r.exact;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.children.empty()) {
    auto& arr = j["children"] = nlohmann::json::array();
    for (const auto& c : r.children) arr.push_back(to_json(*c));
  }
  return j;
}

BoundResult bound_from_json(const nlohmann::json& j) {
  BoundResult r;
  r.query = j.at("query").get<std::string>();
  r.method = method_from_string(j.at("method").get<std::string>());
  const auto comb = j.value("combine", std::string("formula"));
  bool found = false;
  for (auto [k, name] : kCombineNames)
    if (comb == name) r.combine = k, found = true;
  if (!found) throw std::invalid_argument("unknown combine: " + comb);
  r.value = parse_bigint(j.at("value").get<std::string>());
  r.offset = parse_bigint(j.value("offset", std::string("0")));
  r.exact = j.value("exact", false);
  r.note = j.value("note", std::string());
  if (j.contains("children"))
    for (const auto& c : j.at("children")) r.add(bound_from_json(c));
  return r;
}

std::string cdc_label(std::int64_t q, int v, int d, int k) {
  std::ostringstream os;
  os << "A_" << q << "(" << v << "," << d << ";" << k << ")";
  return os.str();
}

std::string mdc_label(std::int64_t q, int v, int d) {
  std::ostringstream os;
  os << "A_" << q << "(" << v << "," << d << ")";
  return os.str();
}

}  // namespace subspace
