#pragma once

// Bound values with provenance: every bound carries the method that produced
// it and the sub-bounds it was derived from.

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "subspace/qarith.hpp"

namespace subspace {

enum class Method {
  spread,
  thm1,
  thm2,
  johnson,
  johnson_divisible,
  anticode,
  trivial,
  override_fact,
  duality,
  exact_formula,
  decomposition,
  ev_ilp,
  johnson_mdc,
  score,
  analytic,
  monotone,
  case_split,
};

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// How a node's value follows from its children. Leaves and formula nodes are
/// evaluated by the producing module; the others are re-checkable from the
/// tree alone.
enum class Combine { formula, min, max, sum, same };

struct BoundResult;
using BoundPtr = std::shared_ptr<const BoundResult>;

struct BoundResult {
  std::string query;  // "A_2(9,6;4)" or "A_2(10,5)"
  Method method = Method::trivial;
  Combine combine = Combine::formula;
  BigInt value;
  BigInt offset;  // added after combining (decomposition adds 2)
  bool exact = false;
  std::string note;
  std::vector<BoundPtr> children;

  static BoundResult leaf(std::string query, BigInt value, bool exact,
                          Method method, std::string note);

  BoundResult& add(BoundResult child);
  BoundResult& add(BoundPtr child);

  /// Indented tree, one node per line.
  std::string render(int indent = 0) const;
  /// One-line summary like "A_2(10,5) ≤ 48104 [johnson_mdc]".
  std::string headline() const;
};

/// Recomputes min/max/sum/same nodes from their children, recursively.
/// Returns false on the first node whose stored value disagrees.
bool recheck(const BoundResult& r, std::string* where = nullptr);

nlohmann::json to_json(const BoundResult& r);
BoundResult bound_from_json(const nlohmann::json& j);

std::string cdc_label(std::int64_t q, int v, int d, int k);
std::string mdc_label(std::int64_t q, int v, int d);

}  // namespace subspace
