#include "subspace/cdc.hpp"

#include <stdexcept>

#include "subspace/divisible.hpp"
#include "subspace/spreads.hpp"

namespace subspace {

BigInt johnson_step(std::int64_t q, int v, int /*d*/, int k, const BigInt& inner) {
  if (k < 1) throw std::invalid_argument("johnson_step needs k >= 1");
  return floor_div(qint(v, q) * inner, qint(k, q));
}

BigInt johnson_divisible_step(std::int64_t q, int v, int d, int k,
                              const BigInt& inner) {
  if (k < 1) throw std::invalid_argument("johnson_divisible_step needs k >= 1");
  auto b = divisible_quotient(qint(v, q) * inner, k, q);
  // No admissible b at all only happens for tiny a; fall back to the floor.
  return b ? *b : johnson_step(q, v, d, k, inner);
}

BigInt anticode_bound(std::int64_t q, int v, int d, int k) {
  if (d % 2 != 0 || d < 2 || d > 2 * k)
    throw std::invalid_argument("anticode_bound needs even 2 <= d <= 2k");
  const int t = k - d / 2 + 1;
  return gauss(v, t, q) / gauss(k, t, q);
}

CdcEngine::CdcEngine(FactStore facts) : facts_(std::move(facts)) {}

std::size_t CdcEngine::memo_size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

void CdcEngine::clear_memo() {
  std::lock_guard lock(mu_);
  memo_.clear();
}

BoundPtr CdcEngine::upper(std::int64_t q, int v, int d, int k) {
  require_prime_power(q);
  if (v < 1) throw std::invalid_argument("ambient dimension must be >= 1");
  if (d % 2 != 0) ++d;
  if (d < 2) d = 2;
  const Key key{q, v, d, k};
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto res = std::make_shared<const BoundResult>(compute(q, v, d, k));
  std::lock_guard lock(mu_);
  return memo_.emplace(key, std::move(res)).first->second;
}

BoundResult CdcEngine::compute(std::int64_t q, int v, int d, int k) {
  const std::string query = cdc_label(q, v, d, k);
  if (k < 0 || k > v)
    return BoundResult::leaf(query, 0, true, Method::trivial, "no k-subspaces");

  std::optional<FactRecord> fact = facts_.cdc_fact(q, v, d, k);
  auto fact_node = [&] {
    return BoundResult::leaf(query, fact->value_at(q), fact->kind == FactKind::exact,
                             Method::override_fact, fact->source);
  };
  if (fact && fact->kind == FactKind::exact) return fact_node();

  auto finish = [&](BoundResult r) {
    if (fact && fact->value_at(q) < r.value) return fact_node();
    return r;
  };

  if (k == 0 || k == v)
    return finish(BoundResult::leaf(query, 1, true, Method::trivial, "single subspace"));
  if (2 * k > v) {
    BoundPtr dual = upper(q, v, d, v - k);
    BoundResult r = BoundResult::leaf(query, dual->value, dual->exact, Method::duality,
                                      "orthogonal complements");
    r.combine = Combine::same;
    r.add(dual);
    return finish(r);
  }
  if (d > 2 * k)
    return finish(BoundResult::leaf(query, 1, true, Method::trivial,
                                    "distinct k-subspaces have distance <= 2k"));
  if (d == 2)
    return finish(BoundResult::leaf(query, gauss(v, k, q), true, Method::trivial,
                                    "all k-subspaces"));
  if (d == 2 * k) {
    BoundResult r = ps_best(q, v, k);
    r.query = query;
    return finish(r);
  }

  BoundPtr inner = upper(q, v - 1, d, k - 1);
  BoundResult john;
  try {
    john = BoundResult::leaf(query, johnson_divisible_step(q, v, d, k, inner->value),
                             false, Method::johnson_divisible, "");
  } catch (const ArithmeticError&) {
    john = BoundResult::leaf(query, johnson_step(q, v, d, k, inner->value), false,
                             Method::johnson, "divisible length table too large");
  }
  john.add(inner);
  BigInt anti = anticode_bound(q, v, d, k);
  if (anti < john.value)
    return finish(BoundResult::leaf(query, anti, false, Method::anticode, ""));
  return finish(john);
}

}  // namespace subspace
