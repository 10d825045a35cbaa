#pragma once

// Upper bounds for constant dimension codes A_q(v,d;k).

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>

#include "subspace/derivation.hpp"
#include "subspace/facts.hpp"

namespace subspace {

/// floor([v]_q / [k]_q * inner), the classical Johnson step.
BigInt johnson_step(std::int64_t q, int v, int d, int k, const BigInt& inner);

/// {[v]_q * inner / [k]_q}_k, the step tightened by divisible code lengths.
/// Throws ArithmeticError when the length table would be too large.
BigInt johnson_divisible_step(std::int64_t q, int v, int d, int k,
                              const BigInt& inner);

/// floor(gauss(v, k-d/2+1) / gauss(k, k-d/2+1)) for even d <= 2k.
BigInt anticode_bound(std::int64_t q, int v, int d, int k);

class CdcEngine {
public:
  explicit CdcEngine(FactStore facts = FactStore::builtin());

  const FactStore& facts() const { return facts_; }

  /// Best upper bound on A_q(v,d;k); memoized and safe to call concurrently.
  BoundPtr upper(std::int64_t q, int v, int d, int k);
  BigInt value(std::int64_t q, int v, int d, int k) { return upper(q, v, d, k)->value; }

  std::size_t memo_size() const;
  void clear_memo();

private:
  using Key = std::tuple<std::int64_t, int, int, int>;

  BoundResult compute(std::int64_t q, int v, int d, int k);

  FactStore facts_;
  mutable std::mutex mu_;
  std::map<Key, BoundPtr> memo_;
};

}  // namespace subspace
