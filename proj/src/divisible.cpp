#include "subspace/divisible.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace subspace {

namespace {

// Residue-class table: for generators with smallest element g, min_rep[c]
// is the smallest representable n with n = c (mod g). A length n is
// representable iff n >= min_rep[n mod g]. Built once per (q, r).
struct LengthTable {
  std::uint64_t modulus;
  std::vector<std::uint64_t> min_rep;  // kUnreachable marks an empty class
};

constexpr std::uint64_t kUnreachable = ~std::uint64_t{0};
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 22;

LengthTable build_table(const std::vector<BigInt>& big_gens) {
  std::vector<std::uint64_t> gens;
  for (const auto& s : big_gens) {
    if (s > BigInt(std::uint64_t{1} << 40))
      throw ArithmeticError("divisible length table too large");
    gens.push_back(s.get_ui());
  }
  const std::uint64_t m = *std::min_element(gens.begin(), gens.end());
  if (m > kMaxModulus) throw ArithmeticError("divisible length table too large");
  std::vector<std::uint64_t> dist(m, kUnreachable);
  dist[0] = 0;
  // Dijkstra over residues mod the smallest generator.
  using Item = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, c] = queue.top();
    queue.pop();
    if (d != dist[c]) continue;
    for (auto s : gens) {
      std::uint64_t nd = d + s, nc = (c + s % m) % m;
      if (nd < dist[nc]) {
        dist[nc] = nd;
        queue.emplace(nd, nc);
      }
    }
  }
  return {m, std::move(dist)};
}

class TableCache {
public:
  std::shared_ptr<const LengthTable> get(const DivisibleParams& p) {
    auto key = std::make_pair(p.q, p.r);
    {
      std::shared_lock lock(mu_);
      if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const LengthTable>(
        build_table(divisible_generators(p)));
    std::unique_lock lock(mu_);
    return tables_.emplace(key, std::move(table)).first->second;
  }

private:
  std::shared_mutex mu_;
  std::map<std::pair<std::int64_t, int>, std::shared_ptr<const LengthTable>>
      tables_;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

}  // namespace

std::vector<BigInt> divisible_generators(const DivisibleParams& p) {
  require_prime_power(p.q);
  if (p.r < 0) throw ArithmeticError("divisibility exponent must be >= 0");
  std::vector<BigInt> gens;
  for (int i = 0; i <= p.r; ++i) gens.push_back(pow(p.q, i) * qint(p.r - i + 1, p.q));
  return gens;
}

bool realizable(const DivisibleParams& p, const BigInt& n) {
  if (sgn(n) < 0) return false;
  if (sgn(n) == 0) return true;
  auto table = cache().get(p);
  BigInt rem = n % BigInt(table->modulus);
  std::uint64_t least = table->min_rep[rem.get_ui()];
  return least != kUnreachable && n >= BigInt(least);
}

std::optional<BigInt> divisible_quotient(const BigInt& a, int k,
                                         std::int64_t q) {
  if (sgn(a) < 0) throw ArithmeticError("divisible_quotient: a must be >= 0");
  if (k < 1) throw ArithmeticError("divisible_quotient: k must be >= 1");
  const BigInt pts = qint(k, q);
  const DivisibleParams p{q, k - 1};
  for (BigInt b = floor_div(a, pts); sgn(b) >= 0; --b)
    if (realizable(p, a - b * pts)) return b;
  return std::nullopt;
}

}  // namespace subspace
