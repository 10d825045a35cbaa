#include "subspace/spreads.hpp"

#include <stdexcept>

namespace subspace {

SpreadParams SpreadParams::make(std::int64_t q, int v, int k) {
  require_prime_power(q);
  if (k < 1 || v < k) throw std::invalid_argument("spread parameters need v >= k >= 1");
  SpreadParams p{q, v, k, v % k, v / k, 0};
  if (p.r >= 1 && p.t >= 2)
    p.l = (pow(q, v - k) - pow(q, p.r)) / (pow(q, k) - 1);
  return p;
}

std::optional<BigInt> spread_size(std::int64_t q, int v, int k) {
  if (k < 1 || v % k != 0) return std::nullopt;
  return qint(v, q) / qint(k, q);
}

std::optional<BigInt> ps_bound_thm1(std::int64_t q, int v, int k) {
  auto p = SpreadParams::make(q, v, k);
  if (p.r < 1 || p.t < 2) return std::nullopt;
  const BigInt pts_r = qint(p.r, q);
  // k = [r]_q + 1 - z + u with u >= 0; the value grows with z, so take the
  // smallest admissible z.
  BigInt z = pts_r + 1 - k;
  if (sgn(z) < 0) z = 0;
  if (2 * z > pts_r) return std::nullopt;
  return p.l * pow(q, k) + 1 + z * (q - 1);
}

BigInt ceil_half_minus_sqrt(const BigInt& n, const BigInt& disc) {
  // Smallest integer c with 2c >= n - sqrt(disc), i.e. n - 2c <= sqrt(disc).
  BigInt c = floor_div(n - isqrt(disc), 2) - 1;
  auto ok = [&](const BigInt& cand) {
    BigInt lhs = n - 2 * cand;
    return sgn(lhs) <= 0 || lhs * lhs <= disc;
  };
  while (!ok(c)) ++c;
  while (ok(c - 1)) --c;
  return c;
}

std::optional<BigInt> ps_bound_thm2(std::int64_t q, int v, int k) {
  auto p = SpreadParams::make(q, v, k);
  if (p.r < 1 || p.t < 2) return std::nullopt;
  BigInt z = qint(p.r, q) + 1 - k;
  if (sgn(z) < 0) return std::nullopt;
  std::optional<BigInt> best;
  for (int y = std::max(p.r, 2); y <= k; ++y) {
    BigInt lambda = pow(q, y);
    BigInt disc = 1 + 4 * lambda * (lambda - (z + y - 1) * (q - 1) - 1);
    if (sgn(disc) < 0) continue;
    BigInt val = p.l * pow(q, k) + ceil_half_minus_sqrt(2 * lambda - 1, disc);
    if (!best || val < *best) best = val;
  }
  return best;
}

BoundResult ps_best(std::int64_t q, int v, int k) {
  const std::string query = cdc_label(q, v, 2 * k, k);
  if (k < 1 || v < k) throw std::invalid_argument("ps_best needs v >= k >= 1");
  if (auto s = spread_size(q, v, k))
    return BoundResult::leaf(query, *s, true, Method::spread, "k divides v");
  if (v < 2 * k)
    return BoundResult::leaf(query, 1, true, Method::trivial,
                             "any two k-subspaces meet when v < 2k");

  BoundResult best = BoundResult::leaf(query, qint(v, q) / qint(k, q), false,
                                       Method::trivial, "floor([v]_q/[k]_q)");
  if (auto b = ps_bound_thm1(q, v, k); b && *b < best.value)
    best = BoundResult::leaf(query, *b, false, Method::thm1, "");
  if (auto b = ps_bound_thm2(q, v, k); b && *b < best.value)
    best = BoundResult::leaf(query, *b, false, Method::thm2, "");
  return best;
}

}  // namespace subspace
