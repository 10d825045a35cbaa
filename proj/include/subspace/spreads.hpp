#pragma once

// Upper bounds for partial k-spreads, i.e. A_q(v, 2k; k).

#include <cstdint>
#include <optional>

#include "subspace/derivation.hpp"
#include "subspace/qarith.hpp"

namespace subspace {

/// v = k t + r with 0 <= r < k, and l = (q^{v-k} - q^r)/(q^k - 1).
struct SpreadParams {
  std::int64_t q;
  int v;
  int k;
  int r;
  int t;
  BigInt l;  ///< meaningful when r >= 1 and t >= 2

  static SpreadParams make(std::int64_t q, int v, int k);
};

/// [v]_q / [k]_q when k | v (k-spreads exist exactly then).
std::optional<BigInt> spread_size(std::int64_t q, int v, int k);

/// l q^k + 1 + z(q-1) minimized over admissible (z, u).
std::optional<BigInt> ps_bound_thm1(std::int64_t q, int v, int k);

/// l q^k + ceil(lambda - 1/2 - sqrt(1 + 4 lambda (lambda - (z+y-1)(q-1) - 1))/2)
/// minimized over max(r,2) <= y <= k, lambda = q^y, evaluated without
/// floating point.
std::optional<BigInt> ps_bound_thm2(std::int64_t q, int v, int k);

/// ceil((n - sqrt(disc)) / 2) for disc >= 0, exactly.
BigInt ceil_half_minus_sqrt(const BigInt& n, const BigInt& disc);

/// Best partial spread bound: the spread size when k | v, 1 when v < 2k,
/// otherwise the minimum of the applicable theorems and the trivial floor.
BoundResult ps_best(std::int64_t q, int v, int k);

}  // namespace subspace
