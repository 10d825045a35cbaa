#pragma once

// Lengths of q^r-divisible linear codes and the rounded quotient {a/[k]_q}_k.

#include <cstdint>
#include <optional>
#include <vector>

#include "subspace/qarith.hpp"

namespace subspace {

struct DivisibleParams {
  std::int64_t q;
  int r;  ///< weights divisible by q^r
};

/// Generator lengths s_i = q^i [r-i+1]_q, i = 0..r.
std::vector<BigInt> divisible_generators(const DivisibleParams& p);

/// True iff a q^r-divisible code of effective length n exists, i.e. n is a
/// non-negative integer combination of the generator lengths.
bool realizable(const DivisibleParams& p, const BigInt& n);

/// Largest b with realizable({q, k-1}, a - b [k]_q); never exceeds
/// floor(a / [k]_q). Empty when not even b = 0 is admissible, which happens
/// only for small a (a = j [v]_q with k <= v is always admissible at b = 0).
/// Throws ArithmeticError when the length table for (q, k-1) is too large.
std::optional<BigInt> divisible_quotient(const BigInt& a, int k,
                                         std::int64_t q);

}  // namespace subspace
