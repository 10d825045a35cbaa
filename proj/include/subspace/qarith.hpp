#pragma once

// Exact integer/rational arithmetic and Gaussian binomial coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subspace {

using BigInt = mpz_class;
using Rat = mpq_class;

class ArithmeticError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Largest supported field size for bound computations.
inline constexpr std::int64_t kMaxFieldSize = 1 << 16;

/// True iff q = p^e for a prime p and e >= 1. Trial factorization.
bool is_prime_power(std::int64_t q);

/// Throws ArithmeticError unless 2 <= q <= kMaxFieldSize and q is a prime power.
void require_prime_power(std::int64_t q);

/// Characteristic p and exponent e with q = p^e; requires a prime power.
struct PrimePower {
  std::int64_t p;
  int e;
};
PrimePower factor_prime_power(std::int64_t q);

BigInt pow(std::int64_t base, unsigned long exp);

/// Number of k-subspaces of F_q^v; zero unless 0 <= k <= v.
BigInt gauss(int v, int k, std::int64_t q);

/// [v]_q = (q^v - 1)/(q - 1), the number of points of F_q^v.
inline BigInt qint(int v, std::int64_t q) { return gauss(v, 1, q); }

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// Rational with normalized sign/denominator.
Rat make_rat(const BigInt& num, const BigInt& den);

BigInt floor(const Rat& r);
BigInt ceil(const Rat& r);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rat& r);
inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// Parses "p/q", "p" or "-p/q"; throws ArithmeticError on malformed input.
Rat parse_rat(const std::string& s);
BigInt parse_bigint(const std::string& s);

/// Evaluates c_0 + c_1 q + c_2 q^2 + ...
template <typename Coeffs>
BigInt eval_poly(const Coeffs& coeffs, std::int64_t q) {
  BigInt acc = 0;
  for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it) {
    acc *= q;
    acc += BigInt(*it);
  }
  return acc;
}

}  // namespace subspace
