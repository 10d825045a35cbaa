#include "subspace/qarith.hpp"

#include <cctype>

namespace subspace {

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t n = q;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;  // q itself is prime
}

void require_prime_power(std::int64_t q) {
  if (q < 2 || q > kMaxFieldSize || !is_prime_power(q))
    throw ArithmeticError("q = " + std::to_string(q) +
                          " is not a supported prime power");
}

PrimePower factor_prime_power(std::int64_t q) {
  require_prime_power(q);
  std::int64_t p = q;
  for (std::int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  int e = 0;
  for (std::int64_t n = q; n > 1; n /= p) ++e;
  return {p, e};
}

BigInt pow(std::int64_t base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

BigInt gauss(int v, int k, std::int64_t q) {
  require_prime_power(q);
  if (v < 0 || k < 0 || k > v) return 0;
  if (k > v - k) k = v - k;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pow(q, v - i) - 1;
    den *= pow(q, k - i) - 1;
  }
  BigInt r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (sgn(b) <= 0) throw ArithmeticError("floor_div: divisor must be positive");
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (sgn(b) <= 0) throw ArithmeticError("ceil_div: divisor must be positive");
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw ArithmeticError("isqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw ArithmeticError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

BigInt floor(const Rat& r) {
  return floor_div(r.get_num(), r.get_den());
}

BigInt ceil(const Rat& r) {
  return ceil_div(r.get_num(), r.get_den());
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt parse_bigint(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ArithmeticError("malformed integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ArithmeticError("malformed integer '" + s + "'");
  return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_bigint(s));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (sgn(den) == 0) throw ArithmeticError("malformed rational '" + s + "'");
  return make_rat(parse_bigint(s.substr(0, slash)), den);
}

}  // namespace subspace
