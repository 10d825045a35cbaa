// Closed-form bounds for A_q(v,v-4), A_q(7,3) and A_q(8,3).

#include <stdexcept>

#include "subspace/mdc.hpp"

namespace subspace {

namespace {

BigInt poly(std::int64_t q, std::initializer_list<long> coeffs_low_first) {
  return eval_poly(std::vector<long>(coeffs_low_first), q);
}

BoundResult formula(std::int64_t q, int v, int d, BigInt value, std::string note) {
  return BoundResult::leaf(mdc_label(q, v, d), std::move(value), false, Method::analytic,
                           std::move(note));
}

}  // namespace

BoundResult MdcEngine::analytic_v_minus_4_odd(std::int64_t q, int v) {
  if (v < 7 || v % 2 == 0) throw std::invalid_argument("needs odd v >= 7");
  const int m = (v - 1) / 2;
  const int d = v - 4;
  BoundPtr lo = cdc_.upper(q, v, v - 3, m - 1);
  BoundPtr hi = cdc_.upper(q, v, v - 3, m);
  BoundResult first = formula(q, v, d, 2 * lo->value + 2 * hi->value,
                              "no codeword below dimension m-1: 2A(v,v-3;m-1) + 2A(v,v-3;m)");
  first.add(lo);
  first.add(hi);

  BoundPtr tau = cdc_.upper(q, 2 * m, 2 * m - 2, m - 1);
  const BigInt pts = qint(2 * m + 1, q) - qint(m - 2, q);
  const BigInt a_m1 = floor_div(pts, qint(m - 1, q));
  const BigInt a_m = floor_div(pts * tau->value, qint(m, q));
  BoundResult second = formula(q, v, d, 2 + 2 * a_m1 + 2 * a_m,
                               "a_{m-2} = 1: a_{m-1} <= " + to_string(a_m1) +
                                   ", a_m <= " + to_string(a_m));
  second.add(tau);

  BoundResult r = formula(q, v, d, std::max(first.value, second.value), "v-4 odd");
  r.combine = Combine::max;
  r.add(std::move(first));
  r.add(std::move(second));
  return r;
}

BoundResult MdcEngine::analytic_7_3(std::int64_t q) {
  BoundPtr t = cdc_.upper(q, 6, 4, 2);  // line spread of F_q^6
  BoundPtr s = cdc_.upper(q, 7, 4, 2);
  BoundPtr planes = cdc_.upper(q, 7, 4, 3);

  const BigInt a3 = floor_div(qint(7, q) * t->value - qint(2, q) * s->value, qint(3, q));
  BoundResult main = formula(q, 7, 3, 2 * (s->value + a3),
                             "a_0 = a_1 = 0, a_2 at most A(7,4;2): a_3 <= " + to_string(a3));
  main.add(t);
  main.add(s);
  BoundResult zero = formula(q, 7, 3, 2 + 2 * planes->value, "a_0 = 1: 2 + 2A(7,4;3)");
  zero.add(planes);
  BoundResult point = formula(q, 7, 3, 2 * poly(q, {3, 0, 0, 2, 0, 2, 1, 0, 1}),
                              "a_1 = 1: 2(q^8+q^6+2q^5+2q^3+3)");

  BoundResult r = formula(q, 7, 3, std::max({main.value, zero.value, point.value}),
                          "case analysis on a_0, a_1");
  r.combine = Combine::max;
  r.add(std::move(main));
  r.add(std::move(zero));
  r.add(std::move(point));
  return r;
}

BoundResult MdcEngine::analytic_2m_2m4(std::int64_t q, int m) {
  if (m < 4) throw std::invalid_argument("needs m >= 4");
  const int v = 2 * m, d = 2 * m - 4;
  BoundPtr mid = cdc_.upper(q, v, d, m);
  BoundResult low = formula(q, v, d, 2 + mid->value, "small codeword present: 2 + A(2m,2m-4;m)");
  low.add(mid);

  BoundPtr tau = cdc_.upper(q, 2 * m - 2, 2 * m - 4, m - 2);
  const BigInt top = qint(2 * m, q);
  BoundResult branch;
  if (m == 4 || (m == 5 && q == 2)) {
    BigInt x = floor_div((qint(2 * m - 1, q) - qint(m - 3, q)) * tau->value, qint(m - 1, q));
    // floor([2m]/[m] * x + 2[2m]/[m-2])
    Rat val = make_rat(top * x, qint(m, q)) + make_rat(2 * top, qint(m - 2, q));
    branch = formula(q, v, d, floor(val), "pattern (m-3)^1 (m-1)^x scores highest, x = " +
                                              to_string(x));
  } else {
    BigInt b = floor_div(qint(2 * m - 1, q) * tau->value, qint(m - 1, q));
    branch = formula(q, v, d, floor_div(top * b, qint(m, q)),
                     "pattern (m-1)^b scores highest, b = " + to_string(b));
  }
  branch.add(tau);

  BoundResult r = formula(q, v, d, std::max(low.value, branch.value), "v-4 even");
  r.combine = Combine::max;
  r.add(std::move(low));
  r.add(std::move(branch));
  return r;
}

std::vector<Rat> analytic_8_3_scores(std::int64_t q, bool improved) {
  const BigInt b2 = poly(q, {1, 0, 0, 1, 0, 1});  // q^5+q^3+1
  std::vector<Rat> s;
  // (1) 0^1 3^{[7](q^2-q+1)}
  s.push_back(score(8, q, {1, 0, 0, qint(7, q) * poly(q, {1, -1, 1})}));
  if (improved) {
    // (2) with one plane removed, the excluded distribution being forbidden
    s.push_back(score(8, q, {0, 1, b2, poly(q, {-1, 0, 0, 1, 0, 1, 1, 0, 1})}));
    // (3) with the plane count rounded down
    s.push_back(score(8, q, {0, 0, b2, poly(q, {1, -1, 1, 1, 0, 1, 1, 0, 1})}));
  } else {
    const BigInt q3 = qint(3, q);
    s.push_back(make_rat(2, q + 1) + Rat(poly(q, {0, 0, 0, 1, -1, 1})) + make_rat(2 * b2, q3));
    s.push_back(make_rat(qint(7, q) * poly(q, {1, -1, 1}), (q + 1) * poly(q, {1, 0, 1})) +
                make_rat(poly(q, {1, 0, 2}) * b2, poly(q, {1, 0, 1}) * q3));
  }
  return s;
}

BoundResult MdcEngine::analytic_8_3(std::int64_t q) {
  require_prime_power(q);
  const BigInt pts = qint(8, q);
  auto best = [&](bool improved) {
    Rat m = 0;
    for (const auto& s : analytic_8_3_scores(q, improved)) m = std::max(m, s);
    return floor(Rat(pts) * m);
  };
  const BigInt stated = q == 2 ? BigInt(9260)
                               : poly(q, {-1, 2, 4, 1, 3, 5, 3, 3, 3, 1, 3, 0, 1});
  BoundResult r = formula(q, 8, 3, stated, "score bound over points, a_0 = 0");

  BoundResult first = formula(q, 8, 3, best(false), "unrounded case scores");
  r.add(std::move(first));
  BoundResult second = formula(q, 8, 3, best(true), "improved case scores");
  for (const auto& f : facts().forbidden(q, 7, 3))
    second.add(BoundResult::leaf("F_" + std::to_string(q) + "^7, d=3", 0, true,
                                 Method::override_fact, f.source));
  r.add(std::move(second));
  BoundResult zero = formula(
      q, 8, 3, poly(q, {1, 2, 3, 1, 4, 5, 2, 3, 4, 1, 3, 0, 1}),
      "a_0 = 1 branch: 2 + 2A(8,4;3) + A(8,4;4); exceeds the stated value, not covered "
      "by the score argument");
  r.add(std::move(zero));
  return r;
}

}  // namespace subspace
