#include "subspace/mdc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace subspace {

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << to_string(xs[i]);
  os << ")";
  return os.str();
}

}  // namespace

nlohmann::json ScoredPatternSet::to_json() const {
  nlohmann::json j;
  j["q"] = q;
  j["v"] = v;
  j["d"] = d;
  auto arr = nlohmann::json::array();
  for (const auto& p : patterns) {
    auto row = nlohmann::json::array();
    for (const auto& x : p) row.push_back(x.get_si());
    arr.push_back(row);
  }
  j["patterns"] = arr;
  j["omega"] = subspace::to_string(omega);
  return j;
}

ScoredPatternSet ScoredPatternSet::from_json(const nlohmann::json& j) {
  ScoredPatternSet s;
  s.q = j.at("q").get<std::int64_t>();
  s.v = j.at("v").get<int>();
  s.d = j.at("d").get<int>();
  for (const auto& row : j.at("patterns")) {
    Pattern p;
    for (const auto& x : row) p.push_back(BigInt(x.get<long>()));
    s.patterns.push_back(std::move(p));
  }
  s.omega = parse_rat(j.value("omega", std::string("0")));
  return s;
}

BigInt ball_count(std::int64_t q, int v, int i, int k, int e) {
  if (i < 0 || k < 0 || i > v || k > v || e < 0)
    throw std::invalid_argument("ball_count needs 0 <= i,k <= v and e >= 0");
  BigInt total = 0;
  const int lo = std::max(0, static_cast<int>(ceil_div(i + k - e, 2).get_si()));
  for (int j = lo; j <= std::min(k, i); ++j)
    total += gauss(i, j, q) * gauss(v - i, k - j, q) * pow(q, (i - j) * (k - j));
  return total;
}

Rat score(int v, std::int64_t q, const Pattern& b) {
  const int m = v / 2;
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("pattern length must be floor(v/2)");
  Rat s = 0;
  for (int i = 0; i < m; ++i) {
    Rat w = make_rat(b[i], qint(i + 1, q));
    s += (v % 2 == 0 && i == m - 1) ? w : 2 * w;
  }
  return s;
}

BigInt score_bound(std::int64_t q, int v, const ScoredPatternSet& F) {
  Rat best = F.omega;
  for (const auto& b : F.patterns) best = std::max(best, score(v, q, b));
  return floor(Rat(qint(v, q)) * best);
}

std::vector<Pattern> maximal_elements(std::vector<Pattern> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto dominated = [&](const Pattern& a) {
    for (const auto& b : vs) {
      if (b == a) continue;
      bool ge = true;
      for (std::size_t i = 0; i < a.size() && ge; ++i) ge = b[i] >= a[i];
      if (ge) return true;
    }
    return false;
  };
  std::vector<Pattern> out;
  for (const auto& a : vs)
    if (!dominated(a)) out.push_back(a);
  return out;
}

MdcEngine::MdcEngine(FactStore facts, MdcOptions opt)
    : cdc_(std::move(facts)), opt_(opt) {}

std::optional<BoundResult> MdcEngine::exact_small_large_d(std::int64_t q, int v,
                                                          int d) {
  require_prime_power(q);
  const std::string query = mdc_label(q, v, d);
  auto exact = [&](BigInt val, std::string note) {
    return BoundResult::leaf(query, std::move(val), true, Method::exact_formula,
                             std::move(note));
  };
  auto upper = [&](BigInt val, std::string note) {
    return BoundResult::leaf(query, std::move(val), false, Method::exact_formula,
                             std::move(note));
  };
  const int m = v / 2;
  if (d <= 1) {
    BigInt all = 0;
    for (int i = 0; i <= v; ++i) all += gauss(v, i, q);
    return exact(all, "every subspace");
  }
  if (d == 2) {
    BigInt s = 0;
    const int parity = v % 2 ? 0 : m % 2;
    for (int i = parity; i <= v; i += 2) s += gauss(v, i, q);
    return exact(s, "all subspaces of dimensions congruent to " +
                        std::to_string(parity) + " mod 2");
  }
  if (d >= v) {
    if (d > v) return exact(1, "distance exceeds v");
    if (v % 2) return exact(2, "zero space and full space");
    return exact(pow(q, m) + 1, "spread of m-subspaces");
  }
  if (d == v - 1) {
    if (v % 2 == 0) return exact(pow(q, m) + 1, "spread of m-subspaces");
    return exact(pow(q, m + 1) + 1, "A_q(v,v-1;m) for odd v");
  }
  if (d == v - 2) {
    if (v % 2) {
      if (v == 5) return exact(2 * pow(q, 3) + 2, "A_q(5,3) = 2q^3+2");
      if (v == 7 && q == 2) return exact(34, "A_2(7,5) = 34");
      return upper(2 * pow(q, m + 1) + 2, "A_q(v,v-2) in {2q^(m+1)+1, 2q^(m+1)+2}");
    }
    if (v == 6 && q == 2) return exact(77, "A_2(6,4) = A_2(6,4;3) = 77");
    if (v == 8 && q == 2) return exact(257, "A_2(8,6) = A_2(8,6;4) = 257");
    BigInt sq = pow(q, m) + 1;
    sq *= sq;
    if (v >= 8) {
      BoundPtr c = cdc_.upper(q, v, d, m);
      if (c->value < sq) {
        BoundResult r = upper(c->value, "A_q(v,v-2) = A_q(v,v-2;m) for even v >= 8");
        r.exact = c->exact;
        r.combine = Combine::same;
        r.add(c);
        return r;
      }
    }
    return upper(sq, "(q^m+1)^2");
  }
  return std::nullopt;
}

BoundResult MdcEngine::decomposition_bound(std::int64_t q, int v, int d) {
  const int c = (d + 1) / 2;
  // Spreads attaining A_q(v,2c;c) meet every subspace of dimension < c, so
  // the two trivial codewords can be dropped; for d = 1 the zero space is
  // still at distance 1 from a point.
  const bool improved = d >= 2 && v % c == 0;
  BoundResult r = BoundResult::leaf(mdc_label(q, v, d), 0, false, Method::decomposition,
                                    improved ? "ceil(d/2) divides v" : "plus 2");
  r.combine = Combine::sum;
  r.offset = improved ? 0 : 2;
  for (int i = c; i <= v - c; ++i) r.add(cdc_.upper(q, v, 2 * c, i));
  if (r.children.empty()) {
    r.combine = Combine::formula;
    r.value = r.offset;
    return r;
  }
  for (const auto& ch : r.children) r.value += ch->value;
  r.value += r.offset;
  return r;
}

BoundResult MdcEngine::ev_bound(std::int64_t q, int v, int d) {
  const int e = (d + 1) / 2 - 1;
  IntegerProgram p;
  std::vector<BoundPtr> caps;
  for (int i = 0; i <= v; ++i) {
    caps.push_back(cdc_.upper(q, v, 2 * e + 2, i));
    p.add_variable("a_" + std::to_string(i), true, 0, Rat(caps.back()->value));
  }
  for (int k = 0; k <= v; ++k) {
    std::vector<std::pair<int, Rat>> terms;
    for (int i = 0; i <= v; ++i) {
      BigInt c = ball_count(q, v, i, k, e);
      if (sgn(c) != 0) terms.emplace_back(i, Rat(c));
    }
    p.add_constraint(terms, Relation::le, Rat(gauss(v, k, q)), "ball_" + std::to_string(k));
  }
  std::vector<std::pair<int, Rat>> obj;
  for (int i = 0; i <= v; ++i) obj.emplace_back(i, Rat(1));
  p.set_objective(obj);

  SolveOutcome lp = lp_solve(p);
  SolveOptions so;
  so.node_limit = opt_.node_limit;
  SolveOutcome ilp = ilp_solve(p, so);
  std::vector<BigInt> inputs;
  for (const auto& c : caps) inputs.push_back(c->value);
  std::ostringstream note;
  note << "e=" << e << ", cdc inputs " << join(inputs) << ", LP " << to_string(lp.value);
  BigInt value;
  if (ilp.optimal()) {
    value = floor(ilp.value);
  } else {
    value = floor(lp.value);
    note << ", ILP " << to_string(ilp.status) << ": using the LP bound";
  }
  BoundResult r = BoundResult::leaf(mdc_label(q, v, d), value, false, Method::ev_ilp,
                                    note.str());
  for (auto& c : caps) r.add(c);
  return r;
}

BoundPtr MdcEngine::upper(std::int64_t q, int v, int d) {
  require_prime_power(q);
  if (v < 1 || d < 1) throw std::invalid_argument("need v >= 1 and d >= 1");
  const auto key = std::make_tuple(q, v, d);
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  auto res = std::make_shared<const BoundResult>(compute_upper(q, v, d));
  std::lock_guard lock(mu_);
  return memo_.emplace(key, std::move(res)).first->second;
}

BoundResult MdcEngine::compute_upper(std::int64_t q, int v, int d) {
  std::vector<BoundResult> cands;
  auto exact = exact_small_large_d(q, v, d);
  if (exact) cands.push_back(*exact);
  if (d > v) return *exact;
  if (auto f = facts().mdc_fact(q, v, d))
    cands.push_back(BoundResult::leaf(mdc_label(q, v, d), f->value_at(q),
                                      f->kind == FactKind::exact, Method::override_fact,
                                      f->source));
  cands.push_back(decomposition_bound(q, v, d));
  cands.push_back(ev_bound(q, v, d));
  const bool settled = exact && exact->exact;
  if (!settled) {
    if (opt_.use_johnson && d >= 3 && v <= opt_.johnson_max_v)
      cands.push_back(johnson_mdc(q, v, d));
    if (v % 2 && v >= 7 && d == v - 4) cands.push_back(analytic_v_minus_4_odd(q, v));
    if (v == 7 && d == 3) cands.push_back(analytic_7_3(q));
    if (v % 2 == 0 && v >= 8 && d == v - 4) cands.push_back(analytic_2m_2m4(q, v / 2));
    if (v == 8 && d == 3) cands.push_back(analytic_8_3(q));
    if (d >= 2) {
      BoundPtr prev = upper(q, v, d - 1);
      BoundResult mono = BoundResult::leaf(mdc_label(q, v, d), prev->value, false,
                                           Method::monotone, "A_q(v,d) <= A_q(v,d-1)");
      mono.combine = Combine::same;
      mono.add(prev);
      cands.push_back(std::move(mono));
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (cands[i].value < cands[best].value) best = i;
  BoundResult r = BoundResult::leaf(mdc_label(q, v, d), cands[best].value,
                                    cands[best].exact, cands[best].method, "");
  r.combine = Combine::min;
  for (auto& c : cands) r.add(std::move(c));
  return r;
}

}  // namespace subspace
