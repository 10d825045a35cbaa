// Pattern enumeration and the Johnson type ILP for mixed dimension codes.

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "subspace/divisible.hpp"
#include "subspace/mdc.hpp"

namespace subspace {

namespace {

int even_up(int d) { return d % 2 ? d + 1 : d; }

std::string show(const Pattern& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << to_string(p[i]);
  os << ")";
  return os.str();
}

bool geq(const Pattern& a, const Pattern& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

SolveOutcome MdcEngine::solve(const IntegerProgram& p, std::uint64_t& budget) {
  if (budget == 0) {
    SolveOutcome out;
    out.status = SolveStatus::node_limit;
    return out;
  }
  --budget;
  SolveOptions so;
  so.node_limit = opt_.node_limit;
  return ilp_solve(p, so);
}

JohnsonModel MdcEngine::johnson_model(std::int64_t q, int v, int d,
                                      const ScoredPatternSet& F,
                                      const std::vector<DimBound>& extra) {
  const int m = v / 2;
  const int de = even_up(d);
  const bool use_z = sgn(F.omega) > 0;
  JohnsonModel jm;
  jm.m = m;
  auto& p = jm.program;
  std::vector<BigInt> caps;
  for (int i = 0; i <= m; ++i) {
    caps.push_back(cdc_.value(q, v, de, i));
    p.add_variable("a_" + std::to_string(i), !use_z, 0, Rat(caps.back()));
  }
  for (const auto& b : extra) {
    if (b.dim < 0 || b.dim > m) throw std::invalid_argument("dimension bound out of range");
    auto& var = p.vars[b.dim];
    if (b.lo && Rat(*b.lo) > var.lb) var.lb = Rat(*b.lo);
    if (b.hi && Rat(*b.hi) < *var.ub) var.ub = Rat(*b.hi);
  }
  const BigInt points = qint(v, q);
  jm.first_pattern = m + 1;
  for (std::size_t t = 0; t < F.patterns.size(); ++t)
    p.add_variable("x_" + std::to_string(t), true, 0, Rat(points));
  jm.z = p.add_variable("z", true, 0, Rat(use_z ? points : BigInt(0)));

  for (int i = 1; i <= m; ++i) {
    std::vector<std::pair<int, Rat>> terms{{i, Rat(qint(i, q))}};
    for (std::size_t t = 0; t < F.patterns.size(); ++t) {
      const auto& b = F.patterns[t];
      if (i - 1 < static_cast<int>(b.size()) && sgn(b[i - 1]) != 0)
        terms.emplace_back(jm.first_pattern + static_cast<int>(t), Rat(-b[i - 1]));
    }
    p.add_constraint(terms, Relation::le, 0, "points_" + std::to_string(i));
  }
  std::vector<std::pair<int, Rat>> all{{jm.z, Rat(1)}};
  for (std::size_t t = 0; t < F.patterns.size(); ++t)
    all.emplace_back(jm.first_pattern + static_cast<int>(t), Rat(1));
  p.add_constraint(all, Relation::eq, Rat(points), "cover");
  for (int i = 1; i <= std::min(d - 1, m); ++i)
    p.add_constraint({{0, Rat(caps[i])}, {i, Rat(1)}}, Relation::le, Rat(caps[i]),
                     "zero_" + std::to_string(i));

  std::vector<std::pair<int, Rat>> obj;
  for (int i = 0; i <= m; ++i) obj.emplace_back(i, Rat(v % 2 == 0 && i == m ? 1 : 2));
  if (use_z) obj.emplace_back(jm.z, F.omega);
  p.set_objective(obj);
  return jm;
}

std::optional<Pattern> MdcEngine::envelope(std::int64_t q, int vp, int d, int nd,
                                           const Pattern& lo, const Pattern& hi,
                                           std::uint64_t& budget) {
  for (int i = 0; i < nd; ++i)
    if (lo[i] > hi[i]) return std::nullopt;
  if (vp <= 2) return hi;
  const int mp = vp / 2;
  if (nd - 1 > mp) throw std::logic_error("pattern dimensions exceed the quotient half");
  ScoredPatternSet F;
  F.q = q;
  F.v = vp - 1;
  F.d = d;
  F.patterns = patterns(q, vp - 1, d, mp);
  std::vector<DimBound> bounds;
  for (int i = 0; i < nd; ++i) bounds.push_back({i, lo[i], hi[i]});
  JohnsonModel jm = johnson_model(q, vp, d, F, bounds);

  Pattern e(nd);
  bool witnessed = false;
  for (int j = 0; j < nd; ++j) {
    if (lo[j] == hi[j]) {
      e[j] = lo[j];
      continue;
    }
    jm.program.set_objective({{j, Rat(1)}});
    SolveOutcome out = solve(jm.program, budget);
    if (out.status == SolveStatus::infeasible) return std::nullopt;
    if (out.optimal()) {
      e[j] = floor(out.value);
      witnessed = true;
    } else {
      e[j] = hi[j];
    }
  }
  if (!witnessed) {
    jm.program.set_objective({});
    if (solve(jm.program, budget).status == SolveStatus::infeasible) return std::nullopt;
  }
  return e;
}

std::vector<Pattern> MdcEngine::patterns(std::int64_t q, int vp, int d, int nd) {
  const Key key{q, vp, d, nd};
  {
    std::lock_guard lock(mu_);
    if (auto it = pattern_memo_.find(key); it != pattern_memo_.end()) return it->second;
  }
  const int de = even_up(d);
  std::vector<BigInt> caps;
  std::vector<int> dims;
  for (int i = 0; i < nd; ++i) {
    caps.push_back(cdc_.value(q, vp, de, i));
    if (sgn(caps.back()) > 0) dims.push_back(i);
  }
  auto compatible = [&](int i, int j) { return std::min(i + j, 2 * vp - i - j) >= d; };

  // Maximal sets of pairwise compatible dimensions.
  std::vector<std::vector<int>> sets;
  const std::size_t n = dims.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) {
      if (!(mask >> t & 1)) continue;
      for (int x : s) ok = ok && compatible(x, dims[t]);
      s.push_back(dims[t]);
    }
    if (ok) sets.push_back(std::move(s));
  }
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<Pattern> env;
  std::uint64_t budget = opt_.pattern_budget;
  for (const auto& s : sets) {
    if (std::any_of(sets.begin(), sets.end(), [&](const auto& t) { return subset(s, t); }))
      continue;
    std::vector<int> small;
    for (int i : s)
      if (caps[i] == 1) small.push_back(i);
    for (std::uint32_t pres = 0; pres < (1u << small.size()); ++pres) {
      Pattern lo(nd), hi(nd);
      for (int i : s) hi[i] = caps[i];
      for (std::size_t t = 0; t < small.size(); ++t) {
        lo[small[t]] = (pres >> t) & 1;
        hi[small[t]] = (pres >> t) & 1;
      }
      if (auto e = envelope(q, vp, d, nd, lo, hi, budget)) env.push_back(std::move(*e));
    }
  }

  for (const auto& f : facts().forbidden(q, vp, d)) {
    bool beyond = false;
    for (std::size_t i = nd; i < f.distribution.size(); ++i) beyond = beyond || sgn(f.distribution[i]) > 0;
    if (beyond) continue;
    Pattern fv(nd);
    for (int i = 0; i < nd && i < static_cast<int>(f.distribution.size()); ++i)
      fv[i] = f.distribution[i];
    std::vector<Pattern> next;
    for (const auto& e : env) {
      if (!geq(e, fv)) {
        next.push_back(e);
        continue;
      }
      for (int i = 0; i < nd; ++i)
        if (sgn(fv[i]) > 0) {
          Pattern e2 = e;
          e2[i] = fv[i] - 1;
          next.push_back(std::move(e2));
        }
    }
    env = maximal_elements(std::move(next));
  }
  env = maximal_elements(std::move(env));

  std::lock_guard lock(mu_);
  return pattern_memo_.emplace(key, std::move(env)).first->second;
}

ScoredPatternSet MdcEngine::enumerate_maximal_patterns(std::int64_t q, int vp, int d,
                                                       int nd, const Rat& omega) {
  if (vp < 1 || nd < 1 || nd - 1 > vp / 2)
    throw std::invalid_argument("pattern dimensions out of range");
  ScoredPatternSet s;
  s.q = q;
  s.v = vp;
  s.d = d;
  s.omega = omega;
  s.patterns = patterns(q, vp, d, nd);
  if (sgn(omega) > 0) {
    // Patterns whose score stays within omega are covered by z.
    const int v = vp + 1;
    std::vector<Pattern> keep;
    for (const auto& b : s.patterns)
      if (static_cast<int>(b.size()) != v / 2 || score(v, q, b) > omega) keep.push_back(b);
    s.patterns = std::move(keep);
  }
  return s;
}

PatternCheck MdcEngine::pattern_feasible(std::int64_t q, int vp, int d, const Pattern& b,
                                         int j) {
  const int nd = static_cast<int>(b.size());
  if (j < 0 || j >= nd) throw std::invalid_argument("maximize index out of range");
  const int mp = vp / 2;
  if (nd - 1 > mp) throw std::invalid_argument("pattern longer than the quotient half");
  PatternCheck res;
  if (vp <= 2) {
    res.envelope.resize(nd);
    res.feasible = true;
    for (int i = 0; i < nd; ++i) {
      res.envelope[i] = cdc_.value(q, vp, even_up(d), i);
      res.feasible = res.feasible && b[i] <= res.envelope[i];
    }
    return res;
  }
  ScoredPatternSet F;
  F.q = q;
  F.v = vp - 1;
  F.d = d;
  F.patterns = patterns(q, vp - 1, d, mp);
  std::vector<DimBound> bounds;
  for (int i = 0; i < nd; ++i)
    if (i != j) bounds.push_back({i, b[i], std::nullopt});
  JohnsonModel jm = johnson_model(q, vp, d, F, bounds);
  jm.program.set_objective({{j, Rat(1)}});
  std::uint64_t budget = 1;
  SolveOutcome out = solve(jm.program, budget);
  if (out.status == SolveStatus::infeasible) return res;
  res.exact = out.optimal();
  res.envelope.resize(nd);
  for (int i = 0; i < nd; ++i)
    res.envelope[i] = out.optimal() ? floor(out.assignment[i]) : BigInt(0);
  if (out.optimal()) {
    res.envelope[j] = floor(out.value);
    res.feasible = res.envelope[j] >= b[j];
  } else {
    res.feasible = true;  // undecided within the node limit
  }
  return res;
}

BoundResult MdcEngine::johnson_mdc_bound(std::int64_t q, int v, int d,
                                         const ScoredPatternSet& F,
                                         const std::vector<DimBound>& extra) {
  JohnsonModel jm = johnson_model(q, v, d, F, extra);
  std::uint64_t budget = 1;
  SolveOutcome out = solve(jm.program, budget);
  const std::string query = mdc_label(q, v, d);
  if (out.status == SolveStatus::infeasible)
    return BoundResult::leaf(query, 0, false, Method::johnson_mdc, "model infeasible");
  if (out.status == SolveStatus::unbounded)
    throw std::logic_error("johnson model unbounded");
  std::ostringstream note;
  note << F.patterns.size() << " patterns";
  if (sgn(F.omega) > 0) note << ", omega " << to_string(F.omega);
  BigInt value = floor(out.value);
  if (out.optimal()) {
    Pattern a;
    for (int i = 0; i <= jm.m; ++i) a.push_back(floor(out.assignment[i]));
    note << ", a = " << show(a);
    std::vector<std::string> used;
    for (std::size_t t = 0; t < F.patterns.size(); ++t) {
      const Rat& x = out.assignment[jm.first_pattern + t];
      if (sgn(x) != 0) used.push_back(show(F.patterns[t]) + "x" + to_string(x));
    }
    note << ", patterns used";
    for (const auto& u : used) note << " " << u;
  } else {
    note << ", node limit: LP bound";
  }
  BoundResult r = BoundResult::leaf(query, value, false, Method::johnson_mdc, note.str());
  const int de = even_up(d);
  for (int i = 0; i <= jm.m; ++i) r.add(cdc_.upper(q, v, de, i));
  return r;
}

BoundResult MdcEngine::johnson_mdc(std::int64_t q, int v, int d) {
  if (v < 2) throw std::invalid_argument("johnson_mdc needs v >= 2");
  const int m = v / 2;
  const int de = even_up(d);
  ScoredPatternSet F = enumerate_maximal_patterns(q, v - 1, d, m);
  BoundResult base = johnson_mdc_bound(q, v, d, F);
  if (!opt_.case_split) return base;

  // When a_i sits at an exact spread size, every point lies on exactly one
  // i-codeword. Split into a_i <= cap-1 and a_i = cap.
  JohnsonModel jm = johnson_model(q, v, d, F, {});
  std::uint64_t budget = 1;
  SolveOutcome out = solve(jm.program, budget);
  if (!out.optimal()) return base;
  for (int i = 1; i <= m; ++i) {
    BoundPtr cap = cdc_.upper(q, v, de, i);
    if (cap->method != Method::spread || de != 2 * i || v % i != 0) continue;
    if (Rat(cap->value) != out.assignment[i]) continue;

    BoundResult below = johnson_mdc_bound(q, v, d, F, {{i, std::nullopt, cap->value - 1}});
    below.note = "a_" + std::to_string(i) + " <= " + to_string(BigInt(cap->value - 1)) + "; " + below.note;

    ScoredPatternSet G = F;
    G.patterns.clear();
    for (const auto& b : F.patterns)
      if (sgn(b[i - 1]) > 0) G.patterns.push_back(b);
    std::vector<DimBound> extra{{i, cap->value, std::nullopt}};
    std::string split_note = "a_" + std::to_string(i) + " = " + to_string(cap->value);
    if (i + 1 <= m && !G.patterns.empty()) {
      BigInt lambda = 0;
      for (const auto& b : G.patterns) lambda = std::max(lambda, b[i]);
      BigInt a = lambda * qint(v, q);
      BigInt hi;
      try {
        auto quo = divisible_quotient(a, i + 1, q);
        hi = quo ? *quo : floor_div(a, qint(i + 1, q));
      } catch (const ArithmeticError&) {
        hi = floor_div(a, qint(i + 1, q));
      }
      extra.push_back({i + 1, std::nullopt, hi});
      split_note += ", each point on <= " + to_string(lambda) + " codewords of dim " +
                    std::to_string(i + 1) + " so a_" + std::to_string(i + 1) +
                    " <= {" + to_string(lambda) + "*[" + std::to_string(v) + "]/[" +
                    std::to_string(i + 1) + "]}_" + std::to_string(i + 1) + " = " +
                    to_string(hi);
    }
    BoundResult at;
    if (G.patterns.empty()) {
      at = BoundResult::leaf(mdc_label(q, v, d), 0, false, Method::johnson_mdc,
                             "no pattern meets the spread");
    } else {
      at = johnson_mdc_bound(q, v, d, G, extra);
    }
    at.note = split_note + "; " + at.note;

    BoundResult split = BoundResult::leaf(mdc_label(q, v, d), std::max(below.value, at.value),
                                          false, Method::case_split,
                                          "branch on a_" + std::to_string(i));
    split.combine = Combine::max;
    split.add(std::move(below));
    split.add(std::move(at));
    if (split.value >= base.value) return base;

    BoundResult r = BoundResult::leaf(mdc_label(q, v, d), split.value, false,
                                      Method::johnson_mdc, "");
    r.combine = Combine::min;
    r.add(std::move(base));
    r.add(std::move(split));
    return r;
  }
  return base;
}

}  // namespace subspace
