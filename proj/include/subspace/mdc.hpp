#pragma once

// Upper bounds for mixed dimension codes A_q(v,d).

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "subspace/cdc.hpp"
#include "subspace/derivation.hpp"
#include "subspace/ilp.hpp"

namespace subspace {

/// Dimension distribution (b_0, ..., b_{m-1}) of the codewords through a
/// point, taken modulo that point.
using Pattern = std::vector<BigInt>;

struct ScoredPatternSet {
  std::int64_t q = 2;
  int v = 0;  // ambient dimension of the quotient space
  int d = 0;
  std::vector<Pattern> patterns;
  Rat omega = 0;

  nlohmann::json to_json() const;
  static ScoredPatternSet from_json(const nlohmann::json& j);
};

/// Number of k-subspaces within distance e of a fixed i-subspace of F_q^v.
BigInt ball_count(std::int64_t q, int v, int i, int k, int e);

/// Score Gamma_v(b) of a pattern of length floor(v/2).
Rat score(int v, std::int64_t q, const Pattern& b);

/// floor([v]_q * max(omega, max_b Gamma_v(b))).
BigInt score_bound(std::int64_t q, int v, const ScoredPatternSet& patterns);

/// Extra bounds on a_i used by case splits and lemma replications.
struct DimBound {
  int dim;
  std::optional<BigInt> lo;
  std::optional<BigInt> hi;
};

struct JohnsonModel {
  IntegerProgram program;
  int m = 0;           // a_0..a_m are variables 0..m
  int first_pattern = 0;
  int z = 0;
};

struct PatternCheck {
  bool feasible = false;
  bool exact = true;  // false when a solver limit forced a coarser answer
  Pattern envelope;   // coordinate-wise maxima, length = b.size()
};

struct MdcOptions {
  std::uint64_t node_limit = 200'000;  // per ILP solve
  std::uint64_t pattern_budget = 4000;  // ILP solves per enumeration level
  bool case_split = true;
  bool use_johnson = true;
  int johnson_max_v = 14;
};

class MdcEngine {
public:
  explicit MdcEngine(FactStore facts = FactStore::builtin(), MdcOptions opt = {});

  CdcEngine& cdc() { return cdc_; }
  const FactStore& facts() const { return cdc_.facts(); }
  const MdcOptions& options() const { return opt_; }

  /// Exact (or best known) values for d in {1, 2, v-2, v-1, v}.
  std::optional<BoundResult> exact_small_large_d(std::int64_t q, int v, int d);
  BoundResult decomposition_bound(std::int64_t q, int v, int d);
  /// Sphere packing ILP; the LP relaxation value is noted in the result.
  BoundResult ev_bound(std::int64_t q, int v, int d);

  /// The ILP with z = 0 (or omega z when omega > 0) for the given patterns.
  JohnsonModel johnson_model(std::int64_t q, int v, int d, const ScoredPatternSet& F,
                             const std::vector<DimBound>& extra);
  BoundResult johnson_mdc_bound(std::int64_t q, int v, int d,
                                const ScoredPatternSet& F,
                                const std::vector<DimBound>& extra = {});
  /// Enumerated patterns plus the spread case split.
  BoundResult johnson_mdc(std::int64_t q, int v, int d);

  /// Membership test for b (dims 0..b.size()-1) in the quotient space F_q^vp
  /// by maximizing a_j with a_i >= b_i for i != j.
  PatternCheck pattern_feasible(std::int64_t q, int vp, int d, const Pattern& b, int j);
  /// Maximal envelopes of distributions in F_q^vp with dims < nd.
  ScoredPatternSet enumerate_maximal_patterns(std::int64_t q, int vp, int d, int nd,
                                              const Rat& omega = 0);

  BoundResult analytic_v_minus_4_odd(std::int64_t q, int v);
  BoundResult analytic_7_3(std::int64_t q);
  BoundResult analytic_2m_2m4(std::int64_t q, int m);
  BoundResult analytic_8_3(std::int64_t q);

  /// Minimum over every applicable method; all candidates stay in the tree.
  BoundPtr upper(std::int64_t q, int v, int d);
  BigInt value(std::int64_t q, int v, int d) { return upper(q, v, d)->value; }

private:
  using Key = std::tuple<std::int64_t, int, int, int>;

  BoundResult compute_upper(std::int64_t q, int v, int d);
  std::vector<Pattern> patterns(std::int64_t q, int vp, int d, int nd);
  std::optional<Pattern> envelope(std::int64_t q, int vp, int d, int nd,
                                  const Pattern& lo, const Pattern& hi,
                                  std::uint64_t& budget);
  SolveOutcome solve(const IntegerProgram& p, std::uint64_t& budget);

  CdcEngine cdc_;
  MdcOptions opt_;
  std::mutex mu_;
  std::map<Key, std::vector<Pattern>> pattern_memo_;
  std::map<std::tuple<std::int64_t, int, int>, BoundPtr> memo_;
};

/// Scores of the three maximal point patterns in the A_q(8,3) argument, in
/// the unrounded first pass or the improved second pass.
std::vector<Rat> analytic_8_3_scores(std::int64_t q, bool improved);

/// Removes vectors dominated by another vector of the set; sorts the rest.
std::vector<Pattern> maximal_elements(std::vector<Pattern> vs);

}  // namespace subspace
