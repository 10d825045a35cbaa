#pragma once

// Exact rational LP (two-phase simplex, Bland's rule) and a branch-and-bound
// integer layer on top of it. Models are small; clarity beats speed here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subspace/qarith.hpp"

namespace subspace {

enum class Relation { le, eq, ge };

struct Variable {
  std::string name;
  bool integer = true;
  Rat lb = 0;
  std::optional<Rat> ub;
};

struct Constraint {
  std::vector<Rat> coeffs;  // one per variable
  Relation rel = Relation::le;
  Rat rhs = 0;
  std::string name;
};

/// maximize objective . x subject to constraints and variable bounds.
struct IntegerProgram {
  std::vector<Variable> vars;
  std::vector<Constraint> constraints;
  std::vector<Rat> objective;

  int add_variable(std::string name, bool integer, Rat lb = 0,
                   std::optional<Rat> ub = std::nullopt);
  /// Sparse helper: (variable index, coefficient) pairs.
  void add_constraint(const std::vector<std::pair<int, Rat>>& terms,
                      Relation rel, Rat rhs, std::string name = {});
  void set_objective(const std::vector<std::pair<int, Rat>>& terms);

  /// Throws std::invalid_argument when vector sizes or bounds are off.
  void validate() const;
  /// LP-format-like listing with exact fractions.
  std::string dump() const;
};

enum class SolveStatus { optimal, infeasible, unbounded, node_limit };

std::string to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  Rat value;
  std::vector<Rat> assignment;
  std::uint64_t nodes = 0;

  bool optimal() const { return status == SolveStatus::optimal; }
};

struct SolveOptions {
  std::uint64_t node_limit = 1'000'000;
};

/// LP relaxation when relax is true; otherwise identical to ilp_solve.
SolveOutcome lp_solve(const IntegerProgram& model, bool relax = true);

/// Exact integer optimum. Branches on the most fractional variable (ties by
/// index) and explores nodes best-bound first. A node limit hit yields
/// status node_limit with the best bound seen in value.
SolveOutcome ilp_solve(const IntegerProgram& model, const SolveOptions& opt = {});

/// True iff x meets every bound and constraint (and integrality unless relaxed).
bool satisfies(const IntegerProgram& model, const std::vector<Rat>& x,
               bool check_integrality);

}  // namespace subspace
