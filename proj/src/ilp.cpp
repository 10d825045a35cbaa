#include "subspace/ilp.hpp"

#include <queue>
#include <sstream>
#include <stdexcept>

namespace subspace {

int IntegerProgram::add_variable(std::string name, bool integer, Rat lb,
                                 std::optional<Rat> ub) {
  vars.push_back({std::move(name), integer, std::move(lb), std::move(ub)});
  for (auto& c : constraints) c.coeffs.resize(vars.size());
  objective.resize(vars.size());
  return static_cast<int>(vars.size()) - 1;
}

void IntegerProgram::add_constraint(const std::vector<std::pair<int, Rat>>& terms,
                                    Relation rel, Rat rhs, std::string name) {
  Constraint c;
  c.coeffs.assign(vars.size(), Rat(0));
  for (const auto& [i, a] : terms) {
    if (i < 0 || i >= static_cast<int>(vars.size()))
      throw std::invalid_argument("constraint refers to unknown variable");
    c.coeffs[i] += a;
  }
  c.rel = rel;
  c.rhs = std::move(rhs);
  c.name = std::move(name);
  constraints.push_back(std::move(c));
}

void IntegerProgram::set_objective(const std::vector<std::pair<int, Rat>>& terms) {
  objective.assign(vars.size(), Rat(0));
  for (const auto& [i, a] : terms) objective.at(i) += a;
}

void IntegerProgram::validate() const {
  if (objective.size() != vars.size())
    throw std::invalid_argument("objective length differs from variable count");
  for (const auto& c : constraints)
    if (c.coeffs.size() != vars.size())
      throw std::invalid_argument("constraint length differs from variable count");
  for (const auto& v : vars)
    if (v.ub && *v.ub < v.lb)
      throw std::invalid_argument("variable " + v.name + " has lb > ub");
}

namespace {

const char* rel_str(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
  }
  return "?";
}

void dump_linear(std::ostream& os, const std::vector<Rat>& coeffs,
                 const std::vector<Variable>& vars) {
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Rat a = coeffs[i];
    if (!first) os << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) os << "-";
    if (sgn(a) < 0) a = -a;
    if (a != 1) os << to_string(a) << " ";
    os << vars[i].name;
    first = false;
  }
  if (first) os << "0";
}

}  // namespace

std::string IntegerProgram::dump() const {
  std::ostringstream os;
  os << "maximize\n  obj: ";
  dump_linear(os, objective, vars);
  os << "\nsubject to\n";
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    const auto& c = constraints[r];
    os << "  " << (c.name.empty() ? "c" + std::to_string(r) : c.name) << ": ";
    dump_linear(os, c.coeffs, vars);
    os << " " << rel_str(c.rel) << " " << to_string(c.rhs) << "\n";
  }
  os << "bounds\n";
  for (const auto& v : vars) {
    os << "  " << to_string(v.lb) << " <= " << v.name;
    if (v.ub) os << " <= " << to_string(*v.ub);
    os << "\n";
  }
  os << "general\n ";
  for (const auto& v : vars)
    if (v.integer) os << " " << v.name;
  os << "\nend\n";
  return os.str();
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::node_limit: return "node_limit";
  }
  return "?";
}

namespace {

// Dense two-phase tableau simplex over the shifted variables y = x - lb >= 0.
// Upper bounds become explicit rows.
class Tableau {
public:
  Tableau(const IntegerProgram& model, const std::vector<Rat>& lb,
          const std::vector<std::optional<Rat>>& ub)
      : n_(static_cast<int>(model.vars.size())), lb_(lb) {
    struct Row {
      std::vector<std::pair<int, Rat>> terms;
      Relation rel;
      Rat rhs;
    };
    std::vector<Row> rows;
    for (const auto& c : model.constraints) {
      Row r{{}, c.rel, c.rhs};
      for (int j = 0; j < n_; ++j)
        if (sgn(c.coeffs[j]) != 0) {
          r.terms.emplace_back(j, c.coeffs[j]);
          r.rhs -= c.coeffs[j] * lb[j];
        }
      if (r.terms.empty()) {
        int s = sgn(r.rhs);
        bool ok = r.rel == Relation::le ? s >= 0 : r.rel == Relation::ge ? s <= 0 : s == 0;
        if (!ok) trivially_infeasible_ = true;
        continue;
      }
      rows.push_back(std::move(r));
    }
    for (int j = 0; j < n_; ++j)
      if (ub[j]) rows.push_back(Row{{{j, Rat(1)}}, Relation::le, *ub[j] - lb[j]});

    // Normalize to rhs >= 0, then count slack / artificial columns.
    for (auto& r : rows)
      if (sgn(r.rhs) < 0) {
        r.rhs = -r.rhs;
        for (auto& t : r.terms) t.second = -t.second;
        if (r.rel == Relation::le) r.rel = Relation::ge;
        else if (r.rel == Relation::ge) r.rel = Relation::le;
      }
    m_ = static_cast<int>(rows.size());
    int slack = 0, art = 0;
    for (const auto& r : rows) {
      if (r.rel != Relation::eq) ++slack;
      if (r.rel != Relation::le) ++art;
    }
    first_art_ = n_ + slack;
    cols_ = first_art_ + art;
    t_.assign(m_, std::vector<Rat>(cols_ + 1));
    basis_.assign(m_, -1);
    int s = n_, a = first_art_;
    for (int i = 0; i < m_; ++i) {
      for (const auto& [j, v] : rows[i].terms) t_[i][j] = v;
      t_[i][cols_] = rows[i].rhs;
      switch (rows[i].rel) {
        case Relation::le: t_[i][s] = 1; basis_[i] = s++; break;
        case Relation::ge: t_[i][s++] = -1; t_[i][a] = 1; basis_[i] = a++; break;
        case Relation::eq: t_[i][a] = 1; basis_[i] = a++; break;
      }
    }
  }

  SolveOutcome solve(const std::vector<Rat>& objective) {
    SolveOutcome out;
    if (trivially_infeasible_) return out;
    if (first_art_ < cols_) {
      std::vector<Rat> c(cols_);
      for (int j = first_art_; j < cols_; ++j) c[j] = -1;
      set_objective(c);
      run(cols_);
      if (sgn(obj_[cols_]) != 0) return out;  // artificials stay positive
      drive_out_artificials();
    }
    std::vector<Rat> c(cols_);
    for (int j = 0; j < n_; ++j) c[j] = objective[j];
    set_objective(c);
    if (!run(first_art_)) {
      out.status = SolveStatus::unbounded;
      return out;
    }
    out.status = SolveStatus::optimal;
    out.assignment = lb_;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) out.assignment[basis_[i]] += t_[i][cols_];
    out.value = 0;
    for (int j = 0; j < n_; ++j) out.value += objective[j] * out.assignment[j];
    return out;
  }

private:
  void set_objective(const std::vector<Rat>& c) {
    obj_.assign(cols_ + 1, Rat(0));
    for (int j = 0; j < cols_; ++j) obj_[j] = c[j];
    for (int i = 0; i < m_; ++i) {
      const Rat cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= cols_; ++j)
        if (sgn(t_[i][j]) != 0) obj_[j] -= cb * t_[i][j];
    }
  }

  void pivot(int r, int c) {
    const Rat p = t_[r][c];
    auto& row = t_[r];
    std::vector<int> nz;
    for (int j = 0; j <= cols_; ++j)
      if (sgn(row[j]) != 0) {
        row[j] /= p;
        nz.push_back(j);
      }
    auto eliminate = [&](std::vector<Rat>& other) {
      if (sgn(other[c]) == 0) return;
      const Rat f = other[c];
      for (int j : nz) other[j] -= f * row[j];
    };
    for (int i = 0; i < m_; ++i)
      if (i != r) eliminate(t_[i]);
    eliminate(obj_);
    basis_[r] = c;
  }

  // Maximizes over columns [0, limit). Returns false when unbounded.
  bool run(int limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < limit; ++j)
        if (sgn(obj_[j]) > 0) { enter = j; break; }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rat ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      int col = -1;
      for (int j = 0; j < first_art_; ++j)
        if (sgn(t_[i][j]) != 0) { col = j; break; }
      if (col >= 0) {
        pivot(i, col);
      } else {
        // Redundant row: drop it.
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
        --i;
      }
    }
  }

  int n_, m_ = 0, cols_ = 0, first_art_ = 0;
  std::vector<Rat> lb_;
  bool trivially_infeasible_ = false;
  std::vector<std::vector<Rat>> t_;
  std::vector<Rat> obj_;
  std::vector<int> basis_;
};

SolveOutcome solve_relaxation(const IntegerProgram& model, const std::vector<Rat>& lb,
                              const std::vector<std::optional<Rat>>& ub) {
  for (std::size_t j = 0; j < lb.size(); ++j)
    if (ub[j] && *ub[j] < lb[j]) return {};
  return Tableau(model, lb, ub).solve(model.objective);
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

}  // namespace

bool satisfies(const IntegerProgram& model, const std::vector<Rat>& x,
               bool check_integrality) {
  if (x.size() != model.vars.size()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& v = model.vars[j];
    if (x[j] < v.lb || (v.ub && x[j] > *v.ub)) return false;
    if (check_integrality && v.integer && !is_integer(x[j])) return false;
  }
  for (const auto& c : model.constraints) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(c.coeffs[j]) != 0) lhs += c.coeffs[j] * x[j];
    switch (c.rel) {
      case Relation::le: if (lhs > c.rhs) return false; break;
      case Relation::ge: if (lhs < c.rhs) return false; break;
      case Relation::eq: if (lhs != c.rhs) return false; break;
    }
  }
  return true;
}

SolveOutcome lp_solve(const IntegerProgram& model, bool relax) {
  if (!relax) return ilp_solve(model);
  model.validate();
  std::vector<Rat> lb;
  std::vector<std::optional<Rat>> ub;
  for (const auto& v : model.vars) {
    lb.push_back(v.lb);
    ub.push_back(v.ub);
  }
  auto out = solve_relaxation(model, lb, ub);
  out.nodes = 1;
  if (out.optimal() && !satisfies(model, out.assignment, false))
    throw std::logic_error("simplex returned an infeasible point");
  return out;
}

SolveOutcome ilp_solve(const IntegerProgram& model, const SolveOptions& opt) {
  model.validate();
  const std::size_t n = model.vars.size();

  // When the objective only involves integer variables with integer
  // coefficients, node bounds can be rounded down.
  bool integral_objective = true;
  for (std::size_t j = 0; j < n; ++j)
    if (sgn(model.objective[j]) != 0 &&
        (!model.vars[j].integer || !is_integer(model.objective[j])))
      integral_objective = false;
  auto node_bound = [&](const Rat& v) -> Rat {
    return integral_objective ? Rat(floor(v)) : v;
  };

  struct Node {
    Rat bound;
    std::uint64_t seq;
    std::vector<Rat> lb;
    std::vector<std::optional<Rat>> ub;
    SolveOutcome lp;
  };
  auto worse = [](const Node& a, const Node& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.seq > b.seq;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(worse);

  SolveOutcome best;
  best.status = SolveStatus::infeasible;
  std::uint64_t seq = 0, nodes = 0;

  auto push = [&](std::vector<Rat> lb, std::vector<std::optional<Rat>> ub) {
    ++nodes;
    auto lp = solve_relaxation(model, lb, ub);
    if (lp.status == SolveStatus::infeasible) return true;
    if (lp.status == SolveStatus::unbounded) return false;
    Rat bound = node_bound(lp.value);
    if (best.optimal() && bound <= best.value) return true;
    open.push(Node{bound, seq++, std::move(lb), std::move(ub), std::move(lp)});
    return true;
  };

  {
    std::vector<Rat> lb;
    std::vector<std::optional<Rat>> ub;
    for (const auto& v : model.vars) {
      lb.push_back(v.lb);
      ub.push_back(v.ub);
    }
    if (!push(std::move(lb), std::move(ub))) {
      SolveOutcome out;
      out.status = SolveStatus::unbounded;
      out.nodes = nodes;
      return out;
    }
  }

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (best.optimal() && node.bound <= best.value) break;  // best-first: done
    if (nodes >= opt.node_limit) {
      SolveOutcome out = best;
      out.status = SolveStatus::node_limit;
      out.value = node.bound;
      out.nodes = nodes;
      return out;
    }

    int branch = -1;
    Rat best_dist;
    const Rat half(1, 2);
    for (std::size_t j = 0; j < n; ++j) {
      if (!model.vars[j].integer) continue;
      const Rat& x = node.lp.assignment[j];
      if (is_integer(x)) continue;
      Rat frac = x - Rat(floor(x));
      Rat dist = frac > half ? frac - half : half - frac;
      if (branch < 0 || dist < best_dist) {
        branch = static_cast<int>(j);
        best_dist = dist;
      }
    }
    if (branch < 0) {
      if (!best.optimal() || node.lp.value > best.value) {
        best = node.lp;
        best.status = SolveStatus::optimal;
      }
      continue;
    }

    const Rat& x = node.lp.assignment[branch];
    auto down_ub = node.ub;
    down_ub[branch] = Rat(floor(x));
    auto up_lb = node.lb;
    up_lb[branch] = Rat(ceil(x));
    if (!push(node.lb, std::move(down_ub)) || !push(std::move(up_lb), node.ub)) {
      SolveOutcome out;
      out.status = SolveStatus::unbounded;
      out.nodes = nodes;
      return out;
    }
  }

  best.nodes = nodes;
  if (best.optimal() && !satisfies(model, best.assignment, true))
    throw std::logic_error("branch-and-bound returned an infeasible point");
  return best;
}

}  // namespace subspace
