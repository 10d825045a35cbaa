#include "subspace/gfspace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "subspace/qarith.hpp"

namespace subspace {

namespace {

// Monic irreducible polynomials, coefficients from x^0 upwards.
const std::map<int, std::vector<int>>& irreducibles() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1, 1}},     // x^2 + x + 1
      {8, {1, 1, 0, 1}},  // x^3 + x + 1
      {9, {2, 2, 1}},     // x^2 + 2x + 2
  };
  return table;
}

std::vector<int> digits(int x, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i, x /= p) d[i] = x % p;
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  if (q < 2 || q > 255 || !is_prime_power(q))
    throw GeometryError("field size " + std::to_string(q) +
                        " not supported by the geometry oracle");
  auto [p, e] = factor_prime_power(q);
  p_ = static_cast<int>(p);
  if (e > 1 && !irreducibles().contains(q))
    throw GeometryError("no irreducible polynomial tabulated for q = " +
                        std::to_string(q));

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.resize(q);
  if (e == 1) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<FieldElem>((a + b) % q);
        mul_[a * q + b] = static_cast<FieldElem>((a * b) % q);
      }
  } else {
    const auto& poly = irreducibles().at(q);
    for (int a = 0; a < q; ++a) {
      auto da = digits(a, p_, e);
      for (int b = 0; b < q; ++b) {
        auto db = digits(b, p_, e);
        std::vector<int> s(e);
        for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = static_cast<FieldElem>(undigits(s, p_));

        std::vector<int> prod(2 * e - 1, 0);
        for (int i = 0; i < e; ++i)
          for (int j = 0; j < e; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int deg = 2 * e - 2; deg >= e; --deg) {
          int c = prod[deg];
          if (c == 0) continue;
          for (int i = 0; i <= e; ++i)
            prod[deg - e + i] =
                ((prod[deg - e + i] - c * poly[i]) % p_ + p_) % p_;
        }
        prod.resize(e);
        mul_[a * q + b] = static_cast<FieldElem>(undigits(prod, p_));
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<FieldElem>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<FieldElem>(b);
    }
  }
  verify_axioms();
}

void FiniteField::verify_axioms() const {
  const int q = q_;
  for (int a = 1; a < q; ++a)
    if (mul(static_cast<FieldElem>(a), inv_[a]) != 1)
      throw GeometryError("field table has a non-invertible element");
  if (q > 16) return;  // prime fields beyond this are modular by construction
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      auto fa = static_cast<FieldElem>(a), fb = static_cast<FieldElem>(b);
      if (add(fa, fb) != add(fb, fa) || mul(fa, fb) != mul(fb, fa))
        throw GeometryError("field tables not commutative");
      for (int c = 0; c < q; ++c) {
        auto fc = static_cast<FieldElem>(c);
        if (add(add(fa, fb), fc) != add(fa, add(fb, fc)) ||
            mul(mul(fa, fb), fc) != mul(fa, mul(fb, fc)) ||
            mul(fa, add(fb, fc)) != add(mul(fa, fb), mul(fa, fc)))
          throw GeometryError("field axioms violated");
      }
    }
}

std::shared_ptr<const FiniteField> make_field(int q) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_shared<const FiniteField>(q);
  return slot;
}

namespace {

// In-place reduced row-echelon form; drops zero rows.
void reduce(const FiniteField& f, std::vector<Row>& rows, int v) {
  std::size_t lead = 0;
  for (int col = 0; col < v && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    FieldElem s = f.inv(rows[lead][col]);
    for (auto& x : rows[lead]) x = f.mul(x, s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      FieldElem c = rows[r][col];
      for (int j = 0; j < v; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(c, rows[lead][j]));
    }
    ++lead;
  }
  rows.resize(lead);
}

}  // namespace

SubspaceBasis::SubspaceBasis(std::shared_ptr<const FiniteField> field, int v,
                             std::vector<Row> rows)
    : field_(std::move(field)), v_(v), rows_(std::move(rows)) {
  if (v < 0 || v > 63) throw GeometryError("ambient dimension out of range");
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != v)
      throw GeometryError("row length does not match ambient dimension");
    for (auto x : r)
      if (x >= field_->order()) throw GeometryError("entry outside the field");
  }
  reduce(*field_, rows_, v_);
}

SubspaceBasis SubspaceBasis::zero(std::shared_ptr<const FiniteField> field,
                                  int v) {
  return SubspaceBasis(std::move(field), v, {});
}

std::uint64_t SubspaceBasis::pivot_mask() const {
  std::uint64_t mask = 0;
  for (const auto& r : rows_) {
    auto it = std::find_if(r.begin(), r.end(), [](auto x) { return x != 0; });
    mask |= std::uint64_t{1} << (it - r.begin());
  }
  return mask;
}

bool SubspaceBasis::operator<(const SubspaceBasis& o) const {
  if (v_ != o.v_) return v_ < o.v_;
  if (field_->order() != o.field_->order())
    return field_->order() < o.field_->order();
  if (dim() != o.dim()) return dim() < o.dim();
  return rows_ < o.rows_;
}

int rank(const FiniteField& field, std::vector<Row> rows) {
  if (rows.empty()) return 0;
  int v = static_cast<int>(rows.front().size());
  reduce(field, rows, v);
  return static_cast<int>(rows.size());
}

int subspace_distance(const SubspaceBasis& x, const SubspaceBasis& y) {
  if (!x.same_ambient(y))
    throw GeometryError("subspace_distance: ambient spaces differ");
  std::vector<Row> stacked = x.rows();
  stacked.insert(stacked.end(), y.rows().begin(), y.rows().end());
  int sum_dim = rank(x.field(), std::move(stacked));
  return 2 * sum_dim - x.dim() - y.dim();
}

std::vector<SubspaceBasis> enumerate_subspaces(
    std::shared_ptr<const FiniteField> field, int v, std::optional<int> k,
    std::uint64_t guard) {
  const int q = field->order();
  int lo = k.value_or(0), hi = k.value_or(v);
  BigInt total = 0;
  for (int i = lo; i <= hi; ++i) total += gauss(v, i, q);
  if (total > BigInt(static_cast<unsigned long>(guard)))
    throw GeometryError("enumeration of " + total.get_str() +
                        " subspaces exceeds guard " + std::to_string(guard));

  std::vector<SubspaceBasis> out;
  out.reserve(total.get_ui());
  for (int dim = lo; dim <= hi; ++dim) {
    if (dim < 0 || dim > v) continue;
    std::vector<int> piv(dim);
    for (int i = 0; i < dim; ++i) piv[i] = i;
    while (true) {
      std::uint64_t pmask = 0;
      for (int c : piv) pmask |= std::uint64_t{1} << c;
      std::vector<std::pair<int, int>> free;  // (row, column)
      for (int r = 0; r < dim; ++r)
        for (int c = piv[r] + 1; c < v; ++c)
          if (!(pmask >> c & 1)) free.emplace_back(r, c);
      std::vector<FieldElem> vals(free.size(), 0);
      while (true) {
        std::vector<Row> rows(dim, Row(v, 0));
        for (int r = 0; r < dim; ++r) rows[r][piv[r]] = 1;
        for (std::size_t i = 0; i < free.size(); ++i)
          rows[free[i].first][free[i].second] = vals[i];
        out.emplace_back(field, v, std::move(rows));
        std::size_t i = 0;
        while (i < vals.size() && ++vals[i] == q) vals[i++] = 0;
        if (i == vals.size()) break;
      }
      // next pivot combination
      int i = dim - 1;
      while (i >= 0 && piv[i] == v - dim + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExplicitCode code_from_json(const nlohmann::json& j) {
  try {
    ExplicitCode code;
    int q = j.at("q").get<int>();
    code.v = j.at("v").get<int>();
    code.field = make_field(q);
    for (const auto& sub : j.at("subspaces")) {
      std::vector<Row> rows;
      for (const auto& row : sub) {
        Row r;
        for (const auto& x : row) {
          int val = x.get<int>();
          if (val < 0 || val >= q)
            throw GeometryError("entry " + std::to_string(val) +
                                " is not a field index");
          r.push_back(static_cast<FieldElem>(val));
        }
        rows.push_back(std::move(r));
      }
      code.elements.emplace_back(code.field, code.v, std::move(rows));
    }
    return code;
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(std::string("malformed code file: ") + e.what());
  }
}

nlohmann::json code_to_json(const ExplicitCode& code) {
  nlohmann::json subs = nlohmann::json::array();
  for (const auto& s : code.elements) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : s.rows()) {
      nlohmann::json row = nlohmann::json::array();
      for (auto x : r) row.push_back(static_cast<int>(x));
      rows.push_back(row);
    }
    subs.push_back(rows);
  }
  return {{"q", code.field->order()}, {"v", code.v}, {"subspaces", subs}};
}

CodeReport verify_code(const ExplicitCode& code, int d) {
  CodeReport rep;
  rep.distribution.assign(code.v + 1, 0);
  const auto& el = code.elements;
  for (const auto& s : el) {
    if (s.ambient() != code.v || !(s.field() == *code.field))
      throw GeometryError("code element outside the declared ambient space");
    ++rep.distribution[s.dim()];
  }
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      int dist = subspace_distance(el[i], el[j]);
      if (!rep.min_distance || dist < *rep.min_distance)
        rep.min_distance = dist;
      if (dist < d && !rep.violation) rep.violation = {i, j};
    }
  return rep;
}

namespace {

struct CliqueSearch {
  const std::vector<std::vector<std::uint64_t>>& adj;
  std::size_t words;
  std::vector<std::size_t> best, cur;
  std::uint64_t nodes = 0;

  static bool empty(const std::vector<std::uint64_t>& s) {
    return std::all_of(s.begin(), s.end(), [](auto w) { return w == 0; });
  }

  void expand(std::vector<std::uint64_t> cand) {
    ++nodes;
    // Greedy colouring gives an upper bound per vertex.
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    std::vector<std::uint64_t> uncol = cand;
    std::size_t c = 0;
    while (!empty(uncol)) {
      ++c;
      std::vector<std::uint64_t> avail = uncol;
      for (std::size_t w = 0; w < words; ++w) {
        while (avail[w]) {
          int b = std::countr_zero(avail[w]);
          std::size_t v = w * 64 + b;
          avail[w] &= avail[w] - 1;
          uncol[w] &= ~(std::uint64_t{1} << b);
          for (std::size_t x = 0; x < words; ++x) avail[x] &= ~adj[v][x];
          order.push_back(v);
          colour.push_back(c);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (cur.size() + colour[i] <= best.size()) return;
      std::size_t v = order[i];
      cur.push_back(v);
      std::vector<std::uint64_t> next(words);
      for (std::size_t x = 0; x < words; ++x) next[x] = cand[x] & adj[v][x];
      if (empty(next)) {
        if (cur.size() > best.size()) best = cur;
      } else {
        expand(std::move(next));
      }
      cur.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }
};

}  // namespace

std::vector<std::size_t> max_clique(
    const std::vector<std::vector<std::uint64_t>>& adjacency,
    std::uint64_t* nodes) {
  const std::size_t n = adjacency.size();
  if (n == 0) return {};
  CliqueSearch s{adjacency, (n + 63) / 64, {}, {}, 0};
  std::vector<std::uint64_t> all(s.words, 0);
  for (std::size_t v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  s.expand(all);
  if (nodes) *nodes = s.nodes;
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

OracleResult brute_force_max(int q, int v, int d, const std::set<int>& dims,
                             std::uint64_t guard) {
  auto field = make_field(q);
  std::vector<SubspaceBasis> verts;
  for (int k : dims) {
    if (k < 0 || k > v) continue;
    auto part = enumerate_subspaces(field, v, k, guard);
    verts.insert(verts.end(), part.begin(), part.end());
    if (verts.size() > guard)
      throw GeometryError("oracle vertex count exceeds guard");
  }
  if (verts.size() > kMaxOracleVertices)
    throw GeometryError("oracle graph with " + std::to_string(verts.size()) +
                        " vertices is too large");
  const std::size_t n = verts.size(), words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> adj(n,
                                              std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (subspace_distance(verts[i], verts[j]) >= d) {
        adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
        adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
  OracleResult res;
  auto clique = max_clique(adj, &res.nodes);
  res.size = static_cast<std::int64_t>(clique.size());
  res.witness.field = field;
  res.witness.v = v;
  for (auto idx : clique) res.witness.elements.push_back(verts[idx]);
  return res;
}

}  // namespace subspace
