#pragma once

// Small finite geometry over F_q: subspaces in reduced row-echelon form,
// subspace distance, code verification and an exhaustive optimum oracle.
// Only meant for tiny ambient spaces; the bound engine never needs it.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace subspace {

class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using FieldElem = std::uint8_t;

/// F_q as addition/multiplication tables over indices 0..q-1.
/// Prime fields are computed modularly; q in {4, 8, 9} uses a fixed
/// irreducible polynomial (coefficients as base-p digits of the index).
class FiniteField {
public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a * q_ + b]; }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a * q_ + b]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  /// Multiplicative inverse; a != 0.
  FieldElem inv(FieldElem a) const { return inv_[a]; }

  bool operator==(const FiniteField& o) const { return q_ == o.q_; }

private:
  void verify_axioms() const;

  int q_;
  int p_;
  std::vector<FieldElem> add_, mul_, neg_, inv_;
};

std::shared_ptr<const FiniteField> make_field(int q);

using Row = std::vector<FieldElem>;

/// A subspace of F_q^v held as its unique reduced row-echelon basis.
class SubspaceBasis {
public:
  /// Row-reduces `rows` (any spanning set) into canonical form.
  SubspaceBasis(std::shared_ptr<const FiniteField> field, int v,
                std::vector<Row> rows);

  static SubspaceBasis zero(std::shared_ptr<const FiniteField> field, int v);

  int ambient() const { return v_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  const FiniteField& field() const { return *field_; }
  const std::shared_ptr<const FiniteField>& field_ptr() const { return field_; }
  /// Bit j set iff column j carries a pivot.
  std::uint64_t pivot_mask() const;

  bool same_ambient(const SubspaceBasis& o) const {
    return v_ == o.v_ && *field_ == *o.field_;
  }
  bool operator==(const SubspaceBasis& o) const {
    return same_ambient(o) && rows_ == o.rows_;
  }
  bool operator<(const SubspaceBasis& o) const;

private:
  std::shared_ptr<const FiniteField> field_;
  int v_;
  std::vector<Row> rows_;
};

/// Rank of the span of `rows` over `field`.
int rank(const FiniteField& field, std::vector<Row> rows);

/// d_S(X,Y) = 2 dim(X+Y) - dim X - dim Y.
int subspace_distance(const SubspaceBasis& x, const SubspaceBasis& y);

inline constexpr std::uint64_t kDefaultEnumerationGuard = 100000;

/// All subspaces (or all k-subspaces) of F_q^v, ordered by dimension, then
/// pivot set, then free entries. Throws GeometryError past the guard.
std::vector<SubspaceBasis> enumerate_subspaces(
    std::shared_ptr<const FiniteField> field, int v,
    std::optional<int> k = std::nullopt,
    std::uint64_t guard = kDefaultEnumerationGuard);

struct ExplicitCode {
  std::shared_ptr<const FiniteField> field;
  int v = 0;
  std::vector<SubspaceBasis> elements;
};

/// {q, v, subspaces: [[row, ...], ...]} with rows as arrays of field indices.
ExplicitCode code_from_json(const nlohmann::json& j);
nlohmann::json code_to_json(const ExplicitCode& code);

struct CodeReport {
  std::vector<std::int64_t> distribution;  ///< a_0..a_v
  std::optional<int> min_distance;         ///< none for codes of size < 2
  /// First pair (by index) at distance below the requested d.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  bool ok() const { return !violation.has_value(); }
};

CodeReport verify_code(const ExplicitCode& code, int d);

struct OracleResult {
  std::int64_t size = 0;
  ExplicitCode witness;
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kMaxOracleVertices = 4096;

/// Exact A_q(v, d; K) by maximum clique search on the graph of subspaces
/// with dimension in K, adjacent iff their distance is >= d.
OracleResult brute_force_max(int q, int v, int d, const std::set<int>& dims,
                             std::uint64_t guard = kDefaultEnumerationGuard);

/// Maximum clique of an undirected graph given as adjacency bitsets; vertex
/// order is the tie-breaker, so results are reproducible.
std::vector<std::size_t> max_clique(
    const std::vector<std::vector<std::uint64_t>>& adjacency,
    std::uint64_t* nodes = nullptr);

}  // namespace subspace
