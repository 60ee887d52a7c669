#pragma once

#include <cstddef>
#include <vector>

#include "modseries/matrix.hpp"

namespace modseries {

/// Subspace of GF(p)^n held as its reduced row echelon basis. The form is
/// canonical, so equal subspaces compare equal entry by entry.
class SubspaceBasis {
 public:
  static SubspaceBasis zero(FieldSpec field, std::size_t ambient_dim);
  static SubspaceBasis full(FieldSpec field, std::size_t ambient_dim);
  static SubspaceBasis span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static SubspaceBasis row_space(const Mat& m);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == ambient_dim_; }

  /// v minus its component along this subspace, taken along the pivot
  /// coordinates. Zero exactly when v lies in the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coefficients of v in the basis; meaningful only when contains(v).
  Vec coordinates(const Vec& v) const;

  /// dim × n, basis vectors as rows.
  Mat as_matrix() const;
  /// n × dim, basis vectors as columns.
  Mat inclusion() const;
  /// dim × n, reads the pivot entries: inverse of inclusion() on the subspace.
  Mat coordinate_map() const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  SubspaceBasis(FieldSpec field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}

  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally grown basis kept reduced at every pivot, for closure loops
/// that adjoin one vector at a time.
class EchelonBuilder {
 public:
  EchelonBuilder(FieldSpec field, std::size_t ambient_dim) : field_(field), ambient_dim_(ambient_dim) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  Vec reduce(const Vec& v) const;
  /// Adjoins v; returns the reduced, normalized new row or an empty vector
  /// when v was already in the span.
  Vec add(const Vec& v);
  SubspaceBasis finish() const;

 private:
  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Lexicographic order on the canonical row lists (row by row, entry by entry).
bool lex_less(const SubspaceBasis& a, const SubspaceBasis& b);

/// Right null space {v : m·v = 0}.
SubspaceBasis kernel_basis(const Mat& m);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Image of a subspace under a linear map.
SubspaceBasis image(const Mat& m, const SubspaceBasis& s);

}  // namespace modseries
