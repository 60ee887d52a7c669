#include "modseries/subspace.hpp"

#include <algorithm>
#include <string>

#include "modseries/error.hpp"

namespace modseries {

namespace {

void require_compatible(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::field, "subspaces over different fields");
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::shape, "ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                                      std::to_string(b.ambient_dim()) + " differ");
}

}  // namespace

SubspaceBasis SubspaceBasis::zero(FieldSpec field, std::size_t ambient_dim) {
  return SubspaceBasis(field, ambient_dim);
}

SubspaceBasis SubspaceBasis::full(FieldSpec field, std::size_t ambient_dim) {
  return row_space(Mat::identity(field, ambient_dim));
}

SubspaceBasis SubspaceBasis::span(FieldSpec field, std::size_t ambient_dim,
                                  const std::vector<Vec>& vectors) {
  if (vectors.empty()) return zero(field, ambient_dim);
  for (const Vec& v : vectors)
    for (Scalar e : v)
      if (e >= field.modulus())
        throw Error(ErrorKind::range, "entry " + std::to_string(e) + " not in [0, " +
                                          std::to_string(field.modulus()) + ")");
  return row_space(Mat::from_rows(field, ambient_dim, vectors));
}

SubspaceBasis SubspaceBasis::row_space(const Mat& m) {
  RowEchelon e = rref(m);
  SubspaceBasis s(m.field(), m.cols());
  s.pivots_ = std::move(e.pivots);
  s.rows_.reserve(s.pivots_.size());
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.rows_.push_back(e.reduced.row(i));
  return s;
}

Vec SubspaceBasis::reduce(const Vec& v) const {
  if (v.size() != ambient_dim_)
    throw Error(ErrorKind::shape, "vector of length " + std::to_string(v.size()) +
                                      " in ambient dimension " + std::to_string(ambient_dim_));
  Vec out = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      out[j] = field_.sub(out[j], field_.mul(c, rows_[i][j]));
  }
  return out;
}

bool SubspaceBasis::contains(const Vec& v) const { return is_zero_vector(reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  require_compatible(*this, other);
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& r) { return contains(r); });
}

Vec SubspaceBasis::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Mat SubspaceBasis::as_matrix() const { return Mat::from_rows(field_, ambient_dim_, rows_); }

Mat SubspaceBasis::inclusion() const { return as_matrix().transpose(); }

Mat SubspaceBasis::coordinate_map() const {
  Mat m(field_, rows_.size(), ambient_dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i) m(i, pivots_[i]) = 1;
  return m;
}

Vec EchelonBuilder::reduce(const Vec& v) const {
  if (v.size() != ambient_dim_)
    throw Error(ErrorKind::shape, "vector of length " + std::to_string(v.size()) +
                                      " in ambient dimension " + std::to_string(ambient_dim_));
  Vec out = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      out[j] = field_.sub(out[j], field_.mul(c, rows_[i][j]));
  }
  return out;
}

Vec EchelonBuilder::add(const Vec& v) {
  Vec r = reduce(v);
  auto lead = std::find_if(r.begin(), r.end(), [](Scalar e) { return e != 0; });
  if (lead == r.end()) return {};
  const std::size_t pivot = static_cast<std::size_t>(lead - r.begin());
  const Scalar scale = field_.inv(*lead);
  for (Scalar& e : r) e = field_.mul(e, scale);
  // Clear the new pivot column from the existing rows.
  for (Vec& row : rows_) {
    const Scalar c = row[pivot];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) row[j] = field_.sub(row[j], field_.mul(c, r[j]));
  }
  rows_.push_back(r);
  pivots_.push_back(pivot);
  return r;
}

SubspaceBasis EchelonBuilder::finish() const { return SubspaceBasis::span(field_, ambient_dim_, rows_); }

bool lex_less(const SubspaceBasis& a, const SubspaceBasis& b) {
  return std::lexicographical_compare(a.rows().begin(), a.rows().end(), b.rows().begin(),
                                      b.rows().end());
}

SubspaceBasis kernel_basis(const Mat& m) {
  RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  // One kernel vector per free column: set it to 1 and solve for the pivots.
  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    vectors.push_back(std::move(v));
  }
  return SubspaceBasis::span(f, n, vectors);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_compatible(a, b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  std::vector<Vec> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return SubspaceBasis::span(a.field(), a.ambient_dim(), rows);
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_compatible(a, b);
  const FieldSpec& f = a.field();
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return SubspaceBasis::zero(f, n);
  // Columns a_1..a_r, -b_1..-b_s; a kernel vector (x, y) gives Σ x_i a_i = Σ y_j b_j.
  const std::size_t r = a.dim();
  Mat stacked(f, n, r + b.dim());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, i) = a.rows()[i][j];
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, r + i) = f.neg(b.rows()[i][j]);
  SubspaceBasis k = kernel_basis(stacked);
  std::vector<Vec> vectors;
  vectors.reserve(k.dim());
  for (const Vec& coeffs : k.rows()) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coeffs[i], a.rows()[i][j]));
    }
    vectors.push_back(std::move(v));
  }
  return SubspaceBasis::span(f, n, vectors);
}

SubspaceBasis image(const Mat& m, const SubspaceBasis& s) {
  if (m.cols() != s.ambient_dim())
    throw Error(ErrorKind::shape, "map with " + std::to_string(m.cols()) +
                                      " columns applied to ambient dimension " +
                                      std::to_string(s.ambient_dim()));
  std::vector<Vec> vectors;
  vectors.reserve(s.dim());
  for (const Vec& r : s.rows()) vectors.push_back(m.apply(r));
  return SubspaceBasis::span(m.field(), m.rows(), vectors);
}

}  // namespace modseries
