#include "modseries/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "modseries/error.hpp"

namespace modseries {

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::field, "matrices over different fields");
}

std::string shape_of(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

Mat::Mat(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Mat::Mat(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorKind::shape, "expected " + std::to_string(rows * cols) + " entries for a " +
                                      shape_of(rows, cols) + " matrix, got " +
                                      std::to_string(entries_.size()));
  for (Scalar e : entries_)
    if (e >= field_.modulus())
      throw Error(ErrorKind::range, "entry " + std::to_string(e) + " not in [0, " +
                                        std::to_string(field_.modulus()) + ")");
}

Mat Mat::identity(FieldSpec field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldSpec field, std::size_t cols, const std::vector<Vec>& rows) {
  std::vector<Scalar> entries;
  entries.reserve(rows.size() * cols);
  for (const Vec& r : rows) {
    if (r.size() != cols)
      throw Error(ErrorKind::shape, "row of length " + std::to_string(r.size()) +
                                        ", expected " + std::to_string(cols));
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Mat(field, rows.size(), cols, std::move(entries));
}

Mat Mat::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vec>& cols) {
  return from_rows(field, rows, cols).transpose();
}

Vec Mat::row(std::size_t r) const {
  return Vec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_)
    throw Error(ErrorKind::shape, "cannot apply " + shape_of(rows_, cols_) +
                                      " matrix to a vector of length " + std::to_string(v.size()));
  Vec out(rows_, 0);
  const std::uint64_t p = field_.modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{(*this)(r, c)} * v[c]) % p;
    out[r] = static_cast<Scalar>(acc);
  }
  return out;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Scalar e) { return e == 0; });
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::shape, "cannot multiply " + shape_of(a.rows_, a.cols_) + " by " +
                                      shape_of(b.rows_, b.cols_));
  const std::uint64_t p = a.field_.modulus();
  Mat out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j) = static_cast<Scalar>((out(i, j) + aik * b(k, j)) % p);
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorKind::shape, "cannot add " + shape_of(a.rows_, a.cols_) + " and " +
                                      shape_of(b.rows_, b.cols_));
  Mat out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = a.field_.add(a.entries_[i], b.entries_[i]);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) { return a + b.scaled(a.field().neg(1)); }

Mat Mat::scaled(Scalar s) const {
  Mat out = *this;
  for (Scalar& e : out.entries_) e = field_.mul(e, s);
  return out;
}

RowEchelon rref(const Mat& m) {
  const FieldSpec& f = m.field();
  Mat a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t pr = lead_row;
    while (pr < a.rows() && a(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(lead_row, j));
    const Scalar scale = f.inv(a(lead_row, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) = f.mul(a(lead_row, j), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c) == 0) continue;
      const Scalar factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a(r, j) = f.sub(a(r, j), f.mul(factor, a(lead_row, j)));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows())
    throw Error(ErrorKind::shape, "right-hand side length " + std::to_string(b.size()) +
                                      " does not match " + std::to_string(a.rows()) + " rows");
  Mat aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

bool is_zero_vector(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar e) { return e == 0; });
}

}  // namespace modseries
