#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modseries/field.hpp"

namespace modseries {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over GF(p). Matrices act on column vectors from the
/// left. Every stored entry is reduced into [0, p).
class Mat {
 public:
  Mat(FieldSpec field, std::size_t rows, std::size_t cols);
  // Entries must already lie in [0, p); throws shape or range errors otherwise.
  Mat(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat identity(FieldSpec field, std::size_t n);
  static Mat from_rows(FieldSpec field, std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_columns(FieldSpec field, std::size_t rows, const std::vector<Vec>& cols);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  // Caller keeps the value reduced.
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Vec apply(const Vec& v) const;
  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat scaled(Scalar s) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RowEchelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form. Shape is preserved; zero rows sink to the
/// bottom.
RowEchelon rref(const Mat& m);
std::size_t rank(const Mat& m);
bool is_invertible(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
/// Some x with a·x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Mat& a, const Vec& b);

bool is_zero_vector(const Vec& v);

}  // namespace modseries
