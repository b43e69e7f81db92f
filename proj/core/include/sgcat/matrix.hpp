#pragma once

#include <optional>
#include <vector>

#include "sgcat/field.hpp"

namespace sgcat {

// Dense exact matrix over a Field. Row-major storage.
class Mat {
 public:
  Mat() : F_(Field::rationals()), rows_(0), cols_(0) {}
  Mat(Field F, int rows, int cols) : F_(F), rows_(rows), cols_(cols), a_(size_t(rows) * cols, F.zero()) {}

  static Mat identity(Field F, int n);
  static Mat zero(Field F, int rows, int cols) { return Mat(F, rows, cols); }
  static Mat column(Field F, const std::vector<Scalar>& v);

  const Field& field() const { return F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat negated() const;
  Mat transposed() const;

  bool is_zero() const;
  bool equals(const Mat& o) const;

  Mat col(int j) const;
  Mat cols_selected(const std::vector<int>& idx) const;
  Mat rows_selected(const std::vector<int>& idx) const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat block_diag(const Mat& a, const Mat& b);

  // In-place reduced row echelon form; returns rank, records pivot columns.
  int rref(std::vector<int>* pivot_cols = nullptr);
  int rank() const;

  // Columns form a basis of the right nullspace {x : A x = 0}.
  Mat kernel_basis() const;
  // Columns form an echelonized basis of the column space.
  Mat column_space_basis() const;
  // Any solution X of A X = rhs, or nullopt if inconsistent.
  std::optional<Mat> solve(const Mat& rhs) const;
  std::optional<Mat> inverse() const;
  bool is_invertible() const;

  // Flatten column-major: column j stacked; used to treat maps as vectors.
  std::vector<Scalar> vec() const;
  static Mat unvec(Field F, const std::vector<Scalar>& v, int rows, int cols);

 private:
  Field F_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// Span utilities. Bases are matrices whose columns span a subspace.

// Coordinates of v in the span of basis columns, or nullopt if outside.
std::optional<Mat> coords_in_span(const Mat& basis, const Mat& v);
bool in_span(const Mat& basis, const Mat& v);
// dim(span(A) ∩ span(B)).
int intersection_dim(const Mat& A, const Mat& B);
// Basis of span(A) ∩ span(B), columns in the common ambient space.
Mat intersection_basis(const Mat& A, const Mat& B);

}  // namespace sgcat
