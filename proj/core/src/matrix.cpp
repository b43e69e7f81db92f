#include "sgcat/matrix.hpp"

namespace sgcat {

Mat Mat::identity(Field F, int n) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Mat Mat::column(Field F, const std::vector<Scalar>& v) {
  Mat m(F, int(v.size()), 1);
  for (int i = 0; i < int(v.size()); ++i) m.at(i, 0) = v[i];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw internal_error("ShapeMismatch", "matrix product shapes");
  Mat r(F_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (F_.is_zero(aik)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (F_.is_zero(o.at(k, j))) continue;
        r.at(i, j) = F_.add(r.at(i, j), F_.mul(aik, o.at(k, j)));
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("ShapeMismatch", "matrix sum shapes");
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw internal_error("ShapeMismatch", "matrix difference shapes");
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.mul(a_[i], c);
  return r;
}

Mat Mat::negated() const {
  Mat r(F_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.neg(a_[i]);
  return r;
}

Mat Mat::transposed() const {
  Mat r(F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!F_.is_zero(x)) return false;
  return true;
}

bool Mat::equals(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!F_.eq(a_[i], o.a_[i])) return false;
  return true;
}

Mat Mat::col(int j) const {
  Mat r(F_, rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Mat Mat::cols_selected(const std::vector<int>& idx) const {
  Mat r(F_, rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

Mat Mat::rows_selected(const std::vector<int>& idx) const {
  Mat r(F_, int(idx.size()), cols_);
  for (int i = 0; i < int(idx.size()); ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
  return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) throw internal_error("ShapeMismatch", "hstack");
  Mat r(a.F_, a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ != b.cols_) throw internal_error("ShapeMismatch", "vstack");
  Mat r(a.F_, a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

Mat Mat::block_diag(const Mat& a, const Mat& b) {
  Mat r(a.F_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return r;
}

int Mat::rref(std::vector<int>* pivot_cols) {
  int rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (int j = 0; j < cols_ && rank < rows_; ++j) {
    int piv = -1;
    for (int i = rank; i < rows_; ++i)
      if (!F_.is_zero(at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < cols_; ++k) std::swap(at(piv, k), at(rank, k));
    Scalar c = F_.inv(at(rank, j));
    for (int k = j; k < cols_; ++k) at(rank, k) = F_.mul(at(rank, k), c);
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || F_.is_zero(at(i, j))) continue;
      Scalar f = at(i, j);
      for (int k = j; k < cols_; ++k) at(i, k) = F_.sub(at(i, k), F_.mul(f, at(rank, k)));
    }
    if (pivot_cols) pivot_cols->push_back(j);
    ++rank;
  }
  return rank;
}

int Mat::rank() const {
  Mat c = *this;
  return c.rref();
}

Mat Mat::kernel_basis() const {
  Mat r = *this;
  std::vector<int> piv;
  r.rref(&piv);
  std::vector<bool> is_piv(cols_, false);
  for (int j : piv) is_piv[j] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  Mat K(F_, cols_, int(free_cols.size()));
  for (int t = 0; t < int(free_cols.size()); ++t) {
    int fc = free_cols[t];
    K.at(fc, t) = F_.one();
    for (int i = 0; i < int(piv.size()); ++i) K.at(piv[i], t) = F_.neg(r.at(i, fc));
  }
  return K;
}

Mat Mat::column_space_basis() const {
  Mat r = *this;
  std::vector<int> piv;
  r.rref(&piv);
  // Echelonize the selected columns so the basis is canonical.
  Mat sel = cols_selected(piv);
  Mat st = sel.transposed();
  st.rref();
  return st.transposed();
}

std::optional<Mat> Mat::solve(const Mat& rhs) const {
  if (rhs.rows_ != rows_) throw internal_error("ShapeMismatch", "solve");
  Mat aug = hstack(*this, rhs);
  std::vector<int> piv;
  aug.rref(&piv);
  // Inconsistent iff a pivot lands in the rhs block.
  for (int j : piv)
    if (j >= cols_) return std::nullopt;
  Mat X(F_, cols_, rhs.cols_);
  for (int i = 0; i < int(piv.size()); ++i)
    for (int j = 0; j < rhs.cols_; ++j) X.at(piv[i], j) = aug.at(i, cols_ + j);
  return X;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Mat aug = hstack(*this, identity(F_, rows_));
  std::vector<int> piv;
  int rk = aug.rref(&piv);
  if (rk != rows_) return std::nullopt;
  for (int i = 0; i < rows_; ++i)
    if (piv[i] != i) return std::nullopt;
  Mat inv(F_, rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

bool Mat::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

std::vector<Scalar> Mat::vec() const {
  std::vector<Scalar> v;
  v.reserve(a_.size());
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Mat Mat::unvec(Field F, const std::vector<Scalar>& v, int rows, int cols) {
  if (int(v.size()) != rows * cols) throw internal_error("ShapeMismatch", "unvec");
  Mat m(F, rows, cols);
  size_t t = 0;
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = v[t++];
  return m;
}

std::optional<Mat> coords_in_span(const Mat& basis, const Mat& v) { return basis.solve(v); }

bool in_span(const Mat& basis, const Mat& v) { return coords_in_span(basis, v).has_value(); }

int intersection_dim(const Mat& A, const Mat& B) {
  if (A.empty() || B.empty()) return 0;
  int ra = A.rank(), rb = B.rank();
  int rab = Mat::hstack(A, B).rank();
  return ra + rb - rab;
}

Mat intersection_basis(const Mat& A, const Mat& B) {
  if (A.empty() || B.empty()) return Mat(A.field(), A.rows(), 0);
  // Nullspace of [A | -B] gives pairs (x, y) with A x = B y.
  Mat stacked = Mat::hstack(A, B.negated());
  Mat K = stacked.kernel_basis();
  Mat xpart(A.field(), A.cols(), K.cols());
  for (int j = 0; j < K.cols(); ++j)
    for (int i = 0; i < A.cols(); ++i) xpart.at(i, j) = K.at(i, j);
  Mat vecs = A * xpart;
  return vecs.column_space_basis();
}

}  // namespace sgcat
