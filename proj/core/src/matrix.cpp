#include "refcalc/matrix.hpp"

#include "refcalc/errors.hpp"

namespace refcalc {

namespace {

void check_domain(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.field().contains(m(r, c)))
        throw DomainMismatch("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") is in " +
                             m(r, c).domain_name() + ", expected " + m.field().name());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw TypeError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  std::vector<Vector> conv;
  for (const auto& row : rows) {
    Vector v;
    for (long x : row) v.push_back(field.from_int(x));
    conv.push_back(std::move(v));
  }
  return from_rows(field, conv);
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw TypeError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw TypeError("matrix-vector dimension mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw TypeError("matrix product dimension mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw TypeError("matrix sum dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw TypeError("matrix difference dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i] == b.data_[i]) continue;
    const auto& x = a.data_[i];
    const auto& y = b.data_[i];
    if (x.is_prime() && y.is_prime()) return x.prime_elem().value < y.prime_elem().value;
    if (x.is_rational() && y.is_rational()) return x.rational() < y.rational();
    return x.to_string() < y.to_string();
  }
  return false;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Echelon rref(const Matrix& input) {
  check_domain(input);
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector characteristic_polynomial(const Matrix& input) {
  if (input.rows() != input.cols()) throw TypeError("characteristic polynomial of a non-square matrix");
  check_domain(input);
  const std::size_t n = input.rows();
  const Field& f = input.field();
  Matrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j).is_zero()) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    const Scalar inv = h(j + 1, j).inverse();
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h(r, j).is_zero()) continue;
      const Scalar u = h(r, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(j + 1, c);
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, j + 1) += u * h(rr, r);
    }
  }
  // p[m] = charpoly of the leading m x m block.
  std::vector<Vector> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    Vector next(m + 1, f.zero());
    // (x - h[m-1][m-1]) p[m-1]
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] += p[m - 1][k];
      next[k] -= h(m - 1, m - 1) * p[m - 1][k];
    }
    Scalar prod = f.one();
    for (std::size_t i = m - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      const Scalar coef = h(i, m - 1) * prod;
      for (std::size_t k = 0; k < p[i].size(); ++k) next[k] -= coef * p[i][k];
    }
    p[m] = std::move(next);
  }
  return p[n];
}

}  // namespace refcalc
