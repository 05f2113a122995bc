#pragma once

// Dense matrices over an exact field and the row-reduction based linear
// algebra built on them (rank, kernels, solving, inversion).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qvl/errors.hpp"
#include "qvl/field.hpp"

namespace qvl {

template <Field F>
using Vector = std::vector<typename F::Element>;

/// Dense row-major matrix. Zero rows or columns are legal.
template <Field F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(rows * cols, field_.zero()) {}

  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<Element> data)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw SemanticError("matrix data has " + std::to_string(data_.size()) +
                          " entries, expected " + std::to_string(rows_ * cols_));
    }
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from integer literals mapped into the field.
  static Matrix from_integers(
      const F& field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw SemanticError("ragged matrix literal");
      std::size_t j = 0;
      for (const auto v : row) m(i, j++) = field.from_integer(v);
      ++i;
    }
    return m;
  }

  static Matrix column(const F& field, const Vector<F>& v) {
    return Matrix(field, v.size(), 1, v);
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Element>& data() const noexcept { return data_; }
  std::vector<Element>& data() noexcept { return data_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

  bool operator==(const Matrix& other) const {
    if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) {
      return false;
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
      if (!field_.equal(data_[i], other.data_[i])) return false;
    }
    return true;
  }

  Matrix operator+(const Matrix& other) const {
    require_same_shape(other, "+");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data_[i] = field_.add(data_[i], other.data_[i]);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& other) {
    require_same_shape(other, "+=");
    for (std::size_t i = 0; i < data_.size(); ++i) {
      data_[i] = field_.add(data_[i], other.data_[i]);
    }
    return *this;
  }

  Matrix operator-(const Matrix& other) const {
    require_same_shape(other, "-");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data_[i] = field_.sub(data_[i], other.data_[i]);
    }
    return out;
  }

  Matrix operator-() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.neg(data_[i]);
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) {
      throw SemanticError("cannot multiply " + shape() + " by " + other.shape());
    }
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Element& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          out(i, j) = field_.add(out(i, j), field_.mul(a, other(k, j)));
        }
      }
    }
    return out;
  }

  Matrix scaled(const Element& s) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(s, data_[i]);
    return out;
  }

  Vector<F> apply(const Vector<F>& v) const {
    if (v.size() != cols_) throw SemanticError("vector length mismatch in apply");
    Vector<F> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
      }
    }
    return out;
  }

  Matrix power(std::size_t exponent) const {
    if (!is_square()) throw SemanticError("power of non-square matrix");
    Matrix out = identity(field_, rows_);
    for (std::size_t i = 0; i < exponent; ++i) out = out * *this;
    return out;
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  Matrix block(std::size_t row, std::size_t col, std::size_t nrows,
               std::size_t ncols) const {
    if (row + nrows > rows_ || col + ncols > cols_) {
      throw SemanticError("block out of range of " + shape());
    }
    Matrix out(field_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
      for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row + i, col + j);
    }
    return out;
  }

  void set_block(std::size_t row, std::size_t col, const Matrix& b) {
    if (row + b.rows_ > rows_ || col + b.cols_ > cols_) {
      throw SemanticError("block " + b.shape() + " does not fit in " + shape());
    }
    for (std::size_t i = 0; i < b.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(row + i, col + j) = b(i, j);
    }
  }

  Matrix hstack(const Matrix& right) const {
    if (rows_ != right.rows_) throw SemanticError("hstack row mismatch");
    Matrix out(field_, rows_, cols_ + right.cols_);
    out.set_block(0, 0, *this);
    out.set_block(0, cols_, right);
    return out;
  }

  Matrix vstack(const Matrix& below) const {
    if (cols_ != below.cols_) throw SemanticError("vstack column mismatch");
    Matrix out(field_, rows_ + below.rows_, cols_);
    out.set_block(0, 0, *this);
    out.set_block(rows_, 0, below);
    return out;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& other, const char* op) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw SemanticError(std::string("shape mismatch in ") + op + ": " + shape() +
                          " vs " + other.shape());
    }
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <Field F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j ? "," : "") << m.field().format(m(i, j));
    }
    os << ']';
  }
  return os << ']';
}

template <Field F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form. Columns are scanned left to right and the
/// pivot is the first row (from the current one down) with a nonzero
/// entry, so the result is a deterministic function of the input.
template <Field F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  const F& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && k.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    }
    const auto scale = k.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = k.mul(scale, m(row, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || k.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) = k.sub(m(i, j), k.mul(factor, m(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivot_columns.size();
}

/// Basis of {v : m v = 0}: one vector per free column, with that free
/// variable set to 1 and the other free variables set to 0.
template <Field F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
  const F& k = m.field();
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
      v[ech.pivot_columns[r]] = k.neg(ech.reduced(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <Field F>
std::optional<Vector<F>> solve(const Matrix<F>& a, const Vector<F>& b) {
  const F& k = a.field();
  if (b.size() != a.rows()) throw SemanticError("right-hand side length mismatch");
  const auto ech = row_reduce(a.hstack(Matrix<F>::column(k, b)));
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == a.cols()) {
    return std::nullopt;
  }
  Vector<F> x(a.cols(), k.zero());
  for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
    x[ech.pivot_columns[r]] = ech.reduced(r, a.cols());
  }
  return x;
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto ech = row_reduce(m.hstack(Matrix<F>::identity(m.field(), n)));
  if (ech.pivot_columns.size() < n || (n > 0 && ech.pivot_columns[n - 1] != n - 1)) {
    return std::nullopt;
  }
  return ech.reduced.block(0, n, n, n);
}

template <Field F>
bool is_invertible(const Matrix<F>& m) {
  return m.is_square() && rank(m) == m.rows();
}

extern template class Matrix<PrimeField>;
extern template class Matrix<RationalField>;

}  // namespace qvl
