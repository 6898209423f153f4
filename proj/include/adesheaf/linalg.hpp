// linalg.hpp
//
// Dense exact linear algebra over the rationals: row reduction, rank,
// kernels with free-variable coordinates, inverses.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "adesheaf/rational.hpp"

namespace ade {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void append_row(std::span<const Rational> row);

  bool is_zero() const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Kernel of a matrix, parametrised by its free columns: basis vector k has a
/// 1 at free_columns[k] and 0 at every other free column, so the coordinates
/// of any kernel vector are its entries at the free columns.
struct Kernel {
  std::size_t ambient = 0;
  std::vector<std::size_t> free_columns;
  std::vector<Vector> basis;

  std::size_t dimension() const { return basis.size(); }
  Vector coordinates(const Vector& v) const;
  Vector combine(std::span<const Rational> coords) const;
};

Kernel kernel(const Matrix& m);

/// Throws std::domain_error when the matrix is singular.
Matrix inverse(const Matrix& m);

bool is_zero(std::span<const Rational> v);

}  // namespace ade
