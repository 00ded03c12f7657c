#pragma once

// Exact integer matrices over GMP integers, with the normal forms used to
// compute kernels, images and quotients of lattices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace realh1 {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Lattices are passed around as basis matrices whose *columns* are the
/// basis vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);
  /// Block-diagonal sum.
  static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  /// Columns `first, first+1, ...` up to (excluding) `last`.
  IntMatrix column_range(std::size_t first, std::size_t last) const;
  IntMatrix concat_columns(const IntMatrix& other) const;

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  /// Total order (shape, then row-major entries) for use as a map key.
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& k, const IntVector& v);
bool is_zero(const IntVector& v);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// left * a * right == diagonal, with left and right unimodular and the
/// nonzero diagonal entries positive, d_0 | d_1 | ... | d_{rank-1}.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<Integer> diagonal;  // length min(rows, cols)
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form; zero rows are dropped.
IntMatrix hermite_rows(const IntMatrix& a);

/// Canonical basis (as columns) of the lattice spanned by the columns of `generators`.
IntMatrix lattice_basis(const IntMatrix& generators);
/// Canonical basis (as columns) of {x : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);
/// Some x with a x = b, if one exists over the integers.
std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b);
/// True if the column span of `basis` equals its rational span intersected with Z^n.
bool is_saturated(const IntMatrix& basis);
/// Inverse of a matrix with determinant +-1. Throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Precomputed integer solver for a fixed matrix.
class LatticeSolver {
 public:
  LatticeSolver() = default;
  explicit LatticeSolver(const IntMatrix& a);

  std::optional<IntVector> solve(const IntVector& b) const;
  bool contains(const IntVector& b) const { return solve(b).has_value(); }

 private:
  std::size_t cols_ = 0;
  SmithForm smith_;
};

}  // namespace realh1
