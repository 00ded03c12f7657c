#pragma once

// Linear algebra over the two-element field, and orbit partitions of
// affine actions on F2^d.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace realh1 {

/// Coordinate vector over F2; entries are 0 or 1.
using F2Vector = std::vector<std::uint8_t>;

std::string to_string(const F2Vector& v);
F2Vector f2_add(const F2Vector& a, const F2Vector& b);
bool f2_is_zero(const F2Vector& v);

/// Point code with coordinate 0 in the most significant position, so that
/// integer order on codes is lexicographic order on coordinate vectors.
std::uint64_t f2_encode(const F2Vector& v);
F2Vector f2_decode(std::uint64_t code, std::size_t dim);

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_columns(std::size_t rows, const std::vector<F2Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint8_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  F2Vector column(std::size_t j) const;
  F2Vector operator*(const F2Vector& v) const;
  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Matrix operator+(const F2Matrix& rhs) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Reduced row echelon form; `pivots[k]` is the pivot column of row k.
struct F2Echelon {
  F2Matrix reduced;  // only the nonzero rows
  std::vector<std::size_t> pivots;
};

F2Echelon f2_rref(const F2Matrix& a);
std::size_t f2_rank(const F2Matrix& a);
std::optional<F2Vector> f2_solve(const F2Matrix& a, const F2Vector& b);
/// Basis of {x : a x = 0}, one vector per free column of the echelon form.
std::vector<F2Vector> f2_kernel(const F2Matrix& a);
/// Throws std::invalid_argument if `a` is singular.
F2Matrix f2_inverse(const F2Matrix& a);

/// x -> linear * x + translation.
struct AffineF2Map {
  F2Matrix linear;
  F2Vector translation;

  F2Vector apply(const F2Vector& x) const;
  std::size_t dimension() const { return translation.size(); }
};

/// Orbits of a group acting on all of F2^dimension.
///
/// Orbits are numbered in increasing order of their representative, which is
/// the lexicographically smallest member.
struct OrbitPartition {
  std::size_t dimension = 0;
  std::vector<std::uint32_t> orbit_of;        // indexed by point code
  std::vector<std::uint64_t> representatives;  // point codes
  std::vector<std::uint64_t> sizes;

  std::size_t count() const { return representatives.size(); }
  std::size_t orbit_index(const F2Vector& point) const;
  F2Vector representative(std::size_t orbit) const;
  F2Vector canonical(const F2Vector& point) const;
  std::vector<F2Vector> members(std::size_t orbit) const;
};

/// Orbits of the group generated by `generators` (each assumed invertible),
/// by union-find over all 2^dimension points.
OrbitPartition affine_orbits(std::size_t dimension, std::span<const AffineF2Map> generators);

}  // namespace realh1
