#pragma once

// Lattices with an involution (Z[C2]-lattices): eigenlattices, Tate
// cohomology and the splitting into the three indecomposable types.

#include <cstdint>
#include <vector>

#include "realh1/f2.hpp"
#include "realh1/int_matrix.hpp"

namespace realh1 {

/// Throws Error{NonSquare} or Error{NotInvolution}.
void validate_lattice(const IntMatrix& sigma);

/// Free Z-module Z^n with an integral involution, written in the standard basis.
class InvolutiveLattice {
 public:
  InvolutiveLattice() = default;
  /// Validates; throws on a non-involution.
  explicit InvolutiveLattice(IntMatrix sigma);

  /// (Z, +1): cocharacters of the split torus G_m.
  static InvolutiveLattice trivial();
  /// (Z, -1): cocharacters of the compact torus U(1).
  static InvolutiveLattice sign();
  /// (Z^2, swap): cocharacters of the Weil restriction of G_m.
  static InvolutiveLattice regular();

  std::size_t rank() const noexcept { return sigma_.rows(); }
  const IntMatrix& sigma() const noexcept { return sigma_; }

  friend bool operator==(const InvolutiveLattice&, const InvolutiveLattice&) = default;

 private:
  IntMatrix sigma_;
};

InvolutiveLattice direct_sum(const InvolutiveLattice& a, const InvolutiveLattice& b);

enum class Eigen { Plus = 1, Minus = -1 };

/// Canonical basis (columns) of ker(sigma - eps).
IntMatrix eigenlattice(const InvolutiveLattice& lattice, Eigen eps);

/// Subquotient numerator / relations of an ambient Z^n, where
/// 2 * numerator <= relations <= numerator, so that the quotient is an
/// F2-vector space.
///
/// Elements are named by coordinates with respect to a canonical basis of
/// integer representatives. Coordinates are unique, and the lexicographically
/// smallest coordinate vector is the canonical label of a class.
class F2Space {
 public:
  F2Space() = default;
  /// `numerator` and `relations` hold generators as columns.
  F2Space(const IntMatrix& numerator, const IntMatrix& relations);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  /// 2^dimension; throws std::overflow_error past 63 dimensions.
  std::uint64_t size() const;

  /// Integer representatives of the basis classes.
  const std::vector<IntVector>& basis() const noexcept { return basis_; }

  bool contains(const IntVector& x) const;
  /// Coordinates of the class of x. Throws Error{NotInvariant} if x is not in
  /// the numerator lattice.
  F2Vector coordinates(const IntVector& x) const;
  IntVector representative(const F2Vector& coordinates) const;
  bool is_zero_class(const IntVector& x) const { return f2_is_zero(coordinates(x)); }

  /// Matrix over F2 of the map induced by an integer matrix g on the ambient
  /// lattice. Throws Error{NotInvariant} unless g preserves both lattices.
  F2Matrix induced_map(const IntMatrix& g) const;

  /// Every element, in increasing lexicographic order of coordinates.
  std::vector<F2Vector> elements() const;

 private:
  std::size_t ambient_rank_ = 0;
  IntMatrix numerator_;  // canonical basis, columns
  IntMatrix relations_;  // generators, columns
  LatticeSolver numerator_solver_;
  F2Echelon relation_echelon_;  // relations in numerator coordinates, mod 2
  std::vector<std::size_t> free_columns_;
  std::vector<IntVector> basis_;
};

enum class TateDegree { Zero = 0, One = 1 };

/// H^0 = ker(1 - sigma) / im(1 + sigma), H^1 = ker(1 + sigma) / im(1 - sigma).
F2Space tate(const InvolutiveLattice& lattice, TateDegree degree);

/// Multiplicities of (Z,+1), (Z,-1) and (Z^2, swap) summands, with a basis
/// change realising the splitting.
struct DecompositionReport {
  std::size_t p = 0;  // (Z, +1)
  std::size_t q = 0;  // (Z, -1)
  std::size_t r = 0;  // (Z^2, swap)
  /// Unimodular; basis^-1 * sigma * basis is block diagonal with p blocks [1],
  /// then q blocks [-1], then r blocks [[0,1],[1,0]].
  IntMatrix basis;
};

/// The block-diagonal involution a report promises.
IntMatrix block_form(std::size_t p, std::size_t q, std::size_t r);

DecompositionReport decompose(const InvolutiveLattice& lattice);

}  // namespace realh1
