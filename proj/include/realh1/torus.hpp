#pragma once

// Real tori through their cocharacter lattices: the real 2-torsion points,
// H^1(R, S), and the maps between them.
//
// Convention: a 2-torsion point is written exp(pi i x) with x an integer
// cocharacter; it is real when (sigma - 1) x is even. Its class in H^1 is
// the class of (x - sigma x) / 2 in ker(1 + sigma) / im(1 - sigma).

#include <cstdint>

#include "realh1/f2.hpp"
#include "realh1/int_matrix.hpp"
#include "realh1/zc2lat.hpp"

namespace realh1 {

class RealTorus {
 public:
  explicit RealTorus(InvolutiveLattice lattice);

  const InvolutiveLattice& lattice() const noexcept { return lattice_; }
  std::size_t rank() const noexcept { return lattice_.rank(); }

  /// Real points of order dividing 2, as the sigma-fixed part of X/2X.
  const F2Space& points2() const noexcept { return points2_; }
  /// H^1(R, S) as the Tate group ker(1 + sigma) / im(1 - sigma).
  const F2Space& h1() const noexcept { return h1_; }

 private:
  InvolutiveLattice lattice_;
  F2Space points2_;
  F2Space h1_;
};

F2Space points2(const RealTorus& torus);
F2Space h1_torus(const RealTorus& torus);

/// True if the integer cocharacter x lifts a real 2-torsion point.
bool is_point2(const InvolutiveLattice& lattice, const IntVector& x);

/// A class in H^1(R, S) of a fixed torus.
struct TorusClass {
  F2Vector coordinates;      // in the torus' h1() basis
  IntVector representative;  // canonical representative in ker(1 + sigma)

  bool is_trivial() const { return f2_is_zero(coordinates); }
  friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

/// The canonical map S(R)_2 -> H^1(R, S) on an integer lift of a point.
/// Throws Error{NotAPoint2}.
TorusClass lambda(const RealTorus& torus, const IntVector& lift);
/// Same, for a point given by its coordinates in points2().
TorusClass lambda(const RealTorus& torus, const F2Vector& point);

enum class TorusPart { Compact, Split };

/// Largest compact or split subtorus with its cocharacter inclusion.
struct Subtorus {
  RealTorus torus;
  IntMatrix inclusion;  // columns: basis of the eigenlattice inside X_*(S)
};

Subtorus part(const RealTorus& torus, TorusPart kind);

/// lambda of the image of a compact-part point; `compact_point` is written in
/// the compact part's own basis.
TorusClass mu(const RealTorus& torus, const IntVector& compact_point);

struct CompactPartSizes {
  std::uint64_t size_s0_points2 = 0;
  std::uint64_t size_intersection = 0;
  std::uint64_t size_h1 = 0;
};

/// Sizes of S_0(R)_2, of S_0(R)_2 intersect S_1(R)_2 inside X/2X, and of
/// H^1(R, S). Throws Error{InternalInconsistency} if the first divided by
/// the second is not the third.
CompactPartSizes compact_part_sizes(const RealTorus& torus);

/// Witness sizes for the isomorphism S(R)_2 / S_1(R)_2 -> H^1(R, S).
struct LambdaWitness {
  std::uint64_t size_points2 = 0;
  std::uint64_t size_split_image = 0;  // image of S_1(R)_2 in S(R)_2
  std::uint64_t size_kernel = 0;       // points with trivial lambda
  std::uint64_t size_image = 0;        // distinct values of lambda
  std::uint64_t size_h1 = 0;
};

/// Enumerates points2() elementwise.
LambdaWitness lambda_witness(const RealTorus& torus);

}  // namespace realh1
