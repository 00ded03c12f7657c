#pragma once

// H^1(R, G) as the orbit set of the twisted W0-action on H^1(R, T).

#include <cstdint>
#include <optional>
#include <vector>

#include "realh1/f2.hpp"
#include "realh1/realform.hpp"

namespace realh1 {

/// The maps xi -> g^-1 xi + c(g), one per W0 generator, on h1 coordinates.
/// Validates the form first.
std::vector<AffineF2Map> build_action(const RealFormSpec& form);

struct H1Options {
  /// Largest H^1(R, T) dimension whose points are enumerated.
  std::size_t max_dimension = 24;
  /// When set, W0 is also enumerated (up to this many elements) and its
  /// cocycle checked; the order is reported if enumeration succeeds.
  std::optional<std::size_t> w0_cutoff;
};

struct GaloisH1Result {
  OrbitPartition partition;
  std::vector<F2Vector> representatives;  // lexicographically least member per orbit
  std::vector<std::uint64_t> orbit_sizes;
  std::uint64_t cardinality = 0;
  std::optional<std::uint64_t> w0_order;
};

/// Throws Error{DimensionTooLarge} past options.max_dimension.
GaloisH1Result h1_group(const RealFormSpec& form, const H1Options& options = {});

/// Image of a real point of order 2 of T (an integer cocharacter lift) in
/// H^1(R, G), as its orbit representative.
F2Vector class_of_real_point(const RealFormSpec& form, const IntVector& point);
F2Vector class_of_real_point(const RealFormSpec& form, const GaloisH1Result& result,
                             const IntVector& point);

/// Conjugate the action by translation by zeta: c'(g) = g^-1 zeta + c(g) + zeta.
RealFormSpec twist(const RealFormSpec& form, const F2Vector& zeta);

/// Average number of fixed points of the affine maps over all of W0.
/// Throws Error{InternalInconsistency} if the average is not an integer.
std::uint64_t burnside_count(const RealFormSpec& form, std::size_t cutoff = kDefaultCutoff);

}  // namespace realh1
