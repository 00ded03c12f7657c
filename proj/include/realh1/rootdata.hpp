#pragma once

// Root data, Weyl reflections acting on cocharacters, and Weyl group
// enumeration.

#include <cstddef>
#include <string>
#include <vector>

#include "realh1/f2.hpp"
#include "realh1/int_matrix.hpp"
#include "realh1/zc2lat.hpp"

namespace realh1 {

/// Roots live in the character lattice X^*, coroots in the cocharacter
/// lattice X_*, both written in mutually dual bases, so the pairing is the
/// coordinate dot product. roots[i] and coroots[i] belong together.
struct RootDatum {
  std::size_t rank = 0;
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  std::vector<std::size_t> simple_indices;

  std::size_t size() const { return roots.size(); }
};

/// Throws Error{PairingNotTwo}, Error{UnmatchedNegatives},
/// Error{ReflectionNotClosed}, Error{ShapeMismatch}, Error{IndexOutOfRange}
/// or Error{NotABase}.
void validate_rd(const RootDatum& rd);

/// An element of the Weyl group, acting on X_*.
struct WeylElement {
  IntMatrix matrix;
  /// Word in simple reflections (indices into simple_indices), when known.
  std::vector<std::size_t> word;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

/// Matrix of y -> y - <root_i, y> coroot_i on X_*.
WeylElement reflection(const RootDatum& rd, std::size_t root_index);
std::vector<WeylElement> simple_reflections(const RootDatum& rd);

/// True if m maps the coroot set onto itself.
bool permutes_coroots(const RootDatum& rd, const IntMatrix& m);

inline constexpr std::size_t kDefaultCutoff = 1'000'000;

/// Closure of `generators` under right multiplication, breadth first from
/// the identity; words index into `generators`. Throws CutoffExceeded.
std::vector<WeylElement> generate_group(std::size_t rank, const std::vector<WeylElement>& generators,
                                        std::size_t cutoff = kDefaultCutoff);

/// The Weyl group as matrices on X_*, in breadth-first order.
std::vector<WeylElement> weyl_elements(const RootDatum& rd, std::size_t cutoff = kDefaultCutoff);

/// Orbits of the group generated by `generators` on an F2Space of X_*.
/// Throws Error{NotInvariant} if a generator does not preserve the space.
OrbitPartition orbits_mod2(const std::vector<WeylElement>& generators, const F2Space& space);

// ---------------------------------------------------------------------------
// Builders for the simple types.

enum class Isogeny { SimplyConnected, Adjoint };

/// Cartan matrix a_ij = <alpha_i^vee, alpha_j> (Bourbaki numbering) for
/// type in {A,B,C,D,E,F,G}. Throws std::invalid_argument for unknown types.
IntMatrix cartan_matrix(char type, std::size_t rank);

/// Root datum generated from a Cartan matrix; the simple roots come first.
RootDatum root_datum_from_cartan(const IntMatrix& cartan, Isogeny isogeny);

/// Classical root data on the standard lattice Z^rank:
/// 'B' for SO(2n+1), 'C' for Sp(n), 'D' for SO(2n).
RootDatum classical_standard(char type, std::size_t rank);

/// Direct product of root data.
RootDatum product(const RootDatum& a, const RootDatum& b);

}  // namespace realh1
