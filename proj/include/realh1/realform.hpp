#pragma once

// A real form seen from its fundamental torus: the Galois involution on
// cocharacters, the little Weyl group W0 acting on the torus, and the
// shift cocycle w -> c(w) in H^1(R, T).

#include <map>
#include <string>
#include <vector>

#include "realh1/f2.hpp"
#include "realh1/int_matrix.hpp"
#include "realh1/rootdata.hpp"
#include "realh1/zc2lat.hpp"

namespace realh1 {

struct RealFormSpec {
  RootDatum root_datum;
  IntMatrix sigma_star;                  // Galois involution on X_*
  std::vector<WeylElement> w0_generators;
  std::vector<F2Vector> shift;           // c(g) per generator, in h1 coordinates
  std::string label;
};

/// H^1(R, T) for the fundamental torus (X_*, sigma_star).
F2Space h1_space(const RealFormSpec& form);

/// Checks, in order: involution, coroot stability, fundamentality (no root
/// vanishes on ker(sigma_star + 1)), generators are Weyl group elements
/// commuting with sigma_star, effectiveness on ker(sigma_star + 1), and the
/// shape of the shift. Throws the matching Error.
void validate_form(const RealFormSpec& form);

/// Compact form: sigma_star = -1, W0 = W on simple reflections, zero shift.
RealFormSpec compact_form(const RootDatum& rd, std::string label = {});

/// Elements of W stabilising ker(sigma_star + 1). Each one must commute with
/// sigma_star; otherwise throws Error{StabilizerNotCommuting}.
std::vector<WeylElement> w0_stabilizer(const RootDatum& rd, const IntMatrix& sigma_star,
                                       std::size_t cutoff = kDefaultCutoff);

/// The shift cocycle on all of W0, for the right action
/// xi * w = w^-1 xi + c(w), so that c(vw) = w^-1 c(v) + c(w).
class CocycleTable {
 public:
  struct Entry {
    WeylElement element;
    F2Vector value;
    F2Matrix inverse_action;  // w^-1 on h1 coordinates
  };

  CocycleTable() = default;
  explicit CocycleTable(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Throws std::out_of_range for an element outside W0.
  const Entry& at(const IntMatrix& element) const;
  bool contains(const IntMatrix& element) const { return index_.count(element) > 0; }

 private:
  std::vector<Entry> entries_;
  std::map<IntMatrix, std::size_t> index_;
};

/// Breadth-first extension from the generators. Throws
/// Error{InconsistentCocycle} on the first relation it violates, and
/// CutoffExceeded if W0 has more than `cutoff` elements.
CocycleTable extend_cocycle(const RealFormSpec& form, std::size_t cutoff = kDefaultCutoff);

}  // namespace realh1
