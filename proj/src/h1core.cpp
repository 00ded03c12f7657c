#include "realh1/h1core.hpp"

#include <string>

#include "realh1/error.hpp"
#include "realh1/torus.hpp"

namespace realh1 {

std::vector<AffineF2Map> build_action(const RealFormSpec& form) {
  validate_form(form);
  const F2Space h1 = h1_space(form);
  std::vector<AffineF2Map> maps;
  for (std::size_t k = 0; k < form.w0_generators.size(); ++k)
    maps.push_back({h1.induced_map(unimodular_inverse(form.w0_generators[k].matrix)), form.shift[k]});
  return maps;
}

GaloisH1Result h1_group(const RealFormSpec& form, const H1Options& options) {
  const std::vector<AffineF2Map> maps = build_action(form);
  const std::size_t d = h1_space(form).dimension();
  if (d > options.max_dimension)
    throw Error(ErrorCode::DimensionTooLarge, "H^1(R,T) has dimension " + std::to_string(d) +
                                                  ", above the bound " +
                                                  std::to_string(options.max_dimension));
  GaloisH1Result result;
  result.partition = affine_orbits(d, maps);
  for (std::size_t k = 0; k < result.partition.count(); ++k) {
    result.representatives.push_back(result.partition.representative(k));
    result.orbit_sizes.push_back(result.partition.sizes[k]);
  }
  result.cardinality = result.partition.count();
  if (options.w0_cutoff) {
    try {
      result.w0_order = extend_cocycle(form, *options.w0_cutoff).size();
    } catch (const CutoffExceeded&) {
      result.w0_order.reset();
    }
  }
  return result;
}

F2Vector class_of_real_point(const RealFormSpec& form, const GaloisH1Result& result,
                             const IntVector& point) {
  const RealTorus torus{InvolutiveLattice(form.sigma_star)};
  return result.partition.canonical(lambda(torus, point).coordinates);
}

F2Vector class_of_real_point(const RealFormSpec& form, const IntVector& point) {
  return class_of_real_point(form, h1_group(form), point);
}

RealFormSpec twist(const RealFormSpec& form, const F2Vector& zeta) {
  const F2Space h1 = h1_space(form);
  if (zeta.size() != h1.dimension())
    throw Error(ErrorCode::ShapeMismatch, "twisting class has length " + std::to_string(zeta.size()) +
                                              ", H^1 has dimension " + std::to_string(h1.dimension()));
  RealFormSpec out = form;
  for (std::size_t k = 0; k < form.w0_generators.size(); ++k) {
    const F2Matrix inverse = h1.induced_map(unimodular_inverse(form.w0_generators[k].matrix));
    out.shift[k] = f2_add(f2_add(inverse * zeta, form.shift[k]), zeta);
  }
  return out;
}

std::uint64_t burnside_count(const RealFormSpec& form, std::size_t cutoff) {
  validate_form(form);
  const CocycleTable table = extend_cocycle(form, cutoff);
  const std::size_t d = h1_space(form).dimension();
  if (d > 40) throw Error(ErrorCode::DimensionTooLarge, "H^1(R,T) too large for fixed-point counts");
  unsigned __int128 total = 0;
  for (const auto& e : table.entries()) {
    // Fixed points of x -> A x + b solve (A + 1) x = b.
    const F2Matrix shifted = e.inverse_action + F2Matrix::identity(d);
    if (f2_solve(shifted, e.value)) total += std::uint64_t{1} << (d - f2_rank(shifted));
  }
  if (total % table.size() != 0)
    throw Error(ErrorCode::InternalInconsistency,
                "fixed-point total is not divisible by |W0| = " + std::to_string(table.size()));
  return static_cast<std::uint64_t>(total / table.size());
}

}  // namespace realh1
