#include "realh1/torus.hpp"

#include <set>
#include <string>

#include "realh1/error.hpp"

namespace realh1 {

namespace {

F2Space make_points2(const InvolutiveLattice& lattice) {
  const std::size_t n = lattice.rank();
  const IntMatrix shifted = lattice.sigma() - IntMatrix::identity(n);
  F2Matrix reduced(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reduced(i, j) = mpz_odd_p(shifted(i, j).get_mpz_t()) ? 1 : 0;

  std::vector<IntVector> generators;
  for (const auto& v : f2_kernel(reduced)) {
    IntVector lift(n);
    for (std::size_t i = 0; i < n; ++i) lift[i] = v[i];
    generators.push_back(std::move(lift));
  }
  IntMatrix twice = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) twice(i, i) = 2;
  IntMatrix numerator = IntMatrix::from_columns(n, generators).concat_columns(twice);
  return F2Space(numerator, twice);
}

std::uint64_t pow2(std::size_t e) {
  if (e > 63) throw std::overflow_error("2^" + std::to_string(e) + " does not fit in 64 bits");
  return std::uint64_t{1} << e;
}

F2Matrix reduce_mod2(const IntMatrix& m) {
  F2Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0;
  return out;
}

}  // namespace

RealTorus::RealTorus(InvolutiveLattice lattice)
    : lattice_(std::move(lattice)),
      points2_(make_points2(lattice_)),
      h1_(tate(lattice_, TateDegree::One)) {}

F2Space points2(const RealTorus& torus) { return torus.points2(); }
F2Space h1_torus(const RealTorus& torus) { return torus.h1(); }

bool is_point2(const InvolutiveLattice& lattice, const IntVector& x) {
  if (x.size() != lattice.rank()) return false;
  IntVector d = lattice.sigma() * x - x;
  for (const auto& c : d)
    if (mpz_odd_p(c.get_mpz_t())) return false;
  return true;
}

TorusClass lambda(const RealTorus& torus, const IntVector& lift) {
  const InvolutiveLattice& l = torus.lattice();
  if (lift.size() != l.rank())
    throw Error(ErrorCode::ShapeMismatch, "point " + to_string(lift) + " has wrong length");
  if (!is_point2(l, lift))
    throw Error(ErrorCode::NotAPoint2, "cocharacter " + to_string(lift) +
                                           " does not give a real point of order 2");
  IntVector cocycle = lift - l.sigma() * lift;
  for (auto& c : cocycle) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
  TorusClass out;
  out.coordinates = torus.h1().coordinates(cocycle);
  out.representative = torus.h1().representative(out.coordinates);
  return out;
}

TorusClass lambda(const RealTorus& torus, const F2Vector& point) {
  return lambda(torus, torus.points2().representative(point));
}

Subtorus part(const RealTorus& torus, TorusPart kind) {
  const Eigen eps = kind == TorusPart::Compact ? Eigen::Minus : Eigen::Plus;
  IntMatrix inclusion = eigenlattice(torus.lattice(), eps);
  IntMatrix sigma = IntMatrix::identity(inclusion.cols());
  if (kind == TorusPart::Compact) sigma = -sigma;
  return {RealTorus(InvolutiveLattice(std::move(sigma))), std::move(inclusion)};
}

TorusClass mu(const RealTorus& torus, const IntVector& compact_point) {
  IntMatrix inclusion = eigenlattice(torus.lattice(), Eigen::Minus);
  if (compact_point.size() != inclusion.cols())
    throw Error(ErrorCode::ShapeMismatch, "compact-part point " + to_string(compact_point) +
                                              " has wrong length");
  return lambda(torus, inclusion * compact_point);
}

CompactPartSizes compact_part_sizes(const RealTorus& torus) {
  const F2Matrix compact = reduce_mod2(eigenlattice(torus.lattice(), Eigen::Minus));
  const F2Matrix split = reduce_mod2(eigenlattice(torus.lattice(), Eigen::Plus));
  const std::size_t n = torus.rank();

  F2Matrix both(n, compact.cols() + split.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < compact.cols(); ++j) both(i, j) = compact(i, j);
    for (std::size_t j = 0; j < split.cols(); ++j) both(i, compact.cols() + j) = split(i, j);
  }
  const std::size_t rank_compact = f2_rank(compact);
  const std::size_t rank_split = f2_rank(split);
  const std::size_t rank_sum = f2_rank(both);

  CompactPartSizes d;
  d.size_s0_points2 = pow2(compact.cols());
  d.size_intersection = pow2(rank_compact + rank_split - rank_sum);
  d.size_h1 = torus.h1().size();
  if (d.size_s0_points2 != d.size_intersection * d.size_h1)
    throw Error(ErrorCode::InternalInconsistency,
                "|S0(R)_2| / |(S0 n S1)(R)| != |H^1|: " + std::to_string(d.size_s0_points2) + " / " +
                    std::to_string(d.size_intersection) + " vs " + std::to_string(d.size_h1));
  return d;
}

LambdaWitness lambda_witness(const RealTorus& torus) {
  LambdaWitness d;
  d.size_points2 = torus.points2().size();
  d.size_h1 = torus.h1().size();

  std::set<F2Vector> split_image;
  for (const auto& col : eigenlattice(torus.lattice(), Eigen::Plus).columns())
    split_image.insert(torus.points2().coordinates(col));
  // span of the images
  std::vector<F2Vector> gens(split_image.begin(), split_image.end());
  std::set<F2Vector> span{F2Vector(torus.points2().dimension(), 0)};
  for (const auto& g : gens) {
    std::set<F2Vector> next = span;
    for (const auto& s : span) next.insert(f2_add(s, g));
    span = std::move(next);
  }
  d.size_split_image = span.size();

  std::set<F2Vector> image;
  for (const auto& x : torus.points2().elements()) {
    TorusClass c = lambda(torus, x);
    if (c.is_trivial()) ++d.size_kernel;
    image.insert(c.coordinates);
  }
  d.size_image = image.size();
  return d;
}

}  // namespace realh1
