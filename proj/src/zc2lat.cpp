#include "realh1/zc2lat.hpp"

#include <stdexcept>
#include <string>

#include "realh1/error.hpp"

namespace realh1 {

void validate_lattice(const IntMatrix& sigma) {
  if (!sigma.is_square())
    throw Error(ErrorCode::NonSquare, "involution matrix is " + std::to_string(sigma.rows()) + "x" +
                                          std::to_string(sigma.cols()));
  if (!(sigma * sigma).is_identity())
    throw Error(ErrorCode::NotInvolution,
                "sigma^2 != I for sigma = " + sigma.to_string() + " (sigma^2 = " +
                    (sigma * sigma).to_string() + ")");
}

InvolutiveLattice::InvolutiveLattice(IntMatrix sigma) : sigma_(std::move(sigma)) {
  validate_lattice(sigma_);
}

InvolutiveLattice InvolutiveLattice::trivial() { return InvolutiveLattice(IntMatrix{{1}}); }
InvolutiveLattice InvolutiveLattice::sign() { return InvolutiveLattice(IntMatrix{{-1}}); }
InvolutiveLattice InvolutiveLattice::regular() { return InvolutiveLattice(IntMatrix{{0, 1}, {1, 0}}); }

InvolutiveLattice direct_sum(const InvolutiveLattice& a, const InvolutiveLattice& b) {
  return InvolutiveLattice(IntMatrix::direct_sum(a.sigma(), b.sigma()));
}

IntMatrix eigenlattice(const InvolutiveLattice& lattice, Eigen eps) {
  const std::size_t n = lattice.rank();
  IntMatrix shifted = lattice.sigma();
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= static_cast<long>(eps);
  return kernel_basis(shifted);
}

// ---------------------------------------------------------------------------
// F2Space

F2Space::F2Space(const IntMatrix& numerator, const IntMatrix& relations)
    : ambient_rank_(numerator.rows()),
      numerator_(lattice_basis(numerator)),
      relations_(relations),
      numerator_solver_(numerator_) {
  if (relations.rows() != ambient_rank_)
    throw std::invalid_argument("relations live in a different ambient lattice");
  const std::size_t k = numerator_.cols();

  F2Matrix rel(relations.cols(), k);
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    auto y = numerator_solver_.solve(relations.column(j));
    if (!y) throw std::invalid_argument("relation outside the numerator lattice");
    for (std::size_t i = 0; i < k; ++i) rel(j, i) = mpz_odd_p((*y)[i].get_mpz_t()) ? 1 : 0;
  }

  LatticeSolver relation_solver(relations);
  for (std::size_t i = 0; i < k; ++i) {
    IntVector twice = Integer(2) * numerator_.column(i);
    if (!relation_solver.contains(twice))
      throw std::invalid_argument("quotient is not an elementary abelian 2-group");
  }

  relation_echelon_ = f2_rref(rel);
  std::vector<bool> is_pivot(k, false);
  for (auto p : relation_echelon_.pivots) is_pivot[p] = true;
  for (std::size_t i = 0; i < k; ++i)
    if (!is_pivot[i]) {
      free_columns_.push_back(i);
      basis_.push_back(numerator_.column(i));
    }
}

std::uint64_t F2Space::size() const {
  if (dimension() > 63) throw std::overflow_error("F2 space too large to count in 64 bits");
  return std::uint64_t{1} << dimension();
}

bool F2Space::contains(const IntVector& x) const { return numerator_solver_.contains(x); }

F2Vector F2Space::coordinates(const IntVector& x) const {
  auto y = numerator_solver_.solve(x);
  if (!y) throw Error(ErrorCode::NotInvariant, "vector " + to_string(x) + " is not in the lattice");
  const std::size_t k = numerator_.cols();
  F2Vector bits(k);
  for (std::size_t i = 0; i < k; ++i) bits[i] = mpz_odd_p((*y)[i].get_mpz_t()) ? 1 : 0;
  const F2Matrix& red = relation_echelon_.reduced;
  for (std::size_t r = 0; r < relation_echelon_.pivots.size(); ++r)
    if (bits[relation_echelon_.pivots[r]])
      for (std::size_t i = 0; i < k; ++i) bits[i] ^= red(r, i);
  F2Vector coords(free_columns_.size());
  for (std::size_t i = 0; i < free_columns_.size(); ++i) coords[i] = bits[free_columns_[i]];
  return coords;
}

IntVector F2Space::representative(const F2Vector& coords) const {
  if (coords.size() != dimension()) throw std::invalid_argument("coordinate vector has wrong length");
  IntVector x(ambient_rank_, Integer(0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) x = x + basis_[i];
  return x;
}

F2Matrix F2Space::induced_map(const IntMatrix& g) const {
  if (g.rows() != ambient_rank_ || g.cols() != ambient_rank_)
    throw Error(ErrorCode::ShapeMismatch, "map has wrong shape for this space");
  for (std::size_t j = 0; j < numerator_.cols(); ++j)
    if (!contains(g * numerator_.column(j)))
      throw Error(ErrorCode::NotInvariant, "map " + g.to_string() + " does not preserve the lattice");
  for (std::size_t j = 0; j < relations_.cols(); ++j)
    if (!is_zero_class(g * relations_.column(j)))
      throw Error(ErrorCode::NotInvariant,
                  "map " + g.to_string() + " does not preserve the relation lattice");
  std::vector<F2Vector> cols;
  cols.reserve(dimension());
  for (const auto& b : basis_) cols.push_back(coordinates(g * b));
  return F2Matrix::from_columns(dimension(), cols);
}

std::vector<F2Vector> F2Space::elements() const {
  std::vector<F2Vector> out;
  const std::uint64_t n = size();
  out.reserve(n);
  for (std::uint64_t code = 0; code < n; ++code) out.push_back(f2_decode(code, dimension()));
  return out;
}

// ---------------------------------------------------------------------------

F2Space tate(const InvolutiveLattice& lattice, TateDegree degree) {
  const std::size_t n = lattice.rank();
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix& s = lattice.sigma();
  if (degree == TateDegree::Zero) return F2Space(kernel_basis(id - s), id + s);
  return F2Space(kernel_basis(id + s), id - s);
}

IntMatrix block_form(std::size_t p, std::size_t q, std::size_t r) {
  const std::size_t n = p + q + 2 * r;
  IntMatrix d(n, n);
  std::size_t i = 0;
  for (; i < p; ++i) d(i, i) = 1;
  for (; i < p + q; ++i) d(i, i) = -1;
  for (std::size_t k = 0; k < r; ++k, i += 2) {
    d(i, i + 1) = 1;
    d(i + 1, i) = 1;
  }
  return d;
}

namespace {

[[noreturn]] void decomposition_failure(const std::string& what) {
  throw Error(ErrorCode::DecompositionFailure, "decompose: " + what);
}

}  // namespace

DecompositionReport decompose(const InvolutiveLattice& lattice) {
  const std::size_t n = lattice.rank();
  const IntMatrix& sigma = lattice.sigma();

  // L is an extension of the sign quotient L / L+ by the fixed lattice L+.
  // With e a basis of L+ and u lifts of a basis of the quotient,
  // sigma u = -u + e c, and only c mod 2 up to GL x GL matters.
  const IntMatrix e = eigenlattice(lattice, Eigen::Plus);
  const std::size_t k = e.cols();
  const std::size_t m = n - k;
  const SmithForm completion = smith_normal_form(e);
  for (std::size_t i = 0; i < completion.rank; ++i)
    if (completion.diagonal[i] != 1) decomposition_failure("fixed lattice is not saturated");
  const IntMatrix u = unimodular_inverse(completion.left).column_range(k, n);

  LatticeSolver fixed(e);
  IntMatrix c(k, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto y = fixed.solve(sigma * u.column(j) + u.column(j));
    if (!y) decomposition_failure("u + sigma u escapes the fixed lattice");
    for (std::size_t i = 0; i < k; ++i) c(i, j) = (*y)[i];
  }

  // Change bases so that c becomes diagonal: e' = e L^-1, u' = u R.
  const SmithForm snf = smith_normal_form(c);
  const IntMatrix e2 = e * unimodular_inverse(snf.left);
  const IntMatrix u2 = u * snf.right;

  // Odd divisors come first; each gives a (Z^2, swap) summand after moving
  // u'_j by a multiple of e'_j so that sigma u'_j = -u'_j + e'_j.
  std::size_t r = 0;
  std::vector<IntVector> lifted = u2.columns();
  for (std::size_t j = 0; j < snf.diagonal.size(); ++j) {
    const Integer& d = snf.diagonal[j];
    const Integer target = mpz_odd_p(d.get_mpz_t()) ? 1 : 0;
    if (target == 1) ++r;
    const Integer t = (target - d) / 2;
    lifted[j] = lifted[j] + t * e2.column(j);
  }

  std::vector<IntVector> columns;
  for (std::size_t i = r; i < k; ++i) columns.push_back(e2.column(i));
  for (std::size_t j = r; j < m; ++j) columns.push_back(lifted[j]);
  for (std::size_t j = 0; j < r; ++j) {
    columns.push_back(lifted[j]);
    columns.push_back(sigma * lifted[j]);
  }
  DecompositionReport report{k - r, m - r, r, IntMatrix::from_columns(n, columns)};

  Integer det = determinant(report.basis);
  if (det != 1 && det != -1) decomposition_failure("basis change is not unimodular");
  if (unimodular_inverse(report.basis) * sigma * report.basis != block_form(report.p, report.q, report.r))
    decomposition_failure("basis change does not produce the block form");
  return report;
}

}  // namespace realh1
