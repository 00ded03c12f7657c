#include "realh1/oracles.hpp"

#include <functional>
#include <set>

#include "realh1/error.hpp"
#include "realh1/rootdata.hpp"

namespace realh1::oracles {

std::uint64_t torus_h1_by_types(const InvolutiveLattice& lattice) {
  // Per-summand sizes: split 1, Weil restriction 1, compact 2.
  const DecompositionReport d = decompose(lattice);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < d.q; ++i) size *= 2;
  return size;
}

namespace {

IntMatrix inverse_by_powers(const IntMatrix& g) {
  const IntMatrix id = IntMatrix::identity(g.rows());
  IntMatrix power = g;
  IntMatrix previous = id;
  for (int k = 0; k < 10'000; ++k) {
    if (power == id) return previous;
    previous = power;
    power = power * g;
  }
  throw Error(ErrorCode::InternalInconsistency, "generator does not have finite order");
}

}  // namespace

std::uint64_t orbit_count_bruteforce(const RealFormSpec& form, std::size_t cutoff) {
  const F2Space h1 = h1_space(form);
  const std::size_t d = h1.dimension();

  // Generator g acts by xi -> g^-1 xi + c(g), computed on representatives.
  std::vector<std::function<F2Vector(const F2Vector&)>> act;
  for (std::size_t k = 0; k < form.w0_generators.size(); ++k) {
    IntMatrix inverse = inverse_by_powers(form.w0_generators[k].matrix);
    F2Vector shift = form.shift[k];
    act.push_back([&h1, inverse, shift](const F2Vector& x) {
      return f2_add(h1.coordinates(inverse * h1.representative(x)), shift);
    });
  }

  const std::vector<WeylElement> group =
      generate_group(form.root_datum.rank, form.w0_generators, cutoff);

  std::set<F2Vector> assigned;
  std::uint64_t orbits = 0;
  for (const auto& x : h1.elements()) {
    if (assigned.count(x)) continue;
    ++orbits;
    for (const auto& w : group) {
      F2Vector y = x;
      for (auto g : w.word) y = act[g](y);
      assigned.insert(y);
    }
  }
  if (assigned.size() != (std::uint64_t{1} << d))
    throw Error(ErrorCode::InternalInconsistency, "orbits do not cover H^1");
  return orbits;
}

std::optional<IntMatrix> find_block_basis(const InvolutiveLattice& lattice, std::size_t p,
                                          std::size_t q, std::size_t r, int bound) {
  const std::size_t n = lattice.rank();
  if (p + q + 2 * r != n) return std::nullopt;
  const IntMatrix target = block_form(p, q, r);
  const std::size_t cells = n * n;
  std::vector<int> entries(cells, -bound);
  while (true) {
    IntMatrix b(n, n);
    for (std::size_t k = 0; k < cells; ++k) b(k / n, k % n) = entries[k];
    Integer det = determinant(b);
    // sigma B = B D is equivalent to B^-1 sigma B = D for invertible B.
    if ((det == 1 || det == -1) && lattice.sigma() * b == b * target) return b;
    std::size_t k = 0;
    while (k < cells && entries[k] == bound) entries[k++] = -bound;
    if (k == cells) return std::nullopt;
    ++entries[k];
  }
}

FuzzLattice conjugated_lattice(std::mt19937_64& rng, std::size_t p, std::size_t q, std::size_t r,
                               std::size_t max_ops) {
  const std::size_t n = p + q + 2 * r;
  IntMatrix b = IntMatrix::identity(n);
  IntMatrix b_inverse = IntMatrix::identity(n);
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> ops_dist(0, max_ops);
    std::uniform_int_distribution<std::size_t> index(0, n - 1);
    std::uniform_int_distribution<int> mult(-3, 3);
    const std::size_t ops = ops_dist(rng);
    for (std::size_t t = 0; t < ops; ++t) {
      std::size_t i = index(rng), j = index(rng);
      int k = mult(rng);
      if (i == j || k == 0) continue;
      IntMatrix e = IntMatrix::identity(n);
      IntMatrix e_inverse = IntMatrix::identity(n);
      e(i, j) = k;
      e_inverse(i, j) = -k;
      b = e * b;
      b_inverse = b_inverse * e_inverse;
    }
  }
  // sigma = B^-1 D B, so the columns of B^-1 realise the block form.
  IntMatrix sigma = b_inverse * block_form(p, q, r) * b;
  return {InvolutiveLattice(std::move(sigma)), p, q, r, b_inverse};
}

FuzzLattice random_lattice(std::mt19937_64& rng, std::size_t max_rank) {
  std::uniform_int_distribution<std::size_t> rank_dist(1, max_rank);
  const std::size_t n = rank_dist(rng);
  std::uniform_int_distribution<std::size_t> r_dist(0, n / 2);
  const std::size_t r = r_dist(rng);
  std::uniform_int_distribution<std::size_t> p_dist(0, n - 2 * r);
  const std::size_t p = p_dist(rng);
  return conjugated_lattice(rng, p, n - 2 * r - p, r);
}

}  // namespace realh1::oracles
