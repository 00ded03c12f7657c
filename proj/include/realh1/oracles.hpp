#pragma once

// Brute-force ground truth for tests and for `realh1 check`. Nothing on the
// main computation path depends on this file.

#include <cstdint>
#include <optional>
#include <random>

#include "realh1/int_matrix.hpp"
#include "realh1/realform.hpp"
#include "realh1/zc2lat.hpp"

namespace realh1::oracles {

/// |H^1| as the product of per-summand sizes 1, 1, 2 over decompose().
std::uint64_t torus_h1_by_types(const InvolutiveLattice& lattice);

/// Enumerates W0 from its generators, composes the generator maps along each
/// word, and groups points by exhaustive comparison of their full orbits.
std::uint64_t orbit_count_bruteforce(const RealFormSpec& form, std::size_t cutoff = 10'000);

/// Search all matrices with entries in [-bound, bound] for a unimodular B
/// with B^-1 sigma B = block_form(p, q, r).
std::optional<IntMatrix> find_block_basis(const InvolutiveLattice& lattice, std::size_t p,
                                          std::size_t q, std::size_t r, int bound = 1);

/// A random conjugate of a block-diagonal involution with known multiplicities.
struct FuzzLattice {
  InvolutiveLattice lattice;
  std::size_t p = 0, q = 0, r = 0;
  /// Columns realise the block form: basis^-1 sigma basis = block_form(p, q, r).
  IntMatrix basis;
};

/// Conjugates block_form(p, q, r) by a product of at most `max_ops` random
/// elementary matrices with multipliers in [-3, 3].
FuzzLattice conjugated_lattice(std::mt19937_64& rng, std::size_t p, std::size_t q, std::size_t r,
                               std::size_t max_ops = 20);

/// Random multiplicities with 1 <= rank <= max_rank, then conjugated_lattice.
FuzzLattice random_lattice(std::mt19937_64& rng, std::size_t max_rank);

}  // namespace realh1::oracles
