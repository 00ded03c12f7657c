#include <doctest.h>

#include "realh1/h1core.hpp"
#include "realh1/oracles.hpp"
#include "support.hpp"

using namespace realh1;
using namespace realh1::testing;

TEST_CASE("torus_h1_by_types") {
  const auto triv = InvolutiveLattice::trivial();
  const auto sign = InvolutiveLattice::sign();
  const auto reg = InvolutiveLattice::regular();
  CHECK(oracles::torus_h1_by_types(sign) == 2);
  CHECK(oracles::torus_h1_by_types(direct_sum(triv, reg)) == 1);
  CHECK(oracles::torus_h1_by_types(direct_sum(direct_sum(sign, sign), reg)) == 4);
}

TEST_CASE("orbit_count_bruteforce") {
  CHECK(oracles::orbit_count_bruteforce(compact_form(simply_connected('A', 2))) == 2);
  CHECK(oracles::orbit_count_bruteforce(compact_form(simply_connected('C', 2))) == 3);
  CHECK(oracles::orbit_count_bruteforce(a1xa1_swap()) == h1_group(a1xa1_swap()).cardinality);
  CHECK(oracles::orbit_count_bruteforce(with_shift(compact_form(a1_simply_connected()), {F2Vector{1}})) == 1);
}

TEST_CASE("find_block_basis") {
  const InvolutiveLattice l = direct_sum(InvolutiveLattice::sign(), InvolutiveLattice::regular());
  auto b = oracles::find_block_basis(l, 0, 1, 1);
  REQUIRE(b);
  CHECK(l.sigma() * *b == *b * block_form(0, 1, 1));
  CHECK_FALSE(oracles::find_block_basis(l, 0, 3, 0));
  CHECK_FALSE(oracles::find_block_basis(l, 0, 1, 0));
}

TEST_CASE("fuzz lattices carry a valid witness basis") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    const oracles::FuzzLattice f = oracles::random_lattice(rng, 6);
    CHECK(f.lattice.rank() == f.p + f.q + 2 * f.r);
    CHECK(f.lattice.sigma() * f.basis == f.basis * block_form(f.p, f.q, f.r));
    const Integer det = determinant(f.basis);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("fuzz generation is reproducible") {
  std::mt19937_64 a(11), b(11);
  for (int i = 0; i < 5; ++i) CHECK(oracles::random_lattice(a, 5).lattice == oracles::random_lattice(b, 5).lattice);
}
