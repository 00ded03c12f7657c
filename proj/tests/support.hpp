#pragma once

#include "realh1/realform.hpp"
#include "realh1/rootdata.hpp"

namespace realh1::testing {

inline RootDatum a1_simply_connected() {
  return {1, {make_vector({2}), make_vector({-2})}, {make_vector({1}), make_vector({-1})}, {0}};
}

inline RootDatum a1_adjoint() {
  return {1, {make_vector({1}), make_vector({-1})}, {make_vector({2}), make_vector({-2})}, {0}};
}

inline RootDatum a1xa1() { return product(a1_simply_connected(), a1_simply_connected()); }

inline RootDatum simply_connected(char type, std::size_t rank) {
  return root_datum_from_cartan(cartan_matrix(type, rank), Isogeny::SimplyConnected);
}

// SL2 x SL2 with the Galois involution exchanging the factors; W0 = {1, s1 s2}.
inline RealFormSpec a1xa1_swap() {
  RealFormSpec f;
  f.root_datum = a1xa1();
  f.sigma_star = IntMatrix{{0, 1}, {1, 0}};
  WeylElement minus_one;
  minus_one.matrix = IntMatrix{{-1, 0}, {0, -1}};
  f.w0_generators = {minus_one};
  f.shift = {F2Vector{}};
  f.label = "a1xa1 swap";
  return f;
}

inline RealFormSpec with_shift(RealFormSpec f, std::vector<F2Vector> shift) {
  f.shift = std::move(shift);
  return f;
}

}  // namespace realh1::testing
