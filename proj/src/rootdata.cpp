#include "realh1/rootdata.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "realh1/error.hpp"

namespace realh1 {

namespace {

using PairIndex = std::map<std::pair<IntVector, IntVector>, std::size_t>;

IntVector reflect_character(const IntVector& x, const IntVector& root, const IntVector& coroot) {
  return x - dot(x, coroot) * root;
}

IntVector reflect_cocharacter(const IntVector& y, const IntVector& root, const IntVector& coroot) {
  return y - dot(root, y) * coroot;
}

IntVector unit(std::size_t n, std::size_t i, long scale = 1) {
  IntVector v(n, Integer(0));
  v[i] = scale;
  return v;
}

// All (root, coroot) pairs reachable from the simple ones by simple reflections.
RootDatum close_under_reflections(std::size_t rank, const std::vector<IntVector>& simple_roots,
                                  const std::vector<IntVector>& simple_coroots) {
  RootDatum rd;
  rd.rank = rank;
  PairIndex seen;
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    rd.roots.push_back(simple_roots[i]);
    rd.coroots.push_back(simple_coroots[i]);
    rd.simple_indices.push_back(i);
    seen.emplace(std::make_pair(simple_roots[i], simple_coroots[i]), i);
  }
  for (std::size_t k = 0; k < rd.roots.size(); ++k) {
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      IntVector r = reflect_character(rd.roots[k], simple_roots[i], simple_coroots[i]);
      IntVector c = reflect_cocharacter(rd.coroots[k], simple_roots[i], simple_coroots[i]);
      auto key = std::make_pair(r, c);
      if (seen.count(key)) continue;
      seen.emplace(key, rd.roots.size());
      rd.roots.push_back(std::move(r));
      rd.coroots.push_back(std::move(c));
    }
  }
  return rd;
}

}  // namespace

void validate_rd(const RootDatum& rd) {
  if (rd.roots.size() != rd.coroots.size())
    throw Error(ErrorCode::ShapeMismatch, "root and coroot lists differ in length");
  for (std::size_t i = 0; i < rd.size(); ++i)
    if (rd.roots[i].size() != rd.rank || rd.coroots[i].size() != rd.rank)
      throw Error(ErrorCode::ShapeMismatch, "root " + std::to_string(i) + " has wrong length");
  for (auto s : rd.simple_indices)
    if (s >= rd.size())
      throw Error(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(s) + " out of range");

  PairIndex index;
  for (std::size_t i = 0; i < rd.size(); ++i) {
    Integer p = dot(rd.roots[i], rd.coroots[i]);
    if (p != 2)
      throw Error(ErrorCode::PairingNotTwo, "<alpha_" + std::to_string(i) + ", alpha_" +
                                                std::to_string(i) + "^vee> = " + p.get_str());
    index.emplace(std::make_pair(rd.roots[i], rd.coroots[i]), i);
  }

  for (std::size_t i = 0; i < rd.size(); ++i) {
    IntVector zero(rd.rank, Integer(0));
    if (!index.count({zero - rd.roots[i], zero - rd.coroots[i]}))
      throw Error(ErrorCode::UnmatchedNegatives,
                  "negative of root " + to_string(rd.roots[i]) + " is missing or mismatched");
  }

  for (std::size_t i = 0; i < rd.size(); ++i)
    for (std::size_t j = 0; j < rd.size(); ++j) {
      auto r = reflect_character(rd.roots[j], rd.roots[i], rd.coroots[i]);
      auto c = reflect_cocharacter(rd.coroots[j], rd.roots[i], rd.coroots[i]);
      if (!index.count({r, c}))
        throw Error(ErrorCode::ReflectionNotClosed,
                    "reflection in root " + to_string(rd.roots[i]) + " sends root " +
                        to_string(rd.roots[j]) + " outside the root datum");
    }

  // Every root must be a sign-coherent integer combination of the simple ones.
  if (rd.size() > 0 && rd.simple_indices.empty())
    throw Error(ErrorCode::NotABase, "no simple roots given");
  std::vector<IntVector> simple;
  for (auto s : rd.simple_indices) simple.push_back(rd.roots[s]);
  const IntMatrix simple_matrix = IntMatrix::from_columns(rd.rank, simple);
  if (!rd.simple_indices.empty() && smith_normal_form(simple_matrix).rank != simple.size())
    throw Error(ErrorCode::NotABase, "simple roots are linearly dependent");
  LatticeSolver solver(simple_matrix);
  for (const auto& root : rd.roots) {
    auto c = solver.solve(root);
    bool nonneg = true, nonpos = true;
    if (c)
      for (const auto& x : *c) {
        if (x < 0) nonneg = false;
        if (x > 0) nonpos = false;
      }
    if (!c || !(nonneg || nonpos))
      throw Error(ErrorCode::NotABase,
                  "root " + to_string(root) + " is not a sign-coherent combination of simple roots");
  }
}

WeylElement reflection(const RootDatum& rd, std::size_t root_index) {
  if (root_index >= rd.size())
    throw Error(ErrorCode::IndexOutOfRange, "root index " + std::to_string(root_index) + " out of range");
  const IntVector& root = rd.roots[root_index];
  const IntVector& coroot = rd.coroots[root_index];
  IntMatrix m = IntMatrix::identity(rd.rank);
  for (std::size_t i = 0; i < rd.rank; ++i)
    for (std::size_t j = 0; j < rd.rank; ++j) m(i, j) -= coroot[i] * root[j];
  return {std::move(m), {}};
}

std::vector<WeylElement> simple_reflections(const RootDatum& rd) {
  std::vector<WeylElement> out;
  for (std::size_t k = 0; k < rd.simple_indices.size(); ++k) {
    WeylElement s = reflection(rd, rd.simple_indices[k]);
    s.word = {k};
    out.push_back(std::move(s));
  }
  return out;
}

bool permutes_coroots(const RootDatum& rd, const IntMatrix& m) {
  if (m.rows() != rd.rank || m.cols() != rd.rank) return false;
  std::map<IntVector, int> count;
  for (const auto& c : rd.coroots) ++count[c];
  for (const auto& c : rd.coroots) {
    auto it = count.find(m * c);
    if (it == count.end() || it->second == 0) return false;
    --it->second;
  }
  return true;
}

std::vector<WeylElement> generate_group(std::size_t rank, const std::vector<WeylElement>& generators,
                                        std::size_t cutoff) {
  std::vector<WeylElement> elements{{IntMatrix::identity(rank), {}}};
  std::map<IntMatrix, std::size_t> seen{{elements[0].matrix, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      IntMatrix m = elements[k].matrix * generators[g].matrix;
      if (seen.count(m)) continue;
      if (elements.size() >= cutoff) throw CutoffExceeded(elements.size() + 1, cutoff);
      seen.emplace(m, elements.size());
      std::vector<std::size_t> word = elements[k].word;
      word.push_back(g);
      elements.push_back({std::move(m), std::move(word)});
    }
  }
  return elements;
}

std::vector<WeylElement> weyl_elements(const RootDatum& rd, std::size_t cutoff) {
  return generate_group(rd.rank, simple_reflections(rd), cutoff);
}

OrbitPartition orbits_mod2(const std::vector<WeylElement>& generators, const F2Space& space) {
  std::vector<AffineF2Map> maps;
  maps.reserve(generators.size());
  for (const auto& g : generators)
    maps.push_back({space.induced_map(g.matrix), F2Vector(space.dimension(), 0)});
  return affine_orbits(space.dimension(), maps);
}

// ---------------------------------------------------------------------------

IntMatrix cartan_matrix(char type, std::size_t n) {
  IntMatrix a(n, n);
  auto link = [&](std::size_t i, std::size_t j) {  // 1-based, simple bond
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (type) {
    case 'A':
      if (n < 1) break;
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      return a;
    case 'B':
    case 'C':
      if (n < 1) break;
      if (n == 1) return a;  // B1 = C1 = A1
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      // B: alpha_n short, so <alpha_n^vee, alpha_{n-1}> = -2.
      if (type == 'B')
        a(n - 1, n - 2) = -2;
      else
        a(n - 2, n - 1) = -2;
      return a;
    case 'D':
      if (n < 3) break;
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 2, n);
      return a;
    case 'E':
      if (n < 6 || n > 8) break;
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      return a;
    case 'F':
      if (n != 4) break;
      link(1, 2);
      link(3, 4);
      a(1, 2) = -1;
      a(2, 1) = -2;
      return a;
    case 'G':
      if (n != 2) break;
      a(0, 1) = -3;
      a(1, 0) = -1;
      return a;
    default:
      break;
  }
  throw std::invalid_argument(std::string("no Cartan type ") + type + std::to_string(n));
}

RootDatum root_datum_from_cartan(const IntMatrix& cartan, Isogeny isogeny) {
  const std::size_t n = cartan.rows();
  std::vector<IntVector> roots, coroots;
  for (std::size_t i = 0; i < n; ++i) {
    if (isogeny == Isogeny::SimplyConnected) {
      // X_* has the simple coroots as basis.
      roots.push_back(cartan.column(i));
      coroots.push_back(unit(n, i));
    } else {
      // X^* has the simple roots as basis.
      roots.push_back(unit(n, i));
      coroots.push_back(cartan.row(i));
    }
  }
  return close_under_reflections(n, roots, coroots);
}

RootDatum classical_standard(char type, std::size_t n) {
  std::vector<IntVector> roots, coroots;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector v = unit(n, i) - unit(n, i + 1);
    roots.push_back(v);
    coroots.push_back(v);
  }
  switch (type) {
    case 'B':
      if (n < 1) break;
      roots.push_back(unit(n, n - 1));
      coroots.push_back(unit(n, n - 1, 2));
      return close_under_reflections(n, roots, coroots);
    case 'C':
      if (n < 1) break;
      roots.push_back(unit(n, n - 1, 2));
      coroots.push_back(unit(n, n - 1));
      return close_under_reflections(n, roots, coroots);
    case 'D': {
      if (n < 2) break;
      IntVector v = unit(n, n - 2) + unit(n, n - 1);
      roots.push_back(v);
      coroots.push_back(v);
      return close_under_reflections(n, roots, coroots);
    }
    default:
      break;
  }
  throw std::invalid_argument(std::string("no standard classical datum ") + type + std::to_string(n));
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  RootDatum out;
  out.rank = a.rank + b.rank;
  auto pad = [&](const IntVector& v, bool first) {
    IntVector w(out.rank, Integer(0));
    for (std::size_t i = 0; i < v.size(); ++i) w[first ? i : a.rank + i] = v[i];
    return w;
  };
  // Simple roots of both factors first, then the remaining roots.
  for (auto s : a.simple_indices) {
    out.simple_indices.push_back(out.roots.size());
    out.roots.push_back(pad(a.roots[s], true));
    out.coroots.push_back(pad(a.coroots[s], true));
  }
  for (auto s : b.simple_indices) {
    out.simple_indices.push_back(out.roots.size());
    out.roots.push_back(pad(b.roots[s], false));
    out.coroots.push_back(pad(b.coroots[s], false));
  }
  auto is_simple = [](const RootDatum& rd, std::size_t i) {
    for (auto s : rd.simple_indices)
      if (s == i) return true;
    return false;
  };
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_simple(a, i)) {
      out.roots.push_back(pad(a.roots[i], true));
      out.coroots.push_back(pad(a.coroots[i], true));
    }
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!is_simple(b, i)) {
      out.roots.push_back(pad(b.roots[i], false));
      out.coroots.push_back(pad(b.coroots[i], false));
    }
  return out;
}

}  // namespace realh1
