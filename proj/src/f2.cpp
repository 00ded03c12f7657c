#include "realh1/f2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace realh1 {

std::string to_string(const F2Vector& v) {
  std::string out;
  out.reserve(v.size());
  for (auto b : v) out.push_back(b ? '1' : '0');
  return out;
}

F2Vector f2_add(const F2Vector& a, const F2Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("F2 vector length mismatch");
  F2Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

bool f2_is_zero(const F2Vector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
}

std::uint64_t f2_encode(const F2Vector& v) {
  if (v.size() > 63) throw std::invalid_argument("F2 vector too long to encode");
  std::uint64_t code = 0;
  for (auto b : v) code = (code << 1) | (b & 1u);
  return code;
}

F2Vector f2_decode(std::uint64_t code, std::size_t dim) {
  F2Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = (code >> (dim - 1 - i)) & 1u;
  return v;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, const std::vector<F2Vector>& columns) {
  F2Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("F2 column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i] & 1u;
  }
  return m;
}

F2Vector F2Matrix::column(std::size_t j) const {
  F2Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

F2Vector F2Matrix::operator*(const F2Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("F2 matrix-vector shape mismatch");
  F2Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint8_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s ^= (*this)(i, j) & v[j];
    out[i] = s;
  }
  return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("F2 matrix product shape mismatch");
  F2Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k))
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) ^= rhs(k, j);
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("F2 shape mismatch");
  F2Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] ^= rhs.data_[k];
  return out;
}

std::string F2Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ",";
    for (std::size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j) ? '1' : '0');
  }
  return out + "]";
}

F2Echelon f2_rref(const F2Matrix& a) {
  F2Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m(p, c)) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c))
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) ^= m(r, j);
    pivots.push_back(c);
    ++r;
  }
  F2Matrix reduced(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t f2_rank(const F2Matrix& a) { return f2_rref(a).pivots.size(); }

std::optional<F2Vector> f2_solve(const F2Matrix& a, const F2Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("F2 right-hand side length mismatch");
  F2Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i] & 1u;
  }
  F2Echelon e = f2_rref(aug);
  F2Vector x(a.cols(), 0);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == a.cols()) return std::nullopt;
    x[e.pivots[k]] = e.reduced(k, a.cols());
  }
  return x;
}

std::vector<F2Vector> f2_kernel(const F2Matrix& a) {
  F2Echelon e = f2_rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<F2Vector> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    F2Vector v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = e.reduced(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

F2Matrix f2_inverse(const F2Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of non-square F2 matrix");
  F2Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  F2Echelon e = f2_rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw std::invalid_argument("F2 matrix is singular");
  F2Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

F2Vector AffineF2Map::apply(const F2Vector& x) const { return f2_add(linear * x, translation); }

std::size_t OrbitPartition::orbit_index(const F2Vector& point) const {
  if (point.size() != dimension) throw std::invalid_argument("point has wrong dimension");
  return orbit_of.at(f2_encode(point));
}

F2Vector OrbitPartition::representative(std::size_t orbit) const {
  return f2_decode(representatives.at(orbit), dimension);
}

F2Vector OrbitPartition::canonical(const F2Vector& point) const {
  return representative(orbit_index(point));
}

std::vector<F2Vector> OrbitPartition::members(std::size_t orbit) const {
  std::vector<F2Vector> out;
  for (std::uint64_t code = 0; code < orbit_of.size(); ++code)
    if (orbit_of[code] == orbit) out.push_back(f2_decode(code, dimension));
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

OrbitPartition affine_orbits(std::size_t dimension, std::span<const AffineF2Map> generators) {
  if (dimension > 31) throw std::invalid_argument("orbit enumeration dimension too large");
  const std::uint64_t points = std::uint64_t{1} << dimension;

  struct MaskMap {
    std::vector<std::uint64_t> column_masks;  // indexed by bit position
    std::uint64_t translation = 0;
  };
  std::vector<MaskMap> maps;
  maps.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.linear.rows() != dimension || g.linear.cols() != dimension ||
        g.translation.size() != dimension)
      throw std::invalid_argument("affine map has wrong dimension");
    MaskMap m;
    m.column_masks.resize(dimension);
    for (std::size_t i = 0; i < dimension; ++i)
      m.column_masks[dimension - 1 - i] = f2_encode(g.linear.column(i));
    m.translation = f2_encode(g.translation);
    maps.push_back(std::move(m));
  }

  DisjointSets sets(points);
  for (const auto& m : maps) {
    for (std::uint64_t x = 0; x < points; ++x) {
      std::uint64_t image = m.translation;
      for (std::uint64_t bits = x; bits; bits &= bits - 1)
        image ^= m.column_masks[static_cast<std::size_t>(std::countr_zero(bits))];
      sets.unite(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(image));
    }
  }

  OrbitPartition out;
  out.dimension = dimension;
  out.orbit_of.assign(points, 0);
  std::vector<std::uint32_t> root_orbit(points, UINT32_MAX);
  for (std::uint64_t x = 0; x < points; ++x) {
    std::uint32_t root = sets.find(static_cast<std::uint32_t>(x));
    if (root_orbit[root] == UINT32_MAX) {
      root_orbit[root] = static_cast<std::uint32_t>(out.representatives.size());
      out.representatives.push_back(x);
      out.sizes.push_back(0);
    }
    out.orbit_of[x] = root_orbit[root];
    ++out.sizes[root_orbit[root]];
  }
  return out;
}

}  // namespace realh1
