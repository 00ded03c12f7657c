#include "realh1/realform.hpp"

#include <string>

#include "realh1/error.hpp"

namespace realh1 {

F2Space h1_space(const RealFormSpec& form) {
  return tate(InvolutiveLattice(form.sigma_star), TateDegree::One);
}

void validate_form(const RealFormSpec& form) {
  const RootDatum& rd = form.root_datum;
  validate_rd(rd);
  const IntMatrix& sigma = form.sigma_star;
  validate_lattice(sigma);
  if (sigma.rows() != rd.rank)
    throw Error(ErrorCode::ShapeMismatch, "sigma_star is " + std::to_string(sigma.rows()) +
                                              "x" + std::to_string(sigma.cols()) + " but the rank is " +
                                              std::to_string(rd.rank));
  if (!permutes_coroots(rd, sigma))
    throw Error(ErrorCode::NotCorootStable, "sigma_star does not permute the coroots");

  const InvolutiveLattice lattice(sigma);
  const IntMatrix compact = eigenlattice(lattice, Eigen::Minus);
  for (const auto& root : rd.roots) {
    IntVector restricted = compact.transpose() * root;
    if (is_zero(restricted))
      throw Error(ErrorCode::FundamentalityViolation,
                  "root " + to_string(root) + " vanishes on the compact part of the torus");
  }

  for (std::size_t k = 0; k < form.w0_generators.size(); ++k) {
    const IntMatrix& g = form.w0_generators[k].matrix;
    const std::string name = "W0 generator " + std::to_string(k);
    if (g.rows() != rd.rank || g.cols() != rd.rank)
      throw Error(ErrorCode::ShapeMismatch, name + " has wrong shape");
    if (!permutes_coroots(rd, g))
      throw Error(ErrorCode::NotWeylElement, name + " does not permute the coroots");
    if (g * sigma != sigma * g)
      throw Error(ErrorCode::NotCommuting, name + " does not commute with sigma_star");
    if (!g.is_identity() && g * compact == compact)
      throw Error(ErrorCode::NotEffective, name + " acts trivially on the compact part");
  }

  const std::size_t d = h1_space(form).dimension();
  if (form.shift.size() != form.w0_generators.size())
    throw Error(ErrorCode::ShapeMismatch, "expected one shift vector per W0 generator (" +
                                              std::to_string(form.w0_generators.size()) + "), got " +
                                              std::to_string(form.shift.size()));
  for (std::size_t k = 0; k < form.shift.size(); ++k) {
    if (form.shift[k].size() != d)
      throw Error(ErrorCode::ShapeMismatch, "shift " + std::to_string(k) + " has length " +
                                                std::to_string(form.shift[k].size()) +
                                                ", H^1 has dimension " + std::to_string(d));
    for (auto b : form.shift[k])
      if (b > 1) throw Error(ErrorCode::ShapeMismatch, "shift entries must be 0 or 1");
  }
}

RealFormSpec compact_form(const RootDatum& rd, std::string label) {
  RealFormSpec form;
  form.root_datum = rd;
  form.sigma_star = -IntMatrix::identity(rd.rank);
  form.w0_generators = simple_reflections(rd);
  form.shift.assign(form.w0_generators.size(), F2Vector(rd.rank, 0));
  form.label = std::move(label);
  return form;
}

std::vector<WeylElement> w0_stabilizer(const RootDatum& rd, const IntMatrix& sigma_star,
                                       std::size_t cutoff) {
  const IntMatrix compact = eigenlattice(InvolutiveLattice(sigma_star), Eigen::Minus);
  const LatticeSolver solver(compact);
  std::vector<WeylElement> out;
  for (auto& w : weyl_elements(rd, cutoff)) {
    bool stable = true;
    for (const auto& col : (w.matrix * compact).columns())
      if (!solver.contains(col)) {
        stable = false;
        break;
      }
    if (!stable) continue;
    if (w.matrix * sigma_star != sigma_star * w.matrix)
      throw Error(ErrorCode::StabilizerNotCommuting,
                  "Weyl element " + w.matrix.to_string() +
                      " stabilises the compact part but does not commute with sigma_star");
    out.push_back(std::move(w));
  }
  return out;
}

CocycleTable::CocycleTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) index_.emplace(entries_[k].element.matrix, k);
}

const CocycleTable::Entry& CocycleTable::at(const IntMatrix& element) const {
  auto it = index_.find(element);
  if (it == index_.end()) throw std::out_of_range("element is not in W0");
  return entries_[it->second];
}

CocycleTable extend_cocycle(const RealFormSpec& form, std::size_t cutoff) {
  const F2Space h1 = h1_space(form);
  const std::size_t d = h1.dimension();
  const std::size_t n = form.root_datum.rank;
  if (form.shift.size() != form.w0_generators.size())
    throw Error(ErrorCode::ShapeMismatch, "expected one shift vector per W0 generator");

  std::vector<F2Matrix> generator_inverse;
  for (const auto& g : form.w0_generators)
    generator_inverse.push_back(h1.induced_map(unimodular_inverse(g.matrix)));

  std::vector<CocycleTable::Entry> entries;
  entries.push_back({{IntMatrix::identity(n), {}}, F2Vector(d, 0), F2Matrix::identity(d)});
  std::map<IntMatrix, std::size_t> seen{{entries[0].element.matrix, 0}};

  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (std::size_t g = 0; g < form.w0_generators.size(); ++g) {
      IntMatrix product = entries[k].element.matrix * form.w0_generators[g].matrix;
      F2Vector value = f2_add(generator_inverse[g] * entries[k].value, form.shift[g]);
      auto it = seen.find(product);
      if (it != seen.end()) {
        if (entries[it->second].value != value) {
          std::string word;
          for (auto x : entries[k].element.word) word += "g" + std::to_string(x) + " ";
          throw Error(ErrorCode::InconsistentCocycle,
                      "c(v w) != w^-1 c(v) + c(w) for v = [" + word + "], w = g" + std::to_string(g) +
                          ": table has " + to_string(entries[it->second].value) + ", relation gives " +
                          to_string(value));
        }
        continue;
      }
      if (entries.size() >= cutoff) throw CutoffExceeded(entries.size() + 1, cutoff);
      std::vector<std::size_t> word = entries[k].element.word;
      word.push_back(g);
      seen.emplace(product, entries.size());
      F2Matrix inverse_action = generator_inverse[g] * entries[k].inverse_action;
      entries.push_back({{std::move(product), std::move(word)}, std::move(value), std::move(inverse_action)});
    }
  }
  return CocycleTable(std::move(entries));
}

}  // namespace realh1
