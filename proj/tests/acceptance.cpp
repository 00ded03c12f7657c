// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "realh1/cli/spec_io.hpp"
#include "realh1/error.hpp"
#include "realh1/h1core.hpp"
#include "realh1/oracles.hpp"
#include "realh1/torus.hpp"

using namespace realh1;
using realh1::cli::GroupDocument;

namespace {

const std::filesystem::path kSpecs = REALH1_SPECS_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("criterion %d: %s  %s (%s) [%.2fs]\n", number, out.pass ? "PASS" : "FAIL", title,
              out.detail.c_str(), seconds);
  std::fflush(stdout);
}

// Mod-2 vector of an integer vector, used to compare points inside X/2X.
F2Vector mod2(const IntVector& v) {
  F2Vector out;
  for (const auto& x : v) out.push_back(static_cast<std::uint8_t>(mpz_odd_p(x.get_mpz_t()) ? 1 : 0));
  return out;
}

std::set<F2Vector> part_image_mod2(const RealTorus& torus, TorusPart kind) {
  const Subtorus s = part(torus, kind);
  std::set<F2Vector> out;
  for (const auto& y : s.torus.points2().elements())
    out.insert(mod2(s.inclusion * s.torus.points2().representative(y)));
  return out;
}

std::vector<GroupDocument> bundled_groups() {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(kSpecs))
    if (entry.path().extension() == ".json") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<GroupDocument> out;
  for (const auto& p : paths) {
    cli::SpecDocument doc = cli::load_spec(p);
    if (auto* g = std::get_if<GroupDocument>(&doc)) {
      if (g->form.label.empty()) g->form.label = p.filename().string();
      out.push_back(*g);
    }
  }
  return out;
}

RealFormSpec load_group(const char* name) { return std::get<GroupDocument>(cli::load_spec(kSpecs / name)).form; }

std::optional<std::size_t> enumerable_order(const RealFormSpec& f, std::size_t cutoff) {
  try {
    return extend_cocycle(f, cutoff).size();
  } catch (const CutoffExceeded&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------

Outcome torus_base_cases() {
  Outcome out;
  struct Case {
    const char* name;
    InvolutiveLattice lattice;
    IntVector nontrivial_point;
    std::uint64_t h1;
    bool lambda_trivial;
  };
  const Case cases[] = {{"split", InvolutiveLattice::trivial(), make_vector({1}), 1, true},
                        {"Weil", InvolutiveLattice::regular(), make_vector({1, 1}), 1, true},
                        {"compact", InvolutiveLattice::sign(), make_vector({1}), 2, false}};
  std::string sizes;
  for (const Case& c : cases) {
    const RealTorus t(c.lattice);
    out.require(t.h1().size() == c.h1, std::string(c.name) + ": wrong |H1|");
    out.require(t.points2().size() == 2, std::string(c.name) + ": |S(R)_2| != 2");
    out.require(lambda(t, c.nontrivial_point).is_trivial() == c.lambda_trivial,
                std::string(c.name) + ": lambda of -1 has the wrong class");
    sizes += std::string(sizes.empty() ? "" : ", ") + std::to_string(t.h1().size());
  }
  if (out.pass) out.detail = "|H1| = " + sizes + ", |S(R)_2| = 2 each";
  return out;
}

Outcome torus_fuzz() {
  Outcome out;
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 200 && out.pass; ++i) {
    const oracles::FuzzLattice f = oracles::random_lattice(rng, 6);
    const RealTorus t(f.lattice);
    const std::string tag = "lattice " + std::to_string(i) + " " + f.lattice.sigma().to_string();
    const std::uint64_t h1 = t.h1().size();

    // (a) kernel of lambda equals the image of the split part, elementwise.
    std::set<F2Vector> kernel, image;
    for (const auto& x : t.points2().elements()) {
      const TorusClass c = lambda(t, x);
      image.insert(c.coordinates);
      if (c.is_trivial()) kernel.insert(x);
    }
    std::set<F2Vector> split_image;
    const Subtorus split = part(t, TorusPart::Split);
    for (const auto& y : split.torus.points2().elements())
      split_image.insert(t.points2().coordinates(split.inclusion * split.torus.points2().representative(y)));
    out.require(kernel == split_image, tag + ": kernel differs from split image");
    out.require(image.size() == h1, tag + ": lambda not surjective");
    out.require(t.points2().size() == split_image.size() * h1, tag + ": quotient map not bijective");

    // (b) mu is surjective.
    std::set<F2Vector> mu_image;
    const Subtorus compact = part(t, TorusPart::Compact);
    for (const auto& y : compact.torus.points2().elements())
      mu_image.insert(mu(t, compact.torus.points2().representative(y)).coordinates);
    out.require(mu_image.size() == h1, tag + ": mu not surjective");

    // (c) compact points modulo those shared with the split part.
    const auto s0 = part_image_mod2(t, TorusPart::Compact);
    const auto s1 = part_image_mod2(t, TorusPart::Split);
    std::size_t shared = 0;
    for (const auto& v : s0) shared += s1.count(v);
    out.require(s0.size() == shared * h1, tag + ": |S0(R)_2| / |S0 n S1| != |H1|");
    const CompactPartSizes c = compact_part_sizes(t);
    out.require(c.size_s0_points2 == s0.size() && c.size_intersection == shared, tag + ": compact_part_sizes disagrees");

    // Tate route against the known type multiplicities.
    out.require(h1 == (std::uint64_t{1} << f.q), tag + ": |H1| != 2^q");
    out.require(oracles::torus_h1_by_types(f.lattice) == h1, tag + ": decomposition route differs");
  }
  if (out.pass) out.detail = "200 lattices of rank <= 6, seed 20260101";
  return out;
}

Outcome compact_times_weil() {
  Outcome out;
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> q_dist(1, 2), r_dist(0, 2);
  for (int i = 0; i < 50 && out.pass; ++i) {
    const std::size_t q = q_dist(rng), r = r_dist(rng);
    const oracles::FuzzLattice f = oracles::conjugated_lattice(rng, 0, q, r);
    const RealTorus t(f.lattice);
    // The compact factor is spanned by the first q witness columns.
    const IntMatrix factor = f.basis.column_range(0, q);
    std::set<F2Vector> image;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << q); ++code) {
      IntVector x(q);
      for (std::size_t k = 0; k < q; ++k) x[k] = (code >> (q - 1 - k)) & 1;
      image.insert(lambda(t, factor * x).coordinates);
    }
    out.require(image.size() == (std::uint64_t{1} << q) && t.h1().size() == image.size(),
                "lattice " + std::to_string(i) + ": lambda on the compact factor is not a bijection");
  }
  if (out.pass) out.detail = "50 lattices, compact rank 1..2 plus 0..2 Weil factors";
  return out;
}

Outcome compact_tables() {
  Outcome out;
  struct Row {
    std::string name;
    RootDatum rd;
    std::uint64_t expected;  // count of signatures / classical real forms
  };
  std::vector<Row> rows;
  auto sc = [](char t, std::size_t n) { return root_datum_from_cartan(cartan_matrix(t, n), Isogeny::SimplyConnected); };
  for (std::size_t n = 2; n <= 8; ++n) rows.push_back({"SU(" + std::to_string(n) + ")", sc('A', n - 1), n / 2 + 1});
  for (std::size_t n = 1; n <= 8; ++n) rows.push_back({"Sp(" + std::to_string(n) + ")", sc('C', n), n + 1});
  for (std::size_t n = 3; n <= 9; ++n) {
    const RootDatum rd = n % 2 ? classical_standard('B', n / 2) : classical_standard('D', n / 2);
    rows.push_back({"SO(" + std::to_string(n) + ")", rd, n / 2 + 1});
  }
  rows.push_back({"G2", sc('G', 2), 2});
  rows.push_back({"F4", sc('F', 4), 3});
  rows.push_back({"E8", sc('E', 8), 3});

  std::size_t burnside_checked = 0;
  for (const Row& row : rows) {
    const RealFormSpec f = compact_form(row.rd, row.name);
    const std::uint64_t count = h1_group(f).cardinality;
    out.require(count == row.expected,
                row.name + ": " + std::to_string(count) + " != " + std::to_string(row.expected));
    if (enumerable_order(f, 10'000)) {
      const std::uint64_t b = burnside_count(f, 10'000);
      out.require(b == count, row.name + ": burnside " + std::to_string(b));
      ++burnside_checked;
    }
  }
  if (out.pass)
    out.detail = std::to_string(rows.size()) + " groups, " + std::to_string(burnside_checked) +
                 " also by Burnside (|W| <= 10^4)";
  return out;
}

Outcome rank_one_zero_shift() {
  Outcome out;
  std::string detail;
  for (const char* name : {"su2.json", "pgl2r.json"}) {
    const RealFormSpec f = load_group(name);
    out.require(f.sigma_star == IntMatrix{{-1}} && f2_is_zero(f.shift[0]), std::string(name) + ": not the stated input");
    const std::uint64_t count = h1_group(f).cardinality;
    const std::uint64_t b = burnside_count(f);
    out.require(count == 2 && b == 2, std::string(name) + ": |H1| = " + std::to_string(count));
    detail += std::string(detail.empty() ? "" : ", ") + (f.root_datum.roots[0][0] == 2 ? "A1 sc" : "A1 adjoint") +
              " -> " + std::to_string(count);
  }
  if (out.pass) out.detail = "sigma* = -I, zero shift: " + detail + " (Burnside agrees)";
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  std::size_t checked = 0, skipped = 0;
  for (const auto& g : bundled_groups()) {
    if (!enumerable_order(g.form, 10'000)) {
      ++skipped;
      continue;
    }
    const std::uint64_t a = h1_group(g.form).cardinality;
    const std::uint64_t b = burnside_count(g.form, 10'000);
    const std::uint64_t c = oracles::orbit_count_bruteforce(g.form, 10'000);
    out.require(a == b && b == c, g.form.label + ": " + std::to_string(a) + "/" + std::to_string(b) + "/" +
                                      std::to_string(c));
    ++checked;
  }
  out.require(checked >= 8, "too few bundled specs checked");
  if (out.pass)
    out.detail = std::to_string(checked) + " specs agree, " + std::to_string(skipped) + " with |W0| > 10^4 skipped";
  return out;
}

Outcome twist_property() {
  Outcome out;
  std::mt19937_64 rng(4242);
  std::size_t specs = 0;
  for (const auto& g : bundled_groups()) {
    const GaloisH1Result base = h1_group(g.form);
    const std::size_t d = base.partition.dimension;
    for (int t = 0; t < 100 && out.pass; ++t) {
      F2Vector zeta(d);
      for (auto& z : zeta) z = static_cast<std::uint8_t>(rng() & 1);
      const GaloisH1Result twisted = h1_group(twist(g.form, zeta));
      out.require(twisted.cardinality == base.cardinality, g.form.label + ": orbit count changed");
      // x -> x + zeta must carry orbits onto orbits bijectively.
      std::map<std::size_t, std::size_t> forward, backward;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
        const F2Vector x = f2_decode(code, d);
        const std::size_t a = base.partition.orbit_index(x);
        const std::size_t b = twisted.partition.orbit_index(f2_add(x, zeta));
        const bool consistent = forward.emplace(a, b).first->second == b && backward.emplace(b, a).first->second == a;
        out.require(consistent, g.form.label + ": twisted partition is not the translate");
      }
    }
    ++specs;
  }
  if (out.pass) out.detail = std::to_string(specs) + " bundled specs x 100 random zeta";
  return out;
}

Outcome nonzero_shift() {
  Outcome out;
  const RealFormSpec f = load_group("sl2r.json");
  out.require(f.shift == std::vector<F2Vector>{F2Vector{1}}, "sl2r.json does not carry c(s) = 1");
  const GaloisH1Result r = h1_group(f);
  const std::uint64_t zero_orbit = r.orbit_sizes[r.partition.orbit_index({0})];
  out.require(r.cardinality == 1, "|H1| = " + std::to_string(r.cardinality));
  out.require(zero_orbit == 2, "orbit of 0 has size " + std::to_string(zero_orbit));
  if (out.pass) out.detail = "A1 sc with c(s) = 1: |H1| = 1, orbit of 0 has size 2";
  return out;
}

Outcome consistency_policing() {
  Outcome out;
  const RealFormSpec a2 = compact_form(root_datum_from_cartan(cartan_matrix('A', 2), Isogeny::SimplyConnected));
  const F2Space h1 = h1_space(a2);
  out.require(h1.dimension() == 2 && h1.basis()[0] == make_vector({1, 0}) && h1.basis()[1] == make_vector({0, 1}),
              "unexpected H1 basis for compact A2");

  // Linear parts g^-1 mod 2 read off the integer matrices directly.
  std::vector<F2Matrix> linear;
  for (const auto& g : a2.w0_generators) {
    const IntMatrix inv = unimodular_inverse(g.matrix);
    F2Matrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = mpz_odd_p(inv(i, j).get_mpz_t()) ? 1 : 0;
    linear.push_back(m);
  }
  // W(A2) is presented by s1^2 = s2^2 = 1 and the braid relation
  // s1 s2 s1 = s2 s1 s2; an assignment extends iff every relation holds for
  // the affine maps x -> g^-1 x + c(g), composed left to right.
  std::size_t inconsistent = 0, braid_violations = 0, rejected = 0;
  for (std::uint64_t code = 0; code < 16; ++code) {
    const std::vector<F2Vector> shift{f2_decode(code >> 2, 2), f2_decode(code & 3, 2)};
    auto apply = [&](const std::vector<std::size_t>& word, F2Vector x) {
      for (auto g : word) x = f2_add(linear[g] * x, shift[g]);
      return x;
    };
    auto same = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
      for (std::uint64_t p = 0; p < 4; ++p)
        if (apply(a, f2_decode(p, 2)) != apply(b, f2_decode(p, 2))) return false;
      return true;
    };
    const bool bad_order = !same({0, 0}, {}) || !same({1, 1}, {});
    const bool bad_braid = !same({0, 1, 0}, {1, 0, 1});
    const bool bad = bad_order || bad_braid;
    inconsistent += bad;
    braid_violations += bad_braid;

    RealFormSpec f = a2;
    f.shift = shift;
    ErrorCode got = ErrorCode::InternalInconsistency;
    bool threw = false;
    try {
      (void)extend_cocycle(f);
    } catch (const Error& e) {
      threw = true;
      got = e.code();
    }
    out.require(threw == bad, "assignment " + std::to_string(code) + ": extension disagrees with relators");
    if (threw) {
      out.require(got == ErrorCode::InconsistentCocycle, "assignment " + std::to_string(code) + ": wrong error");
      ++rejected;
    }
  }
  out.require(inconsistent > 0, "no inconsistent assignment found");
  out.require(braid_violations > 0, "no assignment breaks the braid relation");

  RealFormSpec split_a1 = compact_form(root_datum_from_cartan(cartan_matrix('A', 1), Isogeny::SimplyConnected));
  split_a1.sigma_star = IntMatrix{{1}};
  ErrorCode fundamental = ErrorCode::InternalInconsistency;
  try {
    validate_form(split_a1);
  } catch (const Error& e) {
    fundamental = e.code();
  }
  out.require(fundamental == ErrorCode::FundamentalityViolation, "sigma* = +I on A1 was not rejected");
  if (out.pass)
    out.detail = std::to_string(rejected) + "/16 A2 shift assignments rejected as InconsistentCocycle (" +
                 std::to_string(braid_violations) + " of them break the braid relation); +I on A1 -> FundamentalityViolation";
  return out;
}

}  // namespace

int main() {
  criterion(1, "torus base cases", torus_base_cases);
  criterion(2, "lambda, mu and compact-part sizes on fuzzed tori", torus_fuzz);
  criterion(3, "compact factor times Weil factors", compact_times_weil);
  criterion(4, "compact-form tables", compact_tables);
  criterion(5, "rank one, sigma* = -I, zero shift", rank_one_zero_shift);
  criterion(6, "oracle agreement on bundled specs", oracle_agreement);
  criterion(7, "twist invariance", twist_property);
  criterion(8, "nonzero shift on A1", nonzero_shift);
  criterion(9, "consistency policing", consistency_policing);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
