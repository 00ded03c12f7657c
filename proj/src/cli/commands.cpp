#include "realh1/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "realh1/cli/spec_io.hpp"
#include "realh1/error.hpp"
#include "realh1/h1core.hpp"
#include "realh1/oracles.hpp"
#include "realh1/rootdata.hpp"
#include "realh1/torus.hpp"

namespace realh1::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kCliCutoff = 10'000;

struct Options {
  std::string file;
  bool json_output = false;
  bool burnside = false;
  std::size_t cutoff = kCliCutoff;
  std::uint64_t seed = 1;
  std::string out;
  std::string series;
  std::size_t max_rank = 0;
};

// Raised by `check` when an oracle disagrees; carries the finished report.
struct CheckFailed {
  json report;
};

json torus_report(const std::string& label, const RealTorus& torus) {
  const DecompositionReport d = decompose(torus.lattice());
  const LambdaWitness a = lambda_witness(torus);
  const CompactPartSizes c = compact_part_sizes(torus);
  return json{{"kind", "torus"},
              {"label", label},
              {"rank", torus.rank()},
              {"compact_rank", eigenlattice(torus.lattice(), Eigen::Minus).cols()},
              {"split_rank", eigenlattice(torus.lattice(), Eigen::Plus).cols()},
              {"p", d.p},
              {"q", d.q},
              {"r", d.r},
              {"points2_size", torus.points2().size()},
              {"h1_size", torus.h1().size()},
              {"lambda_witness",
               {{"points2", a.size_points2},
                {"split_image", a.size_split_image},
                {"kernel", a.size_kernel},
                {"image", a.size_image}}},
              {"compact_witness",
               {{"compact_points2", c.size_s0_points2},
                {"intersection", c.size_intersection},
                {"quotient", c.size_s0_points2 / c.size_intersection}}}};
}

json group_report(const RealFormSpec& form, const Options& opt) {
  H1Options h1_options;
  h1_options.w0_cutoff = opt.cutoff;
  const GaloisH1Result result = h1_group(form, h1_options);
  json reps = json::array();
  for (const auto& r : result.representatives) reps.push_back(to_json(r));
  json report{{"kind", "group"},
              {"label", form.label},
              {"rank", form.root_datum.rank},
              {"h1_torus_dimension", result.partition.dimension},
              {"cardinality", result.cardinality},
              {"representatives", reps},
              {"orbit_sizes", result.orbit_sizes},
              {"w0_order", result.w0_order ? json(*result.w0_order) : json(nullptr)}};
  if (opt.burnside) {
    if (result.w0_order) {
      const std::uint64_t b = burnside_count(form, opt.cutoff);
      report["burnside"] = b;
      if (b != result.cardinality) throw CheckFailed{report};
    } else {
      report["burnside"] = nullptr;
    }
  }
  return report;
}

struct SeriesEntry {
  std::string name;
  std::string cartan;
  RootDatum rd;
};

std::vector<SeriesEntry> series_entries(const std::string& series, std::size_t max_rank) {
  std::vector<SeriesEntry> out;
  auto cartan = [](char t, std::size_t n) { return std::string(1, t) + std::to_string(n); };
  if (series == "A") {
    for (std::size_t n = 1; n <= max_rank; ++n)
      out.push_back({"SU(" + std::to_string(n + 1) + ")", cartan('A', n),
                     root_datum_from_cartan(cartan_matrix('A', n), Isogeny::SimplyConnected)});
  } else if (series == "B") {
    for (std::size_t n = 1; n <= max_rank; ++n)
      out.push_back({"SO(" + std::to_string(2 * n + 1) + ")", cartan('B', n), classical_standard('B', n)});
  } else if (series == "C") {
    for (std::size_t n = 1; n <= max_rank; ++n)
      out.push_back({"Sp(" + std::to_string(n) + ")", cartan('C', n),
                     root_datum_from_cartan(cartan_matrix('C', n), Isogeny::SimplyConnected)});
  } else if (series == "D") {
    for (std::size_t n = 2; n <= max_rank; ++n)
      out.push_back({"SO(" + std::to_string(2 * n) + ")", cartan('D', n), classical_standard('D', n)});
  } else if (series == "G") {
    if (max_rank >= 2)
      out.push_back({"G2", "G2", root_datum_from_cartan(cartan_matrix('G', 2), Isogeny::SimplyConnected)});
  } else if (series == "F") {
    if (max_rank >= 4)
      out.push_back({"F4", "F4", root_datum_from_cartan(cartan_matrix('F', 4), Isogeny::SimplyConnected)});
  } else if (series == "E8") {
    if (max_rank >= 8)
      out.push_back({"E8", "E8", root_datum_from_cartan(cartan_matrix('E', 8), Isogeny::SimplyConnected)});
  }
  return out;
}

json table_report(const Options& opt) {
  json rows = json::array();
  for (const auto& entry : series_entries(opt.series, opt.max_rank)) {
    const RealFormSpec form = compact_form(entry.rd, entry.name);
    Options group_opt = opt;
    group_opt.burnside = true;
    json g = group_report(form, group_opt);
    rows.push_back(json{{"group", entry.name},
                        {"cartan_type", entry.cartan},
                        {"cardinality", g["cardinality"]},
                        {"w0_order", g["w0_order"]},
                        {"burnside", g["burnside"]}});
  }
  return json{{"kind", "table"}, {"series", opt.series}, {"max_rank", opt.max_rank}, {"rows", rows}};
}

// ---- check -----------------------------------------------------------------

struct CheckList {
  json items = json::array();
  bool failed = false;

  void add(const std::string& name, bool ok, const std::string& detail) {
    items.push_back(json{{"name", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    failed = failed || !ok;
  }
  void skip(const std::string& name, const std::string& detail) {
    items.push_back(json{{"name", name}, {"status", "skipped"}, {"detail", detail}});
  }
};

std::string eq_detail(std::uint64_t a, std::uint64_t b) {
  return std::to_string(a) + (a == b ? " == " : " != ") + std::to_string(b);
}

json check_torus(const std::string& label, const RealTorus& torus, const Options& opt) {
  CheckList checks;
  const DecompositionReport d = decompose(torus.lattice());
  checks.add("decomposition", d.p + d.q + 2 * d.r == torus.rank(),
             "(p,q,r) = (" + std::to_string(d.p) + "," + std::to_string(d.q) + "," + std::to_string(d.r) + ")");
  checks.add("h1 by types", torus.h1().size() == oracles::torus_h1_by_types(torus.lattice()),
             eq_detail(torus.h1().size(), oracles::torus_h1_by_types(torus.lattice())));
  checks.add("points2 dimension", torus.points2().dimension() == d.p + d.q + d.r,
             eq_detail(torus.points2().dimension(), d.p + d.q + d.r));

  const LambdaWitness a = lambda_witness(torus);
  checks.add("lambda kernel is split image", a.size_kernel == a.size_split_image,
             eq_detail(a.size_kernel, a.size_split_image));
  checks.add("lambda surjective", a.size_image == a.size_h1, eq_detail(a.size_image, a.size_h1));
  checks.add("quotient by split image", a.size_points2 == a.size_split_image * a.size_h1,
             eq_detail(a.size_points2, a.size_split_image * a.size_h1));

  const CompactPartSizes c = compact_part_sizes(torus);
  checks.add("compact quotient", c.size_s0_points2 == c.size_intersection * c.size_h1,
             eq_detail(c.size_s0_points2, c.size_intersection * c.size_h1));

  const Subtorus compact = part(torus, TorusPart::Compact);
  std::set<F2Vector> image;
  for (const auto& x : compact.torus.points2().elements())
    image.insert(mu(torus, compact.torus.points2().representative(x)).coordinates);
  checks.add("mu surjective", image.size() == torus.h1().size(), eq_detail(image.size(), torus.h1().size()));

  // lambda must not depend on the integer lift chosen for a point.
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  bool lift_ok = true;
  const auto points = torus.points2().elements();
  for (std::size_t t = 0; t < 16 && !points.empty(); ++t) {
    const F2Vector& x = points[rng() % points.size()];
    IntVector lift = torus.points2().representative(x);
    IntVector moved = lift;
    for (auto& v : moved) v += 2 * entry(rng);
    lift_ok = lift_ok && lambda(torus, lift) == lambda(torus, moved);
  }
  checks.add("lambda independent of lift", lift_ok, "16 random lifts, seed " + std::to_string(opt.seed));

  json report = torus_report(label, torus);
  report["kind"] = "check";
  report["subject"] = "torus";
  report["checks"] = checks.items;
  report["ok"] = !checks.failed;
  if (checks.failed) throw CheckFailed{report};
  return report;
}

json check_group(const RealFormSpec& form, const Options& opt) {
  CheckList checks;
  const GaloisH1Result result = h1_group(form);
  const std::size_t d = result.partition.dimension;
  std::uint64_t total = 0;
  for (auto s : result.orbit_sizes) total += s;
  checks.add("orbits cover H1(R,T)", total == (std::uint64_t{1} << d), eq_detail(total, std::uint64_t{1} << d));

  std::optional<std::size_t> order;
  try {
    order = extend_cocycle(form, opt.cutoff).size();
    checks.add("cocycle consistent", true, "|W0| = " + std::to_string(*order));
  } catch (const CutoffExceeded& e) {
    checks.skip("cocycle consistent", "W0 has more than " + std::to_string(opt.cutoff) + " elements");
  }

  if (order) {
    const std::uint64_t b = burnside_count(form, opt.cutoff);
    checks.add("burnside count", b == result.cardinality, eq_detail(result.cardinality, b));
    const std::uint64_t brute = oracles::orbit_count_bruteforce(form, opt.cutoff);
    checks.add("brute-force orbits", brute == result.cardinality, eq_detail(result.cardinality, brute));
  } else {
    checks.skip("burnside count", "W0 above cutoff");
    checks.skip("brute-force orbits", "W0 above cutoff");
  }

  // Reversing the generator list must not change the canonical output.
  RealFormSpec reversed = form;
  std::reverse(reversed.w0_generators.begin(), reversed.w0_generators.end());
  std::reverse(reversed.shift.begin(), reversed.shift.end());
  const GaloisH1Result again = h1_group(reversed);
  checks.add("generator order", again.representatives == result.representatives &&
                                    again.orbit_sizes == result.orbit_sizes,
             "representatives and orbit sizes compared");

  std::mt19937_64 rng(opt.seed);
  bool twist_ok = true;
  for (int t = 0; t < 8; ++t) {
    F2Vector zeta(d);
    for (auto& z : zeta) z = static_cast<std::uint8_t>(rng() & 1);
    const GaloisH1Result twisted = h1_group(twist(form, zeta));
    std::vector<std::uint64_t> a = result.orbit_sizes, b = twisted.orbit_sizes;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    twist_ok = twist_ok && a == b;
  }
  checks.add("twist invariance", twist_ok, "8 random twists, seed " + std::to_string(opt.seed));

  json report{{"kind", "check"},
              {"subject", "group"},
              {"label", form.label},
              {"cardinality", result.cardinality},
              {"w0_order", order ? json(*order) : json(nullptr)},
              {"checks", checks.items},
              {"ok", !checks.failed}};
  if (checks.failed) throw CheckFailed{report};
  return report;
}

// ---- text rendering --------------------------------------------------------

std::string vector_text(const json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].dump();
  return s + "]";
}

std::string value_text(const json& v) { return v.is_null() ? "not enumerated" : v.dump(); }

void render_torus(std::ostream& out, const json& r) {
  if (!r["label"].get<std::string>().empty()) out << r["label"].get<std::string>() << "\n";
  out << "rank: " << r["rank"] << " (split " << r["split_rank"] << ", compact " << r["compact_rank"] << ")\n";
  out << "types (p,q,r): (" << r["p"] << "," << r["q"] << "," << r["r"] << ")\n";
  out << "|T(R)_2|: " << r["points2_size"] << "\n";
  out << "|H^1(R,T)|: " << r["h1_size"] << "\n";
  const json& a = r["lambda_witness"];
  out << "lambda: " << a["points2"] << " points, split image " << a["split_image"] << ", kernel "
      << a["kernel"] << ", image " << a["image"] << "\n";
  const json& c = r["compact_witness"];
  out << "compact part: " << c["compact_points2"] << " points, " << c["intersection"]
      << " shared with split part, quotient " << c["quotient"] << "\n";
}

void render_group(std::ostream& out, const json& r) {
  if (!r["label"].get<std::string>().empty()) out << r["label"].get<std::string>() << "\n";
  out << "dim H^1(R,T): " << r["h1_torus_dimension"] << "\n";
  out << "|W0|: " << value_text(r["w0_order"]) << "\n";
  out << "|H^1(R,G)|: " << r["cardinality"] << "\n";
  if (r.contains("burnside")) out << "burnside: " << value_text(r["burnside"]) << "\n";
  for (std::size_t k = 0; k < r["representatives"].size(); ++k)
    out << "  " << vector_text(r["representatives"][k]) << "  size " << r["orbit_sizes"][k] << "\n";
}

void render_table(std::ostream& out, const json& r) {
  out << "compact forms, series " << r["series"].get<std::string>() << "\n";
  for (const auto& row : r["rows"]) {
    out << "  " << row["group"].get<std::string>() << " (" << row["cartan_type"].get<std::string>()
        << "): " << row["cardinality"];
    out << "  |W| " << value_text(row["w0_order"]) << ", burnside " << value_text(row["burnside"]) << "\n";
  }
}

void render_check(std::ostream& out, const json& r) {
  if (!r["label"].get<std::string>().empty()) out << r["label"].get<std::string>() << "\n";
  for (const auto& c : r["checks"])
    out << "  " << c["status"].get<std::string>() << "  " << c["name"].get<std::string>() << ": "
        << c["detail"].get<std::string>() << "\n";
  out << (r["ok"].get<bool>() ? "all checks passed" : "CHECK FAILED") << "\n";
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_flag("--json", opt.json_output, "Machine-readable output");
  sub->add_option("--cutoff", opt.cutoff, "Largest W0 enumerated")->check(CLI::PositiveNumber);
  sub->add_option("--out", opt.out, "Write the report to FILE");
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  const std::string kind = report.at("kind").get<std::string>();
  if (kind == "torus") render_torus(out, report);
  if (kind == "group") render_group(out, report);
  if (kind == "table") render_table(out, report);
  if (kind == "check") render_check(out, report);
  return out.str();
}

CommandResult run_command(const std::vector<std::string>& args) {
  Options opt;
  CLI::App app{"Galois cohomology of real reductive groups", "realh1"};
  app.require_subcommand(1);

  auto* torus = app.add_subcommand("torus", "Report on a real torus");
  torus->add_option("FILE", opt.file)->required();
  add_common(torus, opt);

  auto* group = app.add_subcommand("group", "Compute H^1(R, G)");
  group->add_option("FILE", opt.file)->required();
  group->add_flag("--burnside", opt.burnside, "Cross-check by counting fixed points");
  add_common(group, opt);

  auto* table = app.add_subcommand("table", "Compact forms of a series");
  table->add_option("--series", opt.series)->required()->check(CLI::IsMember({"A", "B", "C", "D", "G", "F", "E8"}));
  table->add_option("--max-rank", opt.max_rank)->required()->check(CLI::PositiveNumber);
  add_common(table, opt);

  auto* check = app.add_subcommand("check", "Run the invariant suite on a spec");
  check->add_option("FILE", opt.file)->required();
  check->add_option("--seed", opt.seed, "Seed for randomized checks");
  add_common(check, opt);

  CommandResult result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
    result.output = out.str();
    result.error = err.str();
    return result;
  }

  json report;
  try {
    if (table->parsed()) {
      report = table_report(opt);
    } else {
      SpecDocument doc = load_spec(opt.file);
      if (torus->parsed()) {
        auto* t = std::get_if<TorusDocument>(&doc);
        if (!t) throw Error(ErrorCode::SchemaError, opt.file + ": expected a torus document");
        report = torus_report(t->label, t->torus);
      } else if (group->parsed()) {
        auto* g = std::get_if<GroupDocument>(&doc);
        if (!g) throw Error(ErrorCode::SchemaError, opt.file + ": expected a group document");
        report = group_report(g->form, opt);
      } else if (auto* t = std::get_if<TorusDocument>(&doc)) {
        report = check_torus(t->label, t->torus, opt);
      } else {
        report = check_group(std::get<GroupDocument>(doc).form, opt);
      }
    }
  } catch (const CheckFailed& f) {
    report = f.report;
    result.exit_code = 2;
    err << "oracle mismatch\n";
  } catch (const Error& e) {
    result.exit_code = is_internal(e.code()) ? 2 : 1;
    result.error = std::string(error_code_name(e.code())) + ": " + e.what() + "\n";
    return result;
  } catch (const std::invalid_argument& e) {
    result.exit_code = 1;
    result.error = std::string("invalid argument: ") + e.what() + "\n";
    return result;
  }

  const std::string text = opt.json_output ? report.dump(2) + "\n" : render_text(report);
  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) {
      result.exit_code = 1;
      result.error = "cannot write " + opt.out + "\n";
      return result;
    }
    file << text;
  } else {
    result.output = text;
  }
  result.error += err.str();
  return result;
}

}  // namespace realh1::cli
