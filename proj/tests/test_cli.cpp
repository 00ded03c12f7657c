#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>

#include "realh1/cli/commands.hpp"
#include "realh1/cli/spec_io.hpp"
#include "realh1/error.hpp"
#include "realh1/h1core.hpp"
#include "support.hpp"

using namespace realh1;
using namespace realh1::cli;
using nlohmann::json;

namespace {

const std::filesystem::path kSpecs = REALH1_SPECS_DIR;

std::string spec(const char* name) { return (kSpecs / name).string(); }

ErrorCode parse_error_code(const std::string& text, std::string* message = nullptr) {
  try {
    (void)parse_spec(text, "doc.json");
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInconsistency;
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const CommandResult r = run_command(args);
  REQUIRE_MESSAGE(r.exit_code == 0, r.error);
  return json::parse(r.output);
}

std::vector<std::uint64_t> numbers_in(const std::string& text) {
  std::vector<std::uint64_t> out;
  static const std::regex number(R"(\b\d+\b)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
    out.push_back(std::stoull(it->str()));
  return out;
}

}  // namespace

TEST_CASE("parse a torus document") {
  const SpecDocument doc = parse_spec(R"({"lattice": {"rank": 1, "sigma": [[-1]]}})");
  REQUIRE(std::holds_alternative<TorusDocument>(doc));
  CHECK(std::get<TorusDocument>(doc).torus.h1().size() == 2);
}

TEST_CASE("parse a group document") {
  const SpecDocument doc = parse_spec(R"({
    "label": "compact A1",
    "root_datum": {"rank": 1, "roots": [[2], [-2]], "coroots": [[1], [-1]], "simple_indices": [0]},
    "real_form": {"sigma_star": [[-1]], "w0_generators": "all_simple_reflections"}
  })");
  REQUIRE(std::holds_alternative<GroupDocument>(doc));
  const RealFormSpec& f = std::get<GroupDocument>(doc).form;
  CHECK(f.label == "compact A1");
  CHECK(f.shift == std::vector<F2Vector>{F2Vector{0}});
  CHECK(h1_group(f).cardinality == 2);
}

TEST_CASE("integers may be given as strings") {
  const SpecDocument doc = parse_spec(R"({"lattice": {"rank": 2, "sigma": [["0", "1"], [1, "0"]]}})");
  CHECK(std::get<TorusDocument>(doc).torus.lattice() == InvolutiveLattice::regular());
}

TEST_CASE("errors carry their location") {
  std::string message;
  CHECK(parse_error_code(R"({"lattice": {"rank": 2, "sigma": [[1, 1], [0, 1]]}})", &message) ==
        ErrorCode::NotInvolution);
  CHECK(message.find("doc.json: lattice.sigma") == 0);

  CHECK(parse_error_code("{\n  \"lattice\": [1,\n}", &message) == ErrorCode::SchemaError);
  CHECK(message.find("line 3") != std::string::npos);

  CHECK(parse_error_code(R"({"lattice": {"rank": 1, "sigma": [[1, 0]]}})", &message) == ErrorCode::NonSquare);
  CHECK(parse_error_code(R"({"lattice": {"rank": 1}})", &message) == ErrorCode::SchemaError);
  CHECK(message.find("lattice: missing field 'sigma'") != std::string::npos);
  CHECK(parse_error_code(R"({"lattice": {"rank": 1, "sigma": [["x"]]}})", &message) == ErrorCode::SchemaError);
  CHECK(message.find("lattice.sigma[0][0]") != std::string::npos);
  CHECK(parse_error_code(R"({"label": "nothing"})") == ErrorCode::SchemaError);

  CHECK(parse_error_code(R"({"root_datum": {"rank": 1, "roots": [[1], [-1]], "coroots": [[1], [-1]],
                                             "simple_indices": [0]}})",
                         &message) == ErrorCode::PairingNotTwo);
  CHECK(message.find("doc.json: root_datum:") == 0);

  CHECK(parse_error_code(R"({"root_datum": {"type": "A1"},
                             "real_form": {"sigma_star": [[1]], "w0_generators": "all_simple_reflections"}})",
                         &message) == ErrorCode::FundamentalityViolation);
  CHECK(message.find("real_form:") != std::string::npos);

  CHECK(parse_error_code(R"({"root_datum": {"type": "A1"},
                             "real_form": {"sigma_star": [[-1]], "w0_generators": "all_simple_reflections",
                                           "shift": [[2]]}})",
                         &message) == ErrorCode::SchemaError);
  CHECK(message.find("real_form.shift[0][0]") != std::string::npos);
  CHECK(parse_error_code(R"({"root_datum": {"type": "Q3"}})") == ErrorCode::SchemaError);
  CHECK(parse_error_code(R"({"root_datum": {"type": "A2", "isogeny": "standard"}})") == ErrorCode::SchemaError);
}

TEST_CASE("documents round-trip") {
  const RealFormSpec f = realh1::testing::a1xa1_swap();
  const SpecDocument doc = parse_spec(to_document(f).dump());
  const RealFormSpec& g = std::get<GroupDocument>(doc).form;
  CHECK(g.sigma_star == f.sigma_star);
  CHECK(g.root_datum.roots == f.root_datum.roots);
  CHECK(g.w0_generators == f.w0_generators);
  CHECK(g.shift == f.shift);
  CHECK(g.label == f.label);

  const InvolutiveLattice l(IntMatrix{{1, 2}, {0, -1}});
  CHECK(std::get<TorusDocument>(parse_spec(to_document("t", l).dump())).torus.lattice() == l);
}

TEST_CASE("table command") {
  const json a = run_json({"table", "--series", "A", "--max-rank", "4"});
  std::vector<std::uint64_t> counts;
  for (const auto& row : a["rows"]) counts.push_back(row["cardinality"].get<std::uint64_t>());
  CHECK(counts == std::vector<std::uint64_t>{2, 2, 3, 3});
  CHECK(a["rows"][0]["group"] == "SU(2)");
  CHECK(a["rows"][3]["burnside"] == 3);
}

TEST_CASE("group command") {
  const json su2 = run_json({"group", spec("su2.json")});
  CHECK(su2["cardinality"] == 2);
  CHECK(su2["w0_order"] == 2);
  const json sl2 = run_json({"group", spec("sl2r.json"), "--burnside"});
  CHECK(sl2["cardinality"] == 1);
  CHECK(sl2["burnside"] == 1);
  CHECK(sl2["orbit_sizes"] == json::array({2}));
  const json e8 = run_json({"group", spec("compact_e8.json")});
  CHECK(e8["cardinality"] == 3);
  CHECK(e8["w0_order"].is_null());
}

TEST_CASE("torus command") {
  const json t = run_json({"torus", spec("torus_compact.json")});
  CHECK(t["h1_size"] == 2);
  CHECK(t["points2_size"] == 2);
  CHECK(t["p"] == 0);
  CHECK(t["q"] == 1);
  CHECK(t["r"] == 0);
}

TEST_CASE("check passes on every bundled spec") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kSpecs)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const CommandResult r = run_command({"check", entry.path().string()});
    CHECK_MESSAGE(r.exit_code == 0, r.error << r.output);
    ++seen;
  }
  CHECK(seen >= 15);
}

TEST_CASE("json output is stable") {
  for (const char* name : {"su2.json", "a1xa1_swap.json", "torus_mixed.json"}) {
    const auto a = run_command({"check", spec(name), "--json", "--seed", "42"});
    const auto b = run_command({"check", spec(name), "--json", "--seed", "42"});
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("text and json report the same numbers") {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"torus", spec("torus_mixed.json")},
        std::vector<std::string>{"group", spec("compact_c2.json"), "--burnside"},
        std::vector<std::string>{"table", "--series", "B", "--max-rank", "3"}}) {
    const CommandResult text = run_command(cmd);
    REQUIRE(text.exit_code == 0);
    std::vector<std::string> with_json = cmd;
    with_json.push_back("--json");
    const json report = json::parse(run_command(with_json).output);
    CHECK(render_text(report) == text.output);

    // Every count in the JSON report appears in the text.
    const auto numbers = numbers_in(text.output);
    std::function<void(const json&)> visit = [&](const json& j) {
      if (j.is_number_unsigned()) {
        CHECK(std::find(numbers.begin(), numbers.end(), j.get<std::uint64_t>()) != numbers.end());
      } else if (j.is_structured()) {
        for (const auto& v : j) visit(v);
      }
    };
    visit(report);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_command({}).exit_code == 1);
  CHECK(run_command({"frobnicate"}).exit_code == 1);
  CHECK(run_command({"--help"}).exit_code == 0);
  CHECK(run_command({"group", spec("does_not_exist.json")}).exit_code == 1);
  CHECK(run_command({"torus", spec("su2.json")}).exit_code == 1);
  CHECK(run_command({"table", "--series", "X", "--max-rank", "2"}).exit_code == 1);

  const auto dir = std::filesystem::temp_directory_path() / "realh1_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.json";
  std::ofstream(bad) << R"({"root_datum": {"type": "A2"},
    "real_form": {"sigma_star": [[-1, 0], [0, -1]], "w0_generators": "all_simple_reflections",
                  "shift": [[1, 1], [0, 0]]}})";
  const CommandResult r = run_command({"group", bad.string()});
  CHECK(r.exit_code == 1);
  const CommandResult c = run_command({"check", bad.string()});
  CHECK(c.exit_code == 1);
  CHECK(c.error.find("InconsistentCocycle") != std::string::npos);

  const auto out = dir / "report.json";
  const CommandResult w = run_command({"torus", spec("torus_weil.json"), "--json", "--out", out.string()});
  CHECK(w.exit_code == 0);
  CHECK(w.output.empty());
  std::ifstream in(out);
  CHECK(json::parse(in)["h1_size"] == 1);
}
