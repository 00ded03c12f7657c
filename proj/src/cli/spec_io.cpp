#include "realh1/cli/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "realh1/error.hpp"
#include "realh1/rootdata.hpp"

namespace realh1::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaError, where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t parse_size(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    schema_error(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

Integer parse_integer(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  schema_error(where, "expected an integer, got " + j.dump());
}

IntVector parse_vector(const json& j, const std::string& where, std::size_t length) {
  if (!j.is_array()) schema_error(where, "expected an array of integers");
  if (j.size() != length)
    schema_error(where, "expected length " + std::to_string(length) + ", got " + std::to_string(j.size()));
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(parse_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

IntMatrix parse_matrix(const json& j, const std::string& where, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) schema_error(where, "expected a matrix (array of rows)");
  if (j.size() != rows)
    schema_error(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  std::vector<IntVector> parsed;
  for (std::size_t i = 0; i < rows; ++i)
    parsed.push_back(parse_vector(j[i], where + "[" + std::to_string(i) + "]", cols));
  return IntMatrix::from_rows(cols, parsed);
}

// A square matrix of any size; shape problems are reported by validation.
IntMatrix parse_square(const json& j, const std::string& where, std::size_t rank) {
  if (!j.is_array()) schema_error(where, "expected a matrix (array of rows)");
  std::size_t cols = j.empty() ? rank : (j[0].is_array() ? j[0].size() : 0);
  return parse_matrix(j, where, j.size(), cols);
}

F2Vector parse_f2(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of 0/1 entries");
  F2Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || (j[i].get<long long>() != 0 && j[i].get<long long>() != 1))
      schema_error(where + "[" + std::to_string(i) + "]", "expected 0 or 1");
    v.push_back(static_cast<std::uint8_t>(j[i].get<int>()));
  }
  return v;
}

template <typename F>
auto in_section(const std::string& where, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    throw Error(e.code(), where + ": " + e.what());
  }
}

RootDatum parse_root_datum(const json& j) {
  const std::string where = "root_datum";
  if (!j.is_object()) schema_error(where, "expected an object");

  if (j.contains("type")) {
    const json& t = j["type"];
    if (!t.is_string() || t.get<std::string>().size() < 2)
      schema_error(where + ".type", "expected a Cartan type such as \"E8\"");
    const std::string type = t.get<std::string>();
    std::size_t rank = 0;
    try {
      rank = std::stoul(type.substr(1));
    } catch (const std::exception&) {
      schema_error(where + ".type", "bad Cartan type \"" + type + "\"");
    }
    std::string isogeny = "simply_connected";
    if (j.contains("isogeny")) {
      if (!j["isogeny"].is_string()) schema_error(where + ".isogeny", "expected a string");
      isogeny = j["isogeny"].get<std::string>();
    }
    try {
      if (isogeny == "standard") return classical_standard(type[0], rank);
      if (isogeny == "simply_connected")
        return root_datum_from_cartan(cartan_matrix(type[0], rank), Isogeny::SimplyConnected);
      if (isogeny == "adjoint")
        return root_datum_from_cartan(cartan_matrix(type[0], rank), Isogeny::Adjoint);
    } catch (const std::invalid_argument& e) {
      schema_error(where, e.what());
    }
    schema_error(where + ".isogeny", "expected simply_connected, adjoint or standard");
  }

  RootDatum rd;
  rd.rank = parse_size(require(j, "rank", where), where + ".rank");
  const json& roots = require(j, "roots", where);
  const json& coroots = require(j, "coroots", where);
  if (!roots.is_array() || !coroots.is_array()) schema_error(where, "roots and coroots must be arrays");
  if (roots.size() != coroots.size())
    schema_error(where, "roots and coroots differ in number");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    rd.roots.push_back(parse_vector(roots[i], where + ".roots[" + std::to_string(i) + "]", rd.rank));
    rd.coroots.push_back(parse_vector(coroots[i], where + ".coroots[" + std::to_string(i) + "]", rd.rank));
  }
  const json& simple = require(j, "simple_indices", where);
  if (!simple.is_array()) schema_error(where + ".simple_indices", "expected an array");
  for (std::size_t i = 0; i < simple.size(); ++i)
    rd.simple_indices.push_back(parse_size(simple[i], where + ".simple_indices[" + std::to_string(i) + "]"));
  return rd;
}

RealFormSpec parse_real_form(const json& j, RootDatum rd, std::string label) {
  const std::string where = "real_form";
  if (!j.is_object()) schema_error(where, "expected an object");
  RealFormSpec form;
  form.label = std::move(label);
  form.root_datum = std::move(rd);
  const std::size_t n = form.root_datum.rank;
  form.sigma_star = parse_square(require(j, "sigma_star", where), where + ".sigma_star", n);

  const json& gens = require(j, "w0_generators", where);
  if (gens.is_string()) {
    if (gens.get<std::string>() != "all_simple_reflections")
      schema_error(where + ".w0_generators", "expected \"all_simple_reflections\" or a list of matrices");
    form.w0_generators = simple_reflections(form.root_datum);
  } else if (gens.is_array()) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      WeylElement w;
      w.matrix = parse_matrix(gens[k], where + ".w0_generators[" + std::to_string(k) + "]", n, n);
      form.w0_generators.push_back(std::move(w));
    }
  } else {
    schema_error(where + ".w0_generators", "expected \"all_simple_reflections\" or a list of matrices");
  }

  if (j.contains("shift")) {
    const json& shift = j["shift"];
    if (!shift.is_array()) schema_error(where + ".shift", "expected a list of 0/1 vectors");
    for (std::size_t k = 0; k < shift.size(); ++k)
      form.shift.push_back(parse_f2(shift[k], where + ".shift[" + std::to_string(k) + "]"));
  } else {
    const std::size_t d = in_section(where + ".sigma_star", [&] { return h1_space(form).dimension(); });
    form.shift.assign(form.w0_generators.size(), F2Vector(d, 0));
  }
  return form;
}

SpecDocument parse_document(const json& doc) {
  if (!doc.is_object()) schema_error("document", "expected a JSON object");
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) schema_error("label", "expected a string");
    label = doc["label"].get<std::string>();
  }

  if (doc.contains("lattice")) {
    if (doc.contains("root_datum")) schema_error("document", "give either 'lattice' or 'root_datum', not both");
    const json& l = doc["lattice"];
    if (!l.is_object()) schema_error("lattice", "expected an object");
    const std::size_t rank = parse_size(require(l, "rank", "lattice"), "lattice.rank");
    IntMatrix sigma = parse_square(require(l, "sigma", "lattice"), "lattice.sigma", rank);
    return in_section("lattice.sigma", [&]() -> SpecDocument {
      if (sigma.rows() != rank || sigma.cols() != rank)
        throw Error(ErrorCode::NonSquare, "sigma is " + std::to_string(sigma.rows()) + "x" +
                                              std::to_string(sigma.cols()) + ", rank is " +
                                              std::to_string(rank));
      return TorusDocument{label, RealTorus(InvolutiveLattice(std::move(sigma)))};
    });
  }

  if (doc.contains("root_datum")) {
    RootDatum rd = parse_root_datum(doc["root_datum"]);
    in_section("root_datum", [&] { validate_rd(rd); });
    RealFormSpec form = doc.contains("real_form") ? parse_real_form(doc["real_form"], std::move(rd), label)
                                                  : compact_form(rd, label);
    in_section("real_form", [&] { validate_form(form); });
    return GroupDocument{label, std::move(form)};
  }

  schema_error("document", "expected a 'lattice' or a 'root_datum' section");
}

}  // namespace

SpecDocument parse_spec(std::string_view text, std::string_view source) {
  const std::string prefix(source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, prefix + ": " + e.what());
  }
  try {
    return parse_document(doc);
  } catch (const Error& e) {
    throw Error(e.code(), prefix + ": " + e.what());
  }
}

SpecDocument load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str(), path.filename().string());
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const F2Vector& v) {
  json out = json::array();
  for (auto b : v) out.push_back(static_cast<int>(b));
  return out;
}

json to_document(const RealFormSpec& form) {
  const RootDatum& rd = form.root_datum;
  json roots = json::array(), coroots = json::array(), gens = json::array(), shift = json::array();
  for (std::size_t i = 0; i < rd.size(); ++i) {
    roots.push_back(to_json(rd.roots[i]));
    coroots.push_back(to_json(rd.coroots[i]));
  }
  for (const auto& g : form.w0_generators) gens.push_back(to_json(g.matrix));
  for (const auto& c : form.shift) shift.push_back(to_json(c));
  return json{{"label", form.label},
              {"root_datum",
               {{"rank", rd.rank}, {"roots", roots}, {"coroots", coroots}, {"simple_indices", rd.simple_indices}}},
              {"real_form", {{"sigma_star", to_json(form.sigma_star)}, {"w0_generators", gens}, {"shift", shift}}}};
}

json to_document(const std::string& label, const InvolutiveLattice& lattice) {
  return json{{"label", label}, {"lattice", {{"rank", lattice.rank()}, {"sigma", to_json(lattice.sigma())}}}};
}

}  // namespace realh1::cli
