#pragma once

// JSON spec documents: a torus ({"lattice": ...}) or a group
// ({"root_datum": ..., "real_form": ...}).

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "realh1/f2.hpp"
#include "realh1/int_matrix.hpp"
#include "realh1/realform.hpp"
#include "realh1/torus.hpp"

namespace realh1::cli {

struct TorusDocument {
  std::string label;
  RealTorus torus;
};

struct GroupDocument {
  std::string label;
  RealFormSpec form;
};

using SpecDocument = std::variant<TorusDocument, GroupDocument>;

/// Parses and validates. Every failure is an Error whose message starts with
/// `source` and the offending section, e.g. "sl2r.json: real_form.shift: ...";
/// malformed JSON and schema violations use ErrorCode::SchemaError, and
/// validation failures keep the code of the underlying check.
SpecDocument parse_spec(std::string_view text, std::string_view source = "<input>");
SpecDocument load_spec(const std::filesystem::path& path);

nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const F2Vector& v);

/// The document form of a spec; parse_spec(to_document(x).dump()) rebuilds x.
nlohmann::json to_document(const RealFormSpec& form);
nlohmann::json to_document(const std::string& label, const InvolutiveLattice& lattice);

}  // namespace realh1::cli
