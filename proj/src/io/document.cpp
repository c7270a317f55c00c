#include "cmreg/document.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cmreg/parse.hpp"

namespace cmreg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, "missing \"" + key + "\"");
  return obj.at(key);
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(where, "expected an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) fail(where, "expected a string");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> string_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  std::vector<std::vector<std::string>> out;
  for (size_t r = 0; r < j.size(); ++r) {
    out.push_back(string_list(j[r], where + "/" + std::to_string(r)));
  }
  return out;
}

// Parses and re-prints so stored strings are canonical.
std::string canonical(const std::string& text, const PolyRing& ring, const std::string& where) {
  try {
    Polynomial p = parse_polynomial(text, ring);
    if (!p.is_homogeneous()) fail(where, "polynomial \"" + text + "\" is not homogeneous");
    return to_string(ring, p);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

CokerSpec parse_coker(const json& j, const PolyRing& ring, const std::string& where) {
  CokerSpec out;
  out.target_twists = int_list(member(j, "target_twists", where), where + "/target_twists");
  out.source_twists = int_list(member(j, "source_twists", where), where + "/source_twists");
  out.matrix = string_matrix(member(j, "matrix", where), where + "/matrix");
  if (out.matrix.size() != out.target_twists.size()) {
    fail(where, "matrix has " + std::to_string(out.matrix.size()) + " rows but " +
                    std::to_string(out.target_twists.size()) + " target twists");
  }
  for (size_t r = 0; r < out.matrix.size(); ++r) {
    if (out.matrix[r].size() != out.source_twists.size()) {
      fail(where, "row " + std::to_string(r) + " has " + std::to_string(out.matrix[r].size()) +
                      " entries but there are " + std::to_string(out.source_twists.size()) +
                      " source twists");
    }
    for (auto& e : out.matrix[r]) e = canonical(e, ring, where + "/matrix");
  }
  return out;
}

json coker_json(const CokerSpec& c) {
  return json{{"target_twists", c.target_twists},
              {"source_twists", c.source_twists},
              {"matrix", c.matrix}};
}

GradedMatrix build_coker(const CokerSpec& c, const RingPtr& ring, const std::string& where) {
  std::vector<Polynomial> entries;
  for (const auto& row : c.matrix) {
    for (const auto& e : row) entries.push_back(parse_polynomial(e, *ring));
  }
  try {
    return GradedMatrix(FreeModule{ring, c.target_twists}, FreeModule{ring, c.source_twists},
                        std::move(entries));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

// Columns of a submodule matrix as vectors of `target`; zero columns dropped.
GradedMatrix build_submodule(const SubmoduleSpec& s, const FreeModule& target) {
  const std::string where = "submodule";
  if (s.matrix.size() != static_cast<size_t>(target.rank())) {
    fail(where, "matrix has " + std::to_string(s.matrix.size()) + " rows but the ambient module has " +
                    std::to_string(target.rank()) + " generators");
  }
  const size_t cols = s.matrix.empty() ? 0 : s.matrix.front().size();
  ModuleSpace space(target);
  std::vector<ModuleVector> columns;
  for (size_t c = 0; c < cols; ++c) {
    std::vector<ModuleTerm> terms;
    for (size_t r = 0; r < s.matrix.size(); ++r) {
      if (s.matrix[r].size() != cols) fail(where, "ragged matrix");
      Polynomial p = parse_polynomial(s.matrix[r][c], *target.ring);
      for (const auto& t : p.terms()) {
        terms.push_back(ModuleTerm{t.monomial, static_cast<int>(r), t.coefficient});
      }
    }
    ModuleVector v = ModuleVector::from_terms(space, std::move(terms));
    if (!v.is_homogeneous(space)) fail(where, "column " + std::to_string(c) + " is not homogeneous");
    columns.push_back(std::move(v));
  }
  return GradedMatrix::from_columns(target, space, columns);
}

RingPtr make_ring(const InputDocument& doc) {
  try {
    Field f = doc.characteristic == 0 ? Field::rationals() : Field::prime(doc.characteristic);
    return std::make_shared<const PolyRing>(f, doc.vars);
  } catch (const std::invalid_argument& e) {
    fail("ring", e.what());
  }
}

}  // namespace

InputDocument parse_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document", "expected a JSON object");
  InputDocument doc;

  const json& field = member(j, "field", "document");
  if (field.is_string() && field.get<std::string>() == "Q") {
    doc.characteristic = 0;
  } else if (field.is_object() && field.contains("GF") && field.at("GF").is_number_unsigned()) {
    doc.characteristic = field.at("GF").get<std::uint32_t>();
  } else {
    fail("field", "expected \"Q\" or {\"GF\": p}");
  }
  doc.vars = string_list(member(j, "vars", "document"), "vars");
  RingPtr ring = make_ring(doc);

  const json& module = member(j, "module", "document");
  if (!module.is_object() || module.size() != 1) {
    fail("module", "expected exactly one of \"ideal\", \"ideal_as_module\", \"coker\"");
  }
  if (module.contains("ideal") || module.contains("ideal_as_module")) {
    const bool as_module = module.contains("ideal_as_module");
    doc.kind = as_module ? InputDocument::Kind::kIdealAsModule : InputDocument::Kind::kIdeal;
    const std::string key = as_module ? "ideal_as_module" : "ideal";
    doc.ideal = string_list(module.at(key), "module/" + key);
    for (auto& g : doc.ideal) g = canonical(g, *ring, "module/" + key);
  } else if (module.contains("coker")) {
    doc.kind = InputDocument::Kind::kCoker;
    doc.coker = parse_coker(module.at("coker"), *ring, "module/coker");
  } else {
    fail("module", "unknown module kind \"" + module.begin().key() + "\"");
  }

  if (j.contains("ambient") != j.contains("submodule")) {
    fail("document", "\"ambient\" and \"submodule\" must be given together");
  }
  if (j.contains("ambient")) {
    doc.ambient = parse_coker(j.at("ambient"), *ring, "ambient");
    SubmoduleSpec s;
    s.matrix = string_matrix(member(j.at("submodule"), "matrix", "submodule"), "submodule/matrix");
    for (auto& row : s.matrix) {
      for (auto& e : row) e = canonical(e, *ring, "submodule/matrix");
    }
    doc.submodule = std::move(s);
  }
  if (j.contains("caps")) {
    const json& c = j.at("caps");
    CapsSpec caps;
    for (const auto& v : member(c, "x", "caps")) {
      if (!v.is_number_integer() || v.get<long>() < 0) fail("caps/x", "expected nonnegative integers");
      caps.x.push_back(v.get<long>());
    }
    const json& y = member(c, "y", "caps");
    if (!y.is_number_integer()) fail("caps/y", "expected an integer");
    caps.y = y.get<long>();
    // Optional "d" pads x with zeros up to the padded dimension.
    if (c.contains("d")) {
      const json& d = c.at("d");
      if (!d.is_number_integer() || d.get<long>() < static_cast<long>(caps.x.size())) {
        fail("caps/d", "expected an integer >= length of x");
      }
      caps.x.resize(d.get<long>(), 0);
    }
    doc.caps = std::move(caps);
  }
  // Catch shape errors early.
  build_input(doc);
  return doc;
}

std::string serialize_document(const InputDocument& doc) {
  json j;
  if (doc.characteristic == 0) {
    j["field"] = "Q";
  } else {
    j["field"] = json{{"GF", doc.characteristic}};
  }
  j["vars"] = doc.vars;
  switch (doc.kind) {
    case InputDocument::Kind::kIdeal: j["module"] = json{{"ideal", doc.ideal}}; break;
    case InputDocument::Kind::kIdealAsModule: j["module"] = json{{"ideal_as_module", doc.ideal}}; break;
    case InputDocument::Kind::kCoker: j["module"] = json{{"coker", coker_json(doc.coker)}}; break;
  }
  if (doc.ambient) j["ambient"] = coker_json(*doc.ambient);
  if (doc.submodule) j["submodule"] = json{{"matrix", doc.submodule->matrix}};
  if (doc.caps) j["caps"] = json{{"x", doc.caps->x}, {"y", doc.caps->y}};
  return j.dump(2) + "\n";
}

InputDocument parse_shorthand(const std::string& text) {
  const std::string where = "shorthand";
  const size_t open = text.find('[');
  const size_t close = text.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    fail(where, "expected <field>[vars]/(generators)");
  }
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\n");
    const auto e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  InputDocument doc;
  const std::string field = trim(text.substr(0, open));
  if (field == "Q") {
    doc.characteristic = 0;
  } else if (field.rfind("GF(", 0) == 0 && field.back() == ')') {
    try {
      doc.characteristic = static_cast<std::uint32_t>(std::stoul(field.substr(3, field.size() - 4)));
    } catch (const std::exception&) {
      fail(where, "bad field \"" + field + "\"");
    }
  } else {
    fail(where, "bad field \"" + field + "\"");
  }
  std::stringstream vars(text.substr(open + 1, close - open - 1));
  for (std::string v; std::getline(vars, v, ',');) doc.vars.push_back(trim(v));

  std::string rest = trim(text.substr(close + 1));
  if (!rest.empty()) {
    if (rest.size() < 3 || rest[0] != '/' || trim(rest.substr(1)).front() != '(' || rest.back() != ')') {
      fail(where, "expected /(generators) after the ring");
    }
    rest = trim(rest.substr(1));
    std::stringstream gens(rest.substr(1, rest.size() - 2));
    for (std::string g; std::getline(gens, g, ',');) {
      if (!trim(g).empty()) doc.ideal.push_back(trim(g));
    }
  }
  RingPtr ring = make_ring(doc);
  for (auto& g : doc.ideal) g = canonical(g, *ring, where);
  return doc;
}

InputDocument load_document(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
  }
  if (arg.find('[') != std::string::npos) return parse_shorthand(arg);
  throw InputError("no such file: " + arg);
}

BuiltInput build_input(const InputDocument& doc) {
  BuiltInput out;
  out.ring = make_ring(doc);
  std::vector<Polynomial> gens;
  for (const auto& g : doc.ideal) gens.push_back(parse_polynomial(g, *out.ring));
  switch (doc.kind) {
    case InputDocument::Kind::kIdeal:
      out.module = ideal_presentation(out.ring, gens);
      break;
    case InputDocument::Kind::kIdealAsModule:
      out.module = subquotient_presentation(ideal_presentation(out.ring, gens),
                                            ideal_presentation(out.ring, {}));
      break;
    case InputDocument::Kind::kCoker:
      out.module = build_coker(doc.coker, out.ring, "module/coker");
      break;
  }
  if (doc.ambient) {
    out.ambient = build_coker(*doc.ambient, out.ring, "ambient");
    out.submodule = build_submodule(*doc.submodule, out.ambient->target());
    const auto& a = *out.ambient;
    out.ideal_case = a.rows() == 1 && a.target().twists[0] == 0 && a.is_zero();
  } else if (doc.kind != InputDocument::Kind::kCoker) {
    out.ambient = ideal_presentation(out.ring, {});
    out.submodule = ideal_presentation(out.ring, gens);
    out.ideal_case = true;
  }
  return out;
}

}  // namespace cmreg
