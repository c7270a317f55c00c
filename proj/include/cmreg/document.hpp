#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmreg/syzygy.hpp"

namespace cmreg {

// Malformed input file or shorthand.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// coker(matrix): rows indexed by target twists, columns by source twists.
struct CokerSpec {
  std::vector<int> target_twists;
  std::vector<int> source_twists;
  std::vector<std::vector<std::string>> matrix;  // rows x cols

  friend bool operator==(const CokerSpec&, const CokerSpec&) = default;
};

// Columns of `matrix` generate a submodule of the ambient free cover.
struct SubmoduleSpec {
  std::vector<std::vector<std::string>> matrix;

  friend bool operator==(const SubmoduleSpec&, const SubmoduleSpec&) = default;
};

struct CapsSpec {
  std::vector<long> x;
  long y = 0;

  friend bool operator==(const CapsSpec&, const CapsSpec&) = default;
};

// A parsed input file. Polynomial strings are stored in the canonical form
// printed by to_string, so serialize/parse round-trips exactly.
struct InputDocument {
  enum class Kind { kIdeal, kIdealAsModule, kCoker };

  std::uint32_t characteristic = 0;  // 0 = Q
  std::vector<std::string> vars;
  Kind kind = Kind::kIdeal;
  std::vector<std::string> ideal;
  CokerSpec coker;
  std::optional<CokerSpec> ambient;
  std::optional<SubmoduleSpec> submodule;
  std::optional<CapsSpec> caps;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

// Throws InputError (with a JSON pointer-ish location) or ParseError.
InputDocument parse_document(const std::string& json_text);
std::string serialize_document(const InputDocument& doc);

// "Q[x,y]/(x^2, x*y)" or "GF(101)[x,y,z]/(...)": module R/a.
InputDocument parse_shorthand(const std::string& text);

// Reads `arg` as a file when it names one, otherwise as shorthand.
InputDocument load_document(const std::string& arg);

// Algebraic objects described by a document.
struct BuiltInput {
  RingPtr ring;
  GradedPresentation module;
  // Set when the document carries a pair or describes an ideal (U = R, M = a).
  std::optional<GradedPresentation> ambient;
  std::optional<GradedMatrix> submodule;
  bool ideal_case = false;
};

// Throws InputError for inhomogeneous polynomials or inconsistent shapes.
BuiltInput build_input(const InputDocument& doc);

}  // namespace cmreg
