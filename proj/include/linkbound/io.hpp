#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "linkbound/bounds.hpp"
#include "linkbound/braid.hpp"
#include "linkbound/signature.hpp"

namespace linkbound {

using json = nlohmann::json;

/// Input document that does not match the expected schema. Line and column
/// are 0 when the problem is structural rather than syntactic.
class SchemaError : public ParseError {
 public:
  explicit SchemaError(const std::string& what) : ParseError(what, 0, 0) {}
};

/// Integers become JSON numbers when they fit in 64 bits, strings otherwise.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j, const std::string& where);

json rational_to_json(const Rational& q);  // always a string "p/q" or "p"
Rational rational_from_json(const json& j, const std::string& where);

/// {"exponent": coefficient} with string keys.
json laurent_to_json(const Laurent& p);
/// Accepts the object form, {"coefficients": [...], "min_exponent": k}, or
/// a string such as "t^2-t+1".
Laurent laurent_from_json(const json& j);

/// Coefficients lowest degree first.
json polynomial_to_json(const PolyZ& p);
PolyZ polynomial_from_json(const json& j, const std::string& where);

/// A link given by a braid or directly by Seifert data.
struct LinkInput {
  std::optional<BraidWord> braid;
  SeifertData seifert;
};

/// {"braid": {"strands": n, "word": [...]}} (the braid may also be a string
/// like "strands=3; 1 2") or {"seifert_matrix": [[...]], "components": m}.
/// Both accept an optional "label".
LinkInput link_from_json(const json& j);
json link_to_json(const LinkInput& input);

/// Reads and parses a JSON file; syntax errors carry line and column.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);

json signature_function_to_json(const SignatureFunction& f);
SignatureFunction signature_function_from_json(const json& j);

/// Everything `invariants` reports.
struct Invariants {
  std::string label;
  int components = 1;
  int genus = 0;
  int size = 0;
  Laurent alexander;  // zero when the determinant vanishes
  std::optional<int> width;
  int beta = 0;
  SignatureFunction signature;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants compute_invariants(const SeifertData& v);
json invariants_to_json(const Invariants& inv);
Invariants invariants_from_json(const json& j);

json report_to_json(const BoundReport& r);
BoundReport report_from_json(const json& j);

/// {"axes": r, "linking_numbers": [[...]], "c": c,
///  "milnor_vanishing_length": L, "notes": "..."}; a missing field is a
/// schema error.
InfectionDecl infection_from_json(const json& j);
json infection_to_json(const InfectionDecl& d);

/// Rows x_lo,x_hi,sigma,nullity,source. Intervals and breakpoints come from
/// the exact function; `samples` > 0 adds float-oracle rows at
/// theta = pi (k + 1/2) / samples.
void write_signature_csv(std::ostream& out, const SeifertData& v, const SignatureFunction& f, int samples);

/// Text with `indent` spaces per level, or compact when indent < 0.
std::string dump(const json& j, int indent);

}  // namespace linkbound
