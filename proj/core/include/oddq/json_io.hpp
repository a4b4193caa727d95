#pragma once

#include <optional>
#include <string>

#include "oddq/derivation.hpp"

namespace oddq {

struct Document {
  SuperAlgebra algebra;
  std::optional<OddForm> form;
};

/// Parses the canonical JSON presentation:
///   {"even": [names], "odd": [names],
///    "brackets": [{"x": name, "y": name, "value": {name: scalar}}],
///    "form": [{"even": name, "odd": name, "value": scalar}]}
/// Scalars are exact strings "p/q" or {"a","b","d"} objects. Omitted pairs
/// are zero. Grading violations are rejected with the offending pair named.
Document load_document(const std::string& text);

std::string save_document(const SuperAlgebra& alg, const OddForm* form);

/// {"D": {in: {out: scalar}}, "X0": {name: scalar}, "lambda0": scalar}
ExtensionData load_extension_data(const std::string& text, const SuperAlgebra& alg);
std::string save_extension_data(const SuperAlgebra& alg, const ExtensionData& data);

std::string scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const std::string& json_value_text);

}  // namespace oddq
