#pragma once

// JSON forms of fields, polynomials, matrices and certificates. Literals are
// written as strings ("3/4", "5"); integers are also accepted on input.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "charforge/decompose.hpp"
#include "charforge/forge.hpp"

namespace charforge::cli {

using json = nlohmann::json;

/// Unreadable file or malformed document; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxDimension = 64;

json read_json_file(const std::filesystem::path& path);
/// dump(2) plus a trailing newline.
std::string render(const json& doc);

/// "Q" or "GF:p".
FieldSpec parse_field_flag(const std::string& text);

json to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& doc);

json to_json(const FieldElement& x);
FieldElement literal_from_json(const FieldSpec& spec, const json& doc);

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& doc);

json to_json(const Matrix& m);
/// Throws DimensionLimit beyond max_dimension rows or columns.
Matrix matrix_from_json(const json& doc, std::size_t max_dimension = kDefaultMaxDimension);

/// The serialized part of a forge certificate.
struct ForgeDocument {
  Matrix n;
  Polynomial q;
  Matrix transform;
  bool nonderogatory_result;
};

json to_json(const ForgeCertificate& cert);
json to_json(const ForgeDocument& doc);
ForgeDocument forge_document_from_json(const json& doc, std::size_t max_dimension = kDefaultMaxDimension);

json to_json(const DecompositionCertificate& cert);
DecompositionCertificate decomposition_from_json(const json& doc,
                                                 std::size_t max_dimension = kDefaultMaxDimension);

}  // namespace charforge::cli
