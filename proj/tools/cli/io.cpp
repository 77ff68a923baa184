#include "cli/io.hpp"

#include <fstream>
#include <sstream>

namespace charforge::cli {
namespace {

const json& member(const json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t positive_size(const json& doc, const char* key) {
  const json& v = member(doc, key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw InputError(std::string("\"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.rfind("GF:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 12)
      throw InputError("bad field \"" + text + "\"");
    return FieldSpec::prime(std::stoull(digits));
  }
  throw InputError("bad field \"" + text + "\"; expected Q or GF:p");
}

json to_json(const FieldSpec& spec) {
  if (spec.kind() == FieldSpec::Kind::Rationals) return json{{"kind", "Q"}};
  return json{{"kind", "GF"}, {"p", spec.characteristic()}};
}

FieldSpec field_from_json(const json& doc) {
  const json& kind = member(doc, "kind");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "GF") {
    const json& p = member(doc, "p");
    if (!p.is_number_unsigned()) throw InputError("\"p\" must be a positive integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  throw InputError("unknown field kind " + kind.dump());
}

json to_json(const FieldElement& x) { return x.to_string(); }

FieldElement literal_from_json(const FieldSpec& spec, const json& doc) {
  if (doc.is_string()) return FieldElement::parse(spec, doc.get<std::string>());
  if (doc.is_number_integer()) return FieldElement::parse(spec, doc.dump());
  throw InputError("literal must be a string or an integer, got " + doc.dump());
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return json{{"field", to_json(p.spec())}, {"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& doc) {
  const FieldSpec spec = field_from_json(member(doc, "field"));
  const json& coeffs = member(doc, "coeffs");
  if (!coeffs.is_array()) throw InputError("\"coeffs\" must be an array");
  std::vector<FieldElement> values;
  for (const auto& c : coeffs) values.push_back(literal_from_json(spec, c));
  return Polynomial(spec, std::move(values));
}

json to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.row(r)) row.push_back(to_json(x));
    entries.push_back(std::move(row));
  }
  return json{{"field", to_json(m.spec())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& doc, std::size_t max_dimension) {
  const FieldSpec spec = field_from_json(member(doc, "field"));
  const std::size_t rows = positive_size(doc, "rows");
  const std::size_t cols = positive_size(doc, "cols");
  if (rows > max_dimension || cols > max_dimension)
    throw Error(ErrorCode::DimensionLimit, std::to_string(rows) + "x" + std::to_string(cols) +
                                               " exceeds the limit " + std::to_string(max_dimension));
  const json& entries = member(doc, "entries");
  if (!entries.is_array() || entries.size() != rows)
    throw InputError("\"entries\" must hold " + std::to_string(rows) + " rows");
  std::vector<FieldElement> values;
  values.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols)
      throw InputError("every row must hold " + std::to_string(cols) + " entries");
    for (const auto& x : row) values.push_back(literal_from_json(spec, x));
  }
  return Matrix(spec, rows, cols, std::move(values));
}

json to_json(const ForgeCertificate& cert) {
  return to_json(ForgeDocument{cert.n, cert.q_achieved, cert.transform.forward(), cert.nonderogatory_result});
}

json to_json(const ForgeDocument& doc) {
  return json{{"N", to_json(doc.n)},
              {"q", to_json(doc.q)},
              {"transform", to_json(doc.transform)},
              {"nonderogatory_result", doc.nonderogatory_result}};
}

ForgeDocument forge_document_from_json(const json& doc, std::size_t max_dimension) {
  const json& flag = member(doc, "nonderogatory_result");
  if (!flag.is_boolean()) throw InputError("\"nonderogatory_result\" must be a boolean");
  return {matrix_from_json(member(doc, "N"), max_dimension), polynomial_from_json(member(doc, "q")),
          matrix_from_json(member(doc, "transform"), max_dimension), flag.get<bool>()};
}

json to_json(const DecompositionCertificate& cert) {
  const auto& ev = cert.evidence;
  json evidence{{"charpoly", to_json(ev.charpoly)}};
  if (!ev.eigenvalues.empty()) {
    json values = json::array();
    for (const auto& e : ev.eigenvalues) values.push_back(to_json(e));
    evidence["eigenvalues"] = std::move(values);
  }
  if (ev.determinant) evidence["determinant"] = to_json(*ev.determinant);
  if (ev.power_exponent) {
    evidence["power_exponent"] = *ev.power_exponent;
    evidence["power_identity_holds"] = ev.power_identity_holds;
  }
  return json{{"kind", std::string(to_string(cert.kind))},
              {"good", to_json(cert.good)},
              {"nilpotent", to_json(cert.nilpotent)},
              {"evidence", std::move(evidence)}};
}

DecompositionCertificate decomposition_from_json(const json& doc, std::size_t max_dimension) {
  const json& kind_name = member(doc, "kind");
  if (!kind_name.is_string()) throw InputError("\"kind\" must be a string");
  const auto kind = parse_decomposition_kind(kind_name.get<std::string>());
  if (!kind) throw InputError("unknown decomposition kind " + kind_name.dump());

  const json& ev = member(doc, "evidence");
  DecompositionEvidence evidence{polynomial_from_json(member(ev, "charpoly")), {}, std::nullopt,
                                 std::nullopt, false};
  const FieldSpec spec = evidence.charpoly.spec();
  if (auto it = ev.find("eigenvalues"); it != ev.end()) {
    if (!it->is_array()) throw InputError("\"eigenvalues\" must be an array");
    for (const auto& e : *it) evidence.eigenvalues.push_back(literal_from_json(spec, e));
  }
  if (auto it = ev.find("determinant"); it != ev.end())
    evidence.determinant = literal_from_json(spec, *it);
  if (auto it = ev.find("power_exponent"); it != ev.end()) {
    if (!it->is_number_unsigned()) throw InputError("\"power_exponent\" must be a positive integer");
    evidence.power_exponent = it->get<std::size_t>();
    const json& holds = member(ev, "power_identity_holds");
    if (!holds.is_boolean()) throw InputError("\"power_identity_holds\" must be a boolean");
    evidence.power_identity_holds = holds.get<bool>();
  }
  return {*kind, matrix_from_json(member(doc, "good"), max_dimension),
          matrix_from_json(member(doc, "nilpotent"), max_dimension), std::move(evidence)};
}

}  // namespace charforge::cli
