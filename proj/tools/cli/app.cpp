#include "cli/app.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "charforge/boundary.hpp"
#include "charforge/canon.hpp"
#include "cli/io.hpp"

namespace charforge::cli {
namespace {

struct Options {
  std::string out;
  std::size_t max_dimension = kDefaultMaxDimension;

  std::string matrix;
  std::string target;
  std::string nilpotent;
  std::string certificate;
  std::size_t k = 0;
  std::string mode;

  std::string field;
  std::string p22;
  unsigned threads = 0;
};

struct Outcome {
  json doc;
  int code = 0;
};

std::uint64_t search_budget() {
  const char* raw = std::getenv("CHARPOLY_FORGE_BUDGET");
  if (raw == nullptr) return SearchOptions{}.budget;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0)
    throw InputError("CHARPOLY_FORGE_BUDGET must be a positive integer, got \"" + std::string(text) + "\"");
  return value;
}

Outcome forge_command(const Options& o) {
  const Matrix a = matrix_from_json(read_json_file(o.matrix), o.max_dimension);
  const Polynomial q = polynomial_from_json(read_json_file(o.target));
  return {to_json(forge(ForgeProblem{a, o.k, q}))};
}

json check(bool square_zero, bool charpoly_matches) {
  return json{{"square_zero", square_zero},
              {"charpoly_matches", charpoly_matches},
              {"verified", square_zero && charpoly_matches}};
}

bool kind_property(const DecompositionCertificate& c) {
  const std::size_t n = c.good.rows();
  const FieldSpec spec = c.good.spec();
  switch (c.kind) {
    case DecompositionKind::Diagonalizable: {
      Polynomial product = Polynomial::constant(FieldElement::one(spec));
      for (std::size_t i = 0; i < c.evidence.eigenvalues.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
          if (c.evidence.eigenvalues[i] == c.evidence.eigenvalues[j]) return false;
        product *= Polynomial(spec, {-c.evidence.eigenvalues[i], FieldElement::one(spec)});
      }
      return product == c.evidence.charpoly;
    }
    case DecompositionKind::Invertible:
      return !c.evidence.charpoly.coeff(0).is_zero();
    case DecompositionKind::Potent:
      return power(c.good, n) == c.good;
    case DecompositionKind::Torsion:
      return power(c.good, n) == Matrix::identity(spec, n);
  }
  return false;
}

Outcome verify_command(const Options& o) {
  const Matrix a = matrix_from_json(read_json_file(o.matrix), o.max_dimension);
  json report;
  if (!o.certificate.empty()) {
    const json doc = read_json_file(o.certificate);
    if (doc.is_object() && doc.contains("nilpotent")) {
      // A decomposition: A = good + nilpotent.
      const auto c = decomposition_from_json(doc, o.max_dimension);
      const bool sum = c.good + c.nilpotent == a;
      const bool charpoly_matches = charpoly(c.good) == c.evidence.charpoly;
      report = check(is_square_zero(c.nilpotent), charpoly_matches);
      report["sum_matches"] = sum;
      report["kind_property"] = kind_property(c);
      report["verified"] = report["verified"].get<bool>() && sum && report["kind_property"].get<bool>();
    } else {
      const auto f = forge_document_from_json(doc, o.max_dimension);
      report = check(is_square_zero(f.n), charpoly(a + f.n) == f.q);
    }
  } else {
    if (o.nilpotent.empty() || o.target.empty())
      throw InputError("verify needs --certificate, or both --nilpotent and --target");
    const Matrix n = matrix_from_json(read_json_file(o.nilpotent), o.max_dimension);
    const Polynomial q = polynomial_from_json(read_json_file(o.target));
    report = check(is_square_zero(n), charpoly(a + n) == q);
  }
  const bool ok = report["verified"].get<bool>();
  return {report, ok ? 0 : 2};
}

Outcome decompose_command(const Options& o) {
  const Matrix a = matrix_from_json(read_json_file(o.matrix), o.max_dimension);
  return {to_json(decompose(*parse_decomposition_kind(o.mode), a, o.k))};
}

Outcome canon_command(const Options& o) {
  const Matrix a = matrix_from_json(read_json_file(o.matrix), o.max_dimension);
  require_square(a, "canon");
  json factors = json::array();
  for (const auto& f : invariant_factors(a).factors) factors.push_back(to_json(f));
  return {json{{"charpoly", to_json(charpoly(a))},
               {"minpoly", to_json(minpoly(a))},
               {"invariant_factors", std::move(factors)},
               {"nonderogatory", is_nonderogatory(a)},
               {"invertible", !determinant(a).is_zero()}}};
}

Outcome boundary_search_command(const Options& o) {
  const FieldSpec spec = parse_field_flag(o.field);
  const Polynomial p = polynomial_from_json(read_json_file(o.p22));
  const Polynomial q = polynomial_from_json(read_json_file(o.target));
  require_same_field(spec, p.spec());
  require_same_field(spec, q.spec());
  if (p.is_zero() || p.degree() != o.k)
    throw Error(ErrorCode::BadShape, "--p22 must have degree k=" + std::to_string(o.k));
  const auto result = search_equal_split(p, q, SearchOptions{search_budget(), o.threads});
  if (result.exhausted()) return {json{{"result", "Exhausted"}, {"examined", result.examined}}};
  return {json{{"result", "Witness"},
               {"X", to_json(*result.witness)},
               {"N", to_json(normal_form_N(*result.witness))},
               {"examined", result.examined}}};
}

Outcome boundary_quartic_command(const Options& o) {
  const auto result = check_quartic_counterexample(parse_field_flag(o.field));
  if (result.witness)
    return {json{{"result", "Witness"},
                 {"X", to_json(*result.witness)},
                 {"N", to_json(normal_form_N(*result.witness))}}};
  json doc{{"result", "NoSolution"}};
  if (const auto& c = result.certificate)
    doc["certificate"] = json{{"reduced_equation", c->reduced_equation},
                              {"sum_of_squares", c->sum_of_squares},
                              {"identity_verified", c->identity_verified},
                              {"substitution_consistent", c->substitution_consistent}};
  return {doc};
}

void write_output(const Options& o, const json& doc, std::ostream& out) {
  if (o.out.empty()) {
    out << render(doc);
    return;
  }
  std::ofstream file(o.out);
  if (!(file << render(doc))) throw InputError("cannot write " + o.out);
}

void report_error(std::ostream& err, std::string_view code, std::string_view detail) {
  err << render(json{{"error", code}, {"detail", detail}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Square-zero perturbations with a prescribed characteristic polynomial", "charforge"};
  app.require_subcommand(1);
  app.add_option("--out", o.out, "Write the JSON result to this file instead of stdout");
  app.add_option("--max-dim", o.max_dimension, "Largest accepted matrix dimension")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::function<Outcome(const Options&)> command;
  auto sub = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&command, fn] { command = fn; });
    return s;
  };

  auto* forge_cmd = sub("forge", "Find square-zero N with charpoly(A + N) = q", forge_command);
  forge_cmd->add_option("--matrix", o.matrix, "Matrix file diag(0_k, A22)")->required();
  forge_cmd->add_option("--k", o.k, "Number of leading zero rows and columns")->required();
  forge_cmd->add_option("--target", o.target, "Target polynomial file")->required();

  auto* verify_cmd = sub("verify", "Re-check a square-zero perturbation", verify_command);
  verify_cmd->add_option("--matrix", o.matrix, "Matrix file")->required();
  auto* nil = verify_cmd->add_option("--nilpotent", o.nilpotent, "Square-zero matrix file");
  auto* tgt = verify_cmd->add_option("--target", o.target, "Target polynomial file");
  auto* cert = verify_cmd->add_option("--certificate", o.certificate, "forge or decompose output");
  cert->excludes(nil)->excludes(tgt);

  auto* decompose_cmd = sub("decompose", "Split A into a good matrix plus a square-zero one", decompose_command);
  decompose_cmd->add_option("--mode", o.mode, "diagonalizable, invertible, potent or torsion")
      ->required()
      ->check(CLI::IsMember({"diagonalizable", "invertible", "potent", "torsion"}));
  decompose_cmd->add_option("--matrix", o.matrix, "Matrix file diag(0_k, A22)")->required();
  decompose_cmd->add_option("--k", o.k, "Number of leading zero rows and columns")->required();

  auto* canon_cmd = sub("canon", "Characteristic and minimal polynomial, invariant factors", canon_command);
  canon_cmd->add_option("--matrix", o.matrix, "Matrix file")->required();

  auto* search_cmd = sub("boundary-search", "Exhaustive search at n = 2k over GF(p)", boundary_search_command);
  search_cmd->add_option("--field", o.field, "GF:p")->required();
  search_cmd->add_option("--k", o.k, "Half the dimension")->required();
  search_cmd->add_option("--p22", o.p22, "Polynomial file for the companion block")->required();
  search_cmd->add_option("--target", o.target, "Target polynomial file")->required();
  search_cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

  auto* quartic_cmd = sub("boundary-quartic", "Can x^4 + 1 be reached at n = 4, k = 2?", boundary_quartic_command);
  quartic_cmd->add_option("--field", o.field, "Q or GF:p")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Outcome outcome = command(o);
    write_output(o, outcome.doc, out);
    return outcome.code;
  } catch (const InputError& e) {
    report_error(err, "ParseError", e.what());
    return 1;
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.detail());
    if (e.code() == ErrorCode::ParseError) return 1;
    if (e.code() == ErrorCode::InternalVerificationFailed) return 3;
    return 2;
  } catch (const std::exception& e) {
    report_error(err, "IOError", e.what());
    return 1;
  }
}

}  // namespace charforge::cli
