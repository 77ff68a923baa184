#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "charforge/linalg.hpp"
#include "cli/app.hpp"
#include "cli/io.hpp"

namespace charforge::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = CHARFORGE_FIXTURE_DIR;

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Result {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
  json error() const { return json::parse(err); }
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("charforge_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  fs::path dir_;
};

TEST(Fixtures, RenderIsByteStable) {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    const std::string text = slurp(entry.path());
    const json doc = json::parse(text);
    json again;
    if (doc.contains("coeffs"))
      again = to_json(polynomial_from_json(doc));
    else if (doc.contains("entries"))
      again = to_json(matrix_from_json(doc));
    else if (doc.contains("nilpotent"))
      again = to_json(decomposition_from_json(doc));
    else
      again = to_json(forge_document_from_json(doc));
    EXPECT_EQ(render(again), text) << entry.path();
    ++seen;
  }
  EXPECT_GE(seen, 10);
}

TEST(Fixtures, FieldFlag) {
  EXPECT_EQ(parse_field_flag("Q"), FieldSpec::rationals());
  EXPECT_EQ(parse_field_flag("GF:101"), FieldSpec::prime(101));
  EXPECT_THROW(parse_field_flag("GF:"), InputError);
  EXPECT_THROW(parse_field_flag("F7"), InputError);
  EXPECT_THROW(parse_field_flag("GF:8"), Error);
}

TEST_F(CliTest, ForgeThenVerify) {
  const auto forged = invoke({"forge", "--matrix", fixture("gf2_n3_k1.matrix.json"), "--k", "1", "--target",
                              fixture("gf2_cubic.poly.json")});
  ASSERT_EQ(forged.code, 0) << forged.err;
  const std::string cert = write("cert.json", forged.out);
  const auto verified = invoke({"verify", "--matrix", fixture("gf2_n3_k1.matrix.json"), "--certificate", cert});
  EXPECT_EQ(verified.code, 0) << verified.out;
  EXPECT_TRUE(verified.doc()["verified"].get<bool>());

  // The same N through the explicit flags.
  const std::string n = write("n.json", render(forged.doc()["N"]));
  const auto plain = invoke({"verify", "--matrix", fixture("gf2_n3_k1.matrix.json"), "--nilpotent", n,
                             "--target", fixture("gf2_cubic.poly.json")});
  EXPECT_EQ(plain.code, 0);
}

TEST_F(CliTest, VerifyZeroAgainstOwnCharpoly) {
  const Matrix a = matrix_from_json(read_json_file(fixture("q_fractions.matrix.json")));
  const std::string n = write("zero.json", render(to_json(Matrix(a.spec(), 2, 2))));
  const std::string q = write("q.json", render(to_json(charpoly(a))));
  EXPECT_EQ(invoke({"verify", "--matrix", fixture("q_fractions.matrix.json"), "--nilpotent", n, "--target", q}).code,
            0);
}

TEST_F(CliTest, VerifyRejectsTamperedCertificate) {
  const auto forged = invoke({"forge", "--matrix", fixture("q_n3_k1.matrix.json"), "--k", "1", "--target",
                              fixture("q_n3_target.poly.json")});
  ASSERT_EQ(forged.code, 0);
  json doc = forged.doc();
  doc["N"]["entries"][0][0] = "1";
  const auto r = invoke({"verify", "--matrix", fixture("q_n3_k1.matrix.json"), "--certificate",
                         write("bad.json", render(doc))});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.doc()["verified"].get<bool>());
}

TEST_F(CliTest, DecomposeCertificatesVerify) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"torsion", "q_n4_k1.matrix.json"},
      {"potent", "q_n4_k1.matrix.json"},
      {"invertible", "q_n3_k1.matrix.json"},
      {"diagonalizable", "gf7_n3_k1.matrix.json"}};
  for (const auto& [mode, matrix] : cases) {
    const auto r = invoke({"decompose", "--mode", mode, "--matrix", fixture(matrix), "--k", "1"});
    ASSERT_EQ(r.code, 0) << mode << r.err;
    EXPECT_EQ(r.doc()["kind"], mode);
    const auto v = invoke({"verify", "--matrix", fixture(matrix), "--certificate", write(mode + ".json", r.out)});
    EXPECT_EQ(v.code, 0) << mode << v.out;
  }
}

TEST_F(CliTest, OutFlagWritesFile) {
  const std::string path = (dir_ / "canon.json").string();
  const auto r = invoke({"canon", "--matrix", fixture("gf2_scalar.matrix.json"), "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const json doc = read_json_file(path);
  EXPECT_EQ(doc["invariant_factors"].size(), 2u);
  EXPECT_FALSE(doc["nonderogatory"].get<bool>());
  EXPECT_FALSE(doc["invertible"].get<bool>());
  EXPECT_EQ(doc["minpoly"]["coeffs"], json::array({"0", "1", "1"}));
}

TEST(Cli, DomainErrorsExitTwo) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"forge", "--matrix", fixture("q_n3_trace0.matrix.json"), "--k", "1", "--target",
        fixture("q_n3_target.poly.json")},
       "TraceMismatch"},
      {{"forge", "--matrix", fixture("q_n4_k2.matrix.json"), "--k", "2", "--target",
        fixture("q_quartic_unit.poly.json")},
       "EqualSplitUnsupported"},
      {{"forge", "--matrix", fixture("q_n3_k1.matrix.json"), "--k", "1", "--target",
        fixture("gf2_cubic.poly.json")},
       "FieldMismatch"},
      {{"decompose", "--mode", "invertible", "--matrix", fixture("gf2_scalar.matrix.json"), "--k", "1"},
       "GroupingInfeasible"},
      {{"decompose", "--mode", "diagonalizable", "--matrix", fixture("gf2_n3_k1.matrix.json"), "--k", "1"},
       "FieldTooSmall"},
      {{"decompose", "--mode", "potent", "--matrix", fixture("q_n3_k1.matrix.json"), "--k", "1"},
       "NonzeroTrace"},
      {{"boundary-search", "--field", "Q", "--k", "2", "--p22", fixture("gf2_p22.poly.json"), "--target",
        fixture("gf2_quartic.poly.json")},
       "FieldMismatch"},
      {{"--max-dim", "2", "canon", "--matrix", fixture("gf2_scalar.matrix.json")}, "DimensionLimit"},
      {{"boundary-quartic", "--field", "GF:9"}, "InvalidField"},
  };
  for (const auto& [args, code] : cases) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, 2) << code << " " << r.err;
    EXPECT_EQ(r.error()["error"], code);
    EXPECT_TRUE(r.error().contains("detail"));
  }
}

TEST_F(CliTest, InputErrorsExitOne) {
  EXPECT_EQ(invoke({"canon", "--matrix", (dir_ / "missing.json").string()}).code, 1);
  EXPECT_EQ(invoke({"canon", "--matrix", write("broken.json", "{\"field\":")}).code, 1);
  const auto bad_literal = invoke(
      {"canon", "--matrix",
       write("lit.json", R"({"field":{"kind":"GF","p":5},"rows":1,"cols":1,"entries":[["1/2"]]})")});
  EXPECT_EQ(bad_literal.code, 1);
  EXPECT_EQ(bad_literal.error()["error"], "ParseError");
  EXPECT_EQ(invoke({"canon", "--matrix", write("ragged.json",
                                               R"({"field":{"kind":"Q"},"rows":2,"cols":2,"entries":[["1"]]})")})
                .code,
            1);
  EXPECT_EQ(invoke({"decompose", "--mode", "sideways", "--matrix", fixture("q_n3_k1.matrix.json"), "--k", "1"}).code,
            1);
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, QuarticReports) {
  const auto q = invoke({"boundary-quartic", "--field", "Q"});
  ASSERT_EQ(q.code, 0);
  EXPECT_EQ(q.doc()["result"], "NoSolution");
  EXPECT_TRUE(q.doc()["certificate"]["identity_verified"].get<bool>());

  const auto gf2 = invoke({"boundary-quartic", "--field", "GF:2"});
  ASSERT_EQ(gf2.code, 0);
  EXPECT_EQ(gf2.doc()["result"], "Witness");
  EXPECT_EQ(gf2.doc()["X"]["entries"], json::parse(R"([["1","0"],["1","1"]])"));
}

TEST(Cli, BoundarySearch) {
  const auto hit = invoke({"boundary-search", "--field", "GF:2", "--k", "2", "--p22", fixture("gf2_p22.poly.json"),
                           "--target", fixture("gf2_quartic.poly.json")});
  ASSERT_EQ(hit.code, 0) << hit.err;
  EXPECT_EQ(hit.doc()["result"], "Witness");

  const auto miss = invoke({"boundary-search", "--field", "GF:2", "--k", "2", "--p22",
                            fixture("gf2_p22.poly.json"), "--target", fixture("gf2_unreachable.poly.json")});
  ASSERT_EQ(miss.code, 0);
  EXPECT_EQ(miss.doc()["result"], "Exhausted");
  EXPECT_EQ(miss.doc()["examined"], 16);
}

TEST(Cli, BudgetFromEnvironment) {
  const std::vector<std::string> args{"boundary-search", "--field", "GF:2", "--k", "2", "--p22",
                                      fixture("gf2_p22.poly.json"), "--target", fixture("gf2_unreachable.poly.json")};
  ::setenv("CHARPOLY_FORGE_BUDGET", "8", 1);
  const auto small = invoke(args);
  ::setenv("CHARPOLY_FORGE_BUDGET", "lots", 1);
  const auto junk = invoke(args);
  ::unsetenv("CHARPOLY_FORGE_BUDGET");
  EXPECT_EQ(small.code, 2);
  EXPECT_EQ(small.error()["error"], "BudgetExceeded");
  EXPECT_EQ(junk.code, 1);
}

}  // namespace
}  // namespace charforge::cli
