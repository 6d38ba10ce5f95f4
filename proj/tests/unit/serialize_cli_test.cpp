#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "hopfalg/errors.hpp"
#include "hopfalg_cli/cli.hpp"

using namespace hopfalg;
using namespace hopfalg::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hopfalg");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / ("hopfalg_unit_" + stem + ".json")).string();
}

}  // namespace

TEST(Serialize, PresentationSurvivesWriteAndParse) {
  Document doc = load_fixture("swap.json");
  OutputParts parts;
  parts.input = &doc;
  Document again = parse_document(write_document(parts));
  ASSERT_TRUE(again.presentation.has_value());
  const Presentation& a = *doc.presentation;
  const Presentation& b = *again.presentation;
  EXPECT_EQ(a.objects.size(), b.objects.size());
  ASSERT_EQ(a.tensor.size(), b.tensor.size());
  for (std::size_t i = 0; i < a.tensor.size(); ++i) EXPECT_EQ(a.tensor[i].theta, b.tensor[i].theta);
  EXPECT_EQ(a.unit_iso, b.unit_iso);
  EXPECT_EQ(again.field, doc.field);
}

TEST(Serialize, FieldOverride) {
  Document doc = parse_document(read_file(fixture_path("c2.json")), Field::prime(11));
  EXPECT_EQ(doc.field, Field::prime(11));
}

TEST(Serialize, Errors) {
  EXPECT_THROW(parse_document("{\"field\": "), ParseError);
  EXPECT_THROW(parse_document("{\"field\": {\"kind\": \"gf\", \"p\": 7}}"), SchemaError);
  EXPECT_THROW(load_fixture("bad_schema.json"), SchemaError);
  EXPECT_THROW(load_fixture("bad_syntax.json"), ParseError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"verify", fixture_path("hopf_c2.json")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"verify", fixture_path("hopf_c2_bad_coproduct.json")}).code, cli::kCheckFailed);
  EXPECT_EQ(run_cli({"info", fixture_path("bad_syntax.json")}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"info", fixture_path("bad_schema.json")}).code, cli::kSchemaError);
  EXPECT_EQ(run_cli({"dualize", fixture_path("nonprojective.json")}).code, cli::kNotProjective);
  EXPECT_EQ(run_cli({"verify", fixture_path("monoid.json")}).code, cli::kNoAntipode);
  EXPECT_EQ(run_cli({"check-bialgebroid", fixture_path("monoid.json")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"check-coalgebroid", fixture_path("illdefined.json")}).code, cli::kIllDefined);
  EXPECT_EQ(run_cli({"verify"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate", fixture_path("c2.json")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--roundtrip-rank", "9", "info", fixture_path("c2.json")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--field", "gf:9", "info", fixture_path("c2.json")}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"info", fixture_path("missing.json")}).code, cli::kInputUnreadable);
  EXPECT_EQ(run_cli({"reconstruct", fixture_path("c2.json"), "-o", "/nonexistent/dir/out.json"}).code,
            cli::kOutputUnwritable);
}

TEST(Cli, TextReportEndsWithVerdict) {
  Outcome ok = run_cli({"verify", fixture_path("hopf_c2.json")});
  EXPECT_NE(ok.out.find("ok\n"), std::string::npos);
  Outcome bad = run_cli({"verify", fixture_path("hopf_c2_bad_coproduct.json")});
  EXPECT_NE(bad.out.find("FAILED:"), std::string::npos);
  EXPECT_NE(bad.out.find("Eq.10"), std::string::npos);
}

TEST(Cli, JsonReport) {
  Outcome o = run_cli({"--report", "json", "verify", fixture_path("hopf_c2.json")});
  EXPECT_EQ(o.code, cli::kOk);
  EXPECT_EQ(o.out.rfind("{", 0), 0u);
  EXPECT_NE(o.out.find("\"ok\": true"), std::string::npos);
}

TEST(Cli, ReconstructOutputIsVerifyInput) {
  const std::string path = temp_file("c2_coend");
  ASSERT_EQ(run_cli({"reconstruct", fixture_path("c2.json"), "-o", path}).code, cli::kOk);
  Document doc = parse_document(read_file(path));
  ASSERT_TRUE(doc.structure.has_value());
  EXPECT_TRUE(doc.structure->antipode.has_value());
  EXPECT_EQ(run_cli({"verify", path}).code, cli::kOk);
  EXPECT_EQ(run_cli({"check-bialgebroid", path}).code, cli::kOk);
  std::filesystem::remove(path);
}

TEST(Cli, StdoutOutputIsDeterministic) {
  Outcome a = run_cli({"--seed", "5", "reconstruct", fixture_path("swap.json"), "-o", "-"});
  Outcome b = run_cli({"--seed", "5", "reconstruct", fixture_path("swap.json"), "-o", "-"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(parse_document(a.out));
}
