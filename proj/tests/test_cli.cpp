#include "qcongr/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qcongr;
using cli::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
  return (std::filesystem::temp_directory_path() / ("qcongr_test_" + name)).string();
}

std::string slurp(const std::string& path)
{
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

long count_lines_starting(const std::string& text, const std::string& prefix)
{
  long n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

}  // namespace

TEST(ParseList, Forms)
{
  EXPECT_EQ(cli::parse_list("3..6"), (std::vector<long>{3, 4, 5, 6}));
  EXPECT_EQ(cli::parse_list("5,9,13"), (std::vector<long>{5, 9, 13}));
  EXPECT_EQ(cli::parse_list("7"), (std::vector<long>{7}));
  EXPECT_THROW(cli::parse_list("9..3"), cli::UsageError);
  EXPECT_THROW(cli::parse_list("a,b"), cli::UsageError);
  EXPECT_THROW(cli::parse_list("3x"), cli::UsageError);
}

TEST(List, CatalogContents)
{
  CliRun r = run({"list"});
  EXPECT_EQ(r.code, 0);
  for (const char* id : {"thm1_half", "thm1_full", "thm2", "conj1", "thm3", "conj2", "thm4", "q_staver", "q_hamme",
                         "conj3", "conj4", "extra7", "lemma2", "lemma3", "lemma4", "lemma5", "div1", "div2", "div3",
                         "sun1", "sun2", "st", "mao_sun", "conj5a", "conj5b", "conj5c", "conj5d", "swisher_j3"})
    EXPECT_EQ(count_lines_starting(r.out, std::string(id) + "  "), 1) << id;
}

TEST(List, KindFilterAndJson)
{
  CliRun r = run({"list", "--kind", "conjecture", "--json"});
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  ASSERT_FALSE(doc["suites"].empty());
  for (const auto& s : doc["suites"]) EXPECT_EQ(s["kind"], "conjecture");
  EXPECT_EQ(run({"list", "--kind", "lemma"}).code, 2);
}

TEST(Verify, TheoremRangeExitsZero)
{
  CliRun r = run({"verify", "thm1_full", "--n", "3..25"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines_starting(r.out, "thm1_full n="), 12);
  EXPECT_NE(r.out.find("summary: 12 reports, 12 hold"), std::string::npos);
}

TEST(Verify, IntegerStatements)
{
  EXPECT_EQ(run({"verify", "div1", "--primes", "3,5,7,11,13"}).code, 0);
  EXPECT_EQ(run({"padic", "st", "--primes", "5..40"}).code, 0);
  EXPECT_EQ(run({"padic", "thm2"}).code, 2);
  EXPECT_EQ(run({"verify", "div2", "--primes", "5"}).code, 1);
}

TEST(Verify, UsageErrors)
{
  EXPECT_EQ(run({"verify", "thm4", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "thm2", "--n", "3..9", "--cache-max", "5"}).code, 2);
  EXPECT_EQ(run({"verify", "thm2", "--n", "3..9", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Verify, TheoremFailureExitsOne)
{
  CliRun r = run({"verify", "lemma3", "--n", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("fails"), std::string::npos);
}

TEST(Verify, ConjectureFailuresAreFindings)
{
  CliRun lenient = run({"verify", "conj5c", "--primes", "3", "--r", "2"});
  EXPECT_EQ(lenient.code, 0);
  EXPECT_NE(lenient.out.find("1 conjecture findings"), std::string::npos);
  EXPECT_EQ(run({"verify", "conj5c", "--primes", "3", "--r", "2", "--conjectures-strict"}).code, 1);
  EXPECT_EQ(run({"verify", "conj4", "--n", "5,9,13", "--conjectures-strict"}).code, 0);
}

TEST(Verify, JsonRoundTripAndOrdering)
{
  std::string path = temp_path("verify.json");
  CliRun r = run({"verify", "thm3", "conj2", "--n", "3,1,2", "--jobs", "3", "--json", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string text = slurp(path);
  json doc = json::parse(text);
  EXPECT_EQ(doc.dump(2) + "\n", text);
  EXPECT_EQ(doc["schema"], 1);
  const auto& reports = doc["reports"];
  ASSERT_EQ(reports.size(), 6u);
  std::vector<std::pair<std::string, long>> order;
  for (const auto& rep : reports) order.emplace_back(rep["suite"].get<std::string>(), rep["n"].get<long>());
  EXPECT_EQ(order, (std::vector<std::pair<std::string, long>>{
                       {"conj2", 1}, {"conj2", 2}, {"conj2", 3}, {"thm3", 1}, {"thm3", 2}, {"thm3", 3}}));
  const auto& first = reports[0];
  for (const char* key : {"schema", "suite", "n", "kind", "holds", "not_applicable", "observed_orders",
                          "required_orders", "elapsed_ms", "anchor", "modulus", "modulus_poly", "conjecture_failure"})
    EXPECT_TRUE(first.contains(key)) << key;
  EXPECT_TRUE(first["elapsed_ms"].is_number_integer());
  for (const auto& term : first["modulus_poly"]) EXPECT_TRUE(term[1].is_string());
  std::remove(path.c_str());
}

TEST(Verify, ZeroDifferenceOrdersAreNull)
{
  std::string path = temp_path("zero.json");
  ASSERT_EQ(run({"verify", "div3", "--primes", "3", "--json", path}).code, 0);
  json doc = json::parse(slurp(path));
  EXPECT_TRUE(doc["reports"][0]["observed_orders"]["3"].is_null());
  EXPECT_EQ(doc["reports"][0]["lhs"], "-3");
  std::remove(path.c_str());
}

TEST(Verify, ParallelOutputIsOrderStable)
{
  CliRun serial = run({"verify", "thm2", "thm1_half", "--n", "3..15"});
  CliRun parallel = run({"verify", "thm2", "thm1_half", "--n", "3..15", "--jobs", "4"});
  ASSERT_EQ(serial.code, 0);
  auto strip = [](const std::string& s) {
    std::istringstream in(s);
    std::string out;
    for (std::string line; std::getline(in, line);) out += line.substr(0, line.find(" orders")) + "\n";
    return out;
  };
  EXPECT_EQ(strip(serial.out), strip(parallel.out));
}

TEST(Wz, Pairs)
{
  EXPECT_EQ(run({"wz", "divergent1", "--grid", "12"}).code, 0);
  EXPECT_EQ(run({"wz", "he", "--grid", "12"}).code, 0);
  EXPECT_EQ(run({"wz", "staver", "--grid", "0"}).code, 2);
  EXPECT_EQ(run({"wz", "unknown"}).code, 2);
}

TEST(Wz, JsonRecord)
{
  std::string path = temp_path("wz.json");
  ASSERT_EQ(run({"wz", "staver", "--grid", "6", "--json", path}).code, 0);
  std::string text = slurp(path);
  json doc = json::parse(text);
  EXPECT_EQ(doc.dump(2) + "\n", text);
  EXPECT_TRUE(doc["relation_holds"].get<bool>());
  EXPECT_TRUE(doc["symmetry_holds"].get<bool>());
  EXPECT_EQ(doc["telescoping"].size(), 6u);
  std::remove(path.c_str());
}

TEST(Scan, Summaries)
{
  CliRun r = run({"scan", "thm4", "--n", "3..15"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("thm4: 7 admissible, 7 hold"), std::string::npos);
  CliRun empty = run({"scan", "thm1_full", "--n", "2,4"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_NE(empty.out.find("0 admissible"), std::string::npos);
  EXPECT_EQ(run({"scan", "div1"}).code, 2);
  EXPECT_EQ(run({"scan", "lemma3_half", "--n", "3"}).code, 1);
}
