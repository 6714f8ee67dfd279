#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "mzv/cli.hpp"
#include "mzv/serialize.hpp"

using namespace mzv;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "mzv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Decompose) {
  Result r = call({"decompose", "010100111010101"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "(0; 5,2,1,7)\n");

  Result j = call({"decompose", "11011010001010", "--format", "json"});
  ASSERT_EQ(j.code, kExitOk);
  Json doc = Json::parse(j.out);
  EXPECT_EQ(doc["eps1"], 1);
  EXPECT_EQ(doc["lengths"], Json({1, 3, 4, 1, 5}));

  EXPECT_EQ(call({"decompose", "0102"}).code, kExitUsage);
}

TEST(Cli, WordAndMzv) {
  Result w = call({"word", "(0; 5,2,1,7)"});
  EXPECT_EQ(w.code, kExitOk);
  EXPECT_NE(w.out.find("010100111010101"), std::string::npos);

  Result m = call({"mzv", "z(1,3)", "--digits", "20"});
  EXPECT_EQ(m.code, kExitOk);
  EXPECT_NE(m.out.find("2.7058080842778454788e-01"), std::string::npos);
}

TEST(Cli, Regularise) {
  Result r = call({"regularise", "0010111"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "6 z(1,4) + 2 z(2,3) + z(3,2)\n");
  Result l = call({"regularise", "0010111", "--format", "latex"});
  EXPECT_NE(l.out.find("\\zeta(1,4)"), std::string::npos);
}

TEST(Cli, GenerateVerifyPipeline) {
  Result g = call({"generate", "cyclic-full", "--lengths", "1,1,2,3"});
  ASSERT_EQ(g.code, kExitOk);
  Identity id = identity_from_json(Json::parse(g.out));
  EXPECT_EQ(id.family, Family::CyclicFull);
  EXPECT_EQ(to_json(id), Json::parse(g.out));

  Result v = call({"verify", "--digits", "30"}, g.out);
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(v.out.rfind("verified", 0), 0u);

  Result vj = call({"verify", "--digits", "30", "--format", "json"}, g.out);
  EXPECT_EQ(Json::parse(vj.out)["status"], "verified");
}

TEST(Cli, RefutationExitCode) {
  Json doc = Json::parse(call({"generate", "cyclic-full", "--lengths", "1,1,2,3"}).out);
  doc["lhs"] = Json::parse(call({"generate", "cyclic-basic", "--lengths", "2,1,6,1,2"}).out)["lhs"];
  doc["weight"] = 10;
  Result v = call({"verify", "--digits", "20"}, doc.dump());
  EXPECT_EQ(v.code, kExitOk);

  Json bad = Json::parse(call({"generate", "hoffman", "--b", "0,0,1"}).out);
  bad["rhs"]["coeff_num"] = "1";
  Result r = call({"verify", "--digits", "20"}, bad.dump());
  EXPECT_EQ(r.code, kExitRefuted);
  EXPECT_EQ(r.out.rfind("refuted", 0), 0u);
}

TEST(Cli, VerifyBatchKeepsOrder) {
  std::string input;
  for (const char* m : {"0", "1", "2", "3"})
    input += call({"generate", "hoffman", "--b", std::string("0,0,") + m}).out;
  Result r = call({"verify", "--digits", "20", "--jobs", "3", "--format", "json"}, input);
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::vector<int> weights;
  Json arr = Json::parse(r.out);
  ASSERT_TRUE(arr.is_array());
  for (const auto& rep : arr) weights.push_back(rep["weight"].get<int>());
  EXPECT_EQ(weights, (std::vector<int>{6, 8, 10, 12}));
}

TEST(Cli, GenerateFormats) {
  Result t = call({"generate", "bbbl", "--b", "0,0,0", "--format", "text"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_NE(t.out.find("bbbl"), std::string::npos);
  Result l = call({"generate", "cyc123", "--form", "z(1,3,3,(1,2)|0,0,0,0,0)", "--format", "latex"});
  EXPECT_EQ(l.code, kExitOk);
  EXPECT_NE(l.out.find("\\zeta("), std::string::npos);
  EXPECT_NE(l.out.find("\\mid"), std::string::npos);
  EXPECT_EQ(call({"generate", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(call({"generate", "cyclic-basic", "--lengths", "1,1,2,3,3"}).code, kExitUsage);
}

TEST(Cli, Dkernel) {
  Result r = call({"dkernel", "--lengths", "2,3,3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("vanishes"), std::string::npos);
  Result j = call({"dkernel", "--lengths", "2,10,3,2", "--cyclic", "--format", "json"});
  EXPECT_EQ(Json::parse(j.out)["vanishes"], false);
  Result s = call({"dkernel", "--lengths", "2,10,3,2", "--stability", "--r", "7"});
  EXPECT_NE(s.out.find("C(10)"), std::string::npos);
  Result in = call({"dkernel"}, call({"generate", "symmetric", "--lengths", "2,4,4"}).out);
  EXPECT_EQ(in.code, kExitOk);
  EXPECT_NE(in.out.find("vanishes"), std::string::npos);
}

TEST(Cli, RankAndTable) {
  Result t = call({"table", "--weight", "4"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_NE(t.out.find("N=4  cyclic 5|3"), std::string::npos);
  EXPECT_NE(t.out.find("overall 3  expected 3"), std::string::npos);

  Result j = call({"rank", "--weight", "5", "--families", "duality", "--format", "json"});
  Json doc = Json::parse(j.out);
  EXPECT_EQ(doc["duality"]["init"], 8);
  EXPECT_EQ(doc["duality"]["rank"], 4);
  EXPECT_EQ(doc["expected"], 6);

  Result l = call({"table", "--weight", "4-5", "--format", "latex"});
  EXPECT_EQ(std::count(l.out.begin(), l.out.end(), '\n'), 2);
  EXPECT_EQ(call({"rank", "--weight", "4", "--families", "bogus"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({"decompose", "0101", "--nope"}).code, kExitUsage);
  EXPECT_EQ(call({"mzv", "z(2)", "--digits", "3"}).code, kExitUsage);
  EXPECT_EQ(call({"verify"}, "not json").code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}
