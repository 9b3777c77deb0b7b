#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spb/cli/cli.hpp"
#include "spb/cli/spec_io.hpp"
#include "spb/error.hpp"

namespace {

struct Outcome
{
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string &stdin_text = "")
{
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = spb::io::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string &name)
{
  std::ifstream f(std::string(GOLDEN_DIR) + "/" + name);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string kWinding = R"({"kind":"winding","group":"z2","k":2})";
const std::string kCover3 =
    R"({"mode":"gspace","fiber":{"kind":"trivial","size":3},"clutching":[{"perm":[1,2,0]}]})";
const std::string kU1 = R"({"k":2,"loops":1,"generators":[{"angles":["0","0"],"perm":[1,0]}]})";

} // namespace

TEST(Cli, ClassifyCircleGoldenTables)
{
  auto z3 = run({"classify-circle", "z3"});
  EXPECT_EQ(z3.code, 0);
  EXPECT_EQ(z3.out, golden("classify_z3.txt"));
  auto v = run({"classify-circle", "--group", "z2xz2"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, golden("classify_z2xz2.txt"));
  auto object = run({"classify-circle", R"({"kind":"product","factors":["z2","z2"]})"});
  EXPECT_EQ(object.out, golden("classify_z2xz2.txt"));
}

TEST(Cli, ReportsAreDeterministic)
{
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"classify-circle", "z2xz2", "--format", "json"},
           {"frame-bundle", kWinding},
           {"verify", "ses", "--max-group", "2", "--max-orbits", "2"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, JsonFormatParses)
{
  auto r = run({"--format", "json", "classify-circle", "z3"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "classify-circle Z3");
  EXPECT_EQ(j["fields"]["component counts"], "{3, 2}");
  EXPECT_EQ(j["tables"][0]["rows"].size(), 2u);
}

TEST(Cli, FrameBundleOfWinding)
{
  auto r = run({"frame-bundle", kWinding});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("([0,0], (1 2))"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("components:      4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("frames:          8"), std::string::npos) << r.out;
}

TEST(Cli, HolonomyAndDecompose)
{
  auto empty = run({"holonomy", kWinding, "--word", ""});
  ASSERT_EQ(empty.code, 0) << empty.err;
  EXPECT_NE(empty.out.find("identity:          yes"), std::string::npos) << empty.out;
  auto once = run({"holonomy", kWinding, "--word", "1"});
  EXPECT_NE(once.out.find("([0,0], (1 2))"), std::string::npos) << once.out;
  auto d = run({"decompose", kWinding});
  EXPECT_NE(d.out.find("fiber count of F -> F/G:             2"), std::string::npos) << d.out;
  auto c = run({"components", "-"}, kWinding);
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("components:    2"), std::string::npos) << c.out;
}

TEST(Cli, SnActionExitStatus)
{
  auto bad = run({"sn-action", kCover3});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("obstruction loop:      1"), std::string::npos) << bad.out;
  EXPECT_NE(bad.out.find("(1 2 3)"), std::string::npos);
  auto good = run({"sn-action",
                   R"({"mode":"gspace","fiber":{"kind":"trivial","size":3},"clutching":[{"perm":[0,1,2]}]})"});
  EXPECT_EQ(good.code, 0);
}

TEST(Cli, U1Commands)
{
  auto t = run({"u1-transport", kU1, "--word", "1", "--start", "0:0"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("end:    0:1"), std::string::npos) << t.out;
  auto p = run({"pushforward", kU1, "--power", "2"});
  EXPECT_NE(p.out.find("unchanged: yes"), std::string::npos) << p.out;
  auto h = run({"u1-holonomy", kU1, "--word", "1 1"});
  EXPECT_NE(h.out.find("holonomy:                        ([0,0], id)"), std::string::npos) << h.out;
  auto d = run({"division-check", kU1, "--path", "0:0,1/400:0,1/200:0", "--step", "1/100"});
  EXPECT_NE(d.out.find("uniform rate: 1/4"), std::string::npos) << d.out;
  auto mixed = run({"division-check", kU1, "--path", "0:0,0:1"});
  EXPECT_EQ(mixed.code, 2);
}

TEST(Cli, VerifySuites)
{
  auto r = run({"verify", "wreath-iso", "--group", "z2", "--orbits", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("64 homomorphism pairs"), std::string::npos) << r.out;
  auto t = run({"verify", "torsor", "--max-group", "4", "--max-orbits", "3"});
  EXPECT_EQ(t.code, 0);
  auto unknown = run({"verify", "no-such-suite"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("unknown suite"), std::string::npos);
}

TEST(Cli, UsageAndSchemaErrors)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"components", R"({"mode":"gspace","fiber":{"kind":"trivial","size":3},"clutching":[{"perm":[0,1,2]}],"extra":1})"}).code, 2);
  EXPECT_EQ(run({"components", R"({"mode":"group","fiber":"z3","clutching":[{"perm":[1,2,0]}]})"}).code, 2);
  EXPECT_EQ(run({"components", "{not json"}).code, 2);
  EXPECT_EQ(run({"components", "/no/such/file.json"}).code, 2);
  EXPECT_EQ(run({"classify-circle", "q7"}).code, 2);
  EXPECT_EQ(run({"holonomy", kWinding, "--word", "2"}).code, 2);
}

TEST(SpecIo, StrictParsing)
{
  using spb::io::json;
  EXPECT_EQ(spb::io::parse_group(json("s3")).order(), 6u);
  EXPECT_EQ(spb::io::parse_group(json::parse(R"({"kind":"cyclic","n":5})")).order(), 5u);
  EXPECT_THROW(spb::io::parse_group(json::parse(R"({"kind":"cyclic","n":5,"m":1})")), spb::SchemaError);
  auto g = spb::io::parse_group(json::parse(R"({"kind":"table","table":[[0,1],[1,0]]})"));
  EXPECT_EQ(g.order(), 2u);
  auto F = spb::io::parse_gset(json::parse(R"({"kind":"table","group":"z2","size":2,"act":[[0,1],[1,0]]})"));
  EXPECT_TRUE(F.is_free());
  auto b = spb::io::parse_bundle(json::parse(
      R"({"mode":"gspace","fiber":{"kind":"standard_semitorsor","group":"z2","n":2},"loops":1,"clutching":[{"wreath":{"g":[1,0],"sigma":[1,0]}}]})"));
  EXPECT_EQ(b.loops(), 1u);
  EXPECT_THROW(spb::io::parse_bundle(json::parse(
                   R"({"mode":"gspace","fiber":{"kind":"standard_semitorsor","group":"z2","n":2},"loops":2,"clutching":[{"perm":[0,1,2,3]}]})")),
               spb::SchemaError);
  EXPECT_EQ(spb::io::parse_word("1, -2 1").letters, (std::vector<int>{1, -2, 1}));
  EXPECT_THROW(spb::io::parse_word("1,0"), spb::SchemaError);
  auto p = spb::io::parse_fiber_point("-1/4:2");
  EXPECT_EQ(p.angle, spb::Angle(3, 4));
  EXPECT_EQ(p.slot, 2u);
  EXPECT_THROW(spb::io::parse_fiber_point("1/4"), spb::SchemaError);
}
