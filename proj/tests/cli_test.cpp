#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pire/cli/cli.hpp"
#include "pire/core/io.hpp"
#include "pire/testkit/fixtures.hpp"

namespace pire::cli {
namespace {

namespace fs = std::filesystem;

const std::string kWitnessPath = std::string(PIRE_DATA_DIR) + "/k12_pire.json";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome pire(std::vector<std::string> args) {
  args.insert(args.begin(), "pire");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pire_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, ChromaOnK12) {
  const auto in = write("k12.json", io::dump(io::to_json(testkit::complete_graph(12))));
  const auto r = pire({"chroma", "--in", in, "--log", path("log.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "12\n");
  const auto log = io::read_json_file(path("log.json"));
  EXPECT_EQ(log["chromatic_number"], 12);
  EXPECT_EQ(log["clique"].size(), 12u);
}

TEST_F(CliTest, PipelineThenColourComplex) {
  const auto r = pire({"pipeline", "--in", kWitnessPath, "--out", path("out")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("edge-chromatic number: 12"), std::string::npos);
  for (const char* f : {"augmented.json", "punctured.json", "sealed.json", "sealed_colouring.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
  }
  const auto c = pire({"colour-complex", "--in", path("out/sealed.json")});
  EXPECT_EQ(c.code, kExitOk) << c.err;
  EXPECT_EQ(c.out, "12\n");
  const auto colouring = io::read_json_file(path("out/sealed_colouring.json"));
  EXPECT_EQ(colouring["palette_size"], 12);
  EXPECT_EQ(colouring["assignment"].size(), 12u);
}

TEST_F(CliTest, ManualStagesMatchPipeline) {
  ASSERT_EQ(pire({"pipeline", "--in", kWitnessPath, "--out", path("out")}).code, kExitOk);
  ASSERT_EQ(pire({"augment", "--in", kWitnessPath, "--out", path("aug.json")}).code, kExitInput)
      << "witness files carry extra keys";
  auto map = io::read_json_file(kWitnessPath);
  map.erase("designated_pairs");
  map.erase("provenance");
  const auto in = write("map.json", io::dump(map));
  ASSERT_EQ(pire({"augment", "--in", in, "--out", path("aug.json")}).code, kExitOk);
  ASSERT_EQ(pire({"inverse-link", "--in", path("aug.json"), "--out", path("punc.json")}).code, kExitOk);
  ASSERT_EQ(pire({"seal", "--in", path("punc.json"), "--out", path("sealed.json")}).code, kExitOk);
  EXPECT_EQ(slurp(path("aug.json")), slurp(path("out/augmented.json")));
  EXPECT_EQ(slurp(path("punc.json")), slurp(path("out/punctured.json")));
  EXPECT_EQ(slurp(path("sealed.json")), slurp(path("out/sealed.json")));
  EXPECT_EQ(pire({"heawood12", "--in", in}).out, "12\n");
  EXPECT_EQ(pire({"pair-chroma", "--in", in}).out, "12\n");
}

TEST_F(CliTest, LinkOutputFeedsQuotient) {
  const auto in = write("tetra.json", io::dump(io::to_json(testkit::tetrahedron_complex())));
  const auto link = pire({"link", "--in", in});
  ASSERT_EQ(link.code, kExitOk) << link.err;
  const auto linked = write("link.json", link.out);
  const auto q = pire({"quotient", "--in", linked, "--simple", "--out", path("q.json")});
  ASSERT_EQ(q.code, kExitOk) << q.err;
  EXPECT_EQ(q.out, "simple quotient: 6 vertices, 12 edges\n");
  const auto graph = io::graph_from_json(io::read_json_file(path("q.json")));
  EXPECT_EQ(graph.vertex_count(), 6u);
  EXPECT_EQ(pire({"chroma", "--in", path("q.json")}).out, "3\n");
  EXPECT_EQ(pire({"colour-complex", "--in", in}).out, "3\n");
  EXPECT_EQ(pire({"colour-complex", "--in", in, "--brute"}).out, "3\n");
}

TEST_F(CliTest, VerifyWitness) {
  const auto ok = pire({"verify-witness", "--in", kWitnessPath});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(std::count(ok.out.begin(), ok.out.end(), '\n'), 4);

  auto j = io::read_json_file(kWitnessPath);
  auto& cyc = j["rotation"]["v0"];
  std::swap(cyc[0], cyc[1]);
  const auto in = write("bad.json", io::dump(j));
  const auto bad = pire({"verify-witness", "--in", in});
  EXPECT_EQ(bad.code, kExitDomain);
  EXPECT_EQ(bad.err.rfind("error: check-failed: planar", 0), 0u) << bad.err;
}

TEST_F(CliTest, ErrorsAndExitCodes) {
  const auto unknown = pire({"frobnicate"});
  EXPECT_EQ(unknown.code, kExitInput);
  EXPECT_EQ(unknown.err.rfind("error: ", 0), 0u);

  const auto malformed = pire({"chroma", "--in", write("m.json", "{\"vertices\": [")});
  EXPECT_EQ(malformed.code, kExitInput);
  EXPECT_NE(malformed.err.find("error: "), std::string::npos);

  const auto extra = pire({"chroma", "--in", write("x.json", R"({"vertices":["a"],"edges":[],"colour":1})")});
  EXPECT_EQ(extra.code, kExitInput);

  const auto missing = pire({"chroma", "--in", path("nope.json")});
  EXPECT_EQ(missing.code, kExitInput);

  const auto dangling =
      pire({"chroma", "--in", write("d.json", R"({"vertices":["a"],"edges":[{"id":"e","end0":"a","end1":"b"}]})")});
  EXPECT_EQ(dangling.code, kExitInput);

  const auto norot = write("norot.json", R"({"vertices":["a","b"],"edges":[],"pairs":[["a","b"]]})");
  const auto heawood = pire({"heawood12", "--in", norot});
  EXPECT_EQ(heawood.code, kExitDomain);
  EXPECT_EQ(heawood.err.rfind("error: ", 0), 0u);

  EXPECT_EQ(pire({"search-witness"}).code, kExitInput);
  EXPECT_EQ(pire({"pipeline", "--in", kWitnessPath}).code, kExitInput);
}

TEST_F(CliTest, SearchWitnessFailsOnSmallBudget) {
  const auto r = pire({"search-witness", "--seed", "3", "--budget", "1000", "--log", path("s.log")});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("search-failed"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("s.log")));
}

TEST_F(CliTest, OutputsAreByteIdenticalAcrossRuns) {
  ASSERT_EQ(pire({"pipeline", "--in", kWitnessPath, "--out", path("a")}).code, kExitOk);
  ASSERT_EQ(pire({"pipeline", "--in", kWitnessPath, "--out", path("b")}).code, kExitOk);
  for (const char* f : {"augmented.json", "punctured.json", "sealed.json", "sealed_colouring.json"}) {
    EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
  }
  EXPECT_EQ(pire({"dot", "--in", kWitnessPath}).out, pire({"dot", "--in", kWitnessPath}).out);
}

TEST_F(CliTest, GenusAndDot) {
  auto map = io::read_json_file(kWitnessPath);
  map.erase("designated_pairs");
  map.erase("provenance");
  const auto in = write("map.json", io::dump(map));
  const auto g = pire({"genus", "--in", in});
  EXPECT_EQ(g.code, kExitOk) << g.err;
  EXPECT_NE(g.out.find("component: V=24 E=66 F=44 genus=0"), std::string::npos) << g.out;
  EXPECT_NE(g.out.find("planar embedding"), std::string::npos);

  const auto d = pire({"dot", "--in", kWitnessPath});
  EXPECT_EQ(d.code, kExitOk) << d.err;
  EXPECT_EQ(d.out.rfind("graph", 0), 0u);
  EXPECT_NE(d.out.find("xlabel"), std::string::npos);

  const auto c = pire({"dot", "--in", write("t.json", io::dump(io::to_json(testkit::triangle_complex())))});
  EXPECT_EQ(c.code, kExitOk) << c.err;
}

}  // namespace
}  // namespace pire::cli
