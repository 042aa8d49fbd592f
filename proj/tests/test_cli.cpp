#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sposet/cli.hpp"
#include "sposet/poset_io.hpp"
#include "sposet/simplicial_complex.hpp"
#include "test_support.hpp"

namespace sposet {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sposet_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write_poset(const std::string& name, const Poset& p) {
    return write(name, dump_json(poset_to_json(p)));
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckPosetAndComplex) {
  const auto b4 = write_poset("b4.json", boolean_lattice(4));
  EXPECT_EQ(run({"check", "--poset", b4, "--test", "simplicial"}).out, "true\n");
  EXPECT_EQ(run({"check", "--poset", b4, "--test", "faceposet"}).out, "true\n");
  const auto e4 = write_poset("e4.json", testing::double_edge_fixture());
  EXPECT_EQ(run({"check", "--poset", e4, "--test", "faceposet"}).out, "false\n");
  const auto c = write("c.txt", "a*b*c,b*c,a*e\n");
  EXPECT_EQ(run({"check", "--complex", c, "--test", "faceposet"}).out, "true\n");
  const auto cj = write("c.json", dump_json(complex_to_json(testing::complex_of("a*b*c,b*c,a*e"))));
  EXPECT_EQ(run({"check", "--complex", cj, "--test", "faceposet"}).out, "true\n");

  const auto chain2 = write_poset("chain.json", chain(2));
  const Result pre = run({"check", "--poset", chain2, "--test", "faceposet"});
  EXPECT_EQ(pre.code, cli::kPrecondition);
  EXPECT_EQ(run({"check", "--poset", chain2, "--test", "simplicial"}).out, "false\n");
}

TEST_F(CliTest, ErrorsAndExitCodes) {
  EXPECT_EQ(run({"check", "--poset", path("missing.json"), "--test", "simplicial"}).code, cli::kIoOrParse);
  const auto bad = write("bad.json", "{ nope");
  EXPECT_EQ(run({"check", "--poset", bad, "--test", "simplicial"}).code, cli::kIoOrParse);
  EXPECT_EQ(run({"check", "--poset", bad, "--test", "wrong"}).code, cli::kIoOrParse);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kIoOrParse);
  EXPECT_EQ(run({}).code, cli::kIoOrParse);
  EXPECT_EQ(run({"random", "--n", "6", "--p1", "0.5", "--p2", "0.5", "--seed", "1", "--bogus"}).code,
            cli::kIoOrParse);
  EXPECT_EQ(run({"random", "--n", "13", "--p1", "0.5", "--p2", "0.5", "--seed", "1"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, GlueDelta) {
  const auto a = write_poset("a.json", testing::bitstring_boolean_lattice());
  const auto b = write_poset("b.json", testing::naturally_labeled_boolean_lattice());
  const auto good = write("good.json", R"({
    "facet_map": {"1110": "11", "0111": "14"},
    "atom_map": {"1000": "1", "0100": "2", "0010": "3", "0001": "4"}})");
  const auto bad = write("bad.json", R"({
    "facet_map": {"1110": "11", "0111": "14"},
    "atom_map": {"1000": "4", "0100": "3", "0010": "2", "0001": "1"}})");
  const Result ok = run({"glue-delta", "--a", a, "--b", b, "--spec", good, "--out", path("g.json")});
  EXPECT_EQ(ok.code, cli::kOk) << ok.err;
  const Poset g = poset_from_json(read_json_file(path("g.json")));
  EXPECT_EQ(maximal_elements(g).size(), 2u);
  EXPECT_EQ(atoms(g).size(), 4u);

  const Result err = run({"glue-delta", "--a", a, "--b", b, "--spec", bad, "--out", path("h.json")});
  EXPECT_EQ(err.code, cli::kGluingSpec);
  EXPECT_EQ(err.err.substr(0, err.err.find('\n')), "Assignment of atoms-atoms or facets-facets invalid.");
  EXPECT_FALSE(fs::exists(path("h.json")));
}

TEST_F(CliTest, GlueThetaIdealReduceDot) {
  const auto a = write("a.txt", "a*b*c*x,a*b*c*y");
  const auto b = write("b.json", R"({"vertices": ["a","b","c","x","y"], "facets": [["a","b"],["b","c"],["a","c"]]})");
  ASSERT_EQ(run({"glue-theta", "--a", a, "--b", b, "--out", path("t.json")}).code, cli::kOk);
  EXPECT_EQ(run({"check", "--poset", path("t.json"), "--test", "faceposet"}).out, "false\n");

  const auto e4 = write_poset("e4.json", testing::double_edge_fixture());
  EXPECT_EQ(run({"ideal", "--poset", e4}).out, "x[l1]*x[l2]\nx[x]*x[y] - x[l1] - x[l2]\n");
  const auto f = write_poset("f.json", face_poset(testing::complex_of("a*b*c,b*c*d")));
  EXPECT_EQ(run({"reduce", "--poset", f}).out, "x[a]*x[d]\n");
  EXPECT_EQ(run({"reduce", "--poset", e4}).code, cli::kPrecondition);
  const Result dot = run({"export-dot", "--poset", f});
  EXPECT_EQ(dot.out, poset_to_dot(face_poset(testing::complex_of("a*b*c,b*c*d"))));
}

TEST_F(CliTest, RandomTallyAndJson) {
  const Result t = run({"random", "--n", "6", "--p1", "0.5", "--p2", "0.5", "--seed", "7", "--count", "100",
                        "--tally", "--out", path("r.json")});
  ASSERT_EQ(t.code, cli::kOk) << t.err;
  const auto j = read_json_file(path("r.json"));
  EXPECT_EQ(t.out, "faceposet: " + std::to_string(j.at("face_poset_count").get<int>()) + "/100\n");
  EXPECT_EQ(j.at("samples"), 100);

  const Result plain = run({"random", "--n", "6", "--p1", "0.5", "--p2", "0.5", "--seed", "7", "--count", "100"});
  EXPECT_EQ(plain.out, slurp(path("r.json")));
}

TEST_F(CliTest, RoundTripThroughFiles) {
  testing::TestRng rng(101);
  for (int rep = 0; rep < 10; ++rep) {
    const Poset p = testing::random_simplicial_poset(rng, 5);
    const auto in = write_poset("p.json", p);
    const auto d = write("d.txt", "x*y,y*z");
    EXPECT_EQ(poset_from_json(read_json_file(in)), p);
    ASSERT_EQ(run({"glue-theta", "--a", d, "--b", d, "--out", path("q.json")}).code, cli::kOk);
    EXPECT_EQ(poset_from_json(read_json_file(path("q.json"))),
              poset_from_json(poset_to_json(theta_glue(testing::complex_of("x*y,y*z"), testing::complex_of("x*y,y*z")))));
  }
}

// The installed binary behaves like the in-process entry point.
TEST_F(CliTest, BinaryMatchesInProcessRun) {
  const auto b4 = write_poset("b4.json", boolean_lattice(4));
  const std::string cmd = std::string(SPOSET_CLI_PATH) + " check --poset " + b4 + " --test simplicial";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
  const int status = pclose(pipe);
  EXPECT_EQ(out, "true\n");
  EXPECT_EQ(WEXITSTATUS(status), 0);
}

}  // namespace
}  // namespace sposet
