#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;

fs::path data_dir() { return WMETRIC_DATA_DIR; }
fs::path bad_data_dir() { return WMETRIC_BAD_DATA_DIR; }

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wmetric::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (data_dir() / name).string(); }
std::string bad(const std::string& name) { return (bad_data_dir() / name).string(); }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

TEST(Cli, ChainMonoidPassesAllLaws) {
  const Invocation r = run({"check-monoid", data("chain4.mon")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "outcome: all laws pass")) << r.out;
  EXPECT_TRUE(has(r.out, "check: exhaustive"));
}

TEST(Cli, SwapIsCertifiedAtDepthTwo) {
  const Invocation r = run({"fixpoint", "--space", data("swap2.spc"), "--map", data("swap.map"), "--depth", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "outcome: CertifiedNoFixedPoint at depth 2")) << r.out;
  EXPECT_TRUE(has(r.out, "certificate: "));
  EXPECT_TRUE(has(r.out, "budgets: alpha-factor 4, depth 4, width 64"));
}

TEST(Cli, SOmegaDemoIsInconclusiveWithLedger) {
  const Invocation r = run({"tree", "demo", "--kind", "s-kappa", "--height", "omega-1", "--depth", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "outcome: BudgetExhausted")) << r.out;
  EXPECT_TRUE(has(r.out, "ledger: 0, w, w^2, w^3, w^4, w^5, w^6"));
  EXPECT_TRUE(has(r.out, "path: refused, NotCofinal"));
  EXPECT_TRUE(has(r.out, "obstruction: "));
  EXPECT_TRUE(has(r.out, "pruning (tight): pass"));
  EXPECT_TRUE(has(r.out, "pruning (slack): pass"));
}

TEST(Cli, BinaryDemoFindsTheZeroPath) {
  const Invocation r = run({"tree", "demo", "--kind", "binary"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "path prefix: t:00000000")) << r.out;
  EXPECT_TRUE(has(r.out, "witness: p:(0) (residual 1/65536)"));
  EXPECT_TRUE(has(r.out, "budgets: alpha-factor 4, depth 8, width 64"));
}

TEST(Cli, CountableSKappaDemoGivesPathPrefix) {
  const Invocation r = run({"tree", "demo", "--kind", "s-kappa", "--height", "w^2", "--depth", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "path prefix: s:(w*4|0,w,w*2,w*3,w*4)")) << r.out;
}

TEST(Cli, BinaryTreeRejectsOtherHeights) {
  EXPECT_EQ(run({"tree", "demo", "--kind", "binary", "--height", "w^2"}).code, 3);
  EXPECT_EQ(run({"tree", "demo", "--kind", "s-kappa", "--height", "w+1"}).code, 3);
  EXPECT_EQ(run({"tree", "demo", "--kind", "ternary"}).code, 3);
}

TEST(Cli, ReportSectionsComeInOrder) {
  const Invocation r = run({"fixpoint", "--space", data("tri3.spc"), "--map", data("collapse.map")});
  ASSERT_EQ(r.code, 0);
  const std::vector<std::string> order{"command: wmetric fixpoint", "inputs:", "sha256:", "budgets:", "outcome:",
                                       "witness: b (residual 0)", "timing: omitted"};
  std::size_t at = 0;
  for (const auto& s : order) {
    const auto pos = r.out.find(s, at);
    ASSERT_NE(pos, std::string::npos) << s << "\n" << r.out;
    at = pos;
  }
  EXPECT_TRUE(has(r.out, "rational.mon sha256:"));
}

TEST(Cli, TimingFlagReplacesOmitted) {
  const Invocation r = run({"check-monoid", data("chain4.mon"), "--timing"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(has(r.out, "timing: omitted"));
  EXPECT_TRUE(has(r.out, " ms\n"));
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"check-monoid", data("rational.mon"), "--sample", "200", "--seed", "7"},
      {"check-space", data("asym3.spc"), "--dense", "x,y"},
      {"fixpoint", "--space", data("levels3.spc"), "--map", data("cycle3.map")},
      {"tree", "demo", "--kind", "binary", "--depth", "6"},
      {"tree", "demo", "--kind", "s-kappa", "--height", "omega-1", "--depth", "4"},
  };
  for (const auto& c : commands) {
    const Invocation a = run(c);
    const Invocation b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, UnknownFlagsAreInputErrors) {
  EXPECT_EQ(run({"check-monoid", data("chain4.mon"), "--bogus"}).code, 3);
  EXPECT_EQ(run({"fixpoint", "--space", data("swap2.spc"), "--map", data("swap.map"), "--dense", "x"}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"fixpoint", "--space", data("swap2.spc")}).code, 3);
}

TEST(Cli, ParseErrorsNameFileLineAndText) {
  struct Case {
    std::vector<std::string> args;
    std::string location;
  };
  const std::vector<Case> cases{
      {{"check-monoid", bad("duplicate.mon")}, "duplicate.mon:2:"},
      {{"check-monoid", bad("nontotal.mon")}, "nontotal.mon:4:"},
      {{"check-monoid", bad("unknown_entry.mon")}, "unknown_entry.mon:4:"},
      {{"check-monoid", bad("kind.mon")}, "kind.mon:1:"},
      {{"check-space", bad("lazy.spc")}, "lazy.spc:1:"},
      {{"check-space", bad("literal.spc")}, "literal.spc:4:"},
      {{"check-map", "--space", data("swap2.spc"), "--map", bad("arrow.map")}, "arrow.map:2:"},
      {{"fixpoint", "--space", data("swap2.spc"), "--map", bad("unknown_point.map")}, "unknown_point.map:2:"},
  };
  for (const auto& c : cases) {
    const Invocation r = run(c.args);
    EXPECT_EQ(r.code, 3) << c.location;
    EXPECT_TRUE(r.out.empty());
    EXPECT_TRUE(has(r.err, c.location)) << r.err;
    EXPECT_TRUE(has(r.err, "\n  > ")) << r.err;
  }
}

TEST(Cli, MissingFileIsAnInputError) {
  const Invocation r = run({"check-monoid", data("no-such.mon")});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ExpandingMapIsRejectedBeforeSearch) {
  const fs::path dir = fs::temp_directory_path() / "wmetric_cli_test";
  fs::create_directories(dir);
  const fs::path map = dir / "expanding.map";
  std::ofstream(map) << "a -> b\nb -> a\nc -> c\n";
  // d(f b, f c) = d(a, c) = 1 > d(b, c) = 1/2
  const Invocation r = run({"fixpoint", "--space", data("tri3.spc"), "--map", map.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(has(r.err, "NotNonExpanding")) << r.err;
  const Invocation c = run({"check-map", "--space", data("tri3.spc"), "--map", map.string()});
  EXPECT_EQ(c.code, 1);
  EXPECT_TRUE(has(c.out, "witness: (b, c)")) << c.out;
}

TEST(Cli, FixpointNeedsContinuityAtZero) {
  const fs::path dir = fs::temp_directory_path() / "wmetric_cli_test";
  fs::create_directories(dir);
  const fs::path map = dir / "id3.map";
  std::ofstream(map) << "x -> x\ny -> y\nz -> z\n";
  EXPECT_EQ(run({"fixpoint", "--space", data("asym3.spc"), "--map", map.string()}).code, 3);
}

TEST(Cli, AlphaFactorBelowFourIsRejected) {
  EXPECT_EQ(run({"fixpoint", "--space", data("swap2.spc"), "--map", data("swap.map"), "--alpha-factor", "2"}).code, 3);
}

TEST(Cli, DensityVerdicts) {
  EXPECT_EQ(run({"check-space", data("asym3.spc"), "--dense", "x,y"}).code, 1);
  EXPECT_EQ(run({"check-space", data("asym3.spc"), "--dense", "x,y,z"}).code, 0);
  EXPECT_EQ(run({"check-space", data("asym3.spc"), "--dense", "x,w"}).code, 3);
}

// Exit-code contract over the shipped corpus.
TEST(Cli, CorpusExitCodes) {
  std::size_t monoids = 0, spaces = 0;
  for (const auto& e : fs::directory_iterator(data_dir())) {
    if (e.path().extension() == ".mon") {
      ++monoids;
      EXPECT_EQ(run({"check-monoid", e.path().string()}).code, 0) << e.path();
    } else if (e.path().extension() == ".spc") {
      ++spaces;
      EXPECT_EQ(run({"check-space", e.path().string()}).code, 0) << e.path();
      EXPECT_EQ(run({"complete", "--space", e.path().string()}).code, 0) << e.path();
    }
  }
  EXPECT_EQ(monoids, 4u);
  EXPECT_EQ(spaces, 4u);
  EXPECT_EQ(run({"check-space", bad("triangle.spc")}).code, 1);

  struct Pair {
    std::string space, map;
    int check_map, fixpoint;
  };
  const std::vector<Pair> pairs{
      {"swap2.spc", "swap.map", 0, 1},
      {"tri3.spc", "collapse.map", 0, 0},
      {"levels3.spc", "cycle3.map", 0, 0},
  };
  for (const auto& p : pairs) {
    EXPECT_EQ(run({"check-map", "--space", data(p.space), "--map", data(p.map)}).code, p.check_map) << p.map;
    EXPECT_EQ(run({"fixpoint", "--space", data(p.space), "--map", data(p.map)}).code, p.fixpoint) << p.map;
  }
  EXPECT_EQ(run({"check-map", "--space", data("swap2.spc"), "--map", bad("partial.map")}).code, 3);
}

TEST(Cli, CycleFixesOnlyR) {
  const Invocation r = run({"fixpoint", "--space", data("levels3.spc"), "--map", data("cycle3.map")});
  EXPECT_TRUE(has(r.out, "witness: r (residual d(w))")) << r.out;
  const Invocation c = run({"check-map", "--space", data("levels3.spc"), "--map", data("cycle3.map")});
  EXPECT_TRUE(has(c.out, "fixed points: r")) << c.out;
}

}  // namespace
