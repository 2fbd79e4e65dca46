#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "../support/synthetic.hpp"
#include "verbpara/cli.hpp"

using namespace verbpara;
using verbpara::testing::read_file;
using verbpara::testing::source_path;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("verbpara-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

const std::string kMini = source_path("data/mini_corpus.conllu").string();
const std::string kFig1 = source_path("tests/data/fig1.conllu").string();

}  // namespace

TEST_CASE("extract writes one JSON line per instance") {
  const Run r = cli({"extract", kFig1});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"sentence_id\":\"fig1\",\"verb\":\"delay\",\"token_index\":6,\"components\":{\"modifier\":[\"after\"],"
        "\"object\":[\"implementation of deal\"],\"subject\":[\"secretary_general boutros boutros_ghali\"]}}\n"
        "{\"sentence_id\":\"fig1\",\"verb\":\"attack\",\"token_index\":14,\"components\":{\"object\":[\"kurdish_"
        "rebel\"],\"pp-on\":[\"august 31\"],\"subject\":[\"iraqi_force\"]}}\n");
}

TEST_CASE("stage composition equals run") {
  TempDir dir;
  REQUIRE(cli({"extract", kMini, "-o", dir / "inst.jsonl"}).code == 0);
  const Run pairs = cli({"pairs", kMini, "--instances", dir / "inst.jsonl", "--stats-out", dir / "stats.json", "-o",
                         dir / "pairs.jsonl"});
  REQUIRE(pairs.code == 0);
  CHECK(pairs.err.find("pairs:") != std::string::npos);
  REQUIRE(cli({"score", "--pairs", dir / "pairs.jsonl", "--stats", dir / "stats.json", "-o", dir / "scores.tsv"})
              .code == 0);
  REQUIRE(cli({"run", kMini, "--out-dir", dir / "run"}).code == 0);
  CHECK(read_file(dir / "scores.tsv") == read_file(dir / "run/ranking.tsv"));
  CHECK(read_file(dir / "scores.tsv") == read_file(source_path("tests/data/mini_ranking.golden.tsv")));

  const Run report = cli({"report", kMini, "--scores", dir / "scores.tsv"});
  CHECK(report.code == 0);
  CHECK(report.out == read_file(dir / "run/evidence.txt"));

  SUBCASE("pairs without --instances extracts on the fly") {
    REQUIRE(cli({"pairs", kMini, "-o", dir / "pairs2.jsonl"}).code == 0);
    CHECK(read_file(dir / "pairs2.jsonl") == read_file(dir / "pairs.jsonl"));
  }
  SUBCASE("threshold flags") {
    REQUIRE(cli({"run", kMini, "--out-dir", dir / "t0", "--overlap-threshold", "0"}).code == 0);
    CHECK(read_file(dir / "t0/ranking.tsv").rfind("# log_base=natural\toverlap_threshold=0\t", 0) == 0);
  }
}

TEST_CASE("run is identical across worker counts") {
  TempDir dir;
  REQUIRE(cli({"--jobs", "1", "run", kMini, "--out-dir", dir / "j1"}).code == 0);
  REQUIRE(cli({"run", kMini, "--out-dir", dir / "j8", "--jobs", "8"}).code == 0);
  for (const char* f : {"ranking.tsv", "manifest.json", "evidence.txt"}) {
    CHECK(read_file(dir / (std::string("j1/") + f)) == read_file(dir / (std::string("j8/") + f)));
  }
}

TEST_CASE("config file and overrides") {
  TempDir dir;
  write(dir / "c.ini", "[pipeline]\noverlap_threshold = 0\nmle = per-relation\n");
  REQUIRE(cli({"--config", dir / "c.ini", "run", kMini, "--out-dir", dir / "a"}).code == 0);
  CHECK(read_file(dir / "a/ranking.tsv").rfind("# log_base=natural\toverlap_threshold=0\tmle=per-relation\n", 0) ==
        0);
  REQUIRE(cli({"--config", dir / "c.ini", "run", kMini, "--out-dir", dir / "b", "--overlap-threshold", "100"})
              .code == 0);
  CHECK(read_file(dir / "b/ranking.tsv").rfind("# log_base=natural\toverlap_threshold=100\t", 0) == 0);
  write(dir / "bad.ini", "[pipeline]\nmle = bayes\n");
  CHECK(cli({"--config", dir / "bad.ini", "run", kMini, "--out-dir", dir / "c"}).code == 1);
}

TEST_CASE("lp, sample-lp, eval and kappa") {
  TempDir dir;
  REQUIRE(cli({"extract", kMini, "-o", dir / "inst.jsonl"}).code == 0);
  const Run lp = cli({"lp", "--instances", dir / "inst.jsonl", "-o", dir / "lp.tsv"});
  REQUIRE(lp.code == 0);
  const std::string lp_text = read_file(dir / "lp.tsv");
  CHECK(lp_text.find("rank\tv1\tv2\tsubject_sim\tobject_sim\tscore\n") != std::string::npos);
  REQUIRE(cli({"run", kMini, "--out-dir", dir / "run"}).code == 0);

  write(dir / "sample.tsv", "v1\tv2\nbuy\tpurchase\ncut\tlower\nnot\tthere\n");
  const Run s1 = cli({"--seed", "5", "sample-lp", "--sample", dir / "sample.tsv", "--our-ranking",
                      dir / "run/ranking.tsv", "--lp-ranking", dir / "lp.tsv"});
  const Run s2 = cli({"sample-lp", "--sample", dir / "sample.tsv", "--our-ranking", dir / "run/ranking.tsv",
                      "--lp-ranking", dir / "lp.tsv", "--seed", "5"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(s1.out.rfind("# seed=5\n", 0) == 0);
  CHECK(s1.err.find("skip") != std::string::npos);

  write(dir / "judge.tsv", "buy\tpurchase\t+\tj1\nseparate\tsplit\t+\tj1\nopen\tstart\t-\tj1\n"
                           "buy\tpurchase\t+\tj2\nseparate\tsplit\t-\tj2\nopen\tstart\t-\tj2\n");
  const Run e = cli({"eval", "--ranking", dir / "run/ranking.tsv", "--judgments", dir / "judge.tsv", "--judge",
                     "j1"});
  CHECK(e.code == 0);
  CHECK(e.out.find("rank\tprecision\trecall\n") != std::string::npos);
  CHECK(e.out.find("1\t1.000000\t0.500000\n") != std::string::npos);
  CHECK(e.out.find("3\t0.666667\t1.000000\n") != std::string::npos);
  CHECK(e.out.find("method=wald") != std::string::npos);
  CHECK(e.err.find("no judgment") != std::string::npos);
  CHECK(cli({"eval", "--ranking", dir / "run/ranking.tsv", "--judgments", dir / "judge.tsv"}).code == 1);

  write(dir / "a.tsv", "buy\tpurchase\t+\tx\nseparate\tsplit\t+\tx\nopen\tstart\t-\tx\n");
  write(dir / "b.tsv", "buy\tpurchase\t+\ty\nseparate\tsplit\t-\ty\nopen\tstart\t-\ty\n");
  const Run k = cli({"kappa", dir / "a.tsv", dir / "b.tsv"});
  CHECK(k.code == 0);
  // p_o = 2/3, p_e = (2*1 + 1*2)/9 = 4/9, kappa = (2/9)/(5/9) = 0.4
  CHECK(k.out.rfind("kappa\t0.400000\n", 0) == 0);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(cli({}).code == 1);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"extract", dir / "missing.conllu"}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);

  write(dir / "bad.conllu", "1\tAcme\tacme\tPROPN\t_\t_\t0\troot\t_\t_\n2\tbad\tline\n");
  const Run bad = cli({"run", dir / "bad.conllu", "--out-dir", dir / "out"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("bad.conllu:2") != std::string::npos);

  write(dir / "bad.jsonl", "{\"sentence_id\":\"a\"}\n");
  const Run pairs = cli({"pairs", kMini, "--instances", dir / "bad.jsonl"});
  CHECK(pairs.code == 1);
  CHECK(pairs.err.find("bad.jsonl:1") != std::string::npos);

  // statistics from another corpus cannot explain the pairs
  REQUIRE(cli({"pairs", kMini, "-o", dir / "pairs.jsonl", "--overlap-threshold", "0"}).code == 0);
  REQUIRE(cli({"extract", kFig1, "--stats-out", dir / "fig1.json", "-o", dir / "fig1.jsonl"}).code == 0);
  const Run inconsistent = cli({"score", "--pairs", dir / "pairs.jsonl", "--stats", dir / "fig1.json"});
  CHECK(inconsistent.code == 2);
  CHECK(inconsistent.err.find("score") != std::string::npos);

  write(dir / "dangling.tsv", "rank\tv1\tv2\tscore\tsupport\tevidence\n1\ta\tb\t1.0\t1\tnope|mini-001\n");
  const Run report = cli({"report", kMini, "--scores", dir / "dangling.tsv"});
  CHECK(report.code == 0);
  CHECK(report.err.find("warning") != std::string::npos);
}
