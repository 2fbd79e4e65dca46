#include <doctest.h>

#include <functional>
#include <sstream>

#include "../support/synthetic.hpp"
#include "verbpara/error.hpp"
#include "verbpara/pipeline.hpp"
#include "verbpara/serialization.hpp"

using namespace verbpara;

namespace {

const RunResult& mini() {
  static const RunResult r = [] {
    const Corpus c = verbpara::testing::load_fixture("data/mini_corpus.conllu");
    PipelineConfig config;
    config.overlap_threshold = 10;
    return run_pipeline(c, config);
  }();
  return r;
}

std::size_t parse_error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("instances round trip") {
  std::ostringstream out;
  write_instances(out, mini().instances);
  std::istringstream in(out.str());
  CHECK(read_instances(in, "i.jsonl") == mini().instances);
}

TEST_CASE("instance lines have the documented fields") {
  VerbInstance v;
  v.verb = "attack";
  v.sentence_id = "fig1";
  v.token_index = 14;
  v.components = {{"subject", {"iraqi_force"}}, {"pp-on", {"august 31"}}};
  std::ostringstream out;
  write_instances(out, std::vector<VerbInstance>{v});
  CHECK(out.str() ==
        "{\"sentence_id\":\"fig1\",\"verb\":\"attack\",\"token_index\":14,"
        "\"components\":{\"pp-on\":[\"august 31\"],\"subject\":[\"iraqi_force\"]}}\n");
  v.pronominal["subject"].insert("iraqi_force");
  std::ostringstream flagged;
  write_instances(flagged, std::vector<VerbInstance>{v});
  CHECK(flagged.str().find("\"pronominal\":{\"subject\":[\"iraqi_force\"]}") != std::string::npos);
}

TEST_CASE("pairs round trip") {
  REQUIRE_FALSE(mini().filtered.pairs.empty());
  std::ostringstream out;
  write_pairs(out, mini().filtered.pairs);
  std::istringstream in(out.str());
  const auto back = read_pairs(in, "p.jsonl");
  REQUIRE(back.size() == mini().filtered.pairs.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].key == mini().filtered.pairs[i].key);
    CHECK(back[i].left == mini().filtered.pairs[i].left);
    CHECK(back[i].shared_components == mini().filtered.pairs[i].shared_components);
    CHECK(back[i].overlap_score == mini().filtered.pairs[i].overlap_score);
  }
}

TEST_CASE("stats round trip") {
  std::ostringstream out;
  write_stats(out, mini().stats);
  std::istringstream in(out.str());
  CHECK(read_stats(in, "s.json") == mini().stats);
  CHECK(out.str().find("\"log_base\": \"natural\"") != std::string::npos);
}

TEST_CASE("score TSV round trip") {
  PipelineConfig config;
  std::ostringstream out;
  write_score_tsv(out, mini().ranking, config);
  const std::string text = out.str();
  CHECK(text.rfind("# log_base=natural\toverlap_threshold=100\tmle=per-instance\n", 0) == 0);
  std::istringstream in(text);
  const auto rows = read_score_tsv(in, "r.tsv");
  REQUIRE(rows.size() == mini().ranking.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].rank == i + 1);
    CHECK(rows[i].pair == mini().ranking[i].pair);
    CHECK(rows[i].support == mini().ranking[i].support);
    CHECK(rows[i].evidence == mini().ranking[i].evidence);
    CHECK(rows[i].score == doctest::Approx(mini().ranking[i].score).epsilon(1e-6));
  }
  std::istringstream again(text);
  CHECK(read_ranked_pairs(again, "r.tsv").size() == rows.size());
}

TEST_CASE("number formatting") {
  CHECK(format_number(100.0) == "100");
  CHECK(format_number(12.5) == "12.5");
  CHECK(format_fixed(7.86499, 3) == "7.865");
  CHECK(format_fixed(1.0) == "1.000000");
}

TEST_CASE("pair lists") {
  std::istringstream in("v1\tv2\nsell\tbuy\n# skip\nfall\trise\textra\n");
  const auto pairs = read_pair_list(in, "sample.tsv");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == TypePair{"buy", "sell"});
}

TEST_CASE("malformed lines report their line numbers") {
  CHECK(parse_error_line([] {
          std::istringstream in("{\"sentence_id\":\"a\",\"verb\":\"b\",\"token_index\":1,\"components\":{}}\n{oops\n");
          read_instances(in, "i");
        }) == 2);
  CHECK(parse_error_line([] {
          std::istringstream in("\n{\"verb\":\"b\"}\n");
          read_instances(in, "i");
        }) == 2);
  CHECK(parse_error_line([] {
          std::istringstream in("# h\nrank\tv1\tv2\tscore\tsupport\tevidence\n1\ta\tb\tNaNx\t1\t\n");
          read_score_tsv(in, "r");
        }) == 3);
  CHECK(parse_error_line([] {
          std::istringstream in("1\ta\n");
          read_ranked_pairs(in, "r");
        }) == 1);
  CHECK(parse_error_line([] {
          std::istringstream in("buy\tbuy\n");
          read_pair_list(in, "s");
        }) == 1);
  std::istringstream bad_stats("{\"token_count\": 1}");
  CHECK_THROWS_AS(read_stats(bad_stats, "s"), InputError);
}
