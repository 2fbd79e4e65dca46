#include <doctest.h>

#include <cctype>
#include <sstream>

#include "../support/synthetic.hpp"
#include "verbpara/extraction.hpp"

using namespace verbpara;

namespace {

Sentence one(const std::string& rows) {
  std::istringstream in(rows);
  Corpus c = parse_conllu(in, "t");
  REQUIRE(c.size() == 1);
  return c.sentences()[0];
}

const Sentence& fig1() {
  static const Corpus c = verbpara::testing::load_fixture("tests/data/fig1.conllu");
  return c.sentences().at(0);
}

const VerbInstance& find(const std::vector<VerbInstance>& all, const std::string& verb) {
  for (const auto& v : all) {
    if (v.verb == verb) return v;
  }
  FAIL("no instance for " << verb);
  return all.front();
}

}  // namespace

TEST_CASE("Fig. 1 instances") {
  const auto inst = extract_instances(fig1(), ExtractionConfig::defaults());
  REQUIRE(inst.size() == 2);

  const ComponentMap delay{{"subject", {"secretary_general boutros boutros_ghali"}},
                           {"object", {"implementation of deal"}},
                           {"modifier", {"after"}}};
  const ComponentMap attack{
      {"subject", {"iraqi_force"}}, {"object", {"kurdish_rebel"}}, {"pp-on", {"august 31"}}};
  CHECK(find(inst, "delay").components == delay);
  CHECK(find(inst, "attack").components == attack);
  CHECK(find(inst, "delay").token_index == 6);
  CHECK(find(inst, "attack").sentence_id == "fig1");
  CHECK(find(inst, "attack").pronominal.empty());
}

TEST_CASE("extend_head on the Fig. 1 tokens") {
  const Sentence& s = fig1();
  CHECK(extend_head(s.token(7), s).text == "implementation of deal");
  CHECK(extend_head(s.token(13), s).text == "iraqi_force");
  CHECK(extend_head(s.token(16), s).text == "kurdish_rebel");
  CHECK(extend_head(s.token(18), s).text == "august 31");
  CHECK(extend_head(s.token(10), s).text == "deal");
}

TEST_CASE("a bare head is its own lemma") {
  const Sentence s = one(
      "1\tforces\tforce\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tattacked\tattack\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\trebels\trebel\tNOUN\t_\t_\t2\tobj\t_\t_\n");
  CHECK(extend_head(s.token(3), s).text == "rebel");
}

TEST_CASE("sentences without verbs give no instances") {
  const Sentence s = one(
      "1\tstock\tstock\tNOUN\t_\t_\t2\tcompound\t_\t_\n"
      "2\tprices\tprice\tNOUN\t_\t_\t0\troot\t_\t_\n");
  CHECK(extract_instances(s, ExtractionConfig::defaults()).empty());
}

TEST_CASE("auxiliaries, copulas and adjectival participles are not verbs") {
  const Sentence s = one(
      "1\tThe\tthe\tDET\t_\t_\t3\tdet\t_\t_\n"
      "2\tbroken\tbreak\tVERB\t_\t_\t3\tamod\t_\t_\n"
      "3\tdeal\tdeal\tNOUN\t_\t_\t6\tnsubj\t_\t_\n"
      "4\thas\thave\tAUX\t_\t_\t6\taux\t_\t_\n"
      "5\tbeen\tbe\tAUX\t_\t_\t6\tcop\t_\t_\n"
      "6\tdead\tdead\tADJ\t_\t_\t0\troot\t_\t_\n");
  CHECK(extract_instances(s, ExtractionConfig::defaults()).empty());
  CHECK_FALSE(is_verbal(s.token(2)));
  CHECK_FALSE(is_verbal(s.token(4)));
  CHECK_FALSE(is_verbal(s.token(6)));
}

TEST_CASE("passive subjects become objects and by-agents subjects") {
  const Sentence s = one(
      "1\tErasco\terasco\tPROPN\t_\t_\t3\tnsubj:pass\t_\t_\n"
      "2\twas\tbe\tAUX\t_\t_\t3\taux:pass\t_\t_\n"
      "3\tbought\tbuy\tVERB\t_\t_\t0\troot\t_\t_\n"
      "4\tby\tby\tADP\t_\t_\t5\tcase\t_\t_\n"
      "5\tCampbell\tcampbell\tPROPN\t_\t_\t3\tobl:agent\t_\t_\n");
  const auto inst = extract_instances(s, ExtractionConfig::defaults());
  REQUIRE(inst.size() == 1);
  const ComponentMap expected{{"subject", {"campbell"}}, {"object", {"erasco"}}};
  CHECK(inst[0].components == expected);
}

TEST_CASE("active by-phrases stay prepositional") {
  const Sentence s = one(
      "1\tAcme\tacme\tPROPN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\traised\traise\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\tprices\tprice\tNOUN\t_\t_\t2\tobj\t_\t_\n"
      "4\tby\tby\tADP\t_\t_\t6\tcase\t_\t_\n"
      "5\t5\t5\tNUM\t_\t_\t6\tnummod\t_\t_\n"
      "6\tpercent\tpercent\tNOUN\t_\t_\t2\tobl\t_\t_\n");
  const auto inst = extract_instances(s, ExtractionConfig::defaults());
  CHECK(inst[0].components.at("pp-by") == std::set<std::string>{"5 percent"});
}

TEST_CASE("pronoun detection") {
  const auto config = ExtractionConfig::defaults();
  Token it{1, "it", "it", "PRON", 2, "nsubj"};
  CHECK(is_pronoun(ExtendedHead{"it"}, it, config));
  Token that{1, "that", "that", "PRON", 2, "nsubj"};
  CHECK(is_pronoun(ExtendedHead{"that"}, that, config));
  Token they_mistagged{1, "they", "they", "NOUN", 2, "nsubj"};
  CHECK(is_pronoun(ExtendedHead{"they"}, they_mistagged, config));
  Token force{2, "forces", "force", "NOUN", 3, "nsubj"};
  CHECK_FALSE(is_pronoun(ExtendedHead{"iraqi_force"}, force, config));
}

TEST_CASE("pronominal fillers are kept but flagged") {
  const Sentence s = one(
      "1\tIt\tit\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tbought\tbuy\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\tshares\tshare\tNOUN\t_\t_\t2\tobj\t_\t_\n");
  const auto inst = extract_instances(s, ExtractionConfig::defaults());
  REQUIRE(inst.size() == 1);
  CHECK(inst[0].components.at("subject") == std::set<std::string>{"it"});
  CHECK(inst[0].is_pronominal("subject", "it"));
  CHECK_FALSE(inst[0].is_pronominal("object", "share"));
}

TEST_CASE("filler normalization") {
  CHECK(normalize_filler_lemma("Secretary-General") == "secretary_general");
  CHECK(normalize_filler_lemma("New York") == "new_york");
  CHECK(normalize_filler_lemma("1990-91") == "1990-91");
  CHECK(normalize_filler_lemma("U.N.") == "u.n.");
}

TEST_CASE("relation table lookup") {
  const auto config = ExtractionConfig::defaults();
  CHECK(config.lookup("nsubj") == RelationKind::subject);
  CHECK(config.lookup("obj") == RelationKind::object);
  CHECK(config.lookup("dobj") == RelationKind::object);
  CHECK(config.lookup("obl:tmod") == RelationKind::preposition);
  CHECK(config.lookup("advmod") == RelationKind::modifier);
  CHECK(config.lookup("punct") == RelationKind::ignore);
  CHECK(relation_kind_from_string("pp") == RelationKind::preposition);
  CHECK_FALSE(relation_kind_from_string("bogus").has_value());
}

TEST_CASE("custom relation table") {
  ExtractionConfig config = ExtractionConfig::defaults();
  config.relations["advmod"] = RelationKind::ignore;
  const Sentence s = one(
      "1\tAcme\tacme\tPROPN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tsold\tsell\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\tquietly\tquietly\tADV\t_\t_\t2\tadvmod\t_\t_\n");
  CHECK(extract_instances(s, ExtractionConfig::defaults())[0].components.count("modifier") == 1);
  CHECK(extract_instances(s, config)[0].components.count("modifier") == 0);
}

TEST_CASE("extraction invariants on synthetic corpora") {
  verbpara::testing::SyntheticSpec spec;
  spec.sentences = 200;
  spec.second_verb_rate = 0.4;
  spec.seed = 11;
  const Corpus c = verbpara::testing::synthetic_corpus(spec);
  const auto config = ExtractionConfig::defaults();
  const auto inst = extract_corpus(c, config, 4);
  CHECK(inst == extract_corpus(c, config, 1));

  std::size_t verbs = 0;
  for (const Sentence& s : c.sentences()) {
    for (const Token& t : s.tokens) verbs += is_verbal(t) ? 1 : 0;
  }
  CHECK(inst.size() == verbs);

  for (const VerbInstance& v : inst) {
    const Sentence& s = *c.find(v.sentence_id);
    for (const auto& [relation, fillers] : v.components) {
      CHECK_FALSE(fillers.empty());
      for (const auto& f : fillers) {
        CHECK_FALSE(f.empty());
        CHECK(f.front() != ' ');
        CHECK(f.back() != ' ');
        for (char ch : f) CHECK_FALSE(std::isupper(static_cast<unsigned char>(ch)));
        // the filler's head is a direct dependent of the verb
        bool found = false;
        for (const Token& t : s.tokens) {
          if (t.head == v.token_index && f.find(normalize_filler_lemma(t.lemma)) != std::string::npos) {
            found = true;
          }
        }
        CHECK(found);
      }
    }
  }
}
