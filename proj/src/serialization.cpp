#include "verbpara/serialization.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "verbpara/error.hpp"

namespace verbpara {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

template <class Fn>
void for_each_json_line(std::istream& in, std::string_view source, Fn&& fn) {
  const std::string src(source);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError(src, line_no, e.what());
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(src, line_no, e.what());
    }
  }
}

ordered_json component_map_json(const ComponentMap& map) {
  ordered_json out = ordered_json::object();
  for (const auto& [relation, fillers] : map) {
    ordered_json list = ordered_json::array();
    for (const auto& f : fillers) list.push_back(f);
    out[relation] = std::move(list);
  }
  return out;
}

ComponentMap component_map_from(const json& j) {
  ComponentMap out;
  for (const auto& [relation, fillers] : j.items()) {
    auto& set = out[relation];
    for (const auto& f : fillers) set.insert(f.get<std::string>());
    if (set.empty()) throw InputError("relation '" + relation + "' has no fillers");
  }
  return out;
}

ordered_json ref_json(const InstanceRef& ref) {
  ordered_json j;
  j["sentence_id"] = ref.sentence_id;
  j["verb"] = ref.verb;
  j["token_index"] = ref.token_index;
  return j;
}

InstanceRef ref_from(const json& j) {
  return InstanceRef{j.at("sentence_id").get<std::string>(), j.at("verb").get<std::string>(),
                     j.value("token_index", 0)};
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <class T>
T parse_number(const std::string& field, const std::string& src, std::size_t line_no, const char* what) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(src, line_no, std::string("invalid ") + what + " '" + field + "'");
  }
  return value;
}

// Calls fn(fields, line_no) for each data row of a TSV, skipping '#'
// comments, blank lines and a header whose first field is `header`.
template <class Fn>
void for_each_tsv_row(std::istream& in, std::string_view source, std::string_view header, Fn&& fn) {
  const std::string src(source);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (!header.empty() && fields.front() == header) continue;
    fn(fields, src, line_no);
  }
}

TypePair pair_from_fields(const std::string& a, const std::string& b, const std::string& src,
                          std::size_t line_no) {
  try {
    return TypePair::canonical(a, b);
  } catch (const InputError& e) {
    throw ParseError(src, line_no, e.what());
  }
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
  return std::string(buf.data(), ptr);
}

void write_instances(std::ostream& out, std::span<const VerbInstance> instances) {
  for (const VerbInstance& inst : instances) {
    ordered_json j;
    j["sentence_id"] = inst.sentence_id;
    j["verb"] = inst.verb;
    j["token_index"] = inst.token_index;
    j["components"] = component_map_json(inst.components);
    if (!inst.pronominal.empty()) j["pronominal"] = component_map_json(inst.pronominal);
    out << j.dump() << '\n';
  }
}

std::vector<VerbInstance> read_instances(std::istream& in, std::string_view source) {
  std::vector<VerbInstance> out;
  for_each_json_line(in, source, [&](const json& j) {
    VerbInstance inst;
    inst.sentence_id = j.at("sentence_id").get<std::string>();
    inst.verb = j.at("verb").get<std::string>();
    inst.token_index = j.at("token_index").get<int>();
    inst.components = component_map_from(j.at("components"));
    if (j.contains("pronominal")) inst.pronominal = component_map_from(j.at("pronominal"));
    out.push_back(std::move(inst));
  });
  return out;
}

void write_pairs(std::ostream& out, std::span<const InstancePair> pairs) {
  for (const InstancePair& p : pairs) {
    ordered_json j;
    j["key"] = ordered_json{{"subject", p.key.subject}, {"object", p.key.object}};
    j["left"] = ref_json(p.left);
    j["right"] = ref_json(p.right);
    j["overlap_score"] = p.overlap_score;
    ordered_json shared = ordered_json::array();
    for (const Component& c : p.shared_components) {
      shared.push_back(ordered_json{{"relation", c.relation}, {"filler", c.filler}});
    }
    j["shared_components"] = std::move(shared);
    out << j.dump() << '\n';
  }
}

std::vector<InstancePair> read_pairs(std::istream& in, std::string_view source) {
  std::vector<InstancePair> out;
  for_each_json_line(in, source, [&](const json& j) {
    InstancePair p;
    p.key = PairKey{j.at("key").at("subject").get<std::string>(),
                    j.at("key").at("object").get<std::string>()};
    p.left = ref_from(j.at("left"));
    p.right = ref_from(j.at("right"));
    if (p.left.verb == p.right.verb) throw InputError("pair joins two instances of one verb");
    p.overlap_score = j.at("overlap_score").get<double>();
    for (const auto& c : j.at("shared_components")) {
      p.shared_components.push_back(
          Component{c.at("relation").get<std::string>(), c.at("filler").get<std::string>()});
    }
    out.push_back(std::move(p));
  });
  return out;
}

void write_stats(std::ostream& out, const CorpusStats& stats) {
  ordered_json j;
  j["log_base"] = PipelineConfig::log_base;
  j["token_count"] = stats.token_count;
  j["verb_instance_count"] = stats.verb_instance_count;
  ordered_json tokens = ordered_json::object();
  for (const auto& [lemma, n] : stats.token_freq) tokens[lemma] = n;
  j["token_freq"] = std::move(tokens);
  ordered_json verbs = ordered_json::object();
  for (const auto& [verb, n] : stats.verb_freq) verbs[verb] = n;
  j["verb_freq"] = std::move(verbs);
  ordered_json components = ordered_json::array();
  for (const auto& [c, n] : stats.component_freq) components.push_back(ordered_json{c.relation, c.filler, n});
  j["component_freq"] = std::move(components);
  out << j.dump(1) << '\n';
}

CorpusStats read_stats(std::istream& in, std::string_view source) {
  const std::string src(source);
  CorpusStats stats;
  try {
    const json j = json::parse(in);
    stats.token_count = j.at("token_count").get<std::uint64_t>();
    stats.verb_instance_count = j.at("verb_instance_count").get<std::uint64_t>();
    for (const auto& [lemma, n] : j.at("token_freq").items()) stats.token_freq[lemma] = n.get<std::uint64_t>();
    for (const auto& [verb, n] : j.at("verb_freq").items()) stats.verb_freq[verb] = n.get<std::uint64_t>();
    for (const auto& entry : j.at("component_freq")) {
      Component c{entry.at(0).get<std::string>(), entry.at(1).get<std::string>()};
      const auto n = entry.at(2).get<std::uint64_t>();
      stats.component_freq[c] = n;
      stats.relation_total[c.relation] += n;
    }
  } catch (const json::exception& e) {
    throw InputError(src + ": " + e.what());
  }
  return stats;
}

void write_score_tsv(std::ostream& out, std::span<const TypePairScore> ranked,
                     const PipelineConfig& config) {
  out << "# log_base=" << PipelineConfig::log_base
      << "\toverlap_threshold=" << format_number(config.overlap_threshold)
      << "\tmle=" << to_string(config.mle_mode) << '\n';
  out << "rank\tv1\tv2\tscore\tsupport\tevidence\n";
  std::size_t rank = 0;
  for (const TypePairScore& s : ranked) {
    out << ++rank << '\t' << s.pair.first << '\t' << s.pair.second << '\t' << format_fixed(s.score)
        << '\t' << s.support << '\t';
    for (std::size_t i = 0; i < s.evidence.size(); ++i) {
      if (i > 0) out << ';';
      out << s.evidence[i].first << '|' << s.evidence[i].second;
    }
    out << '\n';
  }
}

std::vector<ScoreRow> read_score_tsv(std::istream& in, std::string_view source) {
  std::vector<ScoreRow> out;
  for_each_tsv_row(in, source, "rank", [&](const std::vector<std::string>& f, const std::string& src,
                                           std::size_t line_no) {
    if (f.size() != 6) throw ParseError(src, line_no, "expected 6 columns in score TSV");
    ScoreRow row;
    row.rank = parse_number<std::size_t>(f[0], src, line_no, "rank");
    row.pair = pair_from_fields(f[1], f[2], src, line_no);
    row.score = parse_number<double>(f[3], src, line_no, "score");
    row.support = parse_number<std::size_t>(f[4], src, line_no, "support");
    if (!f[5].empty()) {
      for (const auto& item : split(f[5], ';')) {
        const auto ids = split(item, '|');
        if (ids.size() != 2) throw ParseError(src, line_no, "evidence entry '" + item + "' is not 'left|right'");
        row.evidence.emplace_back(ids[0], ids[1]);
      }
    }
    out.push_back(std::move(row));
  });
  return out;
}

void write_lp_tsv(std::ostream& out, std::span<const LpScore> ranked, const PipelineConfig& config) {
  out << "# log_base=" << PipelineConfig::log_base << "\tlp_min_freq=" << config.lp_min_freq << '\n';
  out << "rank\tv1\tv2\tsubject_sim\tobject_sim\tscore\n";
  std::size_t rank = 0;
  for (const LpScore& s : ranked) {
    out << ++rank << '\t' << s.pair.first << '\t' << s.pair.second << '\t' << format_fixed(s.subject_sim)
        << '\t' << format_fixed(s.object_sim) << '\t' << format_fixed(s.score) << '\n';
  }
}

std::vector<TypePair> read_ranked_pairs(std::istream& in, std::string_view source) {
  std::vector<TypePair> out;
  for_each_tsv_row(in, source, "rank", [&](const std::vector<std::string>& f, const std::string& src,
                                           std::size_t line_no) {
    if (f.size() < 3) throw ParseError(src, line_no, "expected rank, v1 and v2 columns");
    out.push_back(pair_from_fields(f[1], f[2], src, line_no));
  });
  return out;
}

std::vector<TypePair> read_pair_list(std::istream& in, std::string_view source) {
  std::vector<TypePair> out;
  for_each_tsv_row(in, source, "v1", [&](const std::vector<std::string>& f, const std::string& src,
                                         std::size_t line_no) {
    if (f.size() < 2) throw ParseError(src, line_no, "expected v1 and v2 columns");
    out.push_back(pair_from_fields(f[0], f[1], src, line_no));
  });
  return out;
}

}  // namespace verbpara
