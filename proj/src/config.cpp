#include "verbpara/config.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <vector>

#include "verbpara/error.hpp"

namespace verbpara {

namespace pt = boost::property_tree;

namespace {

template <class T>
T get_value(const pt::ptree& section, const std::string& key, T fallback, const std::string& source) {
  try {
    if (!section.get_child_optional(key)) return fallback;
    return section.get<T>(key);
  } catch (const pt::ptree_error& e) {
    throw InputError(source + ": invalid value for '" + key + "': " + e.what());
  }
}

}  // namespace

void PipelineConfig::validate() const {
  if (!(overlap_threshold >= 0.0)) throw InputError("overlap_threshold must be >= 0");
  if (lp_min_freq < 1) throw InputError("lp_min_freq must be >= 1");
}

PipelineConfig read_config(std::istream& in, const std::string& source) {
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw InputError(source + ": " + e.what());
  }

  PipelineConfig config;
  if (auto relations = tree.get_child_optional("relations")) {
    for (const auto& [deprel, node] : *relations) {
      const auto value = boost::algorithm::trim_copy(node.data());
      const auto kind = relation_kind_from_string(value);
      if (!kind) {
        throw InputError(source + ": relation for '" + deprel + "' must be subject, object, pp, " +
                         "modifier or ignore, got '" + value + "'");
      }
      config.extraction.relations[deprel] = *kind;
    }
  }
  if (auto pronouns = tree.get_child_optional("pronouns")) {
    if (auto list = pronouns->get_optional<std::string>("list")) {
      std::vector<std::string> words;
      boost::algorithm::split(words, *list, boost::is_any_of(" ,\t"), boost::token_compress_on);
      config.extraction.pronouns.clear();
      for (auto& w : words) {
        if (!w.empty()) config.extraction.pronouns.insert(to_lower_ascii(w));
      }
    }
  }
  if (auto pipeline = tree.get_child_optional("pipeline")) {
    config.overlap_threshold =
        get_value(*pipeline, "overlap_threshold", config.overlap_threshold, source);
    const auto mle = get_value<std::string>(*pipeline, "mle", std::string(to_string(config.mle_mode)), source);
    const auto mode = mle_mode_from_string(mle);
    if (!mode) throw InputError(source + ": mle must be per-instance or per-relation, got '" + mle + "'");
    config.mle_mode = *mode;
    config.lp_min_freq = get_value(*pipeline, "lp_min_freq", config.lp_min_freq, source);
    config.seed = get_value(*pipeline, "seed", config.seed, source);
    config.skip_punct = get_value(*pipeline, "skip_punct", config.skip_punct, source);
    config.report_top_k = get_value(*pipeline, "report_top_k", config.report_top_k, source);
  }
  config.validate();
  return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path.string() + "'");
  return read_config(in, path.string());
}

}  // namespace verbpara
