#include "verbpara/evaluation.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <set>
#include <sstream>

#include "verbpara/error.hpp"

namespace verbpara {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '\t')) out.push_back(field);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}

std::size_t index_of(Verdict v) { return v == Verdict::correct ? 0 : 1; }

}  // namespace

std::vector<Judgment> read_judgments(std::istream& in, std::string_view source) {
  std::vector<Judgment> out;
  std::set<std::pair<TypePair, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  const std::string src(source);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw ParseError(src, line_no, "expected v1, v2, verdict and judge separated by tabs");
    }
    Judgment j;
    try {
      j.pair = TypePair::canonical(fields[0], fields[1]);
    } catch (const InputError& e) {
      throw ParseError(src, line_no, e.what());
    }
    if (fields[2] == "+") {
      j.verdict = Verdict::correct;
    } else if (fields[2] == "-") {
      j.verdict = Verdict::incorrect;
    } else {
      throw ParseError(src, line_no, "verdict must be '+' or '-', got '" + fields[2] + "'");
    }
    j.judge = fields[3];
    if (!seen.emplace(j.pair, j.judge).second) {
      throw ParseError(src, line_no,
                       "second verdict for <" + j.pair.first + ", " + j.pair.second + "> by judge '" +
                           j.judge + "'");
    }
    out.push_back(std::move(j));
  }
  return out;
}

VerdictMap verdicts_by_pair(std::span<const Judgment> judgments, const std::optional<std::string>& judge) {
  VerdictMap out;
  for (const Judgment& j : judgments) {
    if (judge && j.judge != *judge) continue;
    auto [it, inserted] = out.emplace(j.pair, j.verdict);
    if (!inserted && it->second != j.verdict) {
      throw InputError("judges disagree on <" + j.pair.first + ", " + j.pair.second +
                       ">; select one judge");
    }
  }
  return out;
}

PrCurve precision_recall_curve(std::span<const TypePair> ranked, const VerdictMap& verdicts) {
  PrCurve curve;
  std::vector<Verdict> judged;
  for (const TypePair& p : ranked) {
    auto it = verdicts.find(p);
    if (it == verdicts.end()) {
      ++curve.unjudged;
      continue;
    }
    judged.push_back(it->second);
  }
  const auto total_correct =
      static_cast<std::size_t>(std::count(judged.begin(), judged.end(), Verdict::correct));
  std::size_t correct = 0;
  for (std::size_t k = 1; k <= judged.size(); ++k) {
    if (judged[k - 1] == Verdict::correct) ++correct;
    PrPoint point;
    point.rank_cutoff = k;
    point.precision = static_cast<double>(correct) / static_cast<double>(k);
    if (total_correct > 0) {
      point.recall = static_cast<double>(correct) / static_cast<double>(total_correct);
    }
    curve.points.push_back(point);
  }
  return curve;
}

double normal_critical_value(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - alpha / 2.0);
}

PrecisionEstimate precision_with_ci(std::span<const Verdict> judged, double alpha) {
  if (judged.empty()) throw InputError("precision of an empty judged set is undefined");
  const double z = normal_critical_value(alpha);
  PrecisionEstimate est;
  est.n = judged.size();
  est.correct = static_cast<std::size_t>(std::count(judged.begin(), judged.end(), Verdict::correct));
  const double n = static_cast<double>(est.n);
  const double p = static_cast<double>(est.correct) / n;
  const double half_width = z * std::sqrt(p * (1.0 - p) / n);
  est.precision = p;
  est.interval = Interval{std::max(0.0, p - half_width), std::min(1.0, p + half_width)};
  return est;
}

KappaResult cohen_kappa(const std::array<std::array<std::size_t, 2>, 2>& table) {
  KappaResult r;
  r.table = table;
  r.n = table[0][0] + table[0][1] + table[1][0] + table[1][1];
  if (r.n == 0) throw InputError("kappa needs at least one jointly judged pair");
  const double n = static_cast<double>(r.n);
  r.observed = static_cast<double>(table[0][0] + table[1][1]) / n;
  const double a_correct = static_cast<double>(table[0][0] + table[0][1]);
  const double b_correct = static_cast<double>(table[0][0] + table[1][0]);
  r.expected = (a_correct * b_correct + (n - a_correct) * (n - b_correct)) / (n * n);
  if (r.expected == 1.0) {
    if (r.observed != 1.0) throw ConsistencyError("chance agreement is 1 but observed agreement is not");
    r.kappa = 1.0;
  } else {
    r.kappa = (r.observed - r.expected) / (1.0 - r.expected);
  }
  return r;
}

KappaResult cohen_kappa(const VerdictMap& a, const VerdictMap& b) {
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;
  for (const auto& [pair, v] : a) {
    if (b.count(pair) == 0) only_a.push_back("<" + pair.first + ", " + pair.second + ">");
  }
  for (const auto& [pair, v] : b) {
    if (a.count(pair) == 0) only_b.push_back("<" + pair.first + ", " + pair.second + ">");
  }
  if (!only_a.empty() || !only_b.empty()) {
    std::string msg = "judged pair sets differ;";
    auto list = [&](const char* who, const std::vector<std::string>& pairs) {
      if (pairs.empty()) return;
      msg += std::string(" only in ") + who + ":";
      for (const auto& p : pairs) msg += " " + p;
      msg += ";";
    };
    list("first", only_a);
    list("second", only_b);
    msg.pop_back();
    throw InputError(msg);
  }
  std::array<std::array<std::size_t, 2>, 2> table{};
  for (const auto& [pair, v] : a) ++table[index_of(v)][index_of(b.at(pair))];
  return cohen_kappa(table);
}

}  // namespace verbpara
