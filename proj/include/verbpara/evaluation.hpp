#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "verbpara/scoring.hpp"

namespace verbpara {

enum class Verdict { correct, incorrect };

struct Judgment {
  TypePair pair;
  Verdict verdict = Verdict::incorrect;
  std::string judge;
};

// Reads `v1<TAB>v2<TAB>{+,-}<TAB>judge` lines. Blank and '#' lines are
// skipped. Throws ParseError on malformed lines or a repeated (pair, judge).
std::vector<Judgment> read_judgments(std::istream& in, std::string_view source);

using VerdictMap = std::map<TypePair, Verdict>;

// Collapses judgments to one verdict per pair, optionally for a single judge.
// Throws InputError when two judges disagree on a pair.
VerdictMap verdicts_by_pair(std::span<const Judgment> judgments,
                            const std::optional<std::string>& judge = std::nullopt);

struct PrPoint {
  std::size_t rank_cutoff = 0;
  double precision = 0.0;
  std::optional<double> recall;  // absent when nothing judged correct
};

struct PrCurve {
  std::vector<PrPoint> points;
  std::size_t unjudged = 0;  // ranked pairs without a verdict, left out
};

PrCurve precision_recall_curve(std::span<const TypePair> ranked, const VerdictMap& verdicts);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

struct PrecisionEstimate {
  std::size_t n = 0;
  std::size_t correct = 0;
  double precision = 0.0;
  Interval interval;
  std::string method = "wald";
};

// Wald normal-approximation interval, clipped to [0, 1].
PrecisionEstimate precision_with_ci(std::span<const Verdict> judged, double alpha = 0.05);

// Two-sided normal critical value z_{1-alpha/2}.
double normal_critical_value(double alpha);

struct KappaResult {
  double kappa = 0.0;
  double observed = 0.0;  // p_o
  double expected = 0.0;  // p_e
  // table[a][b]: judge A verdict a, judge B verdict b; index 0 = correct.
  std::array<std::array<std::size_t, 2>, 2> table{};
  std::size_t n = 0;
};

// Throws InputError if the judged pair sets differ or are empty.
KappaResult cohen_kappa(const VerdictMap& a, const VerdictMap& b);

// Kappa from a 2x2 contingency table.
KappaResult cohen_kappa(const std::array<std::array<std::size_t, 2>, 2>& table);

}  // namespace verbpara
