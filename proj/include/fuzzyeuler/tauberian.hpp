#ifndef FUZZYEULER_TAUBERIAN_HPP
#define FUZZYEULER_TAUBERIAN_HPP

#include <string>
#include <vector>

#include "fuzzyeuler/fuzzy_number.hpp"

namespace fuzzyeuler {

/// Gap statistic values g_n indexed from n = 1: values[i] holds g_{i+1}.
struct GapSeries {
    std::vector<double> values;
};

enum class RateClass { vanishing, bounded, unbounded, inconclusive };

std::string to_string(RateClass c);

/// Finite-prefix verdict on a gap statistic. slope_estimate is the log-log
/// least-squares slope over the trailing tail of the series.
struct RateVerdict {
    RateClass classification;
    double tail_sup;
    double slope_estimate;
};

/// g_n = sqrt(n) * D(u_{n-1}, u_n) for n = 1..len-1.
GapSeries sequence_gap(const FuzzySequence& seq);

/// g_n = sqrt(n) * D(u_n, 0̄) for n = 1..len-1. For crisp terms this is
/// Knopp's o(1/sqrt(n)) condition on the series terms.
GapSeries series_gap(const FuzzySequence& terms);

/// Classify the observed decay/growth of a gap series on its trailing
/// tail_fraction. Thresholds (heuristic, finite-prefix only):
///   vanishing   tail_sup < 0.1 * head_sup and slope <= -0.1 (or tail_sup = 0)
///   unbounded   slope >= +0.1 and tail_sup > head_sup
///   bounded     |slope| < 0.1 and tail_sup finite
///   inconclusive otherwise
RateVerdict classify_rate(const GapSeries& g, double tail_fraction = 0.25);

}  // namespace fuzzyeuler

#endif
