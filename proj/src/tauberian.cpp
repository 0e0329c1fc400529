#include "fuzzyeuler/tauberian.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzyeuler {

std::string to_string(RateClass c) {
    switch (c) {
        case RateClass::vanishing: return "vanishing";
        case RateClass::bounded: return "bounded";
        case RateClass::unbounded: return "unbounded";
        default: return "inconclusive";
    }
}

GapSeries sequence_gap(const FuzzySequence& seq) {
    if (seq.size() < 2)
        throw std::invalid_argument("gap statistic needs at least two terms");
    GapSeries g;
    g.values.reserve(seq.size() - 1);
    for (std::size_t n = 1; n < seq.size(); ++n)
        g.values.push_back(std::sqrt(static_cast<double>(n)) * metric_d(seq[n - 1], seq[n]));
    return g;
}

GapSeries series_gap(const FuzzySequence& terms) {
    if (terms.empty()) throw std::invalid_argument("gap statistic of empty sequence");
    const FuzzyNumber zero = FuzzyNumber::crisp(0.0);
    GapSeries g;
    g.values.reserve(terms.size() > 1 ? terms.size() - 1 : 0);
    for (std::size_t n = 1; n < terms.size(); ++n)
        g.values.push_back(std::sqrt(static_cast<double>(n)) * metric_d(terms[n], zero));
    return g;
}

RateVerdict classify_rate(const GapSeries& g, double tail_fraction) {
    const std::size_t len = g.values.size();
    if (len < 8) throw std::invalid_argument("too few gap values to classify");
    if (!(tail_fraction > 0.0 && tail_fraction < 1.0))
        throw std::invalid_argument("tail fraction must lie in (0,1)");
    std::size_t tail_len = static_cast<std::size_t>(std::ceil(tail_fraction * len));
    if (tail_len < 2) tail_len = 2;
    const std::size_t tail_start = len - tail_len;

    double head_sup = 0.0, tail_sup = 0.0;
    for (std::size_t i = 0; i < tail_start; ++i) head_sup = std::max(head_sup, g.values[i]);
    for (std::size_t i = tail_start; i < len; ++i) tail_sup = std::max(tail_sup, g.values[i]);

    // Log-log least squares over the positive tail values; g index n = i+1.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t i = tail_start; i < len; ++i) {
        if (!(g.values[i] > 0.0)) continue;
        double x = std::log(static_cast<double>(i + 1));
        double y = std::log(g.values[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    double slope = 0.0;
    const double denom = static_cast<double>(m) * sxx - sx * sx;
    const bool slope_fit = m >= 2 && denom > 0.0;
    if (slope_fit) slope = (static_cast<double>(m) * sxy - sx * sy) / denom;

    RateVerdict v{RateClass::inconclusive, tail_sup, slope};
    // With fewer than two positive tail points no slope exists; decide on the
    // tail/head ratio alone (an all-but-dead tail is a vanishing gap).
    if (tail_sup == 0.0 ||
        (tail_sup < 0.1 * head_sup && (slope <= -0.1 || !slope_fit)))
        v.classification = RateClass::vanishing;
    else if (slope >= 0.1 && tail_sup > head_sup)
        v.classification = RateClass::unbounded;
    else if (std::abs(slope) < 0.1 && std::isfinite(tail_sup))
        v.classification = RateClass::bounded;
    return v;
}

}  // namespace fuzzyeuler
