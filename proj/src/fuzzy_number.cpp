#include "fuzzyeuler/fuzzy_number.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fuzzyeuler {

namespace {

bool all_finite(const std::vector<double>& xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

void check_levels(const std::vector<double>& levels) {
    if (levels.size() < 2)
        throw std::invalid_argument("fuzzy number needs at least levels 0 and 1");
    if (levels.front() != 0.0 || levels.back() != 1.0)
        throw std::invalid_argument("alpha grid must start at 0 and end at 1");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i] > levels[i - 1]))
            throw std::invalid_argument("alpha grid must be strictly increasing");
}

double interp(const std::vector<double>& levels, const std::vector<double>& vals,
              double alpha) {
    if (alpha <= levels.front()) return vals.front();
    if (alpha >= levels.back()) return vals.back();
    auto it = std::upper_bound(levels.begin(), levels.end(), alpha);
    std::size_t hi = static_cast<std::size_t>(it - levels.begin());
    std::size_t lo = hi - 1;
    double t = (alpha - levels[lo]) / (levels[hi] - levels[lo]);
    return vals[lo] + t * (vals[hi] - vals[lo]);
}

#ifndef NDEBUG
// Debug-build recheck of the nesting invariants on every operation output.
void debug_check_nesting(const FuzzyNumber& u) {
    const auto& lo = u.lower();
    const auto& up = u.upper();
    for (std::size_t i = 0; i < lo.size(); ++i) assert(lo[i] <= up[i]);
    for (std::size_t i = 1; i < lo.size(); ++i) {
        assert(lo[i] + kMonotoneSlack >= lo[i - 1]);
        assert(up[i] <= up[i - 1] + kMonotoneSlack);
    }
}
#else
void debug_check_nesting(const FuzzyNumber&) {}
#endif

}  // namespace

std::vector<double> uniform_grid(std::size_t size) {
    if (size < 2) throw std::invalid_argument("grid size must be at least 2");
    std::vector<double> g(size);
    for (std::size_t j = 0; j < size; ++j)
        g[j] = static_cast<double>(j) / static_cast<double>(size - 1);
    g.back() = 1.0;
    return g;
}

std::vector<double> merge_levels(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

FuzzyNumber::FuzzyNumber(std::vector<double> levels, std::vector<double> lower,
                         std::vector<double> upper) {
    check_levels(levels);
    if (lower.size() != levels.size() || upper.size() != levels.size())
        throw std::invalid_argument("endpoint arrays must match the level grid");
    if (!all_finite(lower) || !all_finite(upper))
        throw std::invalid_argument("endpoints must be finite");
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (lower[i] > upper[i] + kMonotoneSlack)
            throw std::invalid_argument("lower endpoint exceeds upper endpoint");
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (lower[i] < lower[i - 1] - kMonotoneSlack)
            throw std::invalid_argument("lower endpoints must be nondecreasing in alpha");
        if (upper[i] > upper[i - 1] + kMonotoneSlack)
            throw std::invalid_argument("upper endpoints must be nonincreasing in alpha");
    }
    // Snap sub-slack violations by monotone projection so rounding noise
    // cannot drift through long chains of operations.
    for (std::size_t i = 1; i < levels.size(); ++i) {
        lower[i] = std::max(lower[i], lower[i - 1]);
        upper[i] = std::min(upper[i], upper[i - 1]);
    }
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (lower[i] > upper[i]) lower[i] = upper[i];
    levels_ = std::move(levels);
    lower_ = std::move(lower);
    upper_ = std::move(upper);
}

FuzzyNumber FuzzyNumber::unchecked(std::vector<double> levels, std::vector<double> lower,
                                   std::vector<double> upper) {
    FuzzyNumber u;
    u.levels_ = std::move(levels);
    u.lower_ = std::move(lower);
    u.upper_ = std::move(upper);
    debug_check_nesting(u);
    return u;
}

FuzzyNumber FuzzyNumber::crisp(double r, std::size_t grid_size) {
    if (!std::isfinite(r)) throw std::invalid_argument("crisp value must be finite");
    auto g = uniform_grid(grid_size);
    std::vector<double> lo(g.size(), r);
    std::vector<double> up(g.size(), r);
    return unchecked(std::move(g), std::move(lo), std::move(up));
}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c, std::size_t grid_size) {
    if (!(a <= b && b <= c))
        throw std::invalid_argument("triangular number needs a <= b <= c");
    auto g = uniform_grid(grid_size);
    std::vector<double> lo(g.size()), up(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        lo[i] = a + g[i] * (b - a);
        up[i] = c - g[i] * (c - b);
    }
    return FuzzyNumber(std::move(g), std::move(lo), std::move(up));
}

double FuzzyNumber::lower_at(double alpha) const { return interp(levels_, lower_, alpha); }
double FuzzyNumber::upper_at(double alpha) const { return interp(levels_, upper_, alpha); }

FuzzyNumber refine_to_grid(const FuzzyNumber& u, std::vector<double> levels) {
    check_levels(levels);
    if (levels == u.levels()) return u;
    std::vector<double> lo(levels.size()), up(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        lo[i] = u.lower_at(levels[i]);
        up[i] = u.upper_at(levels[i]);
    }
    return FuzzyNumber::unchecked(std::move(levels), std::move(lo), std::move(up));
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
    if (!u.same_grid(v)) {
        auto g = merge_levels(u.levels(), v.levels());
        auto ug = refine_to_grid(u, g);
        return add(ug, refine_to_grid(v, std::move(g)));
    }
    std::vector<double> lo(u.size()), up(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        lo[i] = u.lower()[i] + v.lower()[i];
        up[i] = u.upper()[i] + v.upper()[i];
    }
    return FuzzyNumber::unchecked(u.levels(), std::move(lo), std::move(up));
}

FuzzyNumber scale(double k, const FuzzyNumber& u) {
    if (!std::isfinite(k)) throw std::invalid_argument("scale factor must be finite");
    std::vector<double> lo(u.size()), up(u.size());
    if (k >= 0) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            lo[i] = k * u.lower()[i];
            up[i] = k * u.upper()[i];
        }
    } else {
        for (std::size_t i = 0; i < u.size(); ++i) {
            lo[i] = k * u.upper()[i];
            up[i] = k * u.lower()[i];
        }
    }
    return FuzzyNumber::unchecked(u.levels(), std::move(lo), std::move(up));
}

double metric_d(const FuzzyNumber& u, const FuzzyNumber& v) {
    if (!u.same_grid(v)) {
        auto g = merge_levels(u.levels(), v.levels());
        auto ug = refine_to_grid(u, g);
        return metric_d(ug, refine_to_grid(v, std::move(g)));
    }
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d = std::max(d, std::abs(u.lower()[i] - v.lower()[i]));
        d = std::max(d, std::abs(u.upper()[i] - v.upper()[i]));
    }
    return d;
}

FuzzyNumber weighted_sum(std::span<const double> weights, std::span<const FuzzyNumber> us) {
    if (weights.size() != us.size())
        throw std::invalid_argument("weights and terms must have equal length");
    if (us.empty()) throw std::invalid_argument("weighted_sum of no terms");
    for (double w : weights)
        if (!(w >= 0.0)) throw std::invalid_argument("weights must be nonnegative");

    std::vector<double> grid(us[0].levels());
    bool shared = true;
    for (std::size_t i = 1; i < us.size(); ++i)
        if (!us[i].same_grid(us[0])) {
            shared = false;
            grid = merge_levels(grid, us[i].levels());
        }

    std::vector<long double> lo(grid.size(), 0.0L), up(grid.size(), 0.0L);
    for (std::size_t i = 0; i < us.size(); ++i) {
        const FuzzyNumber& t = shared ? us[i] : refine_to_grid(us[i], grid);
        const long double w = weights[i];
        for (std::size_t j = 0; j < grid.size(); ++j) {
            lo[j] += w * t.lower()[j];
            up[j] += w * t.upper()[j];
        }
    }
    std::vector<double> lo_d(grid.size()), up_d(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        lo_d[j] = static_cast<double>(lo[j]);
        up_d[j] = static_cast<double>(up[j]);
    }
    return FuzzyNumber(std::move(grid), std::move(lo_d), std::move(up_d));
}

}  // namespace fuzzyeuler
