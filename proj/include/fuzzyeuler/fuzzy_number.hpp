#ifndef FUZZYEULER_FUZZY_NUMBER_HPP
#define FUZZYEULER_FUZZY_NUMBER_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace fuzzyeuler {

/// Default number of alpha levels: {0, 0.01, ..., 1}.
inline constexpr std::size_t kDefaultGridSize = 101;

/// Absolute slack allowed before an endpoint monotonicity violation is an error.
inline constexpr double kMonotoneSlack = 1e-12;

/// Uniform alpha grid {j/(size-1)} with size >= 2; first level 0, last 1.
std::vector<double> uniform_grid(std::size_t size);

/// Sorted union of two level grids (exact-equality dedup).
std::vector<double> merge_levels(std::span<const double> a, std::span<const double> b);

/// A fuzzy number sampled on an alpha grid.
///
/// Endpoint functions alpha -> [lower(alpha), upper(alpha)] are piecewise
/// linear between the sampled levels. Invariants: levels strictly increasing
/// from 0 to 1, lower nondecreasing, upper nonincreasing, lower <= upper,
/// all values finite. Instances are immutable values.
class FuzzyNumber {
public:
    /// Validating constructor. Monotonicity violations within kMonotoneSlack
    /// are snapped by a monotone projection; larger ones throw.
    FuzzyNumber(std::vector<double> levels, std::vector<double> lower,
                std::vector<double> upper);

    /// Skips validation; caller guarantees the invariants. Used on hot paths
    /// where the inputs are produced by operations that preserve them.
    static FuzzyNumber unchecked(std::vector<double> levels, std::vector<double> lower,
                                 std::vector<double> upper);

    /// The crisp embedding of a real: lower(alpha) = upper(alpha) = r.
    static FuzzyNumber crisp(double r, std::size_t grid_size = kDefaultGridSize);

    /// Triangular number with support [a, c] and peak b, sampled on the
    /// uniform grid: level cut [a + alpha*(b-a), c - alpha*(c-b)].
    static FuzzyNumber triangular(double a, double b, double c,
                                  std::size_t grid_size = kDefaultGridSize);

    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    std::size_t size() const { return levels_.size(); }

    /// Piecewise-linear endpoint evaluation at an arbitrary alpha in [0,1].
    double lower_at(double alpha) const;
    double upper_at(double alpha) const;

    bool same_grid(const FuzzyNumber& other) const { return levels_ == other.levels_; }

private:
    FuzzyNumber() = default;
    std::vector<double> levels_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// A finite prefix of a sequence of fuzzy numbers, indexed from 0.
using FuzzySequence = std::vector<FuzzyNumber>;

/// Level-set addition: [u+v]_a = [u]_a + [v]_a. Operands on different grids
/// are resampled to the merged grid first.
FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);

/// Scalar multiplication [ku]_a = k[u]_a with interval image semantics:
/// for k < 0 the scaled endpoints swap roles.
FuzzyNumber scale(double k, const FuzzyNumber& u);

/// Supremum metric D(u,v) = sup_a max(|u-_a - v-_a|, |u+_a - v+_a|).
/// On the shared grid the sup of the piecewise-linear difference is attained
/// at a node, so the value is exact.
double metric_d(const FuzzyNumber& u, const FuzzyNumber& v);

/// Sum of w[i] * us[i] for nonnegative weights, computed endpoint-wise in
/// extended precision. Nonnegativity keeps level-set distributivity exact;
/// a negative weight throws.
FuzzyNumber weighted_sum(std::span<const double> weights, std::span<const FuzzyNumber> us);

/// Resample onto a target grid (must be sorted, start at 0 and end at 1) by
/// piecewise-linear interpolation. Exact when the target contains the source.
FuzzyNumber refine_to_grid(const FuzzyNumber& u, std::vector<double> levels);

}  // namespace fuzzyeuler

#endif
