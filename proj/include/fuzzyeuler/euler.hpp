#ifndef FUZZYEULER_EULER_HPP
#define FUZZYEULER_EULER_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fuzzyeuler/fuzzy_number.hpp"

namespace fuzzyeuler {

/// Method parameter p > 0 together with the derived quantities used by the
/// ceiling-composition identity: q = ceil(p) and r = (q - p)/(p + 1) in [0,1).
struct EulerParams {
    double p;
    int q;
    double r;

    explicit EulerParams(double p_value);
};

/// Row of transform weights w_k = C(n,k) p^(n-k) / (p+1)^n, k = 0..n.
/// All nonnegative, summing to 1 within 1e-12.
struct EulerWeights {
    std::size_t n;
    double p;
    std::vector<double> w;
};

/// Weights for index n and parameter p >= 0. p = 0 degenerates to the
/// identity transform (delta at k = n, with 0^0 := 1). Computed by a
/// positive-factor recurrence in extended precision, stable to n ~ 10^4.
EulerWeights euler_weights(std::size_t n, double p);

/// The n-th transform mean of the sequence prefix: weighted sum of the
/// first n+1 terms with euler_weights(n, p).
FuzzyNumber euler_mean(const FuzzySequence& seq, std::size_t n, double p);

/// Means for indices 0..upto as a sequence.
FuzzySequence euler_transform(const FuzzySequence& seq, std::size_t upto, double p);

/// Both sides of the composition identity: first the r-transform applied to
/// the p-transform, second the direct ceil(p)-transform. The identity says
/// the two agree termwise.
std::pair<FuzzySequence, FuzzySequence> ceiling_composition(const FuzzySequence& seq,
                                                            std::size_t upto,
                                                            const EulerParams& params);

/// Partial sums s_n = u_0 + ... + u_n.
FuzzySequence partial_sums(const FuzzySequence& terms);

/// Trailing-window Cauchy heuristic: if the max pairwise distance over the
/// last `window` terms is <= tol, returns the final term as the estimated
/// limit, otherwise nothing. window must be >= 2 and fit in the sequence.
std::optional<FuzzyNumber> detect_limit(const FuzzySequence& seq, double tol = 1e-8,
                                        std::size_t window = 10);

}  // namespace fuzzyeuler

#endif
