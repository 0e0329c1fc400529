#include "fuzzyeuler/euler.hpp"

#include <cmath>
#include <stdexcept>

namespace fuzzyeuler {

EulerParams::EulerParams(double p_value) : p(p_value) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("transform parameter p must be positive and finite");
    q = static_cast<int>(std::ceil(p));
    r = (static_cast<double>(q) - p) / (p + 1.0);
}

EulerWeights euler_weights(std::size_t n, double p) {
    if (!(p >= 0.0) || !std::isfinite(p))
        throw std::invalid_argument("transform parameter p must be nonnegative and finite");
    EulerWeights out{n, p, std::vector<double>(n + 1, 0.0)};
    if (p == 0.0 || n == 0) {
        // Only k = n survives (0^0 := 1).
        out.w[n] = 1.0;
        return out;
    }
    // Anchor at the largest weight (k* near n/(p+1)) and recur outward with
    // w_{k+1} = w_k (n-k)/((k+1) p). All factors positive, no cancellation,
    // and no underflow of the anchor the way starting at k = 0 would for
    // large n and small p.
    const long double lp = static_cast<long double>(p);
    const long double ln = static_cast<long double>(n);
    std::size_t k0 = static_cast<std::size_t>(ln / (lp + 1.0L));
    if (k0 > n) k0 = n;
    const long double log_w0 = lgammal(ln + 1.0L) - lgammal(static_cast<long double>(k0) + 1.0L) -
                               lgammal(ln - static_cast<long double>(k0) + 1.0L) +
                               (ln - static_cast<long double>(k0)) * logl(lp) -
                               ln * logl(lp + 1.0L);
    long double w = expl(log_w0);
    out.w[k0] = static_cast<double>(w);
    long double up = w;
    for (std::size_t k = k0; k < n; ++k) {
        up *= static_cast<long double>(n - k) / (static_cast<long double>(k + 1) * lp);
        out.w[k + 1] = static_cast<double>(up);
    }
    long double down = w;
    for (std::size_t k = k0; k > 0; --k) {
        down *= static_cast<long double>(k) * lp / static_cast<long double>(n - k + 1);
        out.w[k - 1] = static_cast<double>(down);
    }
    return out;
}

FuzzyNumber euler_mean(const FuzzySequence& seq, std::size_t n, double p) {
    if (n >= seq.size())
        throw std::out_of_range("sequence prefix too short for requested mean index");
    auto weights = euler_weights(n, p);
    return weighted_sum(weights.w, std::span<const FuzzyNumber>(seq.data(), n + 1));
}

FuzzySequence euler_transform(const FuzzySequence& seq, std::size_t upto, double p) {
    if (upto >= seq.size())
        throw std::out_of_range("sequence prefix too short for requested transform length");
    FuzzySequence out;
    out.reserve(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) out.push_back(euler_mean(seq, n, p));
    return out;
}

std::pair<FuzzySequence, FuzzySequence> ceiling_composition(const FuzzySequence& seq,
                                                            std::size_t upto,
                                                            const EulerParams& params) {
    FuzzySequence inner = euler_transform(seq, upto, params.p);
    FuzzySequence composed = euler_transform(inner, upto, params.r);
    FuzzySequence direct = euler_transform(seq, upto, static_cast<double>(params.q));
    return {std::move(composed), std::move(direct)};
}

FuzzySequence partial_sums(const FuzzySequence& terms) {
    if (terms.empty()) throw std::invalid_argument("partial sums of empty sequence");
    FuzzySequence out;
    out.reserve(terms.size());
    out.push_back(terms[0]);
    for (std::size_t n = 1; n < terms.size(); ++n) out.push_back(add(out.back(), terms[n]));
    return out;
}

std::optional<FuzzyNumber> detect_limit(const FuzzySequence& seq, double tol,
                                        std::size_t window) {
    if (window < 2) throw std::invalid_argument("detection window must be at least 2");
    if (seq.size() < window) throw std::invalid_argument("detection window exceeds sequence length");
    std::size_t start = seq.size() - window;
    for (std::size_t i = start; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (metric_d(seq[i], seq[j]) > tol) return std::nullopt;
    return seq.back();
}

}  // namespace fuzzyeuler
