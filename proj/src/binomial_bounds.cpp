#include "fuzzyeuler/binomial_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzzyeuler {

namespace {

void check_prob(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("probability parameter must lie in (0,1)");
}

}  // namespace

double relative_entropy(double x, double p) {
    check_prob(p);
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("entropy argument must lie in [0,1]");
    double h = 0.0;
    if (x > 0.0) h += x * std::log(x / p);
    if (x < 1.0) h += (1.0 - x) * std::log((1.0 - x) / (1.0 - p));
    return std::max(h, 0.0);
}

double std_normal_cdf(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("normal CDF argument must be finite");
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double zubkov_serov_c(int n, double p, int k) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    check_prob(p);
    if (k < 0 || k > n) throw std::out_of_range("k must lie in [0, n]");
    if (k == 0) return std::exp(static_cast<double>(n) * std::log1p(-p));
    if (k == n) return -std::expm1(static_cast<double>(n) * std::log(p));
    const double x = static_cast<double>(k) / static_cast<double>(n);
    const double s = std::sqrt(2.0 * static_cast<double>(n) * relative_entropy(x, p));
    const double diff = static_cast<double>(k) - static_cast<double>(n) * p;
    const double sgn = (diff > 0.0) - (diff < 0.0);
    return std_normal_cdf(sgn * s);
}

double binomial_cdf_exact(int n, double p, int k) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    check_prob(p);
    if (k < 0 || k > n) throw std::out_of_range("k must lie in [0, n]");
    const long double lp = p;
    const long double ratio = lp / (1.0L - lp);
    // T_0 = (1-p)^n, T_{i+1} = T_i (n-i)/(i+1) p/(1-p); Kahan summation.
    long double term = expl(static_cast<long double>(n) * log1pl(-lp));
    long double sum = 0.0L, comp = 0.0L;
    for (int i = 0;; ++i) {
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (i == k) break;
        term *= ratio * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    }
    return static_cast<double>(std::min(sum, 1.0L));
}

std::vector<BoundCheckRecord> verify_bounds(int n, double p, double slack) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    check_prob(p);
    std::vector<BoundCheckRecord> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        BoundCheckRecord rec;
        rec.n = n;
        rec.p = p;
        rec.k = k;
        rec.lower = zubkov_serov_c(n, p, k);
        rec.exact = binomial_cdf_exact(n, p, k);
        rec.upper = zubkov_serov_c(n, p, k + 1);
        rec.pass = rec.lower <= rec.exact + slack && rec.exact <= rec.upper + slack;
        out.push_back(rec);
    }
    return out;
}

std::pair<double, double> proof_limit_terms(long long n, int q) {
    if (n < 2) throw std::invalid_argument("limit terms need n >= 2");
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    const long double nn = static_cast<long double>(n);
    const long double qq = static_cast<long double>(q);

    const long double left =
        nn * ((nn + 1.0L) * log1pl(1.0L / nn) + (qq * nn - 1.0L) * log1pl(-1.0L / (qq * nn)));

    // (q+1)(n-1)/((q+1)n-1) = 1 - q/((q+1)n-1); (q+1)n/((q+1)n-1) = 1 + 1/((q+1)n-1)
    const long double d = (qq + 1.0L) * nn - 1.0L;
    const long double right =
        nn * ((nn - 1.0L) * log1pl(-qq / d) + qq * nn * log1pl(1.0L / d));

    return {static_cast<double>(left), static_cast<double>(right)};
}

}  // namespace fuzzyeuler
