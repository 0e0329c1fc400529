#ifndef FUZZYEULER_BINOMIAL_BOUNDS_HPP
#define FUZZYEULER_BINOMIAL_BOUNDS_HPP

#include <utility>
#include <vector>

namespace fuzzyeuler {

/// Bernoulli relative entropy H(x,p) = x ln(x/p) + (1-x) ln((1-x)/(1-p)),
/// with the 0 ln 0 = 0 convention at x in {0,1}. Nonnegative, zero iff x = p.
double relative_entropy(double x, double p);

/// Standard normal CDF via erfc; absolute error well below 1e-14.
double std_normal_cdf(double x);

/// The two-sided normal-approximation bound sequence C_{n,p}(k):
/// (1-p)^n at k = 0, 1 - p^n at k = n, and Phi(sgn(k - np) sqrt(2n H(k/n, p)))
/// for 0 < k < n. Nondecreasing in k.
double zubkov_serov_c(int n, double p, int k);

/// Exact binomial CDF P{X_{n,p} <= k} = sum_{i<=k} C(n,i) p^i (1-p)^(n-i),
/// term recurrence and compensated summation in extended precision.
/// Relative error <= 1e-12 for n <= 10^4. Independent oracle for verify_bounds.
double binomial_cdf_exact(int n, double p, int k);

/// One sandwich check C(k) <= CDF(k) <= C(k+1) at a given (n, p, k).
struct BoundCheckRecord {
    int n;
    double p;
    int k;
    double lower;
    double exact;
    double upper;
    bool pass;
};

/// Sandwich checks for every k in {0, ..., n-1}.
std::vector<BoundCheckRecord> verify_bounds(int n, double p, double slack = 1e-12);

/// Terms of the two limit sequences appearing in the tail estimate:
///   first  = n ln( ((n+1)/n)^(n+1) ((qn-1)/(qn))^(qn-1) )        -> (q+1)/(2q)
///   second = n ln( ((q+1)(n-1)/((q+1)n-1))^(n-1) ((q+1)n/((q+1)n-1))^(qn) )
///                                                                -> q/(2(q+1))
/// Evaluated with log1p to keep full accuracy at n ~ 10^6. Requires n >= 2.
std::pair<double, double> proof_limit_terms(long long n, int q);

}  // namespace fuzzyeuler

#endif
