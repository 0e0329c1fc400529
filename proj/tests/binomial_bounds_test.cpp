#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fuzzyeuler/binomial_bounds.hpp"

using namespace fuzzyeuler;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

// Exact rational binomial CDF for p = a/b, the reference the floating
// oracle is validated against.
double rational_binomial_cdf(int n, int a, int b, int k) {
    cpp_int num = 0;
    for (int i = 0; i <= k; ++i) {
        cpp_int c = 1;
        for (int j = 0; j < i; ++j) c = c * (n - j) / (j + 1);
        cpp_int pa = 1, pb = 1;
        for (int j = 0; j < i; ++j) pa *= a;
        for (int j = 0; j < n - i; ++j) pb *= (b - a);
        num += c * pa * pb;
    }
    cpp_int den = 1;
    for (int j = 0; j < n; ++j) den *= b;
    return static_cast<double>(cpp_rational(num, den));
}

// Simpson quadrature of the standard normal density, an oracle for Phi
// that shares no code with erfc.
double phi_by_quadrature(double x) {
    const double lo = -10.0;
    const int steps = 20000;  // even
    const double h = (x - lo) / steps;
    auto dens = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * M_PI); };
    double s = dens(lo) + dens(x);
    for (int i = 1; i < steps; ++i) s += dens(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("relative entropy") {
    for (double p : {0.1, 0.5, 0.9}) CHECK(relative_entropy(p, p) == 0.0);
    // 0.25 ln(1/2) + 0.75 ln(3/2), high-precision reference
    CHECK(relative_entropy(0.25, 0.5) == doctest::Approx(0.13081203594113694).epsilon(1e-14));
    CHECK(relative_entropy(0.0, 0.25) == doctest::Approx(std::log(1.0 / 0.75)).epsilon(1e-14));
    CHECK(relative_entropy(1.0, 0.25) == doctest::Approx(std::log(4.0)).epsilon(1e-14));

    CHECK_THROWS_AS(relative_entropy(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(relative_entropy(0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(relative_entropy(-0.1, 0.5), std::invalid_argument);

    // nonnegative, unique zero at x = p, midpoint convexity on a grid
    const double p = 0.3;
    std::vector<double> h(101);
    for (int i = 0; i <= 100; ++i) {
        double x = i / 100.0;
        h[i] = relative_entropy(x, p);
        CHECK(h[i] >= 0.0);
        if (std::abs(x - p) > 1e-9) CHECK(h[i] > 0.0);
    }
    for (int i = 1; i < 100; ++i) CHECK(h[i] <= (h[i - 1] + h[i + 1]) / 2.0 + 1e-12);
}

TEST_CASE("standard normal CDF") {
    CHECK(std_normal_cdf(0.0) == 0.5);
    CHECK(std_normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-9));

    std::mt19937 rng(4);
    std::uniform_real_distribution<double> xs(-6.0, 6.0);
    for (int i = 0; i < 50; ++i) {
        double x = xs(rng);
        CHECK(std_normal_cdf(x) + std_normal_cdf(-x) == doctest::Approx(1.0).epsilon(1e-14));
    }
    for (double x : {-3.0, -1.0, 0.5, 2.0, 4.0})
        CHECK(std::abs(std_normal_cdf(x) - phi_by_quadrature(x)) <= 1e-12);

    CHECK_THROWS_AS(std_normal_cdf(INFINITY), std::invalid_argument);
}

TEST_CASE("bound sequence values") {
    CHECK(zubkov_serov_c(4, 0.5, 2) == 0.5);
    CHECK(zubkov_serov_c(4, 0.5, 0) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(zubkov_serov_c(4, 0.5, 4) == doctest::Approx(1.0 - 0.0625).epsilon(1e-14));

    double lower = zubkov_serov_c(4, 0.5, 1);
    CHECK(lower == doctest::Approx(0.1530).epsilon(1e-3));
    double exact = binomial_cdf_exact(4, 0.5, 1);
    CHECK(exact == doctest::Approx(0.3125).epsilon(1e-14));
    CHECK(lower <= exact);
    CHECK(exact <= zubkov_serov_c(4, 0.5, 2));

    CHECK_THROWS_AS(zubkov_serov_c(4, 0.5, 5), std::out_of_range);
    CHECK_THROWS_AS(zubkov_serov_c(4, 1.5, 1), std::invalid_argument);

    // nondecreasing in k
    for (int n : {3, 17, 80}) {
        for (double p : {0.05, 0.4, 0.93}) {
            double prev = zubkov_serov_c(n, p, 0);
            for (int k = 1; k <= n; ++k) {
                double c = zubkov_serov_c(n, p, k);
                CHECK(c >= prev - 1e-14);
                CHECK(c >= 0.0);
                CHECK(c <= 1.0);
                prev = c;
            }
        }
    }
}

TEST_CASE("exact CDF oracle") {
    CHECK(binomial_cdf_exact(10, 0.37, 10) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binomial_cdf_exact(12, 0.2, 0) == doctest::Approx(std::pow(0.8, 12)).epsilon(1e-14));

    for (int n : {5, 40}) {
        for (double p : {0.1, 0.6}) {
            double prev = binomial_cdf_exact(n, p, 0);
            for (int k = 1; k <= n; ++k) {
                double c = binomial_cdf_exact(n, p, k);
                CHECK(c >= prev);
                prev = c;
            }
            CHECK(prev == doctest::Approx(1.0).epsilon(1e-13));
        }
    }

    // against exact rational arithmetic for small-denominator p
    for (int n : {1, 7, 33, 64}) {
        for (int b : {2, 3, 4}) {
            for (int k = 0; k <= n; ++k) {
                double exact = rational_binomial_cdf(n, 1, b, k);
                double got = binomial_cdf_exact(n, 1.0 / b, k);
                CHECK(std::abs(got - exact) <= 1e-12 * exact);
            }
        }
    }
}

TEST_CASE("sandwich verification") {
    for (const auto& rec : verify_bounds(4, 0.5, 1e-12)) CHECK(rec.pass);

    // n = 1 degenerate case: both ends tight
    for (double p : {0.2, 0.5, 0.8}) {
        auto recs = verify_bounds(1, p, 1e-12);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].lower == doctest::Approx(1.0 - p).epsilon(1e-14));
        CHECK(recs[0].exact == doctest::Approx(1.0 - p).epsilon(1e-14));
        CHECK(recs[0].upper == doctest::Approx(1.0 - p).epsilon(1e-14));
        CHECK(recs[0].pass);
    }

    // the parameters the tail estimate actually uses
    for (int q : {1, 2, 3})
        for (const auto& rec : verify_bounds(200, 1.0 / (q + 1), 1e-12)) CHECK(rec.pass);
}

TEST_CASE("limit sequence terms") {
    for (int q : {1, 2, 3}) {
        const double left_limit = (q + 1.0) / (2.0 * q);
        const double right_limit = q / (2.0 * (q + 1.0));
        auto [left, right] = proof_limit_terms(1000000, q);
        CHECK(std::abs(left - left_limit) <= 1e-4);
        CHECK(std::abs(right - right_limit) <= 1e-4);

        // error shrinks like 1/n; report the fitted constant
        double prev_err = -1.0;
        for (long long n : {1000LL, 10000LL, 100000LL, 1000000LL}) {
            auto [l, r] = proof_limit_terms(n, q);
            double err = std::max(std::abs(l - left_limit), std::abs(r - right_limit));
            double c = err * static_cast<double>(n);
            INFO("q=", q, " n=", n, " fitted C=", c);
            CHECK(c < 10.0);
            if (prev_err > 0.0) CHECK(prev_err / err > 5.0);
            prev_err = err;
        }
    }
    CHECK_THROWS_AS(proof_limit_terms(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(proof_limit_terms(100, 0), std::invalid_argument);
}
