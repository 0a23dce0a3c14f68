#include <cmath>
#include <vector>

#include <doctest.h>

#include "astopo/errors.hpp"
#include "astopo/powerlaw.hpp"
#include "astopo/synth.hpp"

using astopo::BoundedPowerLaw;
using astopo::DomainError;
using astopo::truncated_zeta;

namespace {

// Reference values below were frozen from an arbitrary-precision (60-digit)
// direct summation, rounded to the nearest double.
constexpr double kZ_2_1500 = 1.6442676223543993;
constexpr double kH_1500 = 7.8907693482881322;
constexpr double kZ_225_1500 = 1.4601262028262972;
constexpr double kZ_2_600 = 1.6432687882988441;

doctest::Approx near(double value, double rel = 1e-12) {
    return doctest::Approx(value).epsilon(rel);
}

}  // namespace

TEST_CASE("truncated_zeta matches high-precision sums") {
    CHECK(truncated_zeta(2.0, 1, 1500) == near(kZ_2_1500));
    CHECK(truncated_zeta(1.0, 1, 1500) == near(kH_1500));
    CHECK(truncated_zeta(2.25, 1, 1500) == near(kZ_225_1500));
    CHECK(truncated_zeta(2.0, 1, 600) == near(kZ_2_600));
}

TEST_CASE("truncated_zeta single-term and negative exponents") {
    CHECK(truncated_zeta(2.0, 7, 7) == near(1.0 / 49.0));
    CHECK(truncated_zeta(-1.5, 4, 4) == near(8.0));
    CHECK(truncated_zeta(0.0, 3, 12) == near(10.0));
    // s = -1 sums k itself: 1 + ... + 100 = 5050.
    CHECK(truncated_zeta(-1.0, 1, 100) == near(5050.0));
}

TEST_CASE("truncated_zeta rejects bad bounds") {
    CHECK_THROWS_AS(truncated_zeta(2.0, 0, 5), DomainError);
    CHECK_THROWS_AS(truncated_zeta(2.0, -3, 5), DomainError);
    CHECK_THROWS_AS(truncated_zeta(2.0, 6, 5), DomainError);
    CHECK_THROWS_AS(truncated_zeta(std::nan(""), 1, 5), DomainError);
}

TEST_CASE("construction caches the normalization") {
    const BoundedPowerLaw d(2.25, 1, 1500);
    CHECK(d.z_norm() == near(kZ_225_1500));
    CHECK(d.lambda() == 2.25);
    CHECK(d.k_min() == 1);
    CHECK(d.k_max() == 1500);
    CHECK(d.support_size() == 1500);
}

TEST_CASE("one-point support is the degenerate distribution") {
    const BoundedPowerLaw d(1.7, 9, 9);
    CHECK(d.z_norm() == near(std::pow(9.0, -1.7)));
    CHECK(d.pmf(9) == 1.0);
    CHECK(d.ccdf(9) == 1.0);
    CHECK(d.cdf(9) == 1.0);
    CHECK(d.mean_degree() == near(9.0));
    CHECK(d.quantile(0.0) == 9);
    CHECK(d.quantile(0.999) == 9);
}

TEST_CASE("construction rejects invalid parameters") {
    CHECK_THROWS_AS(BoundedPowerLaw(0.0, 1, 10), DomainError);
    CHECK_THROWS_AS(BoundedPowerLaw(-2.25, 1, 10), DomainError);
    CHECK_THROWS_AS(BoundedPowerLaw(std::nan(""), 1, 10), DomainError);
    CHECK_THROWS_AS(BoundedPowerLaw(2.25, 0, 10), DomainError);
    CHECK_THROWS_AS(BoundedPowerLaw(2.25, -1, 10), DomainError);
    CHECK_THROWS_AS(BoundedPowerLaw(2.25, 11, 10), DomainError);
}

TEST_CASE("pmf values and bounds") {
    const BoundedPowerLaw d(2.25, 1, 1500);
    CHECK(d.pmf(1) == near(0.68487230628718761));
    CHECK(d.pmf(2) == near(0.14397666681586002));
    CHECK(d.pmf(1500) == near(4.8910744375048213e-8));
    for (int k = 2; k <= 32; ++k) {
        CHECK(d.pmf(k) < d.pmf(k - 1));
    }
    CHECK_THROWS_AS(d.pmf(0), DomainError);
    CHECK_THROWS_AS(d.pmf(1501), DomainError);
}

TEST_CASE("ccdf is the inclusive upper tail") {
    const BoundedPowerLaw d(2.25, 1, 1500);
    CHECK(d.ccdf(1) == 1.0);  // exact: numerator is the normalizer itself
    CHECK(d.ccdf(1500) == near(d.pmf(1500)));
    CHECK(d.ccdf(3) == near(0.17115102689695237));
    CHECK_THROWS_AS(d.ccdf(0), DomainError);
    CHECK_THROWS_AS(d.ccdf(1501), DomainError);
}

TEST_CASE("cdf complements the tail and closes at one") {
    const BoundedPowerLaw d(2.25, 1, 1500);
    CHECK(d.cdf(1500) == 1.0);
    CHECK(d.cdf(3) == near(0.88667013070654904));
    CHECK(d.cdf(4) == near(0.91693749645795782));
    CHECK(d.cdf(1) == near(1.0 - d.ccdf(2)));
    CHECK_THROWS_AS(d.cdf(0), DomainError);
}

TEST_CASE("quantile inverts the cdf") {
    const BoundedPowerLaw d(2.25, 1, 1500);
    CHECK(d.quantile(0.0) == 1);
    CHECK(d.quantile(0.9) == 4);  // cdf(3) = 0.8867 < 0.9 <= cdf(4) = 0.9169
    CHECK(d.quantile(0.5) == 1);
    CHECK_THROWS_AS(d.quantile(-0.1), DomainError);
    CHECK_THROWS_AS(d.quantile(1.0), DomainError);
    CHECK_THROWS_AS(d.quantile(std::nan("")), DomainError);

    int previous = d.quantile(0.0);
    for (double u = 0.05; u < 1.0; u += 0.05) {
        const int k = d.quantile(u);
        CHECK(k >= previous);
        previous = k;
    }
}

TEST_CASE("cumulative table replays cdf bit for bit") {
    const BoundedPowerLaw d(2.25, 1, 500);
    const std::vector<double> table = d.cumulative_table();
    REQUIRE(table.size() == 500);
    CHECK(table.back() == 1.0);
    for (int k = 1; k <= 500; ++k) {
        CHECK(table[static_cast<std::size_t>(k - 1)] == d.cdf(k));
    }
    for (std::size_t i = 1; i < table.size(); ++i) {
        CHECK(table[i] >= table[i - 1]);
    }
}

TEST_CASE("quantile round trips the cdf across a random grid") {
    astopo::RandomState rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        const double lambda = 1.5 + 2.0 * rng.next_uniform();
        const int k_min = 1 + static_cast<int>(rng.next_below(5));
        const int k_max = k_min + 10 + static_cast<int>(rng.next_below(400));
        const BoundedPowerLaw d(lambda, k_min, k_max);
        for (int k = k_min; k <= k_max; ++k) {
            const double eps = d.pmf(k) / 4.0;
            CHECK(d.quantile(d.cdf(k) - eps) == k);
        }
    }
}

TEST_CASE("mean degree reproduces the reference table") {
    const double lambdas[] = {2.0, 2.25, 2.5, 2.75, 3.0};
    const double expected[] = {4.7989568370807373, 2.7069048124005646,
                               1.9089007791486524, 1.5527701901937591,
                               1.3678786102412467};
    for (int i = 0; i < 5; ++i) {
        CHECK(BoundedPowerLaw(lambdas[i], 1, 1500).mean_degree() == near(expected[i]));
    }
    CHECK(BoundedPowerLaw(2.0, 1, 600).mean_degree() == near(4.2445754898018113));
    CHECK(BoundedPowerLaw(2.0, 1, 2600).mean_degree() == near(5.1325147426784831));
}

TEST_CASE("mean degree stays near 1.37 at lambda 3 for any cutoff") {
    for (int k_max : {600, 1500, 2600}) {
        const double mean = BoundedPowerLaw(3.0, 1, k_max).mean_degree();
        CHECK(std::abs(mean - 1.37) <= 0.01);
    }
}

TEST_CASE("mean degree is monotone in lambda and k_max") {
    double previous = BoundedPowerLaw(1.8, 1, 1500).mean_degree();
    for (double lambda = 2.0; lambda <= 3.2; lambda += 0.2) {
        const double mean = BoundedPowerLaw(lambda, 1, 1500).mean_degree();
        CHECK(mean < previous);
        previous = mean;
    }
    previous = BoundedPowerLaw(2.25, 1, 100).mean_degree();
    for (int k_max : {300, 1000, 3000, 10000}) {
        const double mean = BoundedPowerLaw(2.25, 1, k_max).mean_degree();
        CHECK(mean > previous);
        previous = mean;
    }
}

TEST_CASE("normalization and mean hold on a randomized grid") {
    astopo::RandomState rng(7701);
    for (int trial = 0; trial < 20; ++trial) {
        const double lambda = 1.5 + 2.0 * rng.next_uniform();
        const int k_min = 1 + static_cast<int>(rng.next_below(5));
        const int k_max = k_min + 10 + static_cast<int>(rng.next_below(100000));
        const BoundedPowerLaw d(lambda, k_min, k_max);

        double sum = 0.0, carry = 0.0;
        double weighted = 0.0, wcarry = 0.0;
        for (int k = k_max; k >= k_min; --k) {
            const double p = d.pmf(k);
            double y = p - carry;
            double t = sum + y;
            carry = (t - sum) - y;
            sum = t;
            y = k * p - wcarry;
            t = weighted + y;
            wcarry = (t - weighted) - y;
            weighted = t;
        }
        CHECK(std::abs(sum - 1.0) <= 1e-10);
        CHECK(std::abs(weighted - d.mean_degree()) / d.mean_degree() <= 1e-10);
    }
}
