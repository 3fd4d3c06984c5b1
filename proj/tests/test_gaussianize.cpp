#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tailcurve/gaussianize.hpp"
#include "tailcurve/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using namespace tailcurve;

namespace {

std::vector<double> uniform_grid(double lo, double hi, int points) {
    std::vector<double> grid;
    grid.reserve(points);
    for (int i = 0; i < points; ++i) {
        grid.push_back(lo + (hi - lo) * i / (points - 1));
    }
    return grid;
}

}  // namespace

TEST_CASE("gamma map pins the center to the target mean") {
    for (double alpha : {2.0, 2.5, 3.0}) {
        const GammaMapSpec spec{StudentT(1.7, alpha), GaussianSpec(0.4, 2.0)};
        CHECK(gamma_map(spec, 0.0) == 0.4);
    }
}

TEST_CASE("gamma map frozen values") {
    // composed closed-form cdf with the erfc_inv oracle, frozen before the build
    const GammaMapSpec spec2{StudentT(1.0, 2.0), GaussianSpec(0.0, 1.0)};
    CHECK(gamma_map(spec2, std::sqrt(2.0)) ==
          doctest::Approx(1.0517958601652250).epsilon(1e-13));
    const GammaMapSpec spec3{StudentT(2.0, 3.0), GaussianSpec(0.0, 1.0)};
    CHECK(gamma_map(spec3, 1.0) == doctest::Approx(0.45175156661643711).epsilon(1e-13));
    const GammaMapSpec spec3s{StudentT(2.0, 3.0), GaussianSpec(1.0, 0.5)};
    CHECK(gamma_map(spec3s, -3.0) == doctest::Approx(0.40057189984590751).epsilon(1e-13));
}

TEST_CASE("literal closed forms agree with the stable evaluation") {
    for (double alpha : {2.0, 3.0}) {
        for (double sigma : {0.5, 1.0, 2.0}) {
            const GammaMapSpec spec{StudentT(sigma, alpha), GaussianSpec(0.3, 1.4)};
            for (double x : {-5.0, -1.0, 0.3, 7.0, 40.0}) {
                CHECK(gamma_map_explicit(spec, x) ==
                      doctest::Approx(gamma_map(spec, x)).epsilon(1e-12));
            }
        }
    }
    const GammaMapSpec general{StudentT(1.0, 2.5), GaussianSpec(0.0, 1.0)};
    CHECK_THROWS_AS(gamma_map_explicit(general, 1.0), std::domain_error);
}

TEST_CASE("gamma map is strictly increasing and unbounded") {
    for (double alpha : {2.0, 2.5, 3.0}) {
        const GammaMapSpec spec{StudentT(2.0, alpha), GaussianSpec(1.0, 0.5)};
        double prev = -std::numeric_limits<double>::infinity();
        for (const double x : uniform_grid(-200.0, 200.0, 2001)) {
            const double y = gamma_map(spec, x);
            CHECK(y > prev);
            prev = y;
        }
        // tails keep growing: well beyond the grid the map is still moving
        CHECK(gamma_map(spec, 1e6) > gamma_map(spec, 200.0));
        CHECK(gamma_map(spec, -1e6) < gamma_map(spec, -200.0));
        CHECK(std::isfinite(gamma_map(spec, 1e12)));
    }
    CHECK_THROWS_AS(
        gamma_map(GammaMapSpec{StudentT(1.0, 3.0), GaussianSpec(0.0, 1.0)},
                  std::numeric_limits<double>::infinity()),
        std::domain_error);
}

TEST_CASE("cdf identity residual stays below 1e-12") {
    for (double alpha : {2.0, 3.0}) {
        for (auto [sigma, m, s] : {std::tuple{1.0, 0.0, 1.0}, std::tuple{2.0, 1.0, 0.5}}) {
            const GammaMapSpec spec{StudentT(sigma, alpha), GaussianSpec(m, s)};
            const auto grid = uniform_grid(-100.0 * sigma, 100.0 * sigma, 1001);
            CHECK(cdf_identity_residual(spec, grid) < 1e-12);
        }
    }
    SUBCASE("single-point grid at the center is exact") {
        const GammaMapSpec spec{StudentT(1.0, 3.0), GaussianSpec(0.0, 1.0)};
        const std::vector<double> center{0.0};
        CHECK(cdf_identity_residual(spec, center) == 0.0);
    }
    SUBCASE("general-exponent composed map satisfies the same identity") {
        const GammaMapSpec spec{StudentT(1.5, 2.5), GaussianSpec(-0.7, 2.0)};
        const auto grid = uniform_grid(-150.0, 150.0, 501);
        CHECK(cdf_identity_residual(spec, grid) < 1e-12);
    }
    CHECK_THROWS_AS(
        cdf_identity_residual(GammaMapSpec{StudentT(1.0, 3.0), GaussianSpec(0.0, 1.0)},
                              std::span<const double>{}),
        std::domain_error);
}

TEST_CASE("pushforward through gamma is Gaussian") {
    const GammaMapSpec spec{StudentT(2.0, 3.0), GaussianSpec(0.0, 1.0)};
    const auto batch = student_sample(spec.source, 42, 1000000);
    std::vector<double> mapped;
    mapped.reserve(batch.values.size());
    for (const double x : batch.values) {
        mapped.push_back(gamma_map(spec, x));
    }
    const auto est = sample_moments(mapped);
    const double n = static_cast<double>(mapped.size());
    CHECK(std::fabs(est.mean - 0.0) < 4.0 / std::sqrt(n));
    CHECK(est.kurtosis == doctest::Approx(3.0).epsilon(0.05 / 3.0));

    // Kolmogorov sup-distance against the target cdf, 99% band at n = 1e6
    std::sort(mapped.begin(), mapped.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        const double cdf = gaussian_cdf(spec.target, mapped[i]);
        ks = std::max(ks, std::fabs(cdf - static_cast<double>(i) / n));
        ks = std::max(ks, std::fabs(cdf - static_cast<double>(i + 1) / n));
    }
    CHECK(ks < 0.0017);
}
