#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tailcurve/response.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

using namespace tailcurve;

namespace {

GeneralizedSigmoid standard_curve() {
    return GeneralizedSigmoid({{1.0, 1.0, 0.0}}, 0.0);
}

// Table curves: S2(a1, a2, b1, b2, c1, c2) with K_L = 0.
GeneralizedSigmoid curve_b() {  // S2(1, -2, 1, 2, 1, 15)
    return GeneralizedSigmoid({{1.0, 1.0, 1.0}, {-2.0, 2.0, 15.0}}, 0.0);
}

GeneralizedSigmoid curve_c() {  // S2(1, -1/2, 2, 1, 1, 15)
    return GeneralizedSigmoid({{1.0, 2.0, 1.0}, {-0.5, 1.0, 15.0}}, 0.0);
}

}  // namespace

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(GeneralizedSigmoid({}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedSigmoid({{1.0, 0.0, 0.0}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedSigmoid({{1.0, -2.0, 0.0}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedSigmoid({{1.0, 1.0, 0.0}},
                                       std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("k_r is derived from the term heights") {
    CHECK(standard_curve().k_r() == 1.0);
    CHECK(curve_b().k_r() == -1.0);
    CHECK(curve_c().k_r() == 0.5);
    const GeneralizedSigmoid shifted({{2.0, 1.0, 0.0}}, -3.0);
    CHECK(shifted.k_r() == -1.0);
}

TEST_CASE("eval: exact points and saturation") {
    CHECK(eval(standard_curve(), 0.0) == 0.5);
    // far saturation hits K_R
    CHECK(eval(curve_b(), 1000.0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::fabs(eval(curve_b(), -1000.0) - 0.0) < 1e-9);
    // high-precision logistic value, frozen before the build
    CHECK(eval(standard_curve(), -20.0) ==
          doctest::Approx(2.0611536181902037e-9).epsilon(1e-9));
    CHECK(std::fabs(eval(standard_curve(), -20.0) - 2.0611536181902037e-9) < 1e-12);
    // no overflow at extreme slopes
    const GeneralizedSigmoid steep({{1.0, 100.0, 0.0}}, 0.0);
    CHECK(eval(steep, 1e4) == 1.0);
    CHECK(eval(steep, -1e4) == 0.0);
    CHECK_THROWS_AS(eval(standard_curve(), std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

TEST_CASE("eval additivity across terms") {
    const auto curve = curve_b();
    const GeneralizedSigmoid first({curve.terms()[0]}, 0.0);
    const GeneralizedSigmoid second({curve.terms()[1]}, 0.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xs(-40.0, 40.0);
    for (int i = 0; i < 100; ++i) {
        const double x = xs(rng);
        CHECK(eval(curve, x) ==
              doctest::Approx(eval(first, x) + eval(second, x) + curve.k_l()).epsilon(1e-14));
    }
}

TEST_CASE("saturation within 1e-9 at +-1000/min(b)") {
    for (const auto& curve : {standard_curve(), curve_c()}) {
        double min_b = std::numeric_limits<double>::infinity();
        for (const auto& t : curve.terms()) min_b = std::min(min_b, t.b);
        const double far = 1000.0 / min_b;
        CHECK(std::fabs(eval(curve, -far) - curve.k_l()) < 1e-9);
        CHECK(std::fabs(eval(curve, far) - curve.k_r()) < 1e-9);
    }
}

TEST_CASE("derivatives: exact values and finite differences") {
    CHECK(derivative(standard_curve(), 0.0, 1) == 0.25);
    CHECK(derivative(standard_curve(), 0.0, 2) == 0.0);
    CHECK_THROWS_AS(derivative(standard_curve(), 0.0, 3), std::domain_error);
    CHECK_THROWS_AS(derivative(standard_curve(), 0.0, 0), std::domain_error);

    for (const auto& curve : {standard_curve(), curve_b(), curve_c()}) {
        for (int i = 0; i <= 80; ++i) {
            const double x = -20.0 + 40.0 * i / 80.0;
            const double fd1 =
                oracle::central_diff([&curve](double t) { return eval(curve, t); }, x, 1e-6);
            const double d1 = derivative(curve, x, 1);
            if (std::fabs(d1) > 1e-12) {
                CHECK(fd1 == doctest::Approx(d1).epsilon(1e-6));
            }
            const double fd2 = oracle::central_diff(
                [&curve](double t) { return derivative(curve, t, 1); }, x, 1e-6);
            const double d2 = derivative(curve, x, 2);
            if (std::fabs(d2) > 1e-12) {
                CHECK(fd2 == doctest::Approx(d2).epsilon(1e-5));
            }
        }
    }
}

TEST_CASE("single-term curve with positive height is increasing everywhere") {
    const GeneralizedSigmoid curve({{0.7, 2.3, -4.0}}, -1.0);
    for (int i = 0; i <= 100; ++i) {
        const double x = -30.0 + 60.0 * i / 100.0;
        CHECK(derivative(curve, x, 1) > 0.0);
    }
}

TEST_CASE("inverse_single") {
    const SigmoidTerm t{1.0, 1.0, 0.0};
    CHECK(inverse_single(t, 0.0, 0.5) == 0.0);
    // forward-evaluation oracle: S(-1) = 1/(1+e)
    CHECK(inverse_single(t, 0.0, 1.0 / (1.0 + std::exp(1.0))) ==
          doctest::Approx(-1.0).epsilon(1e-13));

    CHECK_THROWS_AS(inverse_single(t, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(inverse_single(t, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(inverse_single(t, 0.0, -0.3), std::domain_error);
    const SigmoidTerm flipped{-1.0, 1.0, 0.0};
    CHECK_THROWS_AS(inverse_single(flipped, 0.0, -0.5), std::domain_error);

    SUBCASE("round trip inverse(eval(x)) with conditioning-aware tolerance") {
        // Once eval(x) saturates toward k_l + a, the double rounding of y
        // alone moves the true inverse by ulp(y)/S'(x); the bound below adds
        // that term to the 1e-10 target (it only bites for x beyond ~15).
        const GeneralizedSigmoid curve({t}, 0.0);
        for (int i = 0; i <= 120; ++i) {
            const double x = -30.0 + 60.0 * i / 120.0;
            const double y = eval(curve, x);
            const double slope = derivative(curve, x, 1);
            const double quantization =
                (std::nextafter(y, 2.0) - y) / std::max(slope, 1e-300);
            CHECK(std::fabs(inverse_single(t, 0.0, y) - x) < 1e-10 + 2.0 * quantization);
        }
        // the sharp 1e-10 contract holds wherever y keeps 1e-10-level detail
        for (double x : {-13.0, -7.0, -1.3, 0.0, 3.7, 9.0, 13.0}) {
            const double y = eval(curve, x);
            CHECK(std::fabs(inverse_single(t, 0.0, y) - x) < 1e-10);
        }
    }

    SUBCASE("eval(inverse(y)) == y to 1e-12 relative everywhere") {
        const GeneralizedSigmoid curve({t}, 0.0);
        for (double y : {1e-12, 1e-6, 0.02, 0.5, 0.93, 1.0 - 1e-9, 1.0 - 1e-13}) {
            CHECK(eval(curve, inverse_single(t, 0.0, y)) ==
                  doctest::Approx(y).epsilon(1e-12));
        }
    }
}

TEST_CASE("validate_shape: standard curve") {
    const auto report = validate_shape(standard_curve());
    CHECK(report.k_l == 0.0);
    CHECK(report.k_r == 1.0);
    CHECK(report.monotone);
    REQUIRE(report.inflection_points.size() == 1);
    CHECK(std::fabs(report.inflection_points[0] - 0.0) < 1e-9);
    CHECK(report.attained_range.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(report.attained_range.hi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.satisfies_iii);
}

TEST_CASE("validate_shape: inflection sits at c/b for any single positive term") {
    for (double a : {0.5, 2.0}) {
        for (double b : {0.4, 1.0, 3.0}) {
            for (double c : {-2.0, 0.0, 5.0}) {
                const auto report = validate_shape(GeneralizedSigmoid({{a, b, c}}, 0.0));
                CHECK(report.monotone);
                REQUIRE(report.inflection_points.size() == 1);
                CHECK(std::fabs(report.inflection_points[0] - c / b) < 1e-9);
            }
        }
    }
}

TEST_CASE("validate_shape: non-monotone table curve overshoots before harm") {
    const auto report = validate_shape(curve_b());
    CHECK_FALSE(report.monotone);
    CHECK(report.k_r == -1.0);
    // The curve also undershoots: past x ~ 14 the first term's residual decay
    // dominates, S dips below K_R (minimum at x ~ 15.386) and then climbs
    // back to -1 from below. Frozen from the high-precision critical solve.
    CHECK(report.attained_range.lo ==
          doctest::Approx(-1.0000002825408965).epsilon(1e-12));
    CHECK(report.attained_range.lo < report.k_r);
    CHECK(report.attained_range.hi > 0.0);  // interior maximum above both plateaus

    // independent grid + golden-section refinement oracle for the maximum
    const auto curve = curve_b();
    double best_lo = -50.0, best_hi = 50.0, best = -1e300, best_x = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        const double x = -50.0 + 100.0 * i / 4000.0;
        const double y = eval(curve, x);
        if (y > best) {
            best = y;
            best_x = x;
        }
    }
    best_lo = best_x - 0.05;
    best_hi = best_x + 0.05;
    const double oracle_max =
        oracle::golden_max([&curve](double x) { return eval(curve, x); }, best_lo, best_hi);
    CHECK(report.attained_range.hi == doctest::Approx(oracle_max).epsilon(1e-9));
    // frozen from the high-precision critical-point solve
    CHECK(report.attained_range.hi == doctest::Approx(0.96923346022806718).epsilon(1e-9));
}

TEST_CASE("validate_shape: gentler second table curve") {
    const auto report = validate_shape(curve_c());
    CHECK(report.k_r == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_FALSE(report.monotone);
    const auto range = attained_range(curve_c());
    CHECK(range.lo <= 0.0);
    CHECK(range.hi >= 0.5);
}

TEST_CASE("attained_range basics") {
    const auto range = attained_range(standard_curve());
    CHECK(range.lo == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(range.hi == doctest::Approx(1.0).epsilon(1e-12));
    const auto range_b = attained_range(curve_b());
    CHECK(range_b.lo == doctest::Approx(-1.0000002825408965).epsilon(1e-12));
    CHECK(range_b.lo <= -1.0);
    CHECK(range_b.hi > 0.0);
}

TEST_CASE("curve spec grammar round trip") {
    const auto curve = parse_curve_spec("sigmoid:kl=0;a=1,b=1,c=0");
    CHECK(curve.terms().size() == 1);
    CHECK(curve.k_l() == 0.0);
    CHECK(curve.terms()[0].a == 1.0);

    const auto multi = parse_curve_spec("sigmoid:kl=-0.5;a=1,b=2,c=1;a=-5e-1,b=1,c=1.5e1");
    CHECK(multi.terms().size() == 2);
    CHECK(multi.k_l() == -0.5);
    CHECK(multi.terms()[1].a == -0.5);
    CHECK(multi.terms()[1].c == 15.0);

    const auto echoed = parse_curve_spec(format_curve_spec(multi));
    CHECK(echoed.k_l() == multi.k_l());
    for (size_t i = 0; i < multi.terms().size(); ++i) {
        CHECK(echoed.terms()[i].a == multi.terms()[i].a);
        CHECK(echoed.terms()[i].b == multi.terms()[i].b);
        CHECK(echoed.terms()[i].c == multi.terms()[i].c);
    }

    CHECK_THROWS_AS(parse_curve_spec("gauss:kl=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve_spec("sigmoid:kl=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve_spec("sigmoid:kl=0;a=1,b=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve_spec("sigmoid:kl=0;a=1,b=zzz,c=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve_spec("sigmoid:kl=0;a=1,b=-1,c=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve_spec("sigmoid:kl=0;a=1,b=1,c=0junk"), std::invalid_argument);
}
