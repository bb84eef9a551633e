#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slope/surfaces.hpp"
#include "test_support.hpp"

using namespace slope;
using test_support::make_rng;
using test_support::rel_diff;
using test_support::uniform;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SlopeSurfaceConfig timelike_config(double theta, XiMode mode = XiMode::Exact) {
    return make_config(theta, ConeKind::TimelikeCone, builtin_curve("h2-geodesic"), mode);
}

SlopeSurfaceConfig spacelike_config(double theta, XiMode mode = XiMode::Exact) {
    return make_config(theta, ConeKind::SpacelikeCone, builtin_curve("s12-circle"), mode);
}

// Closed form of the worked timelike-cone surface with xi = ln u.
Vec3M example15(double u, double v) {
    const double s7 = std::sinh(7.0);
    const double lu = std::log(u);
    return {u * s7 * std::cosh(lu) * std::cosh(v), -u * s7 * std::sinh(lu),
            u * s7 * std::cosh(lu) * std::sinh(v)};
}

// Closed form of the worked spacelike-cone surface with xi = ln u.
Vec3M example16(double u, double v) {
    const double c7 = std::cosh(7.0);
    const double lu = std::log(u);
    return {-u * c7 * std::sinh(lu), u * c7 * std::cosh(lu) * std::cos(v),
            u * c7 * std::cosh(lu) * std::sin(v)};
}

using test_support::AnalyticPartials;
using test_support::builtin_partials;

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(make_config(0.0, ConeKind::TimelikeCone, builtin_curve("h2-geodesic")),
                    DomainError);
    CHECK_THROWS_AS(make_config(-1.0, ConeKind::TimelikeCone, builtin_curve("h2-geodesic")),
                    DomainError);
    CHECK_THROWS_AS(make_config(1.0, ConeKind::TimelikeCone, builtin_curve("s12-circle")),
                    DomainError);
    CHECK_THROWS_AS(make_config(1.0, ConeKind::SpacelikeCone, builtin_curve("h2-geodesic")),
                    DomainError);
}

TEST_CASE("xi angle law") {
    const SlopeSurfaceConfig exact = timelike_config(7.0);
    const SlopeSurfaceConfig approx = timelike_config(7.0, XiMode::PaperApprox);

    CHECK(xi(exact, 1.0) == 0.0);
    CHECK(xi(approx, 1.0) == 0.0);

    const double e = std::exp(1.0);
    // coth 7, from an independent 25-digit evaluation.
    CHECK(xi(exact, e) == doctest::Approx(1.0000016630588210883).epsilon(1e-14));
    CHECK(xi(approx, e) == doctest::Approx(1.0).epsilon(1e-15));

    const SlopeSurfaceConfig space = spacelike_config(7.0);
    CHECK(xi(space, e) == doctest::Approx(0.99999833694394467174).epsilon(1e-14));

    CHECK_THROWS_AS(xi(exact, 0.0), DomainError);
    CHECK_THROWS_AS(xi(exact, -1.0), DomainError);
    CHECK_THROWS_AS(surface_direct(exact, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(surface_quaternion(exact, -0.5, 0.0), DomainError);
    CHECK_THROWS_AS(surface_homothetic(exact, 0.0, 0.0), DomainError);
}

TEST_CASE("u = 1 slice is the scaled curve") {
    for (double theta : {0.5, 7.0}) {
        const SlopeSurfaceConfig cfg = timelike_config(theta);
        for (double v : {0.0, 1.3, 5.9}) {
            const Vec3M expected = std::sinh(theta) * cfg.curve.eval(v);
            CHECK(rel_diff(surface_direct(cfg, 1.0, v), expected) <= 1e-15);
            CHECK(rel_diff(surface_quaternion(cfg, 1.0, v), expected) <= 1e-15);
            CHECK(rel_diff(surface_homothetic(cfg, 1.0, v), expected) <= 1e-15);
        }
    }
}

TEST_CASE("worked examples reproduce in paper-approx mode") {
    const SlopeSurfaceConfig t15 = timelike_config(7.0, XiMode::PaperApprox);
    const SlopeSurfaceConfig t16 = spacelike_config(7.0, XiMode::PaperApprox);

    // Frozen 20-digit values at (u, v) = (1.7, 2.3).
    const Vec3M frozen15{5372.0691855416423955, -518.15873649321796364, 5265.1456492420174054};
    const Vec3M frozen16{-518.15959822167541266, -710.56780807425435353, 795.27718417382610112};
    CHECK(rel_diff(surface_direct(t15, 1.7, 2.3), frozen15) <= 1e-12);
    CHECK(rel_diff(surface_direct(t16, 1.7, 2.3), frozen16) <= 1e-12);

    for (int i = 0; i <= 16; ++i) {
        const double u = 0.5 + 1.5 * i / 16;
        for (int j = 0; j <= 16; ++j) {
            const double v = kTwoPi * j / 16;
            for (Construction how :
                 {Construction::Direct, Construction::Quaternion, Construction::Homothetic}) {
                // The matrix path loses ~cosh(v) * eps relative near v = 2 pi
                // (entries quadratic in the Euclid-large axis cancel against
                // the curve), so it gets one digit of slack.
                const double tol = how == Construction::Homothetic ? 1e-11 : 1e-12;
                CHECK(rel_diff(surface_point(t15, u, v, how), example15(u, v)) <= tol);
                CHECK(rel_diff(surface_point(t16, u, v, how), example16(u, v)) <= tol);
            }
        }
    }
}

TEST_CASE("exact mode stays within the coth(7) ~ 1 approximation gap") {
    const SlopeSurfaceConfig exact15 = timelike_config(7.0);
    const SlopeSurfaceConfig exact16 = spacelike_config(7.0);
    double worst = 0.0;
    for (int i = 0; i <= 32; ++i) {
        const double u = 0.5 + 1.5 * i / 32;
        for (int j = 0; j <= 32; ++j) {
            const double v = kTwoPi * j / 32;
            worst = std::max(worst, rel_diff(surface_direct(exact15, u, v), example15(u, v)));
            worst = std::max(worst, rel_diff(surface_direct(exact16, u, v), example16(u, v)));
        }
    }
    CHECK(worst <= 5e-5);
    CHECK(worst > 1e-9);  // the gap is real, not a no-op
}

TEST_CASE("three constructions agree") {
    for (double theta : {0.5, 1.0, 7.0}) {
        for (const SlopeSurfaceConfig& cfg : {timelike_config(theta), spacelike_config(theta)}) {
            const SurfaceSampleGrid direct =
                sample_grid(cfg, 0.5, 2.0, 0.0, kTwoPi, 64, 64, Construction::Direct);
            const SurfaceSampleGrid quat =
                sample_grid(cfg, 0.5, 2.0, 0.0, kTwoPi, 64, 64, Construction::Quaternion);
            const SurfaceSampleGrid homo =
                sample_grid(cfg, 0.5, 2.0, 0.0, kTwoPi, 64, 64, Construction::Homothetic);
            double worst = 0.0;
            for (size_t n = 0; n < direct.points.size(); ++n) {
                worst = std::max(worst, rel_diff(direct.points[n], quat.points[n]));
                worst = std::max(worst, rel_diff(direct.points[n], homo.points[n]));
            }
            CAPTURE(theta);
            CHECK(worst <= 1e-9);
        }
    }
}

TEST_CASE("quaternion construction keeps the product pure") {
    auto rng = make_rng();
    const SlopeSurfaceConfig cfg = timelike_config(1.0);
    const SlopeSurfaceConfig space = spacelike_config(0.5);
    for (int n = 0; n < 1000; ++n) {
        const double u = uniform(rng, 0.5, 2.0);
        const double v = uniform(rng, 0.0, kTwoPi);
        for (const SlopeSurfaceConfig& c : {cfg, space}) {
            const double h = homothetic_scale(c, u);
            const SplitQuaternion q1 =
                slope_quaternion(xi(c, u), c.curve.derivative(v), false);
            const SplitQuaternion q2 = SplitQuaternion::pure(h * c.curve.eval(v));
            CHECK(std::fabs((q1 * q2).scalar_part()) <= 1e-10 * h);
        }
    }
}

TEST_CASE("a curve violating tangency trips NonPureProduct") {
    SlopeCurve skewed = builtin_curve("h2-geodesic");
    const auto base = skewed.eval;
    const auto base_derivative = skewed.derivative;
    skewed.eval = [base, base_derivative](double v) {
        return base(v) + 0.05 * base_derivative(v);
    };
    const SlopeSurfaceConfig cfg =
        make_config(1.0, ConeKind::TimelikeCone, skewed, XiMode::Exact);
    CHECK_THROWS_AS(surface_quaternion(cfg, 2.0, 0.3), NonPureProduct);
}

TEST_CASE("homothetic motion decomposes into scale and unit rotation") {
    const SlopeSurfaceConfig cfg = timelike_config(0.8);
    const HomotheticMotion motion{cfg};
    auto rng = make_rng();
    for (int n = 0; n < 200; ++n) {
        const double u = uniform(rng, 0.5, 2.0);
        const double v = uniform(rng, 0.0, kTwoPi);
        CHECK(motion.scale(u) == doctest::Approx(u * std::sinh(0.8)).epsilon(1e-15));
        const SplitQuaternion q = motion.rotation(u, v);
        CHECK(std::fabs(characteristic(q) - 1.0) <= 1e-12 * std::max(1.0, sup_norm(q)));
        // x = (h Q1) x c(v): the scaled rotation acts by left product.
        const SplitQuaternion product =
            motion.scaled_rotation(u, v) * SplitQuaternion::pure(cfg.curve.eval(v));
        CHECK(rel_diff(product.vector_part(), surface_direct(cfg, u, v)) <= 1e-12);
        CHECK(std::fabs(product.scalar_part()) <= 1e-10 * motion.scale(u));
    }
}

TEST_CASE("finite-difference partials match analytic derivatives") {
    const SlopeSurfaceConfig cfg = timelike_config(1.0);

    const auto [x_u, x_v] = surface_partials(cfg, 1.0, 0.0);
    // At u = 1 the v-slice is sinh(theta) f(v), so x_v = sinh(1) f'(0).
    CHECK(sup_norm(x_v - Vec3M{0, 0, std::sinh(1.0)}) <= 1e-8);
    const AnalyticPartials analytic = builtin_partials(cfg, 1.0, 0.0);
    CHECK(sup_norm(x_u - analytic.x_u) <= 1e-6);
    CHECK(sup_norm(x_v - analytic.x_v) <= 1e-8);

    // Partials stay finite and nonzero across the default grid.
    for (int i = 0; i < 64; ++i) {
        const double u = 0.5 + 1.5 * i / 63;
        for (int j = 0; j < 64; ++j) {
            const double v = kTwoPi * j / 63;
            const auto [du, dv] = surface_partials(cfg, u, v);
            REQUIRE(std::isfinite(sup_norm(du)));
            REQUIRE(std::isfinite(sup_norm(dv)));
            REQUIRE(sup_norm(du) > 0.0);
            REQUIRE(sup_norm(dv) > 0.0);
        }
    }

    CHECK_THROWS_AS(surface_partials(cfg, 9e-7, 0.0), DomainError);
}

TEST_CASE("slope measure is the constant cosh(theta) on the timelike cone") {
    for (double theta : {0.5, 1.0}) {
        const SlopeSurfaceConfig cfg = timelike_config(theta);
        double lo = 1e300, hi = 0.0;
        for (int i = 0; i < 16; ++i) {
            const double u = 0.5 + 1.5 * i / 15;
            for (int j = 0; j < 16; ++j) {
                // The <x, n> cancellation amplifies finite-difference noise
                // by ~cosh^2 v, so the difference path stays below v = pi;
                // the analytic route covers the full domain.
                const double v = std::numbers::pi * j / 15;
                const double measure = slope_measure(cfg, u, v);
                lo = std::min(lo, measure);
                hi = std::max(hi, measure);
                CHECK(std::fabs(measure - std::cosh(theta)) <= 1e-5);
                const AnalyticPartials analytic = builtin_partials(cfg, u, v);
                const double oracle =
                    slope_measure_from(surface_direct(cfg, u, v), analytic.x_u, analytic.x_v);
                CHECK(std::fabs(oracle - std::cosh(theta)) <= 1e-10);
                CHECK(std::fabs(measure - oracle) <= 1e-6);

                const AnalyticPartials far =
                    builtin_partials(cfg, u, kTwoPi * j / 15);
                const double far_oracle = slope_measure_from(
                    surface_direct(cfg, u, kTwoPi * j / 15), far.x_u, far.x_v);
                CHECK(std::fabs(far_oracle - std::cosh(theta)) <= 1e-9);
            }
        }
        CHECK(hi - lo <= 2e-6);  // constant across the grid
    }

    // u-invariance along a fixed generator.
    const SlopeSurfaceConfig cfg = timelike_config(1.0);
    CHECK(std::fabs(slope_measure(cfg, 1.0, 0.7) - slope_measure(cfg, std::exp(1.0), 0.7)) <=
          1e-6);
}

TEST_CASE("slope measure is the constant sinh(theta) on the spacelike cone") {
    const SlopeSurfaceConfig cfg = spacelike_config(1.0);
    for (int i = 0; i < 8; ++i) {
        const double u = 0.5 + 1.5 * i / 7;
        for (int j = 0; j < 8; ++j) {
            const double v = kTwoPi * j / 7;
            CHECK(std::fabs(slope_measure(cfg, u, v) - std::sinh(1.0)) <= 1e-5);
        }
    }
}

TEST_CASE("degenerate normals are rejected") {
    // x_u ^ x_v = (1, 1, 0) is lightlike.
    CHECK_THROWS_AS(slope_measure_from({1, 0, 0}, {0, 0, 1}, {1, 1, 0}), DegenerateNormal);
}

TEST_CASE("point classification") {
    const SlopeSurfaceConfig timelike = timelike_config(1.0);
    const SlopeSurfaceConfig spacelike = spacelike_config(1.0);
    for (double u : {0.5, 1.0, 1.7}) {
        for (double v : {0.0, 2.1, 5.5}) {
            const PointReport t = classify_point(timelike, u, v);
            const double expected_t = -(u * std::sinh(1.0)) * (u * std::sinh(1.0));
            CHECK(std::fabs(t.position_norm_sq - expected_t) <=
                  1e-10 * std::fabs(expected_t));
            CHECK(t.spacelike_surface);
            CHECK(t.cone_correct);
            CHECK(t.future_pointing);

            const PointReport s = classify_point(spacelike, u, v);
            const double expected_s = (u * std::cosh(1.0)) * (u * std::cosh(1.0));
            CHECK(std::fabs(s.position_norm_sq - expected_s) <=
                  1e-10 * std::fabs(expected_s));
            CHECK(s.spacelike_surface);
            CHECK(s.cone_correct);
        }
    }
}

TEST_CASE("grid sampling") {
    const SlopeSurfaceConfig cfg = timelike_config(1.0);
    CHECK_THROWS_AS(sample_grid(cfg, 1.0, 1.0, 0.0, 1.0, 2, 2, Construction::Direct),
                    DomainError);
    CHECK_THROWS_AS(sample_grid(cfg, 0.0, 2.0, 0.0, 1.0, 2, 2, Construction::Direct),
                    DomainError);
    CHECK_THROWS_AS(sample_grid(cfg, -1.0, 2.0, 0.0, 1.0, 2, 2, Construction::Direct),
                    DomainError);
    CHECK_THROWS_AS(sample_grid(cfg, 0.5, 2.0, 1.0, 0.0, 2, 2, Construction::Direct),
                    DomainError);
    CHECK_THROWS_AS(sample_grid(cfg, 0.5, 2.0, 0.0, 1.0, 1, 2, Construction::Direct),
                    DomainError);

    const SurfaceSampleGrid grid =
        sample_grid(cfg, 0.5, 2.0, 0.0, kTwoPi, 9, 17, Construction::Direct);
    CHECK(grid.nu() == 9);
    CHECK(grid.nv() == 17);
    CHECK(grid.points.size() == 9 * 17);
    CHECK(grid.u_values.front() == 0.5);
    CHECK(grid.u_values.back() == 2.0);
    CHECK(sup_norm(grid.at(3, 5) -
                   surface_direct(cfg, grid.u_values[3], grid.v_values[5])) == 0.0);
    for (const Vec3M& p : grid.points) {
        REQUIRE(std::isfinite(sup_norm(p)));
        REQUIRE(minkowski_dot(p, p) < 0.0);  // timelike cone
    }

    // Bit-identical on repeat.
    const SurfaceSampleGrid again =
        sample_grid(cfg, 0.5, 2.0, 0.0, kTwoPi, 9, 17, Construction::Direct);
    for (size_t n = 0; n < grid.points.size(); ++n) {
        CHECK(grid.points[n].e1 == again.points[n].e1);
        CHECK(grid.points[n].e2 == again.points[n].e2);
        CHECK(grid.points[n].e3 == again.points[n].e3);
    }
}
