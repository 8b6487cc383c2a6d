#include <doctest.h>

#include <cmath>

#include "vrlab/error.hpp"
#include "vrlab/geometry.hpp"
#include "vrlab/rng.hpp"

using namespace vrlab;

namespace {

Point p2(double a, double b)
{
    Point p(2);
    p << a, b;
    return p;
}

// Largest distance from z to sampled points of the lens, using a dense polar grid.
double gridReach(const Point& x, const Point& y, double r, const Point& z)
{
    const double dist = (y - x).norm();
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i)
        for (int j = 0; j < 400; ++j) {
            const double rho = r * i / 400.0;
            const double a = 2.0 * M_PI * j / 400.0;
            const Point u = x + rho * p2(std::cos(a), std::sin(a));
            if ((u - y).norm() <= dist) worst = std::max(worst, (u - z).norm());
        }
    return worst;
}

}  // namespace

TEST_CASE("w membership on the documented configurations")
{
    CHECK(wContains(p2(0, 0), p2(1, 0), 1.0, p2(1, 0), 10000, 1));
    CHECK(wContains(p2(0, 0), p2(1.5, 0), 1.0, p2(1.0 / 15.0, 0), 10000, 2));
    CHECK_FALSE(wContains(p2(0, 0), p2(1.5, 0), 1.0, p2(1.4, 0), 10000, 3));
    CHECK(gridReach(p2(0, 0), p2(1.5, 0), 1.0, p2(1.4, 0)) > 1.0);
    CHECK(gridReach(p2(0, 0), p2(1.5, 0), 1.0, p2(1.0 / 15.0, 0)) <= 1.0 + 1e-12);
}

TEST_CASE("w membership rejects degenerate input")
{
    CHECK_THROWS_AS(wMembership(p2(1, 1), p2(1, 1), 1.0, p2(0, 0), 10, 0), PreconditionError);
    CHECK_THROWS_AS(wMembership(p2(0, 0), p2(1, 0), 0.0, p2(0, 0), 10, 0), PreconditionError);
    CHECK(wMembership(p2(0, 0), p2(1, 0), 1.0, p2(0.5, 0), 0, 0).member);
}

TEST_CASE("witness radius factor")
{
    CHECK(witnessDelta(1.0) == doctest::Approx(1.0 - std::sqrt(0.99)).epsilon(1e-12));
    CHECK(witnessDelta(1.0) == doctest::Approx(0.0050126).epsilon(1e-4));
    CHECK(witnessDelta(10.0) == doctest::Approx(5.00013e-5).epsilon(1e-5));
    CHECK(witnessDelta(10.0) < 0.01);
}

TEST_CASE("witness ball for x at the origin and y two radii away")
{
    const auto w = wWitnessBall(p2(0, 0), p2(2, 0), 1.0, 2.0);
    CHECK(w.center[0] == doctest::Approx(0.05));
    CHECK(w.center[1] == doctest::Approx(0.0));
    CHECK(w.radius == doctest::Approx(witnessDelta(2.0)));
    CHECK(w.claim == WitnessClaim::InsideW);
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        const Point z = sampleInBall(w.center, w.radius, rng);
        CHECK(wContains(p2(0, 0), p2(2, 0), 1.0, z, 200, static_cast<std::uint64_t>(k)));
    }
}

TEST_CASE("witness ball preconditions")
{
    CHECK_THROWS_AS(wWitnessBall(p2(0, 0), p2(0.5, 0), 1.0, 2.0), PreconditionError);
    CHECK_THROWS_AS(wWitnessBall(p2(0, 0), p2(3, 0), 1.0, 2.0), PreconditionError);
    CHECK_THROWS_AS(wWitnessBall(p2(0, 0), p2(1.5, 0), 1.0, 0.5), PreconditionError);
}

TEST_CASE("inner ball in the unit disk")
{
    const auto b = innerBall(p2(1, 0), p2(0, 0), 1.0, 0.5, 2.0);
    CHECK(b.center[0] == doctest::Approx(0.8));
    CHECK(b.center[1] == doctest::Approx(0.0));
    CHECK(b.radius == doctest::Approx(0.1));
    CHECK((b.center - p2(1, 0)).norm() + b.radius <= 0.5 + 1e-12);
    CHECK(b.center.norm() + b.radius <= 1.0 + 1e-12);
}

TEST_CASE("inner ball from the incenter stays at the incenter")
{
    const auto b = innerBall(p2(0.5, 0.5), p2(0.5, 0.5), 0.5, 0.3, 2.0 * std::sqrt(2.0));
    CHECK((b.center - p2(0.5, 0.5)).norm() < 1e-15);
    CHECK(b.radius <= 0.3);
}

TEST_CASE("inner ball at the corner of the unit square")
{
    const double lambda = 2.0 * std::sqrt(2.0);
    const auto b = innerBall(p2(0, 0), p2(0.5, 0.5), 0.5, 0.2, lambda);
    Rng rng(11);
    for (int k = 0; k < 10000; ++k) {
        const Point z = sampleInBall(b.center, b.radius, rng);
        REQUIRE(z.norm() <= 0.2 + 1e-12);
        REQUIRE(z.minCoeff() >= -1e-12);
        REQUIRE(z.maxCoeff() <= 1.0 + 1e-12);
    }
}

TEST_CASE("inner ball preconditions")
{
    CHECK_THROWS_AS(innerBall(p2(5, 0), p2(0, 0), 1.0, 0.5, 2.0), PreconditionError);
    CHECK_THROWS_AS(innerBall(p2(1, 0), p2(0, 0), 1.0, 3.0, 2.0), PreconditionError);
    CHECK_THROWS_AS(innerBall(p2(1, 0), p2(0, 0), 0.0, 0.5, 2.0), PreconditionError);
}

TEST_CASE("geometry works in single precision")
{
    using P = PointT<float>;
    P x(2), y(2);
    x << 0.f, 0.f;
    y << 2.f, 0.f;
    const auto w = wWitnessBall<float>(x, y, 1.f, 2.f);
    CHECK(w.center[0] == doctest::Approx(0.05f));
}

TEST_CASE("unit sphere samples have unit norm")
{
    Rng rng(3);
    for (int d = 1; d <= 6; ++d) CHECK(sampleUnitSphere(d, rng).norm() == doctest::Approx(1.0));
}

TEST_CASE("exact lens reach matches a dense grid in the plane")
{
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const double r = 0.2 + rng.uniform();
        const Point x = p2(0.0, 0.0), y = p2(0.3 + 1.5 * rng.uniform(), 0.0);
        const Point z = p2(3.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
        const double exact = lensReach(x, y, r, z), grid = gridReach(x, y, r, z);
        CAPTURE(trial);
        CHECK(exact >= grid - 1e-12);
        CHECK(exact <= grid + 0.02 * r);
    }
}

TEST_CASE("lens reach bounds sampled lens points in higher dimension")
{
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index d = 3 + trial % 3;
        const Point x = sampleInBall(Point::Zero(d), 1.0, rng), y = sampleInBall(Point::Zero(d), 1.0, rng);
        const Point z = sampleInBall(Point::Zero(d), 1.5, rng);
        const double r = 0.1 + rng.uniform();
        const double reach = lensReach(x, y, r, z);
        const double D = (y - x).norm();
        double seen = 0.0;
        for (int k = 0; k < 20000; ++k) {
            const Point u = sampleInBall(x, r, rng);
            if ((u - y).norm() <= D) seen = std::max(seen, (u - z).norm());
        }
        CHECK(seen <= reach + 1e-12);
        CHECK(reach <= seen + 0.15 * r);
        const double rho = wInradius(x, y, r, z);
        CHECK((rho >= 0.0) == (reach <= r && (z - y).norm() <= D));
        if (rho > 0.0)
            for (int k = 0; k < 20; ++k) CHECK(wContains(x, y, r, Point(sampleInBall(z, rho, rng)), 512, k, 1e-12));
    }
}
