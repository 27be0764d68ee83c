#include <doctest.h>

#include <cmath>
#include <numbers>

#include "families.hpp"
#include "rotgeo/error.hpp"
#include "rotgeo/surface.hpp"
#include "support.hpp"

using namespace rotgeo;
using testing::family;
using FK = FamilyKind;

TEST_CASE("metric coefficients") {
    auto m = metric_coefficients(family(FK::hyperbolic14, Variant::A, "t", "1"), 2);
    CHECK(m.E == 4.0);
    CHECK(m.G == -1.0);
    CHECK(m.N == -1.0);
    m = metric_coefficients(family(FK::hyperbolic23, Variant::A, "2+t/sqrt(2)", "1+t/sqrt(2)", {0, 5}), 0);
    CHECK(m.E == doctest::Approx(4.0));
    CHECK(m.G == doctest::Approx(1.0));
    CHECK(m.N == doctest::Approx(-1.0));
    m = metric_coefficients(family(FK::elliptic56, Variant::A, "t+2", "1", {-1, 5}), 0);
    CHECK(m.E == -4.0);
    CHECK(m.G == 1.0);
    CHECK(m.N == -1.0);
    // variant B of hyperbolic14 swaps every sign
    m = metric_coefficients(family(FK::hyperbolic14, Variant::B, "t", "1"), 2);
    CHECK(m.E == -4.0);
    CHECK(m.G == 1.0);
    CHECK(m.N == 1.0);
}

TEST_CASE("immersion examples") {
    CHECK(immerse(family(FK::hyperbolic14, Variant::A, "t", "1"), 0, 0, 2) == Vector4{2, 0, 0, 1});
    CHECK(immerse(family(FK::hyperbolic23, Variant::A, "2", "1"), 0, 0, 3) == Vector4{2, 1, 0, 0});
    const Vector4 p =
        immerse(family(FK::elliptic56, Variant::A, "t+2", "1", {-1, 5}), std::numbers::pi / 2, 0, 0);
    CHECK(testing::max_diff(p, {2, 0, 0, 1}) <= 1e-15);
}

TEST_CASE("immersion slot layout") {
    const double u = 0.4, v = -0.7, t = 1.5;
    const double a = t, b = 2.0;  // fa = t, fb = 2
    const double chu = std::cosh(u), shu = std::sinh(u), chv = std::cosh(v), shv = std::sinh(v);
    CHECK(testing::max_diff(immerse(family(FK::hyperbolic14, Variant::A, "t", "2"), u, v, t),
                            {a * chu, b * shv, a * shu, b * chv}) <= 1e-14);
    CHECK(testing::max_diff(immerse(family(FK::hyperbolic23, Variant::A, "t", "2"), u, v, t),
                            {a * chu, b * chv, b * shv, a * shu}) <= 1e-14);
    CHECK(testing::max_diff(immerse(family(FK::elliptic56, Variant::A, "t", "2"), u, v, t),
                            {a * std::sin(u), a * std::cos(u), b * std::sin(v), b * std::cos(v)}) <= 1e-14);
    // at zero angles the B variants carry the profile in the documented slots
    CHECK(immerse(family(FK::hyperbolic14, Variant::B, "t", "2"), 0, 0, t) == Vector4{0, b, a, 0});
    CHECK(immerse(family(FK::hyperbolic23, Variant::B, "t", "2"), 0, 0, t) == Vector4{0, 0, b, a});
    CHECK(immerse(family(FK::elliptic56, Variant::B, "t", "2"), 0, 0, t) == Vector4{a, 0, b, 0});
}

TEST_CASE("tangent frame examples") {
    const auto fam = family(FK::hyperbolic14, Variant::A, "t", "1");
    const TangentFrame f = tangent_frame(fam, 0, 0, 2);
    CHECK(f.du == Vector4{0, 0, 2, 0});
    CHECK(inner(f.du, f.du) == 4.0);
    CHECK(inner(f.du, f.dv) == 0.0);
    CHECK(f.dt == Vector4{1, 0, 0, 0});
    CHECK(inner(f.dt, f.dt) == -1.0);
}

TEST_CASE("frame and metric agree on random families") {
    const char* profiles[] = {"1+t^2", "2+sin(t)", "cosh(t)", "3-t/4", "exp(t/3)", "t"};
    for (FK k : testing::kinds())
        for (Variant var : {Variant::A, Variant::B})
            for (int n = 0; n < 40; ++n) {
                const char* fa = profiles[n % 6];
                const char* fb = profiles[(n * 5 + 1) % 6];
                const auto fam = family(k, var, fa, fb);
                const double u = testing::uniform(-2, 2), v = testing::uniform(-2, 2);
                const double t = testing::uniform(0.6, 3);
                const TangentFrame f = tangent_frame(fam, u, v, t);
                const MetricCoefficients m = metric_coefficients(fam, t);
                CAPTURE(to_string(k));
                CAPTURE(to_string(var));
                const auto rel = [](double a, double b) {
                    return std::abs(a - b) / std::max(1.0, std::abs(b));
                };
                CHECK(rel(inner(f.du, f.du), m.E) <= 1e-10);
                CHECK(rel(inner(f.dv, f.dv), m.G) <= 1e-10);
                CHECK(rel(inner(f.dt, f.dt), m.N) <= 1e-10);
                CHECK(std::abs(inner(f.du, f.dv)) <= 1e-12 * (1 + std::abs(m.E) + std::abs(m.G)) * 10);
                CHECK(std::abs(inner(f.du, f.dt)) <= 1e-12 * 100);
                CHECK(std::abs(inner(f.dv, f.dt)) <= 1e-12 * 100);

                // frame against differences of the immersion
                const double h = 1e-6;
                const Vector4 du =
                    (1 / (2 * h)) * (immerse(fam, u + h, v, t) - immerse(fam, u - h, v, t));
                const Vector4 dt =
                    (1 / (2 * h)) * (immerse(fam, u, v, t + h) - immerse(fam, u, v, t - h));
                CHECK(testing::max_diff(du, f.du) <= 1e-6);
                CHECK(testing::max_diff(dt, f.dt) <= 1e-6);
            }
}

TEST_CASE("rotation invariance of the immersion") {
    for (FK k : testing::kinds())
        for (Variant var : {Variant::A, Variant::B}) {
            const auto fam = family(k, var, "1+t^2", "2+t");
            for (int n = 0; n < 20; ++n) {
                const double u = testing::uniform(-1, 1), v = testing::uniform(-1, 1);
                const double t = testing::uniform(0.5, 2), s = testing::uniform(-1, 1);
                const Vector4 p = immerse(fam, u, v, t);
                CHECK(testing::max_diff(immerse(fam, u + s, v, t),
                                        rotation_matrix(fam.u_generator(), s) * p) <= 1e-12);
                CHECK(testing::max_diff(immerse(fam, u, v + s, t),
                                        rotation_matrix(fam.v_generator(), s) * p) <= 1e-12);
            }
        }
    CHECK(family(FK::hyperbolic14, Variant::A, "t", "1").u_generator() == RotationGenerator::omega1);
    CHECK(family(FK::hyperbolic23, Variant::A, "t", "1").u_generator() == RotationGenerator::omega2);
    CHECK(family(FK::elliptic56, Variant::A, "t", "1").u_generator() == RotationGenerator::omega5);
}

TEST_CASE("hyperbolic14 with cosh/sinh profiles lies on H_1^3") {
    const auto fam = family(FK::hyperbolic14, Variant::A, "cosh(t)", "sinh(t)", {0.1, 2});
    for (int n = 0; n < 50; ++n) {
        const Vector4 p = immerse(fam, testing::uniform(-1, 1), testing::uniform(-1, 1),
                                  testing::uniform(0.1, 2));
        const auto q = quadric_membership(p, {}, 1.0);
        CHECK((q.tag == QuadricTag::pseudo_hyperbolic || q.tag == QuadricTag::hyperbolic_space));
    }
}

TEST_CASE("degeneracy detection") {
    CHECK(metric_coefficients(family(FK::hyperbolic14, Variant::A, "t-1", "1"), 1).degenerate());
    CHECK(metric_coefficients(family(FK::hyperbolic14, Variant::A, "t", "t-2"), 2).degenerate());
    // N = fb'^2 - fa'^2 vanishes when both slopes agree
    CHECK(metric_coefficients(family(FK::hyperbolic14, Variant::A, "t", "t+1"), 2).degenerate());
    CHECK_FALSE(metric_coefficients(family(FK::hyperbolic14, Variant::A, "t", "1"), 2).degenerate());
}

TEST_CASE("lagrangian") {
    const auto fam = family(FK::hyperbolic14, Variant::A, "t", "1");
    CHECK(lagrangian(fam, {0, 0, 3, 0, 0, 1}).value == -1.0);
    CHECK(lagrangian(fam, {0, 0, 1, 0.3, 0.1, std::sqrt(1.08)}).value == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(lagrangian(fam, {0, 0, 1, 1, 0, 1}).value == 0.0);
    const GeodesicState st{0.2, -0.1, 1.7, 0.3, -0.4, 1.1};
    const Vector4 w = velocity(fam, st);
    CHECK(lagrangian(fam, st).value == doctest::Approx(inner(w, w)).epsilon(1e-13));
    CHECK(lagrangian(family(FK::hyperbolic14, Variant::A, "t-1", "1"), {0, 0, 1, 1, 0, 0}).degenerate);
}

TEST_CASE("timelike normalization") {
    const auto fam = family(FK::hyperbolic14, Variant::A, "t", "1");
    const GeodesicState st{0, 0, 2, 0, 0, 2};  // L = -4
    const GeodesicState n = normalize_timelike(fam, st);
    CHECK(n.dt == 1.0);
    CHECK(n.t == 2.0);
    const GeodesicState again = normalize_timelike(fam, n);
    CHECK(again.dt == n.dt);
    const GeodesicState r = normalize_timelike(fam, {0.1, 0.2, 1.3, 0.2, 0.3, 2.0});
    CHECK(std::abs(lagrangian(fam, r).value + 1.0) <= 1e-14);
    try {
        normalize_timelike(fam, {0, 0, 1, 1, 0, 1});
        FAIL("null state normalized");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_timelike);
    }
}

TEST_CASE("domain policy") {
    const auto fam = family(FK::elliptic56, Variant::A, "t", "1", {1, 2});
    CHECK_THROWS_AS(immerse(fam, 0, 0, 2.5), Error);
    CHECK_THROWS_AS(metric_coefficients(fam, 0.5), Error);
    CHECK_THROWS_AS(SurfaceFamily(FK::elliptic56, Variant::A, ProfileFunction::parse("t", {1, 2}),
                                  ProfileFunction::parse("t", {1, 3})),
                    Error);
}
