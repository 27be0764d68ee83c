#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "families.hpp"
#include "rotgeo/curvature.hpp"
#include "rotgeo/error.hpp"
#include "support.hpp"

using namespace rotgeo;
using FK = FamilyKind;

namespace {

DoubleRotationSurface surface(FK k, const char* fa, const char* fb, const char* x,
                              const char* v, Variant var = Variant::A) {
    return {testing::family(k, var, fa, fb, {0.3, 3}), ProfileFunction::parse(x, {-1, 1}),
            ProfileFunction::parse(v, {-1, 1})};
}

// generic, non-flat configurations with admissible frames near (0.3, 1.1)
DoubleRotationSurface generic(FK k) {
    switch (k) {
        case FK::hyperbolic14: return surface(k, "2+0.5*t^2", "3+2*t", "0.1*t", "1+0.7*t+t^2");
        case FK::hyperbolic23: return surface(k, "1+t^2", "2+t", "0.3*t", "0.5*t+t^2");
        case FK::elliptic56: return surface(k, "1+0.2*t^2", "2+t", "0.2*t", "1+0.9*t");
    }
    throw std::logic_error("family");
}

Metric2 induced(const DoubleRotationSurface& s) {
    return [&s](double a, double b) { return induced_metric(s, a, b); };
}

}  // namespace

TEST_CASE("gaussian curvature oracle on known metrics") {
    const Metric2 sphere = [](double x, double) {
        const double s = std::sin(x);
        return std::array<double, 3>{1.0, 0.0, s * s};
    };
    const Metric2 halfplane = [](double, double y) {
        return std::array<double, 3>{1 / (y * y), 0.0, 1 / (y * y)};
    };
    const Metric2 desitter = [](double x, double) {
        const double c = std::cosh(x);
        return std::array<double, 3>{-1.0, 0.0, c * c};
    };
    // graph z = x^2 + xy/2 + y^2/3: K = (fxx fyy - fxy^2) / (1 + fx^2 + fy^2)^2
    const Metric2 graph = [](double x, double y) {
        const double fx = 2 * x + y / 2, fy = x / 2 + 2 * y / 3;
        return std::array<double, 3>{1 + fx * fx, fx * fy, 1 + fy * fy};
    };
    for (double x : {0.4, 1.1, 2.0}) {
        for (double y : {0.5, 1.3}) {
            CHECK(gaussian_curvature_fd(sphere, x, y, 1e-4) == doctest::Approx(1.0).epsilon(1e-6));
            CHECK(gaussian_curvature_fd(halfplane, x, y, 1e-4) == doctest::Approx(-1.0).epsilon(1e-6));
            CHECK(gaussian_curvature_fd(desitter, x, y, 1e-4) == doctest::Approx(1.0).epsilon(1e-6));
            const double fx = 2 * x + y / 2, fy = x / 2 + 2 * y / 3;
            const double w = 1 + fx * fx + fy * fy;
            const double K = (2.0 * (2.0 / 3.0) - 0.25) / (w * w);
            CHECK(std::abs(gaussian_curvature_fd(graph, x, y, 1e-4) - K) <= 1e-6);
        }
    }
}

TEST_CASE("surface tangents match differences of the immersion") {
    for (FK k : testing::kinds()) {
        const auto srf = generic(k);
        const double t = 0.3, s = 1.1, h = 1e-6;
        const auto point = [&](double a, double b) {
            return immerse(srf.family, srf.x_angle(a), srf.v_angle(a), b);
        };
        const auto T = surface_tangents(srf, t, s);
        CHECK(testing::max_diff(T[0], (1 / (2 * h)) * (point(t + h, s) - point(t - h, s))) <= 1e-6);
        CHECK(testing::max_diff(T[1], (1 / (2 * h)) * (point(t, s + h) - point(t, s - h))) <= 1e-6);
    }
}

TEST_CASE("frame orthonormality at random admissible points") {
    for (FK k : testing::kinds()) {
        CAPTURE(to_string(k));
        const auto srf = generic(k);
        int found = 0, tries = 0;
        while (found < 100 && tries < 10000) {
            ++tries;
            const double t = testing::uniform(-0.9, 0.9), s = testing::uniform(0.4, 2.9);
            NormalFrame f;
            try {
                f = normal_frame(srf, t, s);
            } catch (const Error& e) {
                CHECK(e.code() == Errc::frame_degenerate);
                continue;
            }
            ++found;
            CHECK(std::abs(std::abs(inner(f.e3, f.e3)) - 1) <= 1e-10);
            CHECK(std::abs(std::abs(inner(f.e4, f.e4)) - 1) <= 1e-10);
            CHECK(std::abs(inner(f.e3, f.e4)) <= 1e-10);
            for (const Vector4& T : surface_tangents(srf, t, s)) {
                CHECK(std::abs(inner(f.e3, T)) <= 1e-10);
                CHECK(std::abs(inner(f.e4, T)) <= 1e-10);
            }
        }
        CHECK(found == 100);
    }
}

TEST_CASE("frame causal characters") {
    NormalFrame f = normal_frame(generic(FK::hyperbolic14), 0.3, 1.1);
    CHECK(inner(f.e3, f.e3) == doctest::Approx(1.0));
    CHECK(inner(f.e4, f.e4) == doctest::Approx(-1.0));
    f = normal_frame(generic(FK::hyperbolic23), 0.3, 1.1);
    CHECK(inner(f.e3, f.e3) == doctest::Approx(1.0));
    CHECK(inner(f.e4, f.e4) == doctest::Approx(-1.0));
    f = normal_frame(generic(FK::elliptic56), 0.3, 1.1);
    CHECK(inner(f.e3, f.e3) == doctest::Approx(-1.0));
    CHECK(inner(f.e4, f.e4) == doctest::Approx(-1.0));
}

TEST_CASE("closed-form hyperbolic23 frame is not normal until corrected") {
    const auto srf = generic(FK::hyperbolic23);
    const NormalFrame p = printed_normal_frame(srf, 0.3, 1.1);
    const auto T = surface_tangents(srf, 0.3, 1.1);
    CHECK(std::abs(inner(p.e3, T[0])) > 1e-3);
    CHECK(std::abs(inner(p.e4, T[1])) > 1e-3);
    const CurvatureReport r = curvature_report(srf, 0.3, 1.1, 1e-3);
    CHECK(r.printed_frame_defect > 1e-3);
    // the other families' closed forms are already normal
    CHECK(curvature_report(generic(FK::hyperbolic14), 0.3, 1.1, 1e-3).printed_frame_defect <= 1e-12);
    CHECK(curvature_report(generic(FK::elliptic56), 0.3, 1.1, 1e-3).printed_frame_defect <= 1e-12);
}

TEST_CASE("frame radicand check") {
    // constant angles: S_t = 0, so the e3 radicand vanishes
    const auto srf = surface(FK::hyperbolic14, "2+t", "3+2*t", "1", "1");
    try {
        normal_frame(srf, 0.2, 1.0);
        FAIL("expected frame_degenerate");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::frame_degenerate);
    }
    // fb' = fa' makes the e4 radicand zero
    CHECK_THROWS_AS(normal_frame(surface(FK::hyperbolic14, "2+t", "3+t", "0", "t"), 0.2, 1.0), Error);
}

TEST_CASE("flat configurations") {
    // linear profiles, one angle constant: both printed K terms vanish
    for (auto [x, v] : {std::pair{"t", "1"}, std::pair{"1", "t"}}) {
        const auto srf = surface(FK::hyperbolic14, "2+t", "3+2*t", x, v);
        for (double t : {-0.5, 0.0, 0.6})
            for (double s : {0.5, 1.0, 2.5}) {
                const CurvatureReport r = curvature_report(srf, t, s, default_fd_step(t, s));
                CHECK(r.K_formula == 0.0);
                CHECK(std::abs(r.K_oracle) <= 1e-6);
                if (r.frame_admissible) CHECK(r.h4 == 0.0);
            }
    }
}

TEST_CASE("report consistency") {
    for (FK k : testing::kinds()) {
        CAPTURE(to_string(k));
        const auto srf = generic(k);
        const CurvatureReport r = curvature_report(srf, 0.3, 1.1, default_fd_step(0.3, 1.1));
        REQUIRE(r.frame_admissible);
        const Vector4 H = r.h3 * r.e3 + r.h4 * r.e4;
        CHECK(testing::max_diff(H, r.H_formula) <= 1e-12);
        CHECK(r.span_residual <= 1e-8);
        CHECK(std::isfinite(r.K_gap));
        CHECK(std::isfinite(r.H_gap));
    }
}

TEST_CASE("oracle step halving") {
    for (FK k : testing::kinds()) {
        const auto srf = generic(k);
        for (int n = 0; n < 20; ++n) {
            const double t = testing::uniform(-0.8, 0.8), s = testing::uniform(0.5, 2.8);
            const double h = default_fd_step(t, s);
            const double a = gaussian_curvature_fd(induced(srf), t, s, h);
            const double b = gaussian_curvature_fd(induced(srf), t, s, h / 2);
            CHECK(std::abs(a - b) <= 1e-6);
        }
    }
}

TEST_CASE("oracles converge at second order") {
    for (FK k : testing::kinds()) {
        CAPTURE(to_string(k));
        const auto srf = generic(k);
        const double t = 0.3, s = 1.1;
        double K[3];
        Vector4 H[3];
        const double hs[3] = {0.2, 0.1, 0.05};
        for (int i = 0; i < 3; ++i) {
            K[i] = gaussian_curvature_fd(induced(srf), t, s, hs[i]);
            H[i] = mean_curvature_fd(srf, t, s, hs[i]);
        }
        const double orderK = std::log2(std::abs(K[0] - K[1]) / std::abs(K[1] - K[2]));
        const double orderH = std::log2(testing::max_diff(H[0], H[1]) / testing::max_diff(H[1], H[2]));
        CHECK(orderK >= 1.8);
        CHECK(orderH >= 1.8);
    }
}

TEST_CASE("curvature preconditions") {
    const auto b = surface(FK::hyperbolic14, "2+t", "3+2*t", "t", "1", Variant::B);
    CHECK_THROWS_AS(curvature_report(b, 0.1, 1.0, 1e-3), Error);
    const auto frozen = surface(FK::hyperbolic14, "2+t", "3+2*t", "1", "1");
    try {
        curvature_report(frozen, 0.1, 1.0, 1e-3);
        FAIL("expected degenerate_metric");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degenerate_metric);
    }
}
