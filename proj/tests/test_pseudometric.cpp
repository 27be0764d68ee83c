#include <doctest.h>

#include "rotgeo/error.hpp"
#include "rotgeo/pseudometric.hpp"
#include "support.hpp"

using namespace rotgeo;
using testing::random_vector;

TEST_CASE("inner product on basis and mixed vectors") {
    CHECK(inner(basis(0), basis(0)) == -1.0);
    CHECK(inner(basis(2), basis(3)) == 0.0);
    CHECK(inner({1, 2, 3, 4}, {1, 1, 1, 1}) == 4.0);
    for (std::size_t i = 0; i < 4; ++i) CHECK(inner(basis(i), basis(i)) == kSignature[i]);
}

TEST_CASE("inner is symmetric and bilinear") {
    for (int k = 0; k < 200; ++k) {
        const Vector4 a = random_vector(), b = random_vector(), c = random_vector();
        const double l = testing::uniform(-3, 3);
        CHECK(inner(a, b) == inner(b, a));
        const double lhs = inner(a + l * b, c);
        const double rhs = inner(a, c) + l * inner(b, c);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("causal classification") {
    CHECK(classify({1, 0, 1, 0}) == CausalCharacter::null);
    CHECK(classify({0, 1, 0, 0}) == CausalCharacter::timelike);
    CHECK(classify({1, 1, 2, 3}) == CausalCharacter::spacelike);
    CHECK(classify({0, 0, 0, 0}) == CausalCharacter::spacelike);
    // null band
    CHECK(classify({1, 0, 1 + 1e-14, 0}) == CausalCharacter::null);
    CHECK(classify({1, 0, 1.001, 0}, 1e-12) == CausalCharacter::spacelike);
    CHECK(classify({1, 0, 1.001, 0}, 0.1) == CausalCharacter::null);
}

TEST_CASE("classification is scale invariant") {
    for (int k = 0; k < 200; ++k) {
        const Vector4 v = random_vector();
        const double l = testing::uniform(0.1, 5) * (k % 2 ? -1 : 1);
        // exact scale invariance needs the zero band
        CHECK(classify(l * v, 0.0) == classify(v, 0.0));
    }
}

TEST_CASE("cross product cofactor expansion") {
    CHECK(cross(basis(1), basis(2), basis(3)) == Vector4{-1, 0, 0, 0});
    CHECK(cross(basis(0), basis(1), basis(2)) == Vector4{0, 0, 0, -1});
    const Vector4 x{1, 2, 3, 4}, z{-2, 0.5, 7, 1};
    CHECK(cross(x, x, z) == Vector4{0, 0, 0, 0});
}

TEST_CASE("cross product is g-orthogonal and antisymmetric") {
    for (int k = 0; k < 200; ++k) {
        const Vector4 x = random_vector(), y = random_vector(), z = random_vector();
        const Vector4 c = cross(x, y, z);
        // entries are cubic in magnitude-10 inputs, so scale the bound
        const double scale = 1e-12 * 1e4;
        CHECK(std::abs(inner(c, x)) <= scale);
        CHECK(std::abs(inner(c, y)) <= scale);
        CHECK(std::abs(inner(c, z)) <= scale);
        CHECK(testing::max_diff(cross(y, x, z), -c) <= 1e-10);
        CHECK(testing::max_diff(cross(x, z, y), -c) <= 1e-10);
    }
}

TEST_CASE("cross product orthogonality at unit scale") {
    for (int k = 0; k < 200; ++k) {
        const Vector4 x = random_vector(1), y = random_vector(1), z = random_vector(1);
        const Vector4 c = cross(x, y, z);
        CHECK(std::abs(inner(c, x)) <= 1e-12);
        CHECK(std::abs(inner(c, y)) <= 1e-12);
        CHECK(std::abs(inner(c, z)) <= 1e-12);
    }
}

TEST_CASE("quadric membership") {
    const Vector4 o{};
    CHECK(quadric_membership({3, 0, 0, 0}, o, 3).tag == QuadricTag::hyperbolic_space);
    CHECK(quadric_membership({3, 0, 0, 0}, o, 3).radius == 3.0);
    CHECK(quadric_membership({-3, 0, 0, 0}, o, 3).tag == QuadricTag::pseudo_hyperbolic);
    CHECK(quadric_membership({0, 3, 0, 0}, o, 3).tag == QuadricTag::pseudo_hyperbolic);
    CHECK(quadric_membership({0, 0, 2, 0}, o, 2).tag == QuadricTag::pseudo_sphere);
    CHECK(quadric_membership({1, 0, 1, 0}, o, 1).tag == QuadricTag::none);
    CHECK(quadric_membership({1, 0, 1, 0}, o, 7).tag == QuadricTag::none);
    // shifted center
    CHECK(quadric_membership({1, 1, 3, 1}, {1, 1, 1, 1}, 2).tag == QuadricTag::pseudo_sphere);
}

TEST_CASE("quadric membership rejects non-positive radius") {
    CHECK_THROWS_AS(quadric_membership({1, 0, 0, 0}, {}, 0.0), Error);
    try {
        quadric_membership({1, 0, 0, 0}, {}, -1.0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_radius);
    }
}
