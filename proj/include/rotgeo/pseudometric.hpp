#pragma once

// Linear algebra of the index-2 pseudo-Euclidean space E_2^4 with metric
// diag(-1, -1, +1, +1).

#include <array>
#include <cmath>
#include <cstddef>

namespace rotgeo {

class Vector4 {
public:
    constexpr Vector4() = default;
    constexpr Vector4(double x1, double x2, double x3, double x4) : c_{x1, x2, x3, x4} {}

    constexpr double& operator[](std::size_t i) { return c_[i]; }
    constexpr double operator[](std::size_t i) const { return c_[i]; }

    constexpr double x1() const { return c_[0]; }
    constexpr double x2() const { return c_[1]; }
    constexpr double x3() const { return c_[2]; }
    constexpr double x4() const { return c_[3]; }

    bool finite() const {
        return std::isfinite(c_[0]) && std::isfinite(c_[1]) && std::isfinite(c_[2]) &&
               std::isfinite(c_[3]);
    }

    constexpr Vector4& operator+=(const Vector4& o) {
        for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    constexpr Vector4& operator-=(const Vector4& o) {
        for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    constexpr Vector4& operator*=(double k) {
        for (auto& x : c_) x *= k;
        return *this;
    }

    friend constexpr Vector4 operator+(Vector4 a, const Vector4& b) { return a += b; }
    friend constexpr Vector4 operator-(Vector4 a, const Vector4& b) { return a -= b; }
    friend constexpr Vector4 operator*(double k, Vector4 a) { return a *= k; }
    friend constexpr Vector4 operator*(Vector4 a, double k) { return a *= k; }
    friend constexpr Vector4 operator-(Vector4 a) { return a *= -1.0; }
    friend constexpr bool operator==(const Vector4&, const Vector4&) = default;

private:
    std::array<double, 4> c_{};
};

/// Diagonal of the metric, slot by slot.
inline constexpr std::array<double, 4> kSignature{-1.0, -1.0, 1.0, 1.0};

/// Basis vectors i1..i4.
inline constexpr Vector4 basis(std::size_t i) {
    Vector4 e;
    e[i] = 1.0;
    return e;
}

enum class CausalCharacter { spacelike, timelike, null };

enum class QuadricTag { pseudo_sphere, pseudo_hyperbolic, hyperbolic_space, none };

struct QuadricMembership {
    QuadricTag tag = QuadricTag::none;
    double radius = 0.0;  // > 0 whenever tag != none
};

inline constexpr double kNullTolerance = 1e-12;

/// -v1 w1 - v2 w2 + v3 w3 + v4 w4
constexpr double inner(const Vector4& v, const Vector4& w) {
    return -v[0] * w[0] - v[1] * w[1] + v[2] * w[2] + v[3] * w[3];
}

/// Causal character with an absolute null band of half-width `tol`.
/// The zero vector is spacelike.
CausalCharacter classify(const Vector4& v, double tol = kNullTolerance);

/// Pseudo cross product: cofactor expansion of the formal determinant whose
/// first row is (-i1, -i2, i3, i4). The result is g-orthogonal to x, y and z.
Vector4 cross(const Vector4& x, const Vector4& y, const Vector4& z);

/// Classifies p against <p-m, p-m> = +r^2 (S_2^3), = -r^2 (H_1^3), and H^3
/// (H_1^3 with p.x1 > 0). Throws Errc::invalid_radius for r <= 0.
QuadricMembership quadric_membership(const Vector4& p, const Vector4& m, double r,
                                     double tol = kNullTolerance);

const char* to_string(CausalCharacter c) noexcept;
const char* to_string(QuadricTag t) noexcept;

}  // namespace rotgeo
