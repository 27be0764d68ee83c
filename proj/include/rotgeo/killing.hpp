#pragma once

// Rotation generators of E_2^4, their one-parameter isometry groups, and the
// Lie-derivative test for linear Killing fields.

#include <array>
#include <cstddef>
#include <utility>

#include "rotgeo/pseudometric.hpp"

namespace rotgeo {

class Matrix4 {
public:
    constexpr Matrix4() = default;

    static constexpr Matrix4 identity() {
        Matrix4 m;
        for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    constexpr double& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    constexpr double operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

    friend constexpr Vector4 operator*(const Matrix4& m, const Vector4& v) {
        Vector4 out;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) out[i] += m.a_[i][j] * v[j];
        return out;
    }

    friend constexpr Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
        Matrix4 out;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k) out.a_[i][j] += a.a_[i][k] * b.a_[k][j];
        return out;
    }

    friend constexpr Matrix4 operator+(Matrix4 a, const Matrix4& b) {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a.a_[i][j] += b.a_[i][j];
        return a;
    }

    double max_abs() const;

    friend constexpr bool operator==(const Matrix4&, const Matrix4&) = default;

private:
    std::array<std::array<double, 4>, 4> a_{};
};

enum class RotationGenerator { omega1, omega2, omega3, omega4, omega5, omega6 };

enum class RotationKind { hyperbolic, elliptic };

inline constexpr std::array<RotationGenerator, 6> kAllGenerators{
    RotationGenerator::omega1, RotationGenerator::omega2, RotationGenerator::omega3,
    RotationGenerator::omega4, RotationGenerator::omega5, RotationGenerator::omega6};

/// 0-based slot pair mixed by the generator: Omega1 (1,3), Omega2 (1,4),
/// Omega3 (2,3), Omega4 (2,4), Omega5 (1,2), Omega6 (3,4).
std::pair<std::size_t, std::size_t> plane(RotationGenerator gen);
RotationKind kind(RotationGenerator gen);
const char* to_string(RotationGenerator gen) noexcept;

/// Coefficients of the general Killing field; any real values are accepted.
struct KillingParams {
    double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

/// W(p) = A p.
struct LinearField {
    Matrix4 A;
};

/// a(eta d_xi + xi d_eta) + b(theta d_rho + rho d_theta) + c(theta d_xi + xi d_theta)
/// + d(eta d_rho + rho d_eta) + e(theta d_eta - eta d_theta) + f(xi d_rho - rho d_xi),
/// with p = (xi, rho, theta, eta).
Vector4 killing_field_eval(const KillingParams& params, const Vector4& p);

/// Matrix of killing_field_eval(params, .).
LinearField killing_field(const KillingParams& params);

/// S_ij = sum_k (g_ik A_kj + g_jk A_ki); zero iff W = A p is a Killing field.
Matrix4 lie_residual(const LinearField& field);

/// Hyperbolic generators apply [[cosh s, sinh s], [sinh s, cosh s]] and
/// elliptic ones [[cos s, sin s], [-sin s, cos s]] to their slot pair.
Matrix4 rotation_matrix(RotationGenerator gen, double s);

/// d/ds rotation_matrix(gen, s) at s = 0.
Matrix4 generator_matrix(RotationGenerator gen);

}  // namespace rotgeo
