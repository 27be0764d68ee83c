#include "rotgeo/killing.hpp"

#include <algorithm>
#include <cmath>

namespace rotgeo {

double Matrix4::max_abs() const {
    double m = 0.0;
    for (const auto& row : a_)
        for (double x : row) m = std::max(m, std::abs(x));
    return m;
}

std::pair<std::size_t, std::size_t> plane(RotationGenerator gen) {
    switch (gen) {
        case RotationGenerator::omega1: return {0, 2};
        case RotationGenerator::omega2: return {0, 3};
        case RotationGenerator::omega3: return {1, 2};
        case RotationGenerator::omega4: return {1, 3};
        case RotationGenerator::omega5: return {0, 1};
        case RotationGenerator::omega6: return {2, 3};
    }
    return {0, 0};
}

RotationKind kind(RotationGenerator gen) {
    return (gen == RotationGenerator::omega5 || gen == RotationGenerator::omega6)
               ? RotationKind::elliptic
               : RotationKind::hyperbolic;
}

const char* to_string(RotationGenerator gen) noexcept {
    switch (gen) {
        case RotationGenerator::omega1: return "omega1";
        case RotationGenerator::omega2: return "omega2";
        case RotationGenerator::omega3: return "omega3";
        case RotationGenerator::omega4: return "omega4";
        case RotationGenerator::omega5: return "omega5";
        case RotationGenerator::omega6: return "omega6";
    }
    return "?";
}

Vector4 killing_field_eval(const KillingParams& k, const Vector4& p) {
    const double xi = p[0], rho = p[1], theta = p[2], eta = p[3];
    return {k.a * eta + k.c * theta - k.f * rho, k.b * theta + k.d * eta + k.f * xi,
            k.b * rho + k.c * xi - k.e * eta, k.a * xi + k.d * rho + k.e * theta};
}

LinearField killing_field(const KillingParams& params) {
    LinearField w;
    for (std::size_t j = 0; j < 4; ++j) {
        const Vector4 col = killing_field_eval(params, basis(j));
        for (std::size_t i = 0; i < 4; ++i) w.A(i, j) = col[i];
    }
    return w;
}

Matrix4 lie_residual(const LinearField& field) {
    // g is diagonal, so the k-sums collapse to a single term each.
    Matrix4 s;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            s(i, j) = kSignature[i] * field.A(i, j) + kSignature[j] * field.A(j, i);
    return s;
}

Matrix4 rotation_matrix(RotationGenerator gen, double s) {
    Matrix4 m = Matrix4::identity();
    const auto [i, j] = plane(gen);
    if (kind(gen) == RotationKind::hyperbolic) {
        const double ch = std::cosh(s), sh = std::sinh(s);
        m(i, i) = ch;
        m(i, j) = sh;
        m(j, i) = sh;
        m(j, j) = ch;
    } else {
        const double c = std::cos(s), sn = std::sin(s);
        m(i, i) = c;
        m(i, j) = sn;
        m(j, i) = -sn;
        m(j, j) = c;
    }
    return m;
}

Matrix4 generator_matrix(RotationGenerator gen) {
    Matrix4 m;
    const auto [i, j] = plane(gen);
    m(i, j) = 1.0;
    m(j, i) = kind(gen) == RotationKind::hyperbolic ? 1.0 : -1.0;
    return m;
}

}  // namespace rotgeo
