#include "rotgeo/pseudometric.hpp"

#include "rotgeo/error.hpp"

namespace rotgeo {
namespace {

double det3(double a, double b, double c, double d, double e, double f, double g, double h,
            double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Minor of the 3x4 block [x; y; z] with column `skip` removed.
double minor(const Vector4& x, const Vector4& y, const Vector4& z, std::size_t skip) {
    std::array<std::size_t, 3> cols{};
    std::size_t k = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (j != skip) cols[k++] = j;
    }
    return det3(x[cols[0]], x[cols[1]], x[cols[2]], y[cols[0]], y[cols[1]], y[cols[2]],
                z[cols[0]], z[cols[1]], z[cols[2]]);
}

}  // namespace

CausalCharacter classify(const Vector4& v, double tol) {
    if (v == Vector4{}) return CausalCharacter::spacelike;
    const double q = inner(v, v);
    if (q < -tol) return CausalCharacter::timelike;
    if (q > tol) return CausalCharacter::spacelike;
    return CausalCharacter::null;
}

Vector4 cross(const Vector4& x, const Vector4& y, const Vector4& z) {
    // First-row entries are (-i1, -i2, i3, i4) = kSignature[j] * i_j; the
    // cofactor sign alternates starting with +.
    Vector4 out;
    for (std::size_t j = 0; j < 4; ++j) {
        const double cofactor = (j % 2 == 0 ? 1.0 : -1.0) * minor(x, y, z, j);
        out[j] = kSignature[j] * cofactor;
    }
    return out;
}

QuadricMembership quadric_membership(const Vector4& p, const Vector4& m, double r, double tol) {
    if (!(r > 0.0)) throw Error(Errc::invalid_radius, "quadric radius must be positive");
    const Vector4 d = p - m;
    const double q = inner(d, d);
    const double r2 = r * r;
    if (std::abs(q - r2) <= tol) return {QuadricTag::pseudo_sphere, r};
    if (std::abs(q + r2) <= tol) {
        return {p.x1() > 0.0 ? QuadricTag::hyperbolic_space : QuadricTag::pseudo_hyperbolic, r};
    }
    return {};
}

const char* to_string(CausalCharacter c) noexcept {
    switch (c) {
        case CausalCharacter::spacelike: return "spacelike";
        case CausalCharacter::timelike: return "timelike";
        case CausalCharacter::null: return "null";
    }
    return "?";
}

const char* to_string(QuadricTag t) noexcept {
    switch (t) {
        case QuadricTag::pseudo_sphere: return "pseudo_sphere";
        case QuadricTag::pseudo_hyperbolic: return "pseudo_hyperbolic";
        case QuadricTag::hyperbolic_space: return "hyperbolic_space";
        case QuadricTag::none: return "none";
    }
    return "?";
}

}  // namespace rotgeo
