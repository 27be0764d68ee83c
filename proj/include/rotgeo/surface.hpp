#pragma once

// The three rotational families of E_2^4 as maps (u, v, t) -> E_2^4, where u
// and v are the two rotation angles and t the profile parameter.

#include <array>

#include "rotgeo/expr.hpp"
#include "rotgeo/killing.hpp"
#include "rotgeo/pseudometric.hpp"

namespace rotgeo {

enum class FamilyKind { hyperbolic14, hyperbolic23, elliptic56 };
enum class Variant { A, B };

const char* to_string(FamilyKind k) noexcept;
const char* to_string(Variant v) noexcept;

/// Profile placement in E_2^4 (fa, fb are the two active components):
///   hyperbolic14/A (fa, 0, 0, fb)    hyperbolic14/B (0, fb, fa, 0)
///   hyperbolic23/A (fa, fb, 0, 0)    hyperbolic23/B (0, 0, fb, fa)
///   elliptic56/A   (0, fa, 0, fb)    elliptic56/B   (fa, 0, fb, 0)
class SurfaceFamily {
public:
    SurfaceFamily(FamilyKind kind, Variant variant, ProfileFunction fa, ProfileFunction fb);

    FamilyKind kind() const { return kind_; }
    Variant variant() const { return variant_; }
    const ProfileFunction& fa() const { return fa_; }
    const ProfileFunction& fb() const { return fb_; }
    const Interval& domain() const { return fa_.domain(); }

    /// Generators whose flows shift u and v respectively.
    RotationGenerator u_generator() const;
    RotationGenerator v_generator() const;

private:
    FamilyKind kind_;
    Variant variant_;
    ProfileFunction fa_;
    ProfileFunction fb_;
};

/// Diagonal first fundamental form: E du^2 + G dv^2 + N dt^2 (off-diagonal
/// terms vanish for every family).
struct MetricCoefficients {
    double E = 0.0, G = 0.0, N = 0.0;
    bool degenerate() const { return E == 0.0 || G == 0.0 || N == 0.0; }
};

/// Coefficients together with their t-derivatives.
struct MetricJet {
    MetricCoefficients value;
    MetricCoefficients dt;
};

struct GeodesicState {
    double u = 0.0, v = 0.0, t = 0.0;
    double du = 0.0, dv = 0.0, dt = 0.0;
};

struct TangentFrame {
    Vector4 du, dv, dt;
};

struct LagrangianValue {
    double value = 0.0;
    bool degenerate = false;
};

/// E = sE fa^2, G = sG fb^2, N = nA fa'^2 + nB fb'^2 for the family's signs.
struct MetricSigns {
    double sE, sG, nA, nB;
};
MetricSigns metric_signs(FamilyKind kind, Variant variant);

MetricCoefficients metric_coefficients(const SurfaceFamily& fam, double t);
MetricJet metric_jet(const SurfaceFamily& fam, double t);

Vector4 immerse(const SurfaceFamily& fam, double u, double v, double t);
TangentFrame tangent_frame(const SurfaceFamily& fam, double u, double v, double t);

/// Pushes the state's velocity forward to E_2^4.
Vector4 velocity(const SurfaceFamily& fam, const GeodesicState& st);

LagrangianValue lagrangian(const SurfaceFamily& fam, const GeodesicState& st);

/// Rescales velocities so L = -1. Throws Errc::not_timelike when L >= 0.
GeodesicState normalize_timelike(const SurfaceFamily& fam, const GeodesicState& st);

}  // namespace rotgeo
