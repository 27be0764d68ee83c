#pragma once

// Euler-Lagrange geodesic flow on the rotational 3-manifolds, the conserved
// momenta of the two cyclic angles, and the Clairaut-type angle quantities.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rotgeo/surface.hpp"

namespace rotgeo {

/// (du, dv, dt, d2u, d2v, d2t) with respect to the curve parameter s.
struct StateDerivative {
    double du = 0.0, dv = 0.0, dt = 0.0;
    double ddu = 0.0, ddv = 0.0, ddt = 0.0;
};

/// Euler-Lagrange system of L = E du^2 + G dv^2 + N dt^2:
///   d2u = -(E'/E) du dt,  d2v = -(G'/G) dv dt,
///   d2t = (E' du^2 + G' dv^2 - N' dt^2) / (2N).
/// Throws Errc::degenerate_metric when E, G or N vanishes.
StateDerivative geodesic_rhs(const SurfaceFamily& fam, const GeodesicState& st);

/// max |accel - geodesic_rhs accel| over the three coordinates.
double geodesic_equation_residual(const SurfaceFamily& fam, const GeodesicState& st, double ddu,
                                  double ddv, double ddt);

struct Momenta {
    double p_u = 0.0, p_v = 0.0;
};

/// p_u = 2 E du, p_v = 2 G dv.
Momenta momenta(const SurfaceFamily& fam, const GeodesicState& st);

struct AngleDecomposition {
    double phi = 0.0;
    double theta = 0.0;
    bool defined = false;
    double residual = 0.0;
};

inline constexpr double kAngleTolerance = 1e-9;

/// Inverts the family's velocity decomposition:
///   hyperbolic14: fa du = cos phi,            fb dv = cosh theta sin phi,  dt = sinh theta sin phi
///   hyperbolic23: fa du = cos theta sinh phi, fb dv = sin theta sinh phi,  dt = cosh phi
///   elliptic56:   fa du = sin phi cosh theta, fb dv = sin phi sinh theta,  dt = cos phi
/// The two equations carrying fa du and fb dv are solved exactly; the
/// residual is the largest mismatch of all three. Variant B of the
/// hyperbolic families has no such decomposition and reports undefined.
AngleDecomposition extract_angles(const SurfaceFamily& fam, const GeodesicState& st,
                                  double tol = kAngleTolerance);

/// Velocities from angles using the same decomposition equations.
GeodesicState state_from_angles(const SurfaceFamily& fam, double u, double v, double t,
                                double phi, double theta);

/// invariant1 = sign_u * p_u and invariant2 = sign_v * p_v.
struct ClairautSigns {
    double u = 1.0, v = 1.0;
};
ClairautSigns clairaut_signs(const SurfaceFamily& fam);

struct ClairautReport {
    double L = 0.0;
    double p_u = 0.0, p_v = 0.0;
    double invariant1 = 0.0, invariant2 = 0.0;
    AngleDecomposition angles;
};

ClairautReport clairaut_report(const SurfaceFamily& fam, const GeodesicState& st,
                               double tol = kAngleTolerance);

struct SlopeReport {
    double state_slope = 0.0;            // dt/du
    std::optional<double> paper_slope;   // closed-form dt/du from angles and L
    double match = 0.0;                  // |state_slope| - |paper_slope|
    bool imaginary_factor = false;       // elliptic56: i*sqrt(negative) folded to a real
    std::optional<double> state_slope_v; // dt/dv when dv != 0
    std::optional<double> paper_slope_v;
};

/// Throws Errc::meridian_undefined when du == 0.
SlopeReport slope(const SurfaceFamily& fam, const GeodesicState& st,
                  double tol = kAngleTolerance);

enum class Method { rk4 };

enum class IntegrationStatus { completed, domain_exit, degenerate_metric, nonfinite_state };

const char* to_string(IntegrationStatus s) noexcept;

struct TrajectorySample {
    double s = 0.0;
    GeodesicState state;
    double L = 0.0;
    double p_u = 0.0, p_v = 0.0;
    double inv1 = 0.0, inv2 = 0.0;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    IntegrationStatus status = IntegrationStatus::completed;
    double requested_length = 0.0;
    double last_valid_s = 0.0;
    std::string message;

    const TrajectorySample& back() const { return samples.back(); }
};

/// Fixed-step classical RK4. Samples every step plus s = length. Stops at the
/// last good sample on domain exit, degeneracy or a non-finite state and
/// records why in `status`. Throws Errc::precondition for invalid step/length.
Trajectory integrate(const SurfaceFamily& fam, const GeodesicState& st0, double length,
                     double step, Method method = Method::rk4);

struct Drift {
    double p_u = 0.0, p_v = 0.0, L = 0.0, inv1 = 0.0, inv2 = 0.0;
};

/// Largest departure of each diagnostic from its value at s = 0.
Drift drift(const Trajectory& traj);

struct IsometryCheck {
    double membership = 0.0;        // max |M c(s) - immerse(shifted coordinates)|
    double geodesic_residual = 0.0; // max coordinate geodesic-equation residual
    std::size_t points = 0;
};

/// Maps every sample through rotation_matrix(gen, angle), pulls the images
/// back through the shifted angle, and measures the geodesic equation on the
/// image curve with second differences in E_2^4. `gen` must be one of the
/// family's own generators (Errc::precondition otherwise).
IsometryCheck isometry_check(const SurfaceFamily& fam, const Trajectory& traj,
                             RotationGenerator gen, double angle);

}  // namespace rotgeo
