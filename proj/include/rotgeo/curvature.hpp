#pragma once

// Gaussian curvature and mean curvature vector of the 2-surfaces obtained by
// letting both rotation angles follow functions of a chart parameter t:
//   S(t, s) = immerse(family, x(t), a(t), s),   s = profile parameter.
// The closed-form expressions are evaluated as written and compared against
// finite-difference oracles built only from the immersion and the metric.

#include <array>
#include <functional>

#include "rotgeo/surface.hpp"

namespace rotgeo {

struct DoubleRotationSurface {
    SurfaceFamily family;
    ProfileFunction x_angle;  // first rotation angle as a function of t
    ProfileFunction v_angle;  // second rotation angle as a function of t
};

struct NormalFrame {
    Vector4 e3, e4;
};

/// Unit normals of the closed-form frame. For hyperbolic23 the closed form
/// is corrected by flipping slots 2 and 3 of both vectors, which restores
/// orthogonality to the tangent plane. Variant A only.
/// Throws Errc::frame_degenerate when a normalizing radicand is <= 0.
NormalFrame normal_frame(const DoubleRotationSurface& srf, double t, double s);

/// The closed-form frame exactly as written, without any correction.
NormalFrame printed_normal_frame(const DoubleRotationSurface& srf, double t, double s);

/// Induced metric (g_tt, g_ts, g_ss) from the analytic tangents.
std::array<double, 3> induced_metric(const DoubleRotationSurface& srf, double t, double s);

/// Tangents (S_t, S_s).
std::array<Vector4, 2> surface_tangents(const DoubleRotationSurface& srf, double t, double s);

using Metric2 = std::function<std::array<double, 3>(double, double)>;

/// K = R_1212 / det g for a 2-metric (g11, g12, g22), with metric partials
/// from central differences of step h. Valid for either signature.
double gaussian_curvature_fd(const Metric2& metric, double x, double y, double h);

/// H = 1/2 g^ij (d_i d_j S)^normal, second partials by central differences.
Vector4 mean_curvature_fd(const DoubleRotationSurface& srf, double t, double s, double h);

struct CurvatureReport {
    double K_formula = 0.0;
    double K_oracle = 0.0;
    double K_gap = 0.0;
    bool frame_admissible = false;  // the H fields below are NaN when false
    double h3 = 0.0, h4 = 0.0;
    Vector4 e3, e4;
    Vector4 H_formula;
    Vector4 H_oracle;
    double H_gap = 0.0;
    double span_residual = 0.0;       // |H_oracle - its projection on span{e3, e4}|
    double printed_frame_defect = 0.0; // max |<printed e_a, tangent>|, normalized tangents
};

double default_fd_step(double t, double s);

/// Throws Errc::degenerate_metric when det g = 0; requires variant A.
CurvatureReport curvature_report(const DoubleRotationSurface& srf, double t, double s,
                                 double fd_step);

}  // namespace rotgeo
