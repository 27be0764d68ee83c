#pragma once

// Run configuration: one JSON document per run. Unknown keys are rejected.
// Validation failures throw Error(Errc::validation) with the dotted field
// name at the start of the message, e.g. "geodesic.step: must be > 0".

#include <cstddef>
#include <optional>
#include <string>

#include "rotgeo/curvature.hpp"
#include "rotgeo/geodesic.hpp"

namespace rotgeo {

struct AngleStart {
    double u = 0.0, v = 0.0, t = 0.0, phi = 0.0, theta = 0.0;
};

struct GeodesicConfig {
    std::optional<GeodesicState> state;  // velocity-style start
    std::optional<AngleStart> angles;    // angle-style start; exactly one is set
    double length = 5.0;
    double step = 1e-3;
    bool normalize = false;
};

struct CurvatureConfig {
    std::string x_angle;
    std::string v_angle;
    Interval t_domain{-1.0, 1.0};
    std::size_t nt = 10, ns = 10;
    double fd_step = 0.0;  // 0: default_fd_step
};

enum class OutputFormat { csv, json };

struct OutputConfig {
    std::string path = "rotgeo_out.csv";
    OutputFormat format = OutputFormat::csv;
};

struct RunConfig {
    FamilyKind family = FamilyKind::hyperbolic14;
    Variant variant = Variant::A;
    std::string fa, fb;
    Interval domain;
    std::optional<GeodesicConfig> geodesic;
    std::optional<CurvatureConfig> curvature;
    OutputConfig output;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

/// Builds the family; expression errors are reported against profiles.fa/fb.
SurfaceFamily make_family(const RunConfig& cfg);
DoubleRotationSurface make_surface(const RunConfig& cfg);

struct InitialState {
    GeodesicState state;
    std::optional<double> decomposition_residual;  // angle-style starts only
};

/// Resolves the initial condition (angles converted, optional normalization).
/// Throws validation errors for inconsistent input and Errc::not_timelike when
/// normalization is impossible.
InitialState initial_state(const RunConfig& cfg, const SurfaceFamily& fam);

}  // namespace rotgeo
