#pragma once

// Grid and batch drivers. Each has a plain serial loop and an OpenMP version;
// the serial one is the reference the parallel one is tested against. Both
// produce identical results, point for point.

#include <cstddef>
#include <vector>

#include "rotgeo/curvature.hpp"
#include "rotgeo/geodesic.hpp"

namespace rotgeo {

struct CurvatureGridSpec {
    Interval t_range;
    Interval s_range;
    std::size_t nt = 10, ns = 10;
    double fd_step = 0.0;  // 0 selects default_fd_step at each point
};

struct CurvatureRow {
    double t = 0.0, s = 0.0;
    double K_formula = 0.0, K_oracle = 0.0, K_gap = 0.0;
    double h3 = 0.0, h4 = 0.0, H_gap = 0.0;
    bool ok = false;  // false when the point threw; the numeric fields are NaN
};

/// Cell-centred grid point (i, j); keeps difference stencils inside the ranges.
double grid_coordinate(const Interval& r, std::size_t n, std::size_t i);

/// Row-major in t: row index = i * ns + j.
std::vector<CurvatureRow> curvature_grid_serial(const DoubleRotationSurface& srf,
                                                const CurvatureGridSpec& spec);
std::vector<CurvatureRow> curvature_grid(const DoubleRotationSurface& srf,
                                         const CurvatureGridSpec& spec);

std::vector<Trajectory> integrate_batch_serial(const SurfaceFamily& fam,
                                               const std::vector<GeodesicState>& starts,
                                               double length, double step);
std::vector<Trajectory> integrate_batch(const SurfaceFamily& fam,
                                        const std::vector<GeodesicState>& starts,
                                        double length, double step);

}  // namespace rotgeo
