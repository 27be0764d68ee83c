#include "rotgeo/kernels.hpp"

#include <exception>
#include <limits>

#include "rotgeo/error.hpp"

namespace rotgeo {
namespace {

void check_spec(const CurvatureGridSpec& spec) {
    if (spec.nt == 0 || spec.ns == 0) throw Error(Errc::precondition, "grid needs nt, ns >= 1");
    if (spec.fd_step < 0.0) throw Error(Errc::precondition, "fd_step must be >= 0");
}

CurvatureRow grid_point(const DoubleRotationSurface& srf, const CurvatureGridSpec& spec,
                        std::size_t i, std::size_t j) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    CurvatureRow row{};
    row.t = grid_coordinate(spec.t_range, spec.nt, i);
    row.s = grid_coordinate(spec.s_range, spec.ns, j);
    try {
        const double h = spec.fd_step > 0.0 ? spec.fd_step : default_fd_step(row.t, row.s);
        const CurvatureReport r = curvature_report(srf, row.t, row.s, h);
        row.K_formula = r.K_formula;
        row.K_oracle = r.K_oracle;
        row.K_gap = r.K_gap;
        row.h3 = r.h3;
        row.h4 = r.h4;
        row.H_gap = r.H_gap;
        row.ok = true;
    } catch (const Error&) {
        row.K_formula = row.K_oracle = row.K_gap = row.h3 = row.h4 = row.H_gap = nan;
    }
    return row;
}

}  // namespace

double grid_coordinate(const Interval& r, std::size_t n, std::size_t i) {
    return r.lo + (static_cast<double>(i) + 0.5) * (r.hi - r.lo) / static_cast<double>(n);
}

std::vector<CurvatureRow> curvature_grid_serial(const DoubleRotationSurface& srf,
                                                const CurvatureGridSpec& spec) {
    check_spec(spec);
    std::vector<CurvatureRow> rows(spec.nt * spec.ns);
    for (std::size_t i = 0; i < spec.nt; ++i)
        for (std::size_t j = 0; j < spec.ns; ++j) rows[i * spec.ns + j] = grid_point(srf, spec, i, j);
    return rows;
}

std::vector<CurvatureRow> curvature_grid(const DoubleRotationSurface& srf,
                                         const CurvatureGridSpec& spec) {
    check_spec(spec);
    const long n = static_cast<long>(spec.nt * spec.ns);
    std::vector<CurvatureRow> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        rows[idx] = grid_point(srf, spec, idx / spec.ns, idx % spec.ns);
    }
    return rows;
}

std::vector<Trajectory> integrate_batch_serial(const SurfaceFamily& fam,
                                               const std::vector<GeodesicState>& starts,
                                               double length, double step) {
    std::vector<Trajectory> out;
    out.reserve(starts.size());
    for (const auto& st : starts) out.push_back(integrate(fam, st, length, step));
    return out;
}

std::vector<Trajectory> integrate_batch(const SurfaceFamily& fam,
                                        const std::vector<GeodesicState>& starts,
                                        double length, double step) {
    const long n = static_cast<long>(starts.size());
    std::vector<Trajectory> out(starts.size());
    std::vector<std::exception_ptr> failures(starts.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        try {
            out[idx] = integrate(fam, starts[idx], length, step);
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    }
    // same exception the serial loop would have raised first
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return out;
}

}  // namespace rotgeo
