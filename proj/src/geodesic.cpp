#include "rotgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rotgeo/error.hpp"

namespace rotgeo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool has_decomposition(const SurfaceFamily& fam) {
    return fam.variant() == Variant::A || fam.kind() == FamilyKind::elliptic56;
}

AngleDecomposition undefined(double residual) { return {0.0, 0.0, false, residual}; }

double max3(double a, double b, double c) { return std::max({a, b, c}); }

}  // namespace

StateDerivative geodesic_rhs(const SurfaceFamily& fam, const GeodesicState& st) {
    const MetricJet m = metric_jet(fam, st.t);
    if (m.value.degenerate()) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "degenerate metric at t=%.17g", st.t);
        throw Error(Errc::degenerate_metric, buf);
    }
    StateDerivative d;
    d.du = st.du;
    d.dv = st.dv;
    d.dt = st.dt;
    d.ddu = -(m.dt.E / m.value.E) * st.du * st.dt;
    d.ddv = -(m.dt.G / m.value.G) * st.dv * st.dt;
    d.ddt = (m.dt.E * st.du * st.du + m.dt.G * st.dv * st.dv - m.dt.N * st.dt * st.dt) /
            (2.0 * m.value.N);
    return d;
}

double geodesic_equation_residual(const SurfaceFamily& fam, const GeodesicState& st, double ddu,
                                  double ddv, double ddt) {
    const StateDerivative d = geodesic_rhs(fam, st);
    return max3(std::abs(ddu - d.ddu), std::abs(ddv - d.ddv), std::abs(ddt - d.ddt));
}

Momenta momenta(const SurfaceFamily& fam, const GeodesicState& st) {
    const MetricCoefficients m = metric_coefficients(fam, st.t);
    return {2.0 * m.E * st.du, 2.0 * m.G * st.dv};
}

AngleDecomposition extract_angles(const SurfaceFamily& fam, const GeodesicState& st,
                                  double tol) {
    if (!has_decomposition(fam)) return undefined(kInf);
    const double a = fam.fa()(st.t) * st.du;  // fa du
    const double b = fam.fb()(st.t) * st.dv;  // fb dv
    const double c = st.dt;

    switch (fam.kind()) {
        case FamilyKind::hyperbolic14: {
            const double consistency = std::abs(a * a + b * b - c * c - 1.0);
            if (std::abs(a) > 1.0) return undefined(consistency);
            const double phi = std::acos(a);
            const double sp = std::sin(phi);
            double theta = 0.0;
            if (sp > 0.0) {
                const double ch = b / sp;
                if (ch >= 1.0) theta = std::copysign(std::acosh(ch), c);
            }
            const double residual =
                max3(std::abs(std::cos(phi) - a), std::abs(std::cosh(theta) * sp - b),
                     std::abs(std::sinh(theta) * sp - c));
            return {phi, theta, residual <= tol, residual};
        }
        case FamilyKind::hyperbolic23: {
            const double sh = std::hypot(a, b);
            const double phi = std::asinh(sh);
            const double theta = (a == 0.0 && b == 0.0) ? 0.0 : std::atan2(b, a);
            const double residual =
                max3(std::abs(std::cos(theta) * sh - a), std::abs(std::sin(theta) * sh - b),
                     std::abs(std::cosh(phi) - c));
            return {phi, theta, residual <= tol, residual};
        }
        case FamilyKind::elliptic56: {
            // sin phi cosh theta = a and sin phi sinh theta = b need a > |b|,
            // or a = b = 0 (phi at 0 or pi).
            double phi = 0.0, theta = 0.0, sp = 0.0;
            if (a > std::abs(b)) {
                sp = std::sqrt((a - b) * (a + b));
                theta = std::atanh(b / a);
                phi = std::atan2(sp, c);
            } else if (a == 0.0 && b == 0.0) {
                phi = c < 0.0 ? std::acos(-1.0) : 0.0;
            } else {
                return undefined(std::abs(a * a - b * b + c * c - 1.0));
            }
            const double residual =
                max3(std::abs(sp * std::cosh(theta) - a), std::abs(sp * std::sinh(theta) - b),
                     std::abs(std::cos(phi) - c));
            return {phi, theta, residual <= tol, residual};
        }
    }
    return undefined(kInf);
}

GeodesicState state_from_angles(const SurfaceFamily& fam, double u, double v, double t,
                                double phi, double theta) {
    if (!has_decomposition(fam))
        throw Error(Errc::precondition,
                    "angle-style initial conditions are not available for this variant");
    const double fa = fam.fa()(t);
    const double fb = fam.fb()(t);
    if (fa == 0.0 || fb == 0.0) throw Error(Errc::degenerate_metric, "profile vanishes at t");
    double a = 0.0, b = 0.0, c = 0.0;
    switch (fam.kind()) {
        case FamilyKind::hyperbolic14:
            a = std::cos(phi);
            b = std::cosh(theta) * std::sin(phi);
            c = std::sinh(theta) * std::sin(phi);
            break;
        case FamilyKind::hyperbolic23:
            a = std::cos(theta) * std::sinh(phi);
            b = std::sin(theta) * std::sinh(phi);
            c = std::cosh(phi);
            break;
        case FamilyKind::elliptic56:
            a = std::sin(phi) * std::cosh(theta);
            b = std::sin(phi) * std::sinh(theta);
            c = std::cos(phi);
            break;
    }
    return {u, v, t, a / fa, b / fb, c};
}

ClairautSigns clairaut_signs(const SurfaceFamily& fam) {
    // The Clairaut invariants reduce to 2 fa^2 du and (-)2 fb^2 dv, while the
    // momenta are 2 E du and 2 G dv with E = sE fa^2, G = sG fb^2.
    const MetricSigns s = metric_signs(fam.kind(), fam.variant());
    const double v_sign = fam.kind() == FamilyKind::hyperbolic14 ? -s.sG : s.sG;
    return {s.sE, v_sign};
}

ClairautReport clairaut_report(const SurfaceFamily& fam, const GeodesicState& st, double tol) {
    ClairautReport r;
    r.L = lagrangian(fam, st).value;
    const Momenta p = momenta(fam, st);
    r.p_u = p.p_u;
    r.p_v = p.p_v;
    r.angles = extract_angles(fam, st, tol);
    if (r.angles.defined) {
        const double fa = fam.fa()(st.t);
        const double fb = fam.fb()(st.t);
        const double phi = r.angles.phi, th = r.angles.theta;
        switch (fam.kind()) {
            case FamilyKind::hyperbolic14:
                r.invariant1 = 2.0 * fa * std::cos(phi);
                r.invariant2 = -2.0 * fb * std::cosh(th) * std::sin(phi);
                break;
            case FamilyKind::hyperbolic23:
                r.invariant1 = 2.0 * fa * std::cos(th) * std::sinh(phi);
                r.invariant2 = 2.0 * fb * std::sin(th) * std::sinh(phi);
                break;
            case FamilyKind::elliptic56:
                r.invariant1 = 2.0 * fa * std::sin(phi) * std::cosh(th);
                r.invariant2 = 2.0 * fb * std::sinh(th) * std::sin(phi);
                break;
        }
    } else {
        const ClairautSigns s = clairaut_signs(fam);
        r.invariant1 = s.u * r.p_u;
        r.invariant2 = s.v * r.p_v;
    }
    return r;
}

SlopeReport slope(const SurfaceFamily& fam, const GeodesicState& st, double tol) {
    if (st.du == 0.0)
        throw Error(Errc::meridian_undefined, "dt/du is undefined on a meridian (du = 0)");
    SlopeReport out;
    out.state_slope = st.dt / st.du;
    if (st.dv != 0.0) out.state_slope_v = st.dt / st.dv;

    const AngleDecomposition ang = extract_angles(fam, st, tol);
    if (!ang.defined) return out;
    const double L = lagrangian(fam, st).value;
    const double fa = fam.fa()(st.t);
    const double fb = fam.fb()(st.t);
    const double phi = ang.phi, th = ang.theta;

    switch (fam.kind()) {
        case FamilyKind::hyperbolic14: {
            const double cp = std::cos(phi), sp = std::sin(phi);
            const double ch = std::cosh(th);
            if (cp != 0.0) {
                const double tan2 = (sp / cp) * (sp / cp);
                const double r = 1.0 - ch * ch * tan2 - L / (cp * cp);
                if (r >= 0.0) out.paper_slope = fa * std::sqrt(r);
            }
            // Second display, with the profile fb in place of the printed f2.
            if (sp != 0.0 && cp != 0.0 && th != 0.0) {
                const double cot2 = (cp / sp) * (cp / sp);
                const double tanh2 = std::tanh(th) * std::tanh(th);
                const double sech2 = 1.0 / (std::cosh(phi) * std::cosh(phi));
                const double r = cot2 * tanh2 - L * sech2 / (sp * sp);
                if (r >= 0.0) out.paper_slope_v = fb * std::sqrt(r);
            }
            break;
        }
        case FamilyKind::hyperbolic23: {
            const double sh = std::sinh(phi);
            const double r = sh * sh - L;
            if (r >= 0.0 && sh != 0.0) {
                if (std::cos(th) != 0.0)
                    out.paper_slope = fa * std::sqrt(r) / (std::cos(th) * sh);
                if (std::sin(th) != 0.0)
                    out.paper_slope_v = fb * std::sqrt(r) / (sh * std::sin(th));
            }
            break;
        }
        case FamilyKind::elliptic56: {
            // i * sqrt(r) with r <= 0 is the real number -sqrt(-r).
            const double sp = std::sin(phi);
            const double r = L + sp * sp;
            if (r <= 0.0 && sp != 0.0) {
                out.imaginary_factor = true;
                out.paper_slope = -fa * std::sqrt(-r) / (sp * std::cosh(th));
                if (th != 0.0) out.paper_slope_v = -fb * std::sqrt(-r) / (std::sinh(th) * sp);
            }
            break;
        }
    }
    if (out.paper_slope) out.match = std::abs(out.state_slope) - std::abs(*out.paper_slope);
    return out;
}

const char* to_string(IntegrationStatus s) noexcept {
    switch (s) {
        case IntegrationStatus::completed: return "completed";
        case IntegrationStatus::domain_exit: return "domain_exit";
        case IntegrationStatus::degenerate_metric: return "degenerate_metric";
        case IntegrationStatus::nonfinite_state: return "nonfinite_state";
    }
    return "?";
}

namespace {

GeodesicState advance(const GeodesicState& st, const StateDerivative& d, double h) {
    return {st.u + h * d.du,   st.v + h * d.dv,   st.t + h * d.dt,
            st.du + h * d.ddu, st.dv + h * d.ddv, st.dt + h * d.ddt};
}

bool finite(const GeodesicState& s) {
    return std::isfinite(s.u) && std::isfinite(s.v) && std::isfinite(s.t) &&
           std::isfinite(s.du) && std::isfinite(s.dv) && std::isfinite(s.dt);
}

struct StepFailure {
    IntegrationStatus status;
    std::string message;
};

StateDerivative checked_rhs(const SurfaceFamily& fam, const GeodesicState& st) {
    if (!finite(st)) throw StepFailure{IntegrationStatus::nonfinite_state, "non-finite state"};
    if (!fam.domain().contains(st.t)) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "left the profile domain at t=%.17g", st.t);
        throw StepFailure{IntegrationStatus::domain_exit, buf};
    }
    try {
        return geodesic_rhs(fam, st);
    } catch (const Error& e) {
        if (e.code() == Errc::degenerate_metric)
            throw StepFailure{IntegrationStatus::degenerate_metric, e.what()};
        throw StepFailure{IntegrationStatus::nonfinite_state, e.what()};
    }
}

GeodesicState rk4_step(const SurfaceFamily& fam, const GeodesicState& st, double h) {
    const StateDerivative k1 = checked_rhs(fam, st);
    const StateDerivative k2 = checked_rhs(fam, advance(st, k1, 0.5 * h));
    const StateDerivative k3 = checked_rhs(fam, advance(st, k2, 0.5 * h));
    const StateDerivative k4 = checked_rhs(fam, advance(st, k3, h));
    const auto comb = [h](double y, double a, double b, double c, double d) {
        return y + h / 6.0 * (a + 2.0 * b + 2.0 * c + d);
    };
    GeodesicState out{comb(st.u, k1.du, k2.du, k3.du, k4.du),
                      comb(st.v, k1.dv, k2.dv, k3.dv, k4.dv),
                      comb(st.t, k1.dt, k2.dt, k3.dt, k4.dt),
                      comb(st.du, k1.ddu, k2.ddu, k3.ddu, k4.ddu),
                      comb(st.dv, k1.ddv, k2.ddv, k3.ddv, k4.ddv),
                      comb(st.dt, k1.ddt, k2.ddt, k3.ddt, k4.ddt)};
    if (!finite(out)) throw StepFailure{IntegrationStatus::nonfinite_state, "non-finite state"};
    if (!fam.domain().contains(out.t)) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "left the profile domain at t=%.17g", out.t);
        throw StepFailure{IntegrationStatus::domain_exit, buf};
    }
    return out;
}

TrajectorySample make_sample(const SurfaceFamily& fam, double s, const GeodesicState& st) {
    const ClairautReport r = clairaut_report(fam, st);
    return {s, st, r.L, r.p_u, r.p_v, r.invariant1, r.invariant2};
}

}  // namespace

Trajectory integrate(const SurfaceFamily& fam, const GeodesicState& st0, double length,
                     double step, Method method) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw Error(Errc::precondition, "integration length must be positive");
    if (!(step > 0.0) || !std::isfinite(step))
        throw Error(Errc::precondition, "integration step must be positive");
    if (step > length) throw Error(Errc::precondition, "integration step exceeds length");
    if (method != Method::rk4) throw Error(Errc::precondition, "unknown integration method");
    if (!finite(st0) || !fam.domain().contains(st0.t))
        throw Error(Errc::precondition, "initial state must be finite and inside the domain");

    Trajectory traj;
    traj.requested_length = length;

    // Full steps land on k * step; a shortened last step reaches `length`.
    const double ratio = length / step;
    const double nearest = std::round(ratio);
    const bool exact = std::abs(ratio - nearest) <= 1e-9 * nearest;
    const auto full = static_cast<std::size_t>(exact ? nearest : std::floor(ratio));
    const std::size_t total = exact ? full : full + 1;
    traj.samples.reserve(total + 1);

    GeodesicState st = st0;
    try {
        traj.samples.push_back(make_sample(fam, 0.0, st));
        checked_rhs(fam, st);
        double s_prev = 0.0;
        for (std::size_t k = 1; k <= total; ++k) {
            const double s = (k == total) ? length : static_cast<double>(k) * step;
            st = rk4_step(fam, st, s - s_prev);
            traj.samples.push_back(make_sample(fam, s, st));
            s_prev = s;
        }
    } catch (const StepFailure& f) {
        traj.status = f.status;
        traj.message = f.message;
    } catch (const Error& e) {
        traj.status = e.code() == Errc::degenerate_metric ? IntegrationStatus::degenerate_metric
                                                          : IntegrationStatus::nonfinite_state;
        traj.message = e.what();
    }
    traj.last_valid_s = traj.samples.empty() ? 0.0 : traj.samples.back().s;
    return traj;
}

Drift drift(const Trajectory& traj) {
    Drift d;
    if (traj.samples.empty()) return d;
    const TrajectorySample& s0 = traj.samples.front();
    for (const auto& s : traj.samples) {
        d.p_u = std::max(d.p_u, std::abs(s.p_u - s0.p_u));
        d.p_v = std::max(d.p_v, std::abs(s.p_v - s0.p_v));
        d.L = std::max(d.L, std::abs(s.L - s0.L));
        d.inv1 = std::max(d.inv1, std::abs(s.inv1 - s0.inv1));
        d.inv2 = std::max(d.inv2, std::abs(s.inv2 - s0.inv2));
    }
    return d;
}

IsometryCheck isometry_check(const SurfaceFamily& fam, const Trajectory& traj,
                             RotationGenerator gen, double angle) {
    const bool shift_u = gen == fam.u_generator();
    const bool shift_v = gen == fam.v_generator();
    if (!shift_u && !shift_v) {
        throw Error(Errc::precondition, std::string("generator ") + to_string(gen) +
                                            " does not act on this family's angles");
    }
    const Matrix4 M = rotation_matrix(gen, angle);
    const auto& smp = traj.samples;
    IsometryCheck out;
    for (std::size_t k = 1; k + 1 < smp.size(); ++k) {
        const double h0 = smp[k].s - smp[k - 1].s;
        const double h1 = smp[k + 1].s - smp[k].s;
        if (std::abs(h1 - h0) > 1e-9 * h0) continue;  // shortened last step

        const auto image = [&](const GeodesicState& st) {
            return M * immerse(fam, st.u, st.v, st.t);
        };
        const Vector4 pm = image(smp[k - 1].state);
        const Vector4 p0 = image(smp[k].state);
        const Vector4 pp = image(smp[k + 1].state);

        GeodesicState pulled = smp[k].state;
        (shift_u ? pulled.u : pulled.v) += angle;
        const Vector4 q = immerse(fam, pulled.u, pulled.v, pulled.t);
        for (std::size_t i = 0; i < 4; ++i)
            out.membership = std::max(out.membership, std::abs(q[i] - p0[i]));

        const Vector4 accel = (1.0 / (h0 * h0)) * (pp - 2.0 * p0 + pm);
        const TangentFrame f = tangent_frame(fam, pulled.u, pulled.v, pulled.t);
        const MetricCoefficients g = metric_coefficients(fam, pulled.t);
        const double ru = inner(accel, f.du) / g.E;
        const double rv = inner(accel, f.dv) / g.G;
        const double rt = inner(accel, f.dt) / g.N;
        out.geodesic_residual =
            std::max(out.geodesic_residual, max3(std::abs(ru), std::abs(rv), std::abs(rt)));
        ++out.points;
    }
    return out;
}

}  // namespace rotgeo
