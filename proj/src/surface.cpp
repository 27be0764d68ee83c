#include "rotgeo/surface.hpp"

#include <cmath>

#include "rotgeo/error.hpp"

namespace rotgeo {
namespace {

// The immersion is linear in (fa, fb): point = ublock(fa, u) + vblock(fb, v).
// Each block returns the contribution and its angle derivative.
struct Block {
    Vector4 value;
    Vector4 d_angle;
};

Block u_block(FamilyKind k, Variant var, double a, double u) {
    const bool A = var == Variant::A;
    switch (k) {
        case FamilyKind::hyperbolic14: {
            const double c = std::cosh(u), s = std::sinh(u);
            if (A) return {{a * c, 0, a * s, 0}, {a * s, 0, a * c, 0}};
            return {{a * s, 0, a * c, 0}, {a * c, 0, a * s, 0}};
        }
        case FamilyKind::hyperbolic23: {
            const double c = std::cosh(u), s = std::sinh(u);
            if (A) return {{a * c, 0, 0, a * s}, {a * s, 0, 0, a * c}};
            return {{a * s, 0, 0, a * c}, {a * c, 0, 0, a * s}};
        }
        case FamilyKind::elliptic56: {
            const double c = std::cos(u), s = std::sin(u);
            if (A) return {{a * s, a * c, 0, 0}, {a * c, -a * s, 0, 0}};
            return {{a * c, -a * s, 0, 0}, {-a * s, -a * c, 0, 0}};
        }
    }
    return {};
}

Block v_block(FamilyKind k, Variant var, double b, double v) {
    const bool A = var == Variant::A;
    switch (k) {
        case FamilyKind::hyperbolic14: {
            const double c = std::cosh(v), s = std::sinh(v);
            if (A) return {{0, b * s, 0, b * c}, {0, b * c, 0, b * s}};
            return {{0, b * c, 0, b * s}, {0, b * s, 0, b * c}};
        }
        case FamilyKind::hyperbolic23: {
            const double c = std::cosh(v), s = std::sinh(v);
            if (A) return {{0, b * c, b * s, 0}, {0, b * s, b * c, 0}};
            return {{0, b * s, b * c, 0}, {0, b * c, b * s, 0}};
        }
        case FamilyKind::elliptic56: {
            const double c = std::cos(v), s = std::sin(v);
            if (A) return {{0, 0, b * s, b * c}, {0, 0, b * c, -b * s}};
            return {{0, 0, b * c, -b * s}, {0, 0, -b * s, -b * c}};
        }
    }
    return {};
}

}  // namespace

const char* to_string(FamilyKind k) noexcept {
    switch (k) {
        case FamilyKind::hyperbolic14: return "hyperbolic14";
        case FamilyKind::hyperbolic23: return "hyperbolic23";
        case FamilyKind::elliptic56: return "elliptic56";
    }
    return "?";
}

const char* to_string(Variant v) noexcept { return v == Variant::A ? "A" : "B"; }

SurfaceFamily::SurfaceFamily(FamilyKind kind, Variant variant, ProfileFunction fa,
                             ProfileFunction fb)
    : kind_(kind), variant_(variant), fa_(std::move(fa)), fb_(std::move(fb)) {
    if (fa_.domain().lo != fb_.domain().lo || fa_.domain().hi != fb_.domain().hi)
        throw Error(Errc::validation, "profile functions must share a common domain");
}

RotationGenerator SurfaceFamily::u_generator() const {
    switch (kind_) {
        case FamilyKind::hyperbolic14: return RotationGenerator::omega1;
        case FamilyKind::hyperbolic23: return RotationGenerator::omega2;
        case FamilyKind::elliptic56: return RotationGenerator::omega5;
    }
    return RotationGenerator::omega1;
}

RotationGenerator SurfaceFamily::v_generator() const {
    switch (kind_) {
        case FamilyKind::hyperbolic14: return RotationGenerator::omega4;
        case FamilyKind::hyperbolic23: return RotationGenerator::omega3;
        case FamilyKind::elliptic56: return RotationGenerator::omega6;
    }
    return RotationGenerator::omega4;
}

MetricSigns metric_signs(FamilyKind kind, Variant variant) {
    const bool A = variant == Variant::A;
    switch (kind) {
        case FamilyKind::hyperbolic14:
            return A ? MetricSigns{1, -1, -1, 1} : MetricSigns{-1, 1, 1, -1};
        case FamilyKind::hyperbolic23:
            // Variant B is the A metric with the overall sign flipped.
            return A ? MetricSigns{1, 1, -1, -1} : MetricSigns{-1, -1, 1, 1};
        case FamilyKind::elliptic56: return MetricSigns{-1, 1, -1, 1};
    }
    return {};
}

MetricJet metric_jet(const SurfaceFamily& fam, double t) {
    const auto a = fam.fa().jet(t);
    const auto b = fam.fb().jet(t);
    const MetricSigns s = metric_signs(fam.kind(), fam.variant());
    MetricJet j;
    j.value = {s.sE * a.f * a.f, s.sG * b.f * b.f, s.nA * a.df * a.df + s.nB * b.df * b.df};
    j.dt = {2.0 * s.sE * a.f * a.df, 2.0 * s.sG * b.f * b.df,
            2.0 * (s.nA * a.df * a.ddf + s.nB * b.df * b.ddf)};
    return j;
}

MetricCoefficients metric_coefficients(const SurfaceFamily& fam, double t) {
    const double a = fam.fa()(t), b = fam.fb()(t);
    const double da = evaluate(fam.fa().d1(), t), db = evaluate(fam.fb().d1(), t);
    const MetricSigns s = metric_signs(fam.kind(), fam.variant());
    return {s.sE * a * a, s.sG * b * b, s.nA * da * da + s.nB * db * db};
}

Vector4 immerse(const SurfaceFamily& fam, double u, double v, double t) {
    const double a = fam.fa()(t), b = fam.fb()(t);
    return u_block(fam.kind(), fam.variant(), a, u).value +
           v_block(fam.kind(), fam.variant(), b, v).value;
}

TangentFrame tangent_frame(const SurfaceFamily& fam, double u, double v, double t) {
    const auto a = fam.fa().jet(t);
    const auto b = fam.fb().jet(t);
    const Block ua = u_block(fam.kind(), fam.variant(), a.f, u);
    const Block vb = v_block(fam.kind(), fam.variant(), b.f, v);
    const Vector4 dt = u_block(fam.kind(), fam.variant(), a.df, u).value +
                       v_block(fam.kind(), fam.variant(), b.df, v).value;
    return {ua.d_angle, vb.d_angle, dt};
}

Vector4 velocity(const SurfaceFamily& fam, const GeodesicState& st) {
    const TangentFrame f = tangent_frame(fam, st.u, st.v, st.t);
    return st.du * f.du + st.dv * f.dv + st.dt * f.dt;
}

LagrangianValue lagrangian(const SurfaceFamily& fam, const GeodesicState& st) {
    const MetricCoefficients m = metric_coefficients(fam, st.t);
    return {m.E * st.du * st.du + m.G * st.dv * st.dv + m.N * st.dt * st.dt, m.degenerate()};
}

GeodesicState normalize_timelike(const SurfaceFamily& fam, const GeodesicState& st) {
    const double L = lagrangian(fam, st).value;
    if (!(L < 0.0)) throw Error(Errc::not_timelike, "state is not timelike (L >= 0)");
    const double k = 1.0 / std::sqrt(-L);
    GeodesicState out = st;
    out.du *= k;
    out.dv *= k;
    out.dt *= k;
    return out;
}

}  // namespace rotgeo
