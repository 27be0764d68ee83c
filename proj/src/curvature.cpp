#include "rotgeo/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rotgeo/error.hpp"

namespace rotgeo {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Profile jets (P, Q) and angle jets (X, V) at one chart point. P and Q are
// the family's two active profile components in their printed roles:
// hyperbolic14 (f1, f4), hyperbolic23 (f1, f2), elliptic56 (f2, f4).
struct Jets {
    ProfileFunction::Jet P, Q, X, V;
};

Jets jets(const DoubleRotationSurface& srf, double t, double s) {
    return {srf.family.fa().jet(s), srf.family.fb().jet(s), srf.x_angle.jet(t),
            srf.v_angle.jet(t)};
}

void require_variant_a(const DoubleRotationSurface& srf) {
    if (srf.family.variant() != Variant::A)
        throw Error(Errc::precondition, "closed-form curvature expressions cover variant A only");
}

// Radicands of the e3 and e4 normalizations.
std::array<double, 2> radicands(FamilyKind k, const Jets& j) {
    const double P = j.P.f, Q = j.Q.f, dP = j.P.df, dQ = j.Q.df;
    const double xd = j.X.df, vd = j.V.df;
    switch (k) {
        case FamilyKind::hyperbolic14:
            return {Q * Q * vd * vd - P * P * xd * xd, dQ * dQ - dP * dP};
        case FamilyKind::hyperbolic23:
            return {Q * Q * vd * vd + P * P * xd * xd, dP * dP + dQ * dQ};
        case FamilyKind::elliptic56:
            return {-P * P * xd * xd + Q * Q * vd * vd, -dP * dP + dQ * dQ};
    }
    return {0.0, 0.0};
}

NormalFrame printed_frame(FamilyKind k, const Jets& j) {
    const auto [D3, D4] = radicands(k, j);
    if (!(D3 > 0.0) || !(D4 > 0.0))
        throw Error(Errc::frame_degenerate, "normal frame radicand is not positive");
    const double n3 = 1.0 / std::sqrt(D3), n4 = 1.0 / std::sqrt(D4);
    const double P = j.P.f, Q = j.Q.f, dP = j.P.df, dQ = j.Q.df;
    const double x = j.X.f, a = j.V.f, xd = j.X.df, ad = j.V.df;
    switch (k) {
        case FamilyKind::hyperbolic14: {
            const double chx = std::cosh(x), shx = std::sinh(x);
            const double cha = std::cosh(a), sha = std::sinh(a);
            return {n3 * Vector4{Q * ad * shx, P * xd * cha, Q * ad * chx, P * xd * sha},
                    n4 * Vector4{dQ * chx, dP * sha, dQ * shx, dP * cha}};
        }
        case FamilyKind::hyperbolic23: {
            const double chy = std::cosh(x), shy = std::sinh(x);
            const double chz = std::cosh(a), shz = std::sinh(a);
            return {n3 * Vector4{Q * ad * shy, P * xd * shz, P * xd * chz, Q * ad * chy},
                    n4 * Vector4{dQ * chy, dP * chz, dP * shz, dQ * shy}};
        }
        case FamilyKind::elliptic56: {
            const double cb = std::cos(x), sb = std::sin(x);
            const double ct = std::cos(a), st = std::sin(a);
            return {n3 * Vector4{-Q * ad * cb, Q * ad * sb, -P * xd * ct, P * xd * st},
                    n4 * Vector4{dQ * sb, dQ * cb, dP * st, dP * ct}};
        }
    }
    return {};
}

double formula_K(FamilyKind k, const Jets& j) {
    const double P = j.P.f, Q = j.Q.f, dP = j.P.df, dQ = j.Q.df, ddP = j.P.ddf, ddQ = j.Q.ddf;
    const double xd = j.X.df, ad = j.V.df;
    const auto [D3, D4] = radicands(k, j);
    switch (k) {
        case FamilyKind::hyperbolic14: {
            const double w = dP * Q - P * dQ;
            return w * w * (xd * ad) * (xd * ad) / D3 +
                   (dP * Q * ad * ad - dQ * P * xd * xd) * (dP * ddQ - ddP * dQ) / D4;
        }
        case FamilyKind::hyperbolic23: {
            const double w = P * dQ + dP * Q;
            return -(w * w * (xd * ad) * (xd * ad) / D3 +
                     (P * dQ * xd * xd + dP * Q * ad * ad) * (ddP * dQ + dP * ddQ) / D4);
        }
        case FamilyKind::elliptic56: {
            const double w = dP * Q - P * dQ;
            const double m = dQ * P * xd * xd - dP * Q * ad * ad;
            return -(w * w * (xd * ad) * (xd * ad) / D3 + (-ddP * dQ + dP * ddQ) * m * m / D4);
        }
    }
    return kNaN;
}

std::array<double, 2> formula_h(FamilyKind k, const Jets& j) {
    const double P = j.P.f, Q = j.Q.f, dP = j.P.df, dQ = j.Q.df, ddP = j.P.ddf, ddQ = j.Q.ddf;
    const double xd = j.X.df, ad = j.V.df, xdd = j.X.ddf, add = j.V.ddf;
    const auto [D3, D4] = radicands(k, j);
    const double r3 = 2.0 * std::sqrt(D3), r4 = 2.0 * std::sqrt(D4);
    switch (k) {
        case FamilyKind::hyperbolic14:
            return {P * Q * (xdd * ad + xd * add) / r3 + (dQ * P * xd * xd - dP * Q * ad * ad) / r4,
                    (dP * ddQ - ddP * dQ) / r4};
        case FamilyKind::hyperbolic23:
            return {P * Q * (xd * add + xdd * ad) / r3,
                    (P * dQ * xd * xd + dP * Q * ad * ad - ddP * dQ - dP * ddQ) / r4};
        case FamilyKind::elliptic56:
            return {Q * P * (xd * add - ad * xdd) / r3,
                    (dQ * P * xd * xd - dP * Q * ad * ad + ddP * dQ - dP * ddQ) / r4};
    }
    return {kNaN, kNaN};
}

Vector4 chart_point(const DoubleRotationSurface& srf, double t, double s) {
    return immerse(srf.family, srf.x_angle(t), srf.v_angle(t), s);
}

// Inverse of the symmetric 2x2 matrix (g11, g12, g22).
std::array<double, 3> inverse(const std::array<double, 3>& g) {
    const double det = g[0] * g[2] - g[1] * g[1];
    return {g[2] / det, -g[1] / det, g[0] / det};
}

double det(const std::array<double, 3>& g) { return g[0] * g[2] - g[1] * g[1]; }

}  // namespace

std::array<Vector4, 2> surface_tangents(const DoubleRotationSurface& srf, double t, double s) {
    const auto X = srf.x_angle.jet(t);
    const auto V = srf.v_angle.jet(t);
    const TangentFrame f = tangent_frame(srf.family, X.f, V.f, s);
    return {X.df * f.du + V.df * f.dv, f.dt};
}

std::array<double, 3> induced_metric(const DoubleRotationSurface& srf, double t, double s) {
    const auto [St, Ss] = surface_tangents(srf, t, s);
    return {inner(St, St), inner(St, Ss), inner(Ss, Ss)};
}

NormalFrame printed_normal_frame(const DoubleRotationSurface& srf, double t, double s) {
    require_variant_a(srf);
    return printed_frame(srf.family.kind(), jets(srf, t, s));
}

NormalFrame normal_frame(const DoubleRotationSurface& srf, double t, double s) {
    NormalFrame f = printed_normal_frame(srf, t, s);
    if (srf.family.kind() == FamilyKind::hyperbolic23) {
        f.e3[1] = -f.e3[1];
        f.e3[2] = -f.e3[2];
        f.e4[1] = -f.e4[1];
        f.e4[2] = -f.e4[2];
    }
    return f;
}

double gaussian_curvature_fd(const Metric2& metric, double x, double y, double h) {
    using M = std::array<double, 3>;
    const M c = metric(x, y);
    const M xp = metric(x + h, y), xm = metric(x - h, y);
    const M yp = metric(x, y + h), ym = metric(x, y - h);
    const M pp = metric(x + h, y + h), pm = metric(x + h, y - h);
    const M mp = metric(x - h, y + h), mm = metric(x - h, y - h);

    // dg[k][c]: partial along coordinate k of component c (g11, g12, g22).
    std::array<M, 2> dg{};
    M gxx{}, gyy{}, gxy{};
    for (std::size_t i = 0; i < 3; ++i) {
        dg[0][i] = (xp[i] - xm[i]) / (2.0 * h);
        dg[1][i] = (yp[i] - ym[i]) / (2.0 * h);
        gxx[i] = (xp[i] - 2.0 * c[i] + xm[i]) / (h * h);
        gyy[i] = (yp[i] - 2.0 * c[i] + ym[i]) / (h * h);
        gxy[i] = (pp[i] - pm[i] - mp[i] + mm[i]) / (4.0 * h * h);
    }

    const auto g = [&c](std::size_t i, std::size_t j) {
        return (i == 0 && j == 0) ? c[0] : (i == 1 && j == 1) ? c[2] : c[1];
    };
    const auto d = [&dg](std::size_t k, std::size_t i, std::size_t j) {
        const std::size_t idx = (i == 0 && j == 0) ? 0 : (i == 1 && j == 1) ? 2 : 1;
        return dg[k][idx];
    };
    const M inv = inverse(c);
    const auto ginv = [&inv](std::size_t i, std::size_t j) {
        return (i == 0 && j == 0) ? inv[0] : (i == 1 && j == 1) ? inv[2] : inv[1];
    };

    // Gamma^k_ij = 1/2 g^kl (d_i g_lj + d_j g_li - d_l g_ij)
    double gamma[2][2][2] = {};
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                double sum = 0.0;
                for (std::size_t l = 0; l < 2; ++l)
                    sum += ginv(k, l) * (d(i, l, j) + d(j, l, i) - d(l, i, j));
                gamma[k][i][j] = 0.5 * sum;
            }

    // R_1212 = 1/2 (2 d1 d2 g12 - d1 d1 g22 - d2 d2 g11)
    //          + g_pq (Gamma^p_12 Gamma^q_12 - Gamma^p_11 Gamma^q_22)
    double R = 0.5 * (2.0 * gxy[1] - gxx[2] - gyy[0]);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q)
            R += g(p, q) * (gamma[p][0][1] * gamma[q][0][1] - gamma[p][0][0] * gamma[q][1][1]);
    return R / det(c);
}

Vector4 mean_curvature_fd(const DoubleRotationSurface& srf, double t, double s, double h) {
    const Vector4 c = chart_point(srf, t, s);
    const Vector4 Stt =
        (1.0 / (h * h)) * (chart_point(srf, t + h, s) - 2.0 * c + chart_point(srf, t - h, s));
    const Vector4 Sss =
        (1.0 / (h * h)) * (chart_point(srf, t, s + h) - 2.0 * c + chart_point(srf, t, s - h));
    const Vector4 Sts =
        (1.0 / (4.0 * h * h)) * (chart_point(srf, t + h, s + h) - chart_point(srf, t + h, s - h) -
                                 chart_point(srf, t - h, s + h) + chart_point(srf, t - h, s - h));

    const auto tangents = surface_tangents(srf, t, s);
    const std::array<double, 3> g = {inner(tangents[0], tangents[0]),
                                     inner(tangents[0], tangents[1]),
                                     inner(tangents[1], tangents[1])};
    if (det(g) == 0.0) throw Error(Errc::degenerate_metric, "induced metric is degenerate");
    const auto inv = inverse(g);
    const double ginv[2][2] = {{inv[0], inv[1]}, {inv[1], inv[2]}};

    const auto normal_part = [&](const Vector4& X) {
        Vector4 out = X;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                out -= (ginv[i][j] * inner(X, tangents[j])) * tangents[i];
        return out;
    };
    return 0.5 * (inv[0] * normal_part(Stt) + 2.0 * inv[1] * normal_part(Sts) +
                  inv[2] * normal_part(Sss));
}

double default_fd_step(double t, double s) { return 1e-4 * (1.0 + std::abs(t) + std::abs(s)); }

CurvatureReport curvature_report(const DoubleRotationSurface& srf, double t, double s,
                                 double fd_step) {
    require_variant_a(srf);
    if (!(fd_step > 0.0)) throw Error(Errc::precondition, "fd_step must be positive");
    const FamilyKind kind = srf.family.kind();
    if (det(induced_metric(srf, t, s)) == 0.0)
        throw Error(Errc::degenerate_metric, "induced metric is degenerate");

    CurvatureReport r;
    const Jets j = jets(srf, t, s);
    r.K_formula = formula_K(kind, j);
    r.K_oracle = gaussian_curvature_fd(
        [&srf](double tt, double ss) { return induced_metric(srf, tt, ss); }, t, s, fd_step);
    r.K_gap = std::abs(r.K_formula - r.K_oracle);
    r.H_oracle = mean_curvature_fd(srf, t, s, fd_step);

    const auto tangents = surface_tangents(srf, t, s);
    const auto [D3, D4] = radicands(kind, j);
    r.frame_admissible = D3 > 0.0 && D4 > 0.0;
    if (!r.frame_admissible) {
        r.h3 = r.h4 = r.H_gap = r.span_residual = r.printed_frame_defect = kNaN;
        r.e3 = r.e4 = r.H_formula = {kNaN, kNaN, kNaN, kNaN};
        return r;
    }

    const NormalFrame printed = printed_frame(kind, j);
    for (const Vector4& e : {printed.e3, printed.e4})
        for (const Vector4& T : tangents)
            r.printed_frame_defect = std::max(
                r.printed_frame_defect, std::abs(inner(e, T)) / std::sqrt(std::abs(inner(T, T))));

    const NormalFrame f = normal_frame(srf, t, s);
    r.e3 = f.e3;
    r.e4 = f.e4;
    const auto h = formula_h(kind, j);
    r.h3 = h[0];
    r.h4 = h[1];
    r.H_formula = r.h3 * r.e3 + r.h4 * r.e4;

    const double eps3 = inner(f.e3, f.e3), eps4 = inner(f.e4, f.e4);
    const Vector4 projected =
        (eps3 * inner(r.H_oracle, f.e3)) * f.e3 + (eps4 * inner(r.H_oracle, f.e4)) * f.e4;
    for (std::size_t i = 0; i < 4; ++i) {
        r.span_residual = std::max(r.span_residual, std::abs(r.H_oracle[i] - projected[i]));
        r.H_gap = std::max(r.H_gap, std::abs(r.H_formula[i] - r.H_oracle[i]));
    }
    return r;
}

}  // namespace rotgeo
