#include "rotgeo/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "rotgeo/error.hpp"

namespace rotgeo {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& field, const std::string& msg) {
    throw Error(Errc::validation, field + ": " + msg);
}

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void only_keys(const json& obj, const std::string& prefix, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) invalid(prefix.empty() ? "config" : prefix, "expected an object");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const char* allowed : keys) known = known || k == allowed;
        if (!known) invalid(join(prefix, k), "unknown key");
    }
}

const json& need(const json& obj, const std::string& prefix, const char* key) {
    if (!obj.contains(key)) invalid(join(prefix, key), "missing");
    return obj.at(key);
}

double number(const json& v, const std::string& field) {
    if (!v.is_number()) invalid(field, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) invalid(field, "must be finite");
    return x;
}

std::string text(const json& v, const std::string& field) {
    if (!v.is_string()) invalid(field, "expected a string");
    return v.get<std::string>();
}

std::size_t count(const json& v, const std::string& field) {
    if (!v.is_number_integer() || v.get<long long>() < 1) invalid(field, "expected an integer >= 1");
    return static_cast<std::size_t>(v.get<long long>());
}

Interval interval(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2) invalid(field, "expected [lo, hi]");
    const Interval r{number(v[0], field + "[0]"), number(v[1], field + "[1]")};
    if (!(r.lo < r.hi)) invalid(field, "requires lo < hi");
    return r;
}

GeodesicConfig parse_geodesic(const json& g) {
    const std::string p = "geodesic";
    only_keys(g, p, {"initial", "length", "step", "normalize"});
    GeodesicConfig out;
    const json& init = need(g, p, "initial");
    const std::string ip = "geodesic.initial";
    if (!init.is_object()) invalid(ip, "expected an object");
    const bool velocity = init.contains("du") || init.contains("dv") || init.contains("dt");
    const bool angles = init.contains("phi") || init.contains("theta");
    if (velocity && angles) invalid(ip, "give either du/dv/dt or phi/theta, not both");
    if (!velocity && !angles) invalid(ip, "needs du/dv/dt or phi/theta");
    const auto get = [&](const char* k) { return number(need(init, ip, k), join(ip, k)); };
    if (velocity) {
        only_keys(init, ip, {"u", "v", "t", "du", "dv", "dt"});
        out.state = GeodesicState{get("u"), get("v"), get("t"), get("du"), get("dv"), get("dt")};
    } else {
        only_keys(init, ip, {"u", "v", "t", "phi", "theta"});
        out.angles = AngleStart{get("u"), get("v"), get("t"), get("phi"), get("theta")};
    }
    if (g.contains("length")) out.length = number(g["length"], "geodesic.length");
    if (g.contains("step")) out.step = number(g["step"], "geodesic.step");
    if (g.contains("normalize")) {
        if (!g["normalize"].is_boolean()) invalid("geodesic.normalize", "expected true or false");
        out.normalize = g["normalize"].get<bool>();
    }
    if (!(out.length > 0.0)) invalid("geodesic.length", "must be > 0");
    if (!(out.step > 0.0)) invalid("geodesic.step", "must be > 0");
    if (out.step > out.length) invalid("geodesic.step", "must not exceed geodesic.length");
    return out;
}

CurvatureConfig parse_curvature(const json& c) {
    const std::string p = "curvature";
    only_keys(c, p, {"xAngle", "vAngle", "t_domain", "grid", "fd_step"});
    CurvatureConfig out;
    out.x_angle = text(need(c, p, "xAngle"), "curvature.xAngle");
    out.v_angle = text(need(c, p, "vAngle"), "curvature.vAngle");
    if (c.contains("t_domain")) out.t_domain = interval(c["t_domain"], "curvature.t_domain");
    if (c.contains("grid")) {
        const json& g = c["grid"];
        only_keys(g, "curvature.grid", {"nt", "ns"});
        if (g.contains("nt")) out.nt = count(g["nt"], "curvature.grid.nt");
        if (g.contains("ns")) out.ns = count(g["ns"], "curvature.grid.ns");
    }
    if (c.contains("fd_step")) {
        out.fd_step = number(c["fd_step"], "curvature.fd_step");
        if (!(out.fd_step > 0.0)) invalid("curvature.fd_step", "must be > 0");
    }
    return out;
}

ProfileFunction profile(const std::string& src, Interval dom, const std::string& field) {
    try {
        return ProfileFunction::parse(src, dom);
    } catch (const Error& e) {
        throw Error(Errc::validation, field + ": " + e.what());
    }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        invalid("config", e.what());
    }
    only_keys(doc, "", {"family", "variant", "profiles", "domain", "geodesic", "curvature", "output"});

    RunConfig cfg;
    const std::string fam = text(need(doc, "", "family"), "family");
    if (fam == "hyperbolic14") cfg.family = FamilyKind::hyperbolic14;
    else if (fam == "hyperbolic23") cfg.family = FamilyKind::hyperbolic23;
    else if (fam == "elliptic56") cfg.family = FamilyKind::elliptic56;
    else invalid("family", "expected hyperbolic14, hyperbolic23 or elliptic56");

    const std::string var = doc.contains("variant") ? text(doc["variant"], "variant") : "A";
    if (var == "A") cfg.variant = Variant::A;
    else if (var == "B") cfg.variant = Variant::B;
    else invalid("variant", "expected A or B");

    const json& prof = need(doc, "", "profiles");
    only_keys(prof, "profiles", {"fa", "fb"});
    cfg.fa = text(need(prof, "profiles", "fa"), "profiles.fa");
    cfg.fb = text(need(prof, "profiles", "fb"), "profiles.fb");
    cfg.domain = interval(need(doc, "", "domain"), "domain");

    if (doc.contains("geodesic")) cfg.geodesic = parse_geodesic(doc["geodesic"]);
    if (doc.contains("curvature")) cfg.curvature = parse_curvature(doc["curvature"]);
    if (doc.contains("output")) {
        const json& o = doc["output"];
        only_keys(o, "output", {"path", "format"});
        if (o.contains("path")) cfg.output.path = text(o["path"], "output.path");
        if (cfg.output.path.empty()) invalid("output.path", "must not be empty");
        if (o.contains("format")) {
            const std::string f = text(o["format"], "output.format");
            if (f == "csv") cfg.output.format = OutputFormat::csv;
            else if (f == "json") cfg.output.format = OutputFormat::json;
            else invalid("output.format", "expected csv or json");
        }
    }

    // parse the expressions now so a typo fails validation, not a later command
    (void)make_family(cfg);
    if (cfg.curvature) (void)make_surface(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) invalid("config", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

SurfaceFamily make_family(const RunConfig& cfg) {
    return SurfaceFamily(cfg.family, cfg.variant, profile(cfg.fa, cfg.domain, "profiles.fa"),
                         profile(cfg.fb, cfg.domain, "profiles.fb"));
}

DoubleRotationSurface make_surface(const RunConfig& cfg) {
    if (!cfg.curvature) invalid("curvature", "section missing");
    const CurvatureConfig& c = *cfg.curvature;
    return {make_family(cfg), profile(c.x_angle, c.t_domain, "curvature.xAngle"),
            profile(c.v_angle, c.t_domain, "curvature.vAngle")};
}

InitialState initial_state(const RunConfig& cfg, const SurfaceFamily& fam) {
    if (!cfg.geodesic) invalid("geodesic", "section missing");
    const GeodesicConfig& g = *cfg.geodesic;
    InitialState out;
    const double t0 = g.state ? g.state->t : g.angles->t;
    if (!fam.domain().contains(t0)) invalid("geodesic.initial.t", "outside domain");
    if (g.state) {
        out.state = *g.state;
    } else {
        const AngleStart& a = *g.angles;
        try {
            out.state = state_from_angles(fam, a.u, a.v, a.t, a.phi, a.theta);
        } catch (const Error& e) {
            if (e.code() != Errc::precondition) throw;
            invalid("geodesic.initial", e.what());
        }
    }
    if (g.normalize) out.state = normalize_timelike(fam, out.state);
    // after normalization: rescaling breaks the decomposition unless L was already -1
    if (g.angles) out.decomposition_residual = extract_angles(fam, out.state).residual;
    return out;
}

}  // namespace rotgeo
