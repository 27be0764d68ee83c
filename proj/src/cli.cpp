#include "rotgeo/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotgeo/config.hpp"
#include "rotgeo/error.hpp"
#include "rotgeo/kernels.hpp"

namespace fs = std::filesystem;

namespace rotgeo {
namespace {

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(Errc c) {
    switch (c) {
        case Errc::validation:
        case Errc::syntax_error:
        case Errc::unknown_identifier:
        case Errc::wrong_arity:
        case Errc::precondition:
            return kExitValidation;
        default:
            return kExitNumerical;
    }
}

std::string num(double x) {
    if (x == 0.0) x = 0.0;  // no "-0" in artifacts
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

fs::path artifact_path(const std::string& configured) {
    const fs::path p(configured);
    if (const char* dir = std::getenv("ROTGEO_OUTPUT_DIR"); dir && *dir)
        return fs::path(dir) / p.filename();
    return p;
}

// temp file in the target directory, then rename over the destination
void write_atomic(const fs::path& dest, const std::string& content) {
    if (dest.has_parent_path()) fs::create_directories(dest.parent_path());
    fs::path tmp = dest;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(Errc::validation, "output.path: cannot write " + tmp.string());
        f << content;
        if (!f.flush()) throw Error(Errc::validation, "output.path: write failed");
    }
    fs::rename(tmp, dest);
}

fs::path summary_path(const fs::path& artifact) {
    fs::path p = artifact;
    p.replace_extension(".summary.json");
    return p;
}

const char* kTrajectoryColumns[] = {"s",  "u",   "v",   "t",   "du",   "dv",
                                    "dt", "L",   "p_u", "p_v", "inv1", "inv2"};

std::array<double, 12> row_of(const TrajectorySample& x) {
    const GeodesicState& st = x.state;
    return {x.s, st.u, st.v, st.t, st.du, st.dv, st.dt, x.L, x.p_u, x.p_v, x.inv1, x.inv2};
}

std::string trajectory_text(const Trajectory& tr, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& x : tr.samples) rows.push_back(row_of(x));
        nlohmann::json doc;
        doc["columns"] = kTrajectoryColumns;
        doc["rows"] = std::move(rows);
        doc["status"] = to_string(tr.status);
        return doc.dump(1) + "\n";
    }
    std::string s = "s,u,v,t,du,dv,dt,L,p_u,p_v,inv1,inv2\n";
    for (const auto& x : tr.samples) {
        const auto r = row_of(x);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += ',';
            s += num(r[i]);
        }
        s += '\n';
    }
    return s;
}

// Integrates the configured geodesic. Failures before 10% of the requested
// length are numerical errors; later ones keep the partial trajectory.
Trajectory run_geodesic(const RunConfig& cfg, const SurfaceFamily& fam, const InitialState& init,
                        std::ostream& err) {
    const GeodesicConfig& g = *cfg.geodesic;
    Trajectory tr = integrate(fam, init.state, g.length, g.step);
    if (tr.status != IntegrationStatus::completed) {
        const std::string why = std::string(to_string(tr.status)) + " at s=" +
                                num(tr.last_valid_s) + ": " + tr.message;
        if (tr.last_valid_s < 0.1 * g.length) throw NumericalFailure(why);
        err << "warning: stopped early, " << why << "\n";
    }
    return tr;
}

RunConfig need_config(const std::string& path) {
    if (path.empty()) throw Error(Errc::validation, "--config: required");
    return load_config(path);
}

int cmd_info(const RunConfig& cfg, std::ostream& out) {
    const SurfaceFamily fam = make_family(cfg);
    out << "family " << to_string(cfg.family) << " variant " << to_string(cfg.variant) << "\n";
    out << "t,E,G,N,flag\n";
    std::vector<double> bad;
    for (int i = 0; i < 10; ++i) {
        const double t = cfg.domain.lo + i * (cfg.domain.hi - cfg.domain.lo) / 9.0;
        try {
            const MetricCoefficients m = metric_coefficients(fam, t);
            const bool deg = m.degenerate();
            if (deg) bad.push_back(t);
            out << num(t) << ',' << num(m.E) << ',' << num(m.G) << ',' << num(m.N) << ','
                << (deg ? "degenerate" : "ok") << "\n";
        } catch (const Error&) {
            bad.push_back(t);
            out << num(t) << ",nan,nan,nan,undefined\n";
        }
    }
    if (bad.empty()) {
        out << "degeneracies: none\n";
    } else {
        out << "degeneracies at t =";
        for (double t : bad) out << ' ' << num(t);
        out << "\n";
    }
    return kExitOk;
}

int cmd_geodesic(const RunConfig& cfg, bool summary, std::ostream& out, std::ostream& err) {
    const SurfaceFamily fam = make_family(cfg);
    const InitialState init = initial_state(cfg, fam);
    const Trajectory tr = run_geodesic(cfg, fam, init, err);
    const fs::path dest = artifact_path(cfg.output.path);
    write_atomic(dest, trajectory_text(tr, cfg.output.format));
    out << "wrote " << dest.string() << " (" << tr.samples.size() << " samples)\n";
    if (summary) {
        const Drift d = drift(tr);
        nlohmann::ordered_json doc;
        doc["p_u_drift"] = d.p_u;
        doc["p_v_drift"] = d.p_v;
        doc["L_drift"] = d.L;
        doc["inv1_drift"] = d.inv1;
        doc["inv2_drift"] = d.inv2;
        if (init.decomposition_residual) doc["decomposition_residual"] = *init.decomposition_residual;
        doc["status"] = to_string(tr.status);
        doc["samples"] = tr.samples.size();
        const fs::path sp = summary_path(dest);
        write_atomic(sp, doc.dump(2) + "\n");
        out << "wrote " << sp.string() << "\n";
    }
    return kExitOk;
}

int cmd_curvature(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.curvature) throw Error(Errc::validation, "curvature: section missing");
    if (cfg.variant != Variant::A)
        throw Error(Errc::validation, "variant: curvature formulas cover variant A only");
    const DoubleRotationSurface srf = make_surface(cfg);
    const CurvatureConfig& c = *cfg.curvature;
    const CurvatureGridSpec spec{c.t_domain, cfg.domain, c.nt, c.ns, c.fd_step};
    const auto rows = curvature_grid(srf, spec);

    std::size_t good = 0;
    std::string text;
    if (cfg.output.format == OutputFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            good += r.ok;
            arr.push_back({r.t, r.s, r.K_formula, r.K_oracle, r.K_gap, r.h3, r.h4, r.H_gap});
        }
        nlohmann::json doc;
        doc["columns"] = {"t", "s", "K_formula", "K_oracle", "K_gap", "h3", "h4", "H_gap"};
        doc["rows"] = std::move(arr);
        text = doc.dump(1) + "\n";
    } else {
        text = "t,s,K_formula,K_oracle,K_gap,h3,h4,H_gap\n";
        for (const auto& r : rows) {
            good += r.ok;
            for (double x : {r.t, r.s, r.K_formula, r.K_oracle, r.K_gap, r.h3, r.h4})
                text += num(x) + ",";
            text += num(r.H_gap) + "\n";
        }
    }
    if (good == 0) throw NumericalFailure("no grid point has a nondegenerate induced metric");
    const fs::path dest = artifact_path(cfg.output.path);
    write_atomic(dest, text);
    out << "wrote " << dest.string() << " (" << good << "/" << rows.size() << " points)\n";
    return kExitOk;
}

int cmd_killing(const std::string& params, std::ostream& out) {
    std::vector<double> v;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(Errc::validation, "--params: '" + item + "' is not a number");
        }
    }
    if (v.size() != 6) throw Error(Errc::validation, "--params: expected six values a,b,c,d,e,f");
    const Matrix4 S = lie_residual(killing_field({v[0], v[1], v[2], v[3], v[4], v[5]}));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) out << (j ? " " : "") << num(S(i, j));
        out << "\n";
    }
    out << "max_abs " << num(S.max_abs()) << "\n";
    return kExitOk;
}

RotationGenerator generator_named(const std::string& name) {
    for (RotationGenerator g : kAllGenerators)
        if (name == to_string(g)) return g;
    if (name.size() == 1 && name[0] >= '1' && name[0] <= '6')
        return kAllGenerators[static_cast<std::size_t>(name[0] - '1')];
    throw Error(Errc::validation, "--generator: expected omega1..omega6");
}

int cmd_isometry(const RunConfig& cfg, const std::string& gen_name, double angle,
                 std::ostream& out, std::ostream& err) {
    const RotationGenerator gen = generator_named(gen_name);
    const SurfaceFamily fam = make_family(cfg);
    if (gen != fam.u_generator() && gen != fam.v_generator())
        throw Error(Errc::validation, std::string("--generator: ") + to_string(gen) +
                                          " does not act on " + to_string(cfg.family));
    const Trajectory tr = run_geodesic(cfg, fam, initial_state(cfg, fam), err);
    const IsometryCheck chk = isometry_check(fam, tr, gen, angle);
    out << "generator " << to_string(gen) << " angle " << num(angle) << "\n";
    out << "points " << chk.points << "\n";
    out << "membership " << num(chk.membership) << "\n";
    out << "geodesic_residual " << num(chk.geodesic_residual) << "\n";
    return kExitOk;
}

int cmd_parse_check(const std::string& src, std::ostream& out) {
    const Expr e = parse(src);
    const Expr d1 = differentiate(e);
    const Expr d2 = differentiate(d1);
    out << "expr " << print(e) << "\n";
    out << "tree " << dump_tree(e) << "\n";
    out << "d1 " << print(d1) << "\n";
    out << "d1_tree " << dump_tree(d1) << "\n";
    out << "d2 " << print(d2) << "\n";
    out << "d2_tree " << dump_tree(d2) << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rotgeo: geodesics and curvature of rotational 3-manifolds in E_2^4"};
    app.require_subcommand(1);

    std::string config, output, params, gen_name, expr;
    double angle = 0.0;
    const auto with_config = [&](CLI::App* sub) {
        sub->add_option("-c,--config", config, "run configuration (JSON)")->required();
        return sub;
    };
    auto* info = with_config(app.add_subcommand("info", "metric coefficients on a 10-point grid"));
    auto* geo = with_config(app.add_subcommand("geodesic", "write a geodesic trajectory"));
    auto* inv = with_config(app.add_subcommand("invariants", "trajectory plus drift summary"));
    auto* curv = with_config(app.add_subcommand("curvature", "curvature audit over a grid"));
    auto* iso = with_config(app.add_subcommand("isometry", "map a geodesic by a rotation"));
    for (auto* sub : {geo, inv, curv})
        sub->add_option("-o,--output", output, "artifact path (overrides output.path)");
    iso->add_option("-g,--generator", gen_name, "omega1..omega6")->required();
    iso->add_option("-a,--angle", angle, "rotation angle")->required();
    auto* kil = app.add_subcommand("killing", "Lie residual of the general Killing field");
    kil->add_option("-p,--params", params, "a,b,c,d,e,f")->required();
    auto* pc = app.add_subcommand("parse-check", "print AST and derivatives");
    pc->add_option("expr", expr, "expression in t")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (*kil) return cmd_killing(params, out);
        if (*pc) return cmd_parse_check(expr, out);
        RunConfig cfg = need_config(config);
        if (!output.empty()) cfg.output.path = output;
        if (*info) return cmd_info(cfg, out);
        if (*geo) return cmd_geodesic(cfg, false, out, err);
        if (*inv) return cmd_geodesic(cfg, true, out, err);
        if (*curv) return cmd_curvature(cfg, out);
        if (*iso) return cmd_isometry(cfg, gen_name, angle, out, err);
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const fs::filesystem_error& e) {
        err << "error: output.path: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace rotgeo
