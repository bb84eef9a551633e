// slope: generate constant slope surface meshes in Minkowski 3-space,
// validate the library invariants, and print slope rotation matrices.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slope/mesh_io.hpp"
#include "slope/validation.hpp"

namespace {

constexpr int kExitFailedChecks = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

struct GridRange {
    double min;
    double max;
    int count;
};

// Parses "min:max:count"; the flag name is only used for diagnostics.
GridRange parse_range(const std::string& text, const std::string& flag) {
    GridRange range{};
    char trailing = '\0';
    const int got = std::sscanf(text.c_str(), "%lf:%lf:%d%c", &range.min, &range.max,
                                &range.count, &trailing);
    if (got != 3) {
        throw slope::DomainError(flag + " expects min:max:count (got \"" + text + "\")");
    }
    return range;
}

slope::SlopeSurfaceConfig build_config(const std::string& cone_name, double theta,
                                       const std::string& curve_name,
                                       const std::string& xi_mode_name) {
    const slope::ConeKind cone = cone_name == "timelike" ? slope::ConeKind::TimelikeCone
                                                         : slope::ConeKind::SpacelikeCone;
    const slope::XiMode mode = xi_mode_name == "paper-approx" ? slope::XiMode::PaperApprox
                                                              : slope::XiMode::Exact;
    return slope::make_config(theta, cone, slope::builtin_curve(curve_name), mode);
}

void print_17g(std::ostream& out, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    out << buf;
}

int cmd_surface(const slope::SlopeSurfaceConfig& cfg, const GridRange& u, const GridRange& v,
                const std::string& construction_name, const std::string& format,
                const std::string& output) {
    const slope::Construction how = construction_name == "quaternion"
                                        ? slope::Construction::Quaternion
                                    : construction_name == "homothetic"
                                        ? slope::Construction::Homothetic
                                        : slope::Construction::Direct;
    const slope::SurfaceSampleGrid grid =
        slope::sample_grid(cfg, u.min, u.max, v.min, v.max, u.count, v.count, how);

    std::ofstream file(output, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file \"" << output << "\"\n";
        return kExitIoError;
    }
    if (format == "csv") {
        slope::write_csv(file, grid);
    } else {
        slope::write_obj(file, grid);
    }
    file.flush();
    if (!file) {
        std::cerr << "error: writing \"" << output << "\" failed\n";
        return kExitIoError;
    }
    return 0;
}

int cmd_validate(const slope::ValidationOptions& options, const std::string& output) {
    const slope::ValidationReport report = slope::run_validation(options);
    const std::string json = slope::report_to_json(report);
    if (output.empty()) {
        std::cout << json;
    } else {
        std::ofstream file(output, std::ios::binary);
        file << json;
        file.flush();
        if (!file) {
            std::cerr << "error: writing \"" << output << "\" failed\n";
            return kExitIoError;
        }
    }
    return slope::all_pass(report) ? 0 : kExitFailedChecks;
}

int cmd_rotmat(const slope::SlopeSurfaceConfig& cfg, double u, double v) {
    const slope::LorentzRotation rotation =
        slope::slope_rotation(cfg.theta, u, cfg.curve.derivative(v), cfg.cone);
    for (const auto& row : rotation.m) {
        for (int j = 0; j < 3; ++j) {
            if (j) std::cout << ' ';
            print_17g(std::cout, row[j]);
        }
        std::cout << '\n';
    }
    const auto report = slope::is_lorentz_orthogonal(rotation);
    std::cout << "orthogonality_residual ";
    print_17g(std::cout, report.orthogonality_residual);
    std::cout << "\ndet_residual ";
    print_17g(std::cout, report.det_residual);
    std::cout << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant slope surfaces from split quaternions in Minkowski 3-space"};
    app.require_subcommand(1);

    std::string cone = "timelike";
    double theta = 0.0;
    std::string curve = "h2-geodesic";
    std::string xi_mode = "exact";
    std::string construction = "direct";
    std::string format = "obj";
    std::string u_spec = "0.5:2:64";
    std::string v_spec;
    std::string output;
    double u_value = 1.0;
    double v_value = 0.0;

    const auto cones = CLI::IsMember({"timelike", "spacelike"});
    const auto xi_modes = CLI::IsMember({"exact", "paper-approx"});

    CLI::App* surface = app.add_subcommand("surface", "sample a surface grid and export a mesh");
    surface->add_option("--cone", cone, "cone kind")->check(cones);
    surface->add_option("--theta", theta, "constant angle (hyperbolic radians)")->required();
    surface->add_option("--curve", curve, "builtin curve name");
    surface->add_option("--xi-mode", xi_mode, "angle law")->check(xi_modes);
    surface->add_option("--construction", construction, "construction path")
        ->check(CLI::IsMember({"direct", "quaternion", "homothetic"}));
    surface->add_option("--u", u_spec, "u grid as min:max:count");
    surface->add_option("--v", v_spec, "v grid as min:max:count (default: curve domain)");
    surface->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"obj", "csv"}));
    surface->add_option("-o,--output", output, "output file")->required();

    CLI::App* validate = app.add_subcommand("validate", "run the invariant suite, report JSON");
    std::vector<std::string> validate_curves;
    std::vector<double> validate_thetas;
    validate->add_option("--curve", validate_curves, "restrict to one or more builtin curves");
    validate->add_option("--theta", validate_thetas, "restrict to one or more angles");
    validate->add_option("--u", u_spec, "u grid as min:max:count");
    validate->add_option("--v", v_spec, "v grid as min:max:count (default: curve domain)");
    validate->add_option("-o,--output", output, "write the JSON report here instead of stdout");

    CLI::App* rotmat = app.add_subcommand("rotmat", "print one slope rotation matrix");
    rotmat->add_option("--cone", cone, "cone kind")->check(cones);
    rotmat->add_option("--theta", theta, "constant angle (hyperbolic radians)")->required();
    rotmat->add_option("--curve", curve, "builtin curve name");
    rotmat->add_option("--u", u_value, "radial parameter u > 0")->required();
    rotmat->add_option("--v", v_value, "curve parameter v");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (surface->parsed()) {
            if (theta <= 0.0) {
                std::cerr << "error: --theta must be positive (got " << theta << ")\n";
                return kExitConfigError;
            }
            const slope::SlopeSurfaceConfig cfg = build_config(cone, theta, curve, xi_mode);
            const GridRange u_range = parse_range(u_spec, "--u");
            const GridRange v_range = v_spec.empty()
                                          ? GridRange{cfg.curve.v_min, cfg.curve.v_max, 64}
                                          : parse_range(v_spec, "--v");
            return cmd_surface(cfg, u_range, v_range, construction, format, output);
        }
        if (validate->parsed()) {
            slope::ValidationOptions options;
            if (!validate_curves.empty()) options.curves = validate_curves;
            if (!validate_thetas.empty()) options.thetas = validate_thetas;
            for (double t : options.thetas) {
                if (t <= 0.0) {
                    std::cerr << "error: --theta must be positive (got " << t << ")\n";
                    return kExitConfigError;
                }
            }
            for (const auto& name : options.curves) {
                slope::builtin_curve(name);  // UnknownCurve -> config error
            }
            if (!u_spec.empty()) {
                const GridRange u_range = parse_range(u_spec, "--u");
                options.u_min = u_range.min;
                options.u_max = u_range.max;
                options.nu = u_range.count;
            }
            if (!v_spec.empty()) {
                const GridRange v_range = parse_range(v_spec, "--v");
                options.v_min = v_range.min;
                options.v_max = v_range.max;
                options.nv = v_range.count;
            }
            return cmd_validate(options, output);
        }
        if (theta <= 0.0) {
            std::cerr << "error: --theta must be positive (got " << theta << ")\n";
            return kExitConfigError;
        }
        const slope::SlopeSurfaceConfig cfg = build_config(cone, theta, curve, xi_mode);
        return cmd_rotmat(cfg, u_value, v_value);
    } catch (const slope::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
}
