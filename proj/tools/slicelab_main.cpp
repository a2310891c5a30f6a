// slicelab: central cube slices, their faces, the zonotope verdict, and the
// sinc-integral volume formulas, from the command line.

#include "slicelab/analytic.hpp"
#include "slicelab/errors.hpp"
#include "slicelab/report.hpp"
#include "slicelab/zonotope.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace slicelab;

std::vector<Rational> parse_csv_rationals(const std::string& csv, const char* flag) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string item =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(parse_rational(item));
        } catch (const ParseError& e) {
            throw ParseError(std::string(flag) + ": " + e.what());
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int run_slice(const std::string& normal_csv, const std::string& section_csv, double tol,
              bool json) {
    const Hyperplane h = Hyperplane::canonicalize_normal(parse_csv_rationals(normal_csv, "--normal"));
    std::vector<Rational> levels;
    if (!section_csv.empty()) levels = parse_csv_rationals(section_csv, "--section");

    const SliceReport report = build_slice_report(h, levels, tol);
    if (json)
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << render_text(report);
    return 0;
}

int run_catalog(bool json) {
    const std::vector<CatalogRow> rows = catalog_rows();
    if (json)
        std::cout << to_json(rows).dump(2) << "\n";
    else
        std::cout << render_text(rows);
    for (const CatalogRow& r : rows)
        if (!r.match) return 1;
    return 0;
}

int run_integral(int p, const std::string& normal_csv, double tol, bool json) {
    if (p >= 2) {
        const QuadratureResult r = sinc_power_integral(p, tol);
        const double bound = std::numbers::sqrt2 / std::sqrt(static_cast<double>(p));
        const bool at_bound = std::fabs(r.value - bound) <= tol + r.error_bound;
        if (json) {
            nlohmann::ordered_json j;
            j["p"] = p;
            j["value"] = r.value;
            j["error_bound"] = r.error_bound;
            j["upper_bound_sqrt2_over_sqrt_p"] = bound;
            j["equality"] = at_bound;
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("I_%d = %.10f  (error bound %.2e, bound sqrt(2)/sqrt(p) = %.4f%s)\n", p,
                        r.value, r.error_bound, bound, at_bound ? ", equality" : "");
        }
        return 0;
    }
    const RatVec normal = parse_csv_rationals(normal_csv, "--normal");
    const QuadratureResult r = slice_volume_quadrature(normal, tol);
    if (json) {
        nlohmann::ordered_json j;
        j["normal"] = normal_csv;
        j["volume"] = r.value;
        j["error_bound"] = r.error_bound;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("volume = %.10f  (error bound %.2e, T = %.1f, panels %lld)\n", r.value,
                    r.error_bound, r.truncation_T, static_cast<long long>(r.panel_count));
    }
    return 0;
}

int run_census(const std::string& normal_csv, bool json) {
    const Hyperplane h = Hyperplane::canonicalize_normal(parse_csv_rationals(normal_csv, "--normal"));
    const CubeSlice s = slice_vertices(h);
    const auto census = face_census(s);
    if (json) {
        nlohmann::ordered_json j;
        for (const auto& [cls, cnt] : census) j[to_string(cls)] = cnt;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [cls, cnt] : census)
            std::cout << to_string(cls) << " x " << cnt << "\n";
    }
    return 0;
}

int run_project(const std::string& direction_csv, bool json) {
    const RatVec dir = parse_csv_rationals(direction_csv, "--normal");
    const ProjectedZonotope z = project_cube(dir.size(), dir);
    if (json) {
        nlohmann::ordered_json j;
        j["chart_dimension"] = z.chart_dimension;
        j["generator_count"] = z.generators.size();
        j["vertex_count"] = z.vertices.size();
        nlohmann::ordered_json verts = nlohmann::ordered_json::array();
        for (const RatVec& v : z.vertices) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (const Rational& x : v) row.push_back(to_string(x));
            verts.push_back(std::move(row));
        }
        j["vertices"] = std::move(verts);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "shadow dimension  " << z.chart_dimension << "\n";
        std::cout << "generators        " << z.generators.size() << "\n";
        std::cout << "vertices          " << z.vertices.size() << "\n";
        for (const RatVec& v : z.vertices) std::cout << "  " << to_string(v) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact central cube slices: faces, zonotope verdicts, volumes"};
    app.require_subcommand(1);

    std::string normal_csv, section_csv, direction_csv;
    double tol = 1e-8;
    bool json = false;
    int p = 0;

    CLI::App* slice = app.add_subcommand("slice", "full report for one hyperplane");
    slice->add_option("--normal", normal_csv, "comma-separated integer or rational normal")
        ->required();
    slice->add_option("--section", section_csv, "comma-separated section levels in [-1/2,1/2]");
    slice->add_option("--tol", tol, "quadrature tolerance");
    slice->add_flag("--json", json, "machine-readable output");

    CLI::App* catalog = app.add_subcommand("catalog", "run the fixed example catalog");
    catalog->add_flag("--json", json, "machine-readable output");

    CLI::App* integral = app.add_subcommand("integral", "sinc integrals: I_p or a slice volume");
    integral->add_option("--p", p, "power p >= 2 for I_p");
    integral->add_option("--normal", normal_csv, "normal for the product formula");
    integral->add_option("--tol", tol, "tolerance");
    integral->add_flag("--json", json, "machine-readable output");

    CLI::App* census = app.add_subcommand("census", "facet census of a 3-dimensional slice");
    census->add_option("--normal", normal_csv, "comma-separated normal")->required();
    census->add_flag("--json", json, "machine-readable output");

    CLI::App* project = app.add_subcommand("project", "shadow of the cube along a direction");
    project->add_option("--normal", direction_csv, "projection direction")->required();
    project->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(slice)) return run_slice(normal_csv, section_csv, tol, json);
        if (app.got_subcommand(catalog)) return run_catalog(json);
        if (app.got_subcommand(integral)) {
            if (p == 0 && normal_csv.empty()) {
                std::cerr << "integral requires --p or --normal\n";
                return 2;
            }
            return run_integral(p, normal_csv, tol, json);
        }
        if (app.got_subcommand(census)) return run_census(normal_csv, json);
        if (app.got_subcommand(project)) return run_project(direction_csv, json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
