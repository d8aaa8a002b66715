#include <CLI11.hpp>

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "nodallab/circles.hpp"
#include "nodallab/contour.hpp"
#include "nodallab/csv.hpp"
#include "nodallab/harmonics.hpp"
#include "nodallab/incidence.hpp"
#include "nodallab/orbits.hpp"
#include "nodallab/svg.hpp"
#include "suites.hpp"

using namespace nodallab;

namespace {

// Writes to --out when given, stdout otherwise.
struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::array<double, 4> rot3_to_quaternion(const Rot3& r) {
    const auto& m = r.m;
    const double tr = m[0] + m[4] + m[8];
    std::array<double, 4> q;
    if (tr > 0) {
        const double s = std::sqrt(tr + 1.0) * 2;
        q = {0.25 * s, (m[7] - m[5]) / s, (m[2] - m[6]) / s, (m[3] - m[1]) / s};
    } else if (m[0] > m[4] && m[0] > m[8]) {
        const double s = std::sqrt(1.0 + m[0] - m[4] - m[8]) * 2;
        q = {(m[7] - m[5]) / s, 0.25 * s, (m[1] + m[3]) / s, (m[2] + m[6]) / s};
    } else if (m[4] > m[8]) {
        const double s = std::sqrt(1.0 + m[4] - m[0] - m[8]) * 2;
        q = {(m[2] - m[6]) / s, (m[1] + m[3]) / s, 0.25 * s, (m[5] + m[7]) / s};
    } else {
        const double s = std::sqrt(1.0 + m[8] - m[0] - m[4]) * 2;
        q = {(m[3] - m[1]) / s, (m[2] + m[6]) / s, (m[5] + m[7]) / s, 0.25 * s};
    }
    return q;
}

// FNV-1a over the byte images of the inputs; stable id for certificate rows.
std::string input_hash(const std::vector<double>& values) {
    std::uint64_t h = 1469598103934665603ull;
    for (double v : values) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int cmd_zeros(int n, const std::string& out_path, const std::string& format) {
    Output out(out_path);
    const auto z = legendre_zeros(n);
    if (format == "tsv-summary") {
        double worst = 0.0;
        for (double x : z.zeros) worst = std::max(worst, std::abs(legendre_eval(n, x)));
        out.stream() << "zeros\tn=" << n << "\tcount=" << z.zeros.size() << "\tmax_abs_p="
                     << fmt3(worst) << "\n";
        return 0;
    }
    CsvWriter csv(out.stream());
    csv.header({"n", "i", "x", "abs_p"});
    for (int i = 0; i < n; ++i) {
        csv.field(n);
        csv.field(i);
        csv.field(z.zeros[i]);
        csv.field(std::abs(legendre_eval(n, z.zeros[i])));
        csv.end_row();
    }
    return 0;
}

int cmd_count(int n, double angle, std::vector<double> axis_a, std::vector<double> axis_b,
              const std::string& out_path, const std::string& format) {
    SpherePoint a{Vec3{0, 0, 1}};
    SpherePoint b{Vec3{std::sin(angle), 0, std::cos(angle)}};
    if (!axis_a.empty()) a = SpherePoint::normalized({axis_a[0], axis_a[1], axis_a[2]});
    if (!axis_b.empty()) b = SpherePoint::normalized({axis_b[0], axis_b[1], axis_b[2]});
    const double ang = std::acos(std::clamp(dot(a.vec(), b.vec()), -1.0, 1.0));

    const auto direct = count_common_zeros_direct(a, b, n);
    const auto model = chord_model_count(a, b, n);
    const bool agree = direct.interior == model.interior && direct.boundary == model.boundary;

    Output out(out_path);
    if (format == "tsv-summary") {
        out.stream() << "count\tn=" << n << "\tangle=" << fmt17(ang) << "\tdirect="
                     << direct.total_sphere() << "\tmodel=" << model.total_sphere()
                     << "\tagree=" << (agree ? 1 : 0) << "\n";
        return 0;
    }
    CsvWriter csv(out.stream());
    csv.header({"n", "angle", "direct_interior", "direct_boundary", "direct_total",
                "model_interior", "model_boundary", "model_total", "agree"});
    csv.field(n);
    csv.field(ang);
    csv.field(direct.interior);
    csv.field(direct.boundary);
    csv.field(direct.total_sphere());
    csv.field(model.interior);
    csv.field(model.boundary);
    csv.field(model.total_sphere());
    csv.field(static_cast<long long>(agree ? 1 : 0));
    csv.end_row();
    return 0;
}

int cmd_sweep(int n_max, const std::string& mode, std::uint64_t seed, int trials,
              const std::string& out_path, const std::string& format) {
    Rng rng(seed);
    Output out(out_path);
    const bool perp = mode == "perp";

    std::unique_ptr<CsvWriter> csv;
    if (format != "tsv-summary") {
        csv = std::make_unique<CsvWriter>(out.stream());
        if (perp)
            csv->header({"n", "angle_between_ab", "interior", "boundary", "total", "ratio"});
        else
            csv->header({"n", "angle_between_ab", "interior", "boundary", "total"});
    }

    for (int n = 1; n <= n_max; ++n) {
        SpherePoint a{Vec3{0, 0, 1}};
        SpherePoint b{Vec3{1, 0, 0}};
        if (mode == "close") {
            const double ang = 1e-3;
            b = SpherePoint{Vec3{std::sin(ang), 0, std::cos(ang)}};
        } else if (mode == "random") {
            a = rng.sphere_point();
            do {
                b = rng.sphere_point();
            } while (std::abs(dot(a.vec(), b.vec())) > 1.0 - 1e-9);
        }
        double ang = std::acos(std::clamp(dot(a.vec(), b.vec()), -1.0, 1.0));
        auto count = chord_model_count(a, b, n);
        // In random mode the row is the count-minimizing pair over the trials;
        // whether anything beats 2n is left to the data.
        for (int t = 1; t < (mode == "random" ? trials : 1); ++t) {
            a = rng.sphere_point();
            do {
                b = rng.sphere_point();
            } while (std::abs(dot(a.vec(), b.vec())) > 1.0 - 1e-9);
            const auto c2 = chord_model_count(a, b, n);
            if (c2.total_sphere() < count.total_sphere()) {
                count = c2;
                ang = std::acos(std::clamp(dot(a.vec(), b.vec()), -1.0, 1.0));
            }
        }
        const double ratio =
            static_cast<double>(count.total_sphere()) / (static_cast<double>(n) * n);
        if (csv) {
            csv->field(n);
            csv->field(ang);
            csv->field(count.interior);
            csv->field(count.boundary);
            csv->field(count.total_sphere());
            if (perp) csv->field(ratio);
            csv->end_row();
        } else {
            out.stream() << "sweep\tmode=" << mode << "\tn=" << n << "\ttotal="
                         << count.total_sphere() << "\tratio=" << fmt17(ratio) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, const cli::VerifyOptions& opt,
               const std::string& out_path, bool csv_format) {
    const auto results = cli::run_suite(suite, opt);

    if (csv_format) {
        Output out(out_path);
        CsvWriter csv(out.stream());
        csv.header({"check", "parameter", "value", "threshold", "pass"});
        for (const auto& r : results) {
            csv.field(r.name);
            csv.field(r.parameter);
            csv.field(r.value);
            csv.field(r.threshold);
            csv.field(static_cast<long long>(r.pass ? 1 : 0));
            csv.end_row();
        }
    }

    std::ostream& report = csv_format && out_path.empty() ? std::cerr : std::cout;
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        report << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.parameter
               << "] value=" << fmt3(r.value) << " threshold=" << fmt3(r.threshold);
        if (!r.detail.empty()) report << " -- " << r.detail;
        report << "\n";
    }
    report << (all_pass ? "OK" : "FAILED") << " (" << results.size() << " checks)\n";
    return all_pass ? 0 : 1;
}

int cmd_verify_orbits_certificates(const cli::VerifyOptions& opt, const std::string& out_path) {
    Rng rng(opt.seed);
    Output out(out_path);
    CsvWriter csv(out.stream());
    csv.header({"kind", "case", "input_hash", "g0", "g1", "g2", "g3", "residual", "residual2"});
    for (int trial = 0; trial < 200; ++trial) {
        const CVec2 v{std::complex<double>(rng.normal(), rng.normal()),
                      std::complex<double>(rng.normal(), rng.normal())};
        const CVec2 h{std::complex<double>(rng.normal(), rng.normal()),
                      std::complex<double>(rng.normal(), rng.normal())};
        const auto cert = orbit_meets_hyperplane(v, h, rng);
        const auto q = cert.g.to_quaternion();
        csv.field(std::string("hyperplane"));
        csv.field(trial);
        csv.field(input_hash({v[0].real(), v[0].imag(), v[1].real(), v[1].imag(), h[0].real(),
                              h[0].imag(), h[1].real(), h[1].imag()}));
        for (double c : q) csv.field(c);
        csv.field(cert.residual);
        csv.field(0.0);
        csv.end_row();
    }
    const SO3Action action(2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(5), y(5), z(5);
        for (auto& c : x) c = rng.normal();
        for (auto& c : y) c = rng.normal();
        for (auto& c : z) c = rng.normal();
        double yy = 0, zy = 0;
        for (int i = 0; i < 5; ++i) {
            yy += y[i] * y[i];
            zy += z[i] * y[i];
        }
        for (int i = 0; i < 5; ++i) z[i] -= zy / yy * y[i];
        const auto cert = codim2_orbit_meets(action, x, y, z, rng);
        const auto q = rot3_to_quaternion(cert.g);
        std::vector<double> all;
        all.insert(all.end(), x.begin(), x.end());
        all.insert(all.end(), y.begin(), y.end());
        all.insert(all.end(), z.begin(), z.end());
        csv.field(std::string("codim2"));
        csv.field(trial);
        csv.field(input_hash(all));
        for (double c : q) csv.field(c);
        csv.field(cert.residual_y);
        csv.field(cert.residual_z);
        csv.end_row();
    }
    return 0;
}

int cmd_plot(const std::string& what, int n, double angle, std::uint64_t seed, int subdivisions,
             const std::string& out_path, const std::string& contours_csv,
             const std::string& zeros_csv) {
    Output out(out_path);
    if (what == "chords") {
        const SpherePoint a{Vec3{0, 0, 1}};
        const SpherePoint b{Vec3{std::sin(angle), 0, std::cos(angle)}};
        write_chord_diagram_svg(out.stream(), chord_diagram(a, b, n));
        return 0;
    }
    // contours: a seeded random pair with its certified common zeros
    Rng rng(seed);
    const auto u = random_eigenfunction(rng, n);
    const auto v = random_eigenfunction(rng, n);
    const auto mesh = icosphere(subdivisions);
    const auto contours = trace_contours_mesh(u, mesh);
    const auto res = common_zero_search(u, v, mesh);
    write_contours_svg(out.stream(), contours, res.zeros);
    if (!contours_csv.empty()) {
        Output c(contours_csv);
        write_contours_csv(c.stream(), contours);
    }
    if (!zeros_csv.empty()) {
        Output z(zeros_csv);
        write_zeros_csv(z.stream(), res.zeros);
    }
    return 0;
}

// Exports for the canonical torus witness pair (cos s, sin s).
void dump_incidence_artifacts(const std::string& graph_out, const std::string& domains_out) {
    const auto mesh = torus_mesh(64);
    std::vector<double> uvals(mesh.vertex_count()), vvals(mesh.vertex_count());
    for (int i = 0; i < mesh.vertex_count(); ++i) {
        uvals[i] = std::cos(mesh.vertices()[i].x);
        vvals[i] = std::sin(mesh.vertices()[i].x);
    }
    const auto du = nodal_domains(uvals, mesh), dv = nodal_domains(vvals, mesh);
    if (!graph_out.empty()) {
        Output g(graph_out);
        write_incidence_dot(g.stream(), build_incidence(du, dv));
    }
    if (!domains_out.empty()) {
        Output d(domains_out);
        write_domains_csv(d.stream(), du);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nodal-set laboratory for Laplace-Beltrami eigenfunctions on S^2"};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    std::string out_path;
    std::string format = "csv";
    int n = 2;
    int n_max = 8;
    int subdivisions = 5;
    double angle = 0.5 * kPi;
    std::vector<double> axis_a, axis_b;
    std::string mode = "perp";
    std::string suite = "all";
    std::string what = "chords";
    cli::VerifyOptions vopt;

    auto* zeros = app.add_subcommand("zeros", "Legendre zeros as CSV");
    zeros->add_option("--n", n, "degree")->required()->check(CLI::Range(1, kMaxLegendreDegree));
    zeros->add_option("--out", out_path, "output path (default stdout)");
    zeros->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv-summary"}));

    auto* count = app.add_subcommand("count", "direct and chord-model common-zero counts");
    count->add_option("--n", n, "degree")->required()->check(CLI::Range(1, kMaxLegendreDegree));
    count->add_option("--angle", angle, "angle between the zonal axes (radians)");
    count->add_option("--axis-a", axis_a, "axis a as three floats")->expected(3);
    count->add_option("--axis-b", axis_b, "axis b as three floats")->expected(3);
    count->add_option("--out", out_path);
    count->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv-summary"}));

    auto* sweep = app.add_subcommand("sweep", "n(a,b) table over degrees");
    sweep->add_option("--n-max", n_max, "largest degree")
        ->required()
        ->check(CLI::Range(1, kMaxLegendreDegree));
    sweep->add_option("--mode", mode)->check(CLI::IsMember({"close", "perp", "random"}));
    sweep->add_option("--seed", seed, "random seed (mode random)");
    int trials = 1;
    sweep->add_option("--trials", trials, "random pairs per degree; the row keeps the minimum")
        ->check(CLI::Range(1, 100000));
    sweep->add_option("--out", out_path);
    sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "tsv-summary"}));

    auto* verify = app.add_subcommand("verify", "run an invariant suite; nonzero exit on failure");
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(cli::suite_names()));
    verify->add_option("--seed", vopt.seed, "random seed");
    verify->add_option("--subdivisions", vopt.subdivisions, "icosphere subdivisions")
        ->check(CLI::Range(0, kMaxSubdivisions));
    verify->add_option("--n-max", vopt.n_max, "largest eigenfunction degree")
        ->check(CLI::Range(1, 16));
    verify->add_option("--pairs", vopt.pairs, "number of random pairs")
        ->check(CLI::Range(1, 10000));
    verify->add_option("--tol-cert", vopt.tol_cert, "certification tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol-ortho", vopt.tol_ortho, "contour-orthogonality tolerance")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol-cover", vopt.cover_floor, "covering dead-band scale")
        ->check(CLI::PositiveNumber);
    std::string graph_out, domains_out;
    verify->add_option("--graph-out", graph_out,
                       "dump the torus witness incidence graph (DOT) to this path");
    verify->add_option("--domains-out", domains_out,
                       "dump the torus witness domain map (CSV) to this path");
    verify->add_option("--out", out_path, "CSV output path (with --format csv)");
    bool orbit_certificates = false;
    verify->add_flag("--certificates", orbit_certificates,
                     "emit orbit certificate rows (suite orbits, CSV)");
    verify->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));

    auto* plot = app.add_subcommand("plot", "SVG chord diagram or stereographic contours");
    plot->add_option("--what", what)->check(CLI::IsMember({"chords", "contours"}))->required();
    plot->add_option("--n", n, "degree")->check(CLI::Range(1, 64));
    plot->add_option("--angle", angle, "axis angle for chords");
    plot->add_option("--seed", seed, "seed for the random contour pair");
    plot->add_option("--subdivisions", subdivisions)->check(CLI::Range(0, kMaxSubdivisions));
    plot->add_option("--out", out_path, "output SVG path")->required();
    std::string contours_csv, zeros_csv;
    plot->add_option("--contours-csv", contours_csv, "also dump contour vertices as CSV");
    plot->add_option("--zeros-csv", zeros_csv, "also dump certified zeros as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (zeros->parsed()) return cmd_zeros(n, out_path, format);
        if (count->parsed()) return cmd_count(n, angle, axis_a, axis_b, out_path, format);
        if (sweep->parsed()) return cmd_sweep(n_max, mode, seed, trials, out_path, format);
        if (verify->parsed()) {
            if (!graph_out.empty() || !domains_out.empty())
                dump_incidence_artifacts(graph_out, domains_out);
            if (orbit_certificates && suite == "orbits")
                return cmd_verify_orbits_certificates(vopt, out_path);
            return cmd_verify(suite, vopt, out_path, verify->count("--format") > 0 &&
                                                          format == "csv");
        }
        if (plot->parsed())
            return cmd_plot(what, n, angle, seed, subdivisions, out_path, contours_csv,
                            zeros_csv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
