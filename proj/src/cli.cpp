// Command-line driver: dispatches the eight subcommands onto the library,
// with deterministic text output and the documented exit-code mapping.

#include "a3b/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "a3b/errors.hpp"
#include "a3b/family.hpp"
#include "a3b/generator.hpp"
#include "a3b/geometry.hpp"
#include "a3b/json_io.hpp"
#include "a3b/tiling.hpp"
#include "a3b/trig.hpp"

namespace a3b {

namespace {

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open for writing: " + path);
    f << content;
    f.flush();
    if (!f) throw domain_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void print_quad_report(std::ostream& out, const Quadrilateral& q, int f) {
    QuadReport r = check_quad(q, f);
    out << "f " << f << "\n"
        << "alpha " << fmt12(q.alpha) << "\n"
        << "beta " << fmt12(q.beta) << "\n"
        << "gamma " << fmt12(q.gamma) << "\n"
        << "delta " << fmt12(q.delta) << "\n"
        << "a " << fmt12(q.a) << "\n"
        << "b " << fmt12(q.b) << "\n"
        << "in_range " << (r.in_range ? "yes" : "no") << "\n"
        << "angle_sum_residual " << fmt12(r.angle_sum_residual) << "\n"
        << "r_diff " << fmt12(r.r_diff) << "\n"
        << "r_sum " << fmt12(r.r_sum) << "\n"
        << "cos_b_residual " << fmt12(r.cos_b_residual) << "\n"
        << "cos_a_residual " << fmt12(r.cos_a_residual) << "\n"
        << "cos_a_singular " << (r.cos_a_singular ? "yes" : "no") << "\n"
        << "ok " << (r.ok ? "yes" : "no") << "\n";
}

std::string join_ints(const std::vector<int>& xs, char sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string flip_file_name(const FlipSpec& s) {
    return "flip_f" + std::to_string(s.f) + "_m" + std::to_string(s.m) + "_n" +
           std::to_string(s.gaps.size()) + "_g" + join_ints(s.gaps, '-') + ".json";
}

std::vector<int> parse_gaps(const std::string& text) {
    std::vector<int> gaps;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            gaps.push_back(v);
        } catch (const std::logic_error&) { // stoi failure (invalid or out of range)
            throw domain_error("invalid gap list: " + text);
        }
    }
    if (gaps.empty()) throw domain_error("invalid gap list: " + text);
    return gaps;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"a^3 b spherical tilings: construct, enumerate, count, verify, realize"};
    app.require_subcommand(1);

    int f = 0, m = 0, samples = 100, segments = 32;
    double beta = 0, tol = 1e-9;
    std::string json_path, obj_path, dir_path, name, gaps_text;
    bool do_list = false, do_count = false;

    auto* c_quad = app.add_subcommand("quad", "Print the family quadrilateral and its residuals");
    c_quad->add_option("--f", f, "face count (even, >= 6)")->required();
    c_quad->add_option("--beta", beta, "beta angle in half-turn units")->required();

    auto* c_emt = app.add_subcommand("emt", "Build an earth-map tiling with coordinates");
    c_emt->add_option("--f", f, "face count (even, >= 6)")->required();
    c_emt->add_option("--beta", beta, "beta angle in half-turn units")->required();
    c_emt->add_option("--json", json_path, "write the tiling file here");
    c_emt->add_option("--obj", obj_path, "write the OBJ mesh here");

    auto* c_flips = app.add_subcommand("flips", "Enumerate or emit flip modifications");
    c_flips->add_option("--f", f, "face count (even, >= 8)")->required();
    c_flips->add_option("--m", m, "number of gamma-fans on the beta side")->required();
    c_flips->add_flag("--list", do_list, "list every flip choice (default)");
    c_flips->add_flag("--count", do_count, "print closed-form counts per block number");
    c_flips->add_option("--gaps", gaps_text, "comma-separated gaps: emit this one tiling");
    c_flips->add_option("--json", json_path, "write the --gaps tiling file here");
    c_flips->add_option("--emit-all", dir_path, "write every flip tiling into this directory");

    auto* c_sporadic = app.add_subcommand("sporadic", "Emit one of the five isolated tilings");
    c_sporadic->add_option("--name", name, "tiling name (see library list)")->required();
    c_sporadic->add_option("--json", json_path, "write the tiling file here");
    c_sporadic->add_option("--obj", obj_path, "write the OBJ mesh here");

    auto* c_verify = app.add_subcommand("verify", "Validate a tiling file");
    c_verify->add_option("--json", json_path, "tiling file to check")->required();
    c_verify->add_option("--tol", tol, "vertex angle-sum tolerance");

    auto* c_counts = app.add_subcommand("counts", "Print the (Q1, Q2, Q3) counting row");
    c_counts->add_option("--f", f, "face count (even, >= 8)")->required();

    auto* c_moduli = app.add_subcommand("moduli", "Sample the moduli curve as CSV");
    c_moduli->add_option("--f", f, "face count (even, >= 6)")->required();
    c_moduli->add_option("--samples", samples, "number of interior sample points");

    auto* c_realize = app.add_subcommand("realize", "Realize a tiling file as an OBJ mesh");
    c_realize->add_option("--json", json_path, "tiling file to realize")->required();
    c_realize->add_option("--obj", obj_path, "write the OBJ mesh here")->required();
    c_realize->add_option("--segments", segments, "great-circle segments per arc");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("a3btile");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), const_cast<char**>(argv.data()));

        if (app.got_subcommand(c_quad)) {
            print_quad_report(out, emt_quad(f, beta), f);
        } else if (app.got_subcommand(c_emt)) {
            Quadrilateral q = emt_quad(f, beta);
            Tiling t = build_emt(f).with_mesh(emt_coordinates(f, beta));
            std::string json = export_json(t, q);
            if (!json_path.empty()) write_file(json_path, json);
            if (!obj_path.empty()) write_file(obj_path, export_obj(t, segments));
            if (json_path.empty() && obj_path.empty()) out << json;
        } else if (app.got_subcommand(c_flips)) {
            if (do_count) {
                FlipCase fc = flip_case_for_m(f, m);
                long long total = 0;
                for (int n = 1; n <= fc.n_max; ++n) {
                    long long c = count_flip_tilings(f, m, n);
                    total += c;
                    out << "n=" << n << ":" << c << " ";
                }
                out << "total:" << total << "\n";
            }
            if (!gaps_text.empty()) {
                FlipSpec spec{f, m, parse_gaps(gaps_text)};
                std::string json = export_json(apply_flips(spec), flip_quad(f, m));
                if (!json_path.empty())
                    write_file(json_path, json);
                else
                    out << json;
            }
            if (!dir_path.empty()) {
                std::filesystem::create_directories(dir_path);
                Quadrilateral q = flip_quad(f, m);
                for (const FlipSpec& spec : enumerate_flip_tilings(f, m)) {
                    auto path = std::filesystem::path(dir_path) / flip_file_name(spec);
                    write_file(path.string(), export_json(apply_flips(spec), q));
                    out << path.string() << "\n";
                }
            }
            if (do_list || (!do_count && gaps_text.empty() && dir_path.empty())) {
                for (const FlipSpec& spec : enumerate_flip_tilings(f, m))
                    out << "n=" << spec.gaps.size() << " gaps=" << join_ints(spec.gaps, ',')
                        << "\n";
            }
        } else if (app.got_subcommand(c_sporadic)) {
            Quadrilateral q = sporadic_quad(name);
            Tiling t = sporadic_tiling(name);
            t = t.with_mesh(realize_by_propagation(t, q));
            std::string json = export_json(t, q);
            if (!json_path.empty()) write_file(json_path, json);
            if (!obj_path.empty()) write_file(obj_path, export_obj(t, segments));
            if (json_path.empty() && obj_path.empty()) out << json;
        } else if (app.got_subcommand(c_verify)) {
            ImportedTiling imp = import_json(read_file(json_path));
            ValidationReport rep = validate(imp.tiling, imp.quad, tol);
            bool ok = rep.ok;
            for (const CheckResult& c : rep.checks) {
                out << c.name << ": " << (c.passed ? "pass" : "FAIL " + c.detail) << "\n";
            }
            if (imp.tiling.mesh()) {
                double dev = verify_mesh(imp.tiling, imp.quad, *imp.tiling.mesh());
                bool gok = dev < 1e-7;
                out << "mesh-geometry: "
                    << (gok ? std::string("pass") : "FAIL worst deviation " + fmt12(dev)) << "\n";
                double ex = mesh_total_excess(imp.tiling, *imp.tiling.mesh());
                bool eok = std::fabs(ex - 4 * pi) < 1e-7;
                out << "mesh-excess: "
                    << (eok ? std::string("pass") : "FAIL total excess " + fmt12(ex)) << "\n";
                ok = ok && gok && eok;
            }
            return ok ? 0 : 1;
        } else if (app.got_subcommand(c_counts)) {
            QTable t = q_table(f);
            out << "Q1=" << t.q1 << " Q2=" << t.q2 << " Q3=" << t.q3 << "\n";
        } else if (app.got_subcommand(c_moduli)) {
            if (samples < 1) throw domain_error("samples must be >= 1");
            auto [lo, hi] = moduli_t_range(f);
            out << "t,beta,a,b,alpha,delta\n";
            for (int i = 0; i < samples; ++i) {
                double t = lo + (hi - lo) * (i + 0.5) / samples;
                Quadrilateral q = moduli_point_quad({f, t});
                out << fmt12(t) << ',' << fmt12(q.beta) << ',' << fmt12(q.a) << ',' << fmt12(q.b)
                    << ',' << fmt12(q.alpha) << ',' << fmt12(q.delta) << "\n";
            }
        } else if (app.got_subcommand(c_realize)) {
            if (segments < 1) throw domain_error("segments must be >= 1");
            ImportedTiling imp = import_json(read_file(json_path));
            Tiling t = imp.tiling;
            if (!t.mesh()) t = t.with_mesh(realize_by_propagation(t, imp.quad));
            write_file(obj_path, export_obj(t, segments));
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 3;
    }
}

} // namespace a3b
