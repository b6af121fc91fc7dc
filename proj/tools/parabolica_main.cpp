#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "parabolica/construction.hpp"
#include "parabolica/parse.hpp"
#include "parabolica/report.hpp"
#include "parabolica/svg.hpp"

using namespace parabolica;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUncertified = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << text;
}

// Inline expression, or @file holding an expression or the exchange format.
SparsePoly read_poly(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') text = slurp(arg.substr(1));
    std::istringstream probe(text);
    std::string first;
    probe >> first;
    bool looks_exchange = !first.empty() && (std::isdigit(first[0]) || first[0] == '-') &&
                          first.find_first_of("xy^*()+") == std::string::npos;
    if (looks_exchange && text.find('\n') != std::string::npos)
        return sparse_from_exchange(text);
    return parse_poly(text);
}

Rat require_rational(const std::string& text, const std::string& what) {
    auto q = parse_rational(text);
    if (!q) throw std::runtime_error(what + ": expected an exact rational, got '" + text + "'");
    return *q;
}

BoxQ parse_box(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw std::runtime_error("box: expected 'xlo,xhi,ylo,yhi'");
    BoxQ b{{require_rational(parts[0], "box"), require_rational(parts[1], "box")},
           {require_rational(parts[2], "box"), require_rational(parts[3], "box")}};
    if (b.x.lo > b.x.hi || b.y.lo > b.y.hi) throw std::runtime_error("box: empty range");
    return b;
}

int env_jobs() {
    const char* v = std::getenv("PARABOLICA_JOBS");
    if (!v) return 0;
    return std::atoi(v);
}

struct CommonOpts {
    std::string box = "-10,10,-10,10";
    std::string eps = "1/1099511627776";
    int depth = 60;
    int jobs = 0;
    std::string out;
};

SolveConfig solve_config(const CommonOpts& o) {
    SolveConfig cfg;
    Rat eps = require_rational(o.eps, "--eps");
    cfg.min_width = rat_to_interval(eps).hi;
    cfg.max_depth = o.depth;
    return cfg;
}

int run_analyze(const std::string& poly_arg, const CommonOpts& o) {
    SparsePoly f;
    try {
        f = read_poly(poly_arg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    }
    BoxQ box = parse_box(o.box);
    SolveResult res;
    try {
        res = isolate_tspp(build_system(f), box, solve_config(o));
    } catch (const DegenerateSystemError& ex) {
        std::cerr << "error: degenerate input: " << ex.what() << "\n";
        return kExitInput;
    }
    Json j;
    j["polynomial"] = to_string(f);
    j["search_box"] = to_json(box);
    j["report"] = to_json(res);
    emit(o.out, j.dump(2) + "\n");
    return res.fully_resolved() ? kExitOk : kExitUncertified;
}

int run_patchwork(const std::string& poly_arg, const std::string& lifting_path,
                  const std::vector<std::string>& t_flags, const std::string& subdivision_out,
                  const std::string& out) {
    SparsePoly f = read_poly(poly_arg);
    Lifting lift = lifting_from_csv(slurp(lifting_path));
    ParamPoly f_t = patchworking_polynomial(f, lift);
    std::string text = to_string(f_t) + "\n";
    for (const auto& ts : t_flags) {
        Rat t = require_rational(ts, "--t");
        text += "t=" + rat_to_string(t) + ": " + to_string(specialize(f_t, t)) + "\n";
    }
    emit(out, text);
    if (!subdivision_out.empty()) {
        Subdivision sub = regular_subdivision(lift);
        emit(subdivision_out, to_json(sub).dump(2) + "\n");
    }
    return kExitOk;
}

int run_plot(const std::string& poly_arg, const std::string& window_text, int res,
             const std::string& out, const CommonOpts& o) {
    SparsePoly f = read_poly(poly_arg);
    BoxQ window = parse_box(window_text);
    ParabolicSystem sys = build_system(f);
    std::vector<SvgCurve> curves;
    curves.push_back({"h", "#202020", trace_curve(sys.h, window, res)});
    curves.push_back({"e1", "#1f6fd6", trace_curve(sys.e1, window, res)});
    curves.push_back({"e2", "#d62728", trace_curve(sys.e2, window, res)});
    std::vector<SvgMarker> markers;
    try {
        SolveResult sol = isolate_tspp(sys, window, solve_config(o));
        for (const auto& p : sol.points) markers.push_back({p.approx_x, p.approx_y});
    } catch (const DegenerateSystemError&) {
        // Curves without certified markers are still a valid plot.
    }
    emit(out, render_svg(window, curves, markers));
    return kExitOk;
}

int run_reproduce(int d, const std::vector<std::string>& t_flags, const std::string& format,
                  const CommonOpts& o) {
    ReproduceOptions opt;
    opt.box = parse_box(o.box);
    opt.solve = solve_config(o);
    opt.jobs = o.jobs > 0 ? o.jobs : env_jobs();
    std::vector<Rat> ts;
    for (const auto& s : t_flags) ts.push_back(require_rational(s, "--t"));
    std::vector<GlueReport> reports = reproduce_theorem(d, ts, opt);

    bool any_holds = false;
    for (const auto& r : reports) any_holds = any_holds || r.inequality_holds;

    std::string text;
    if (format == "csv") {
        text = glue_csv_header();
        for (const auto& r : reports) text += glue_csv_row(r);
    } else {
        Json j = Json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        text = j.dump(2) + "\n";
    }
    emit(o.out, text);
    if (!any_holds) {
        std::cerr << "bound not certified for any tested t\n";
        return kExitUncertified;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified special parabolic points and patchworked families"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string poly_arg, lifting_path, window_text = "-2,2,-2,2", format = "json";
    std::string subdivision_out;
    std::vector<std::string> t_flags;
    int resolution = 256, d = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--box", common.box, "search box 'xlo,xhi,ylo,yhi' (rationals)");
        cmd->add_option("--eps", common.eps, "minimum box width (rational)");
        cmd->add_option("--depth", common.depth, "maximum subdivision depth");
        cmd->add_option("--jobs", common.jobs, "worker threads (or PARABOLICA_JOBS)");
        cmd->add_option("--out", common.out, "output path (default stdout)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "certify the TSPPs of a polynomial");
    analyze->add_option("poly", poly_arg, "expression or @file")->required();
    add_common(analyze);

    CLI::App* patch = app.add_subcommand("patchwork", "build a patchworking polynomial");
    patch->add_option("poly", poly_arg, "expression or @file")->required();
    patch->add_option("--lifting", lifting_path, "CSV lifting 'i,j,lambda'")->required();
    patch->add_option("--t", t_flags, "also print the specialisation at t (repeatable)");
    patch->add_option("--subdivision", subdivision_out, "write the induced subdivision JSON");
    patch->add_option("--out", common.out, "output path (default stdout)");

    CLI::App* plot = app.add_subcommand("plot", "SVG of the h, e1, e2 curves");
    plot->add_option("poly", poly_arg, "expression or @file")->required();
    plot->add_option("--window", window_text, "plot window 'xlo,xhi,ylo,yhi'");
    plot->add_option("--res", resolution, "grid cells per axis");
    plot->add_option("--out", common.out, "output SVG path")->required();
    plot->add_option("--eps", common.eps, "minimum box width (rational)");
    plot->add_option("--depth", common.depth, "maximum subdivision depth");

    CLI::App* repro = app.add_subcommand("reproduce", "tile counts, gluing and the degree bound");
    repro->add_option("d", d, "degree of the construction")->required();
    repro->add_option("--t", t_flags, "parameter values (rationals; default sweep 2^-4..2^-16)");
    repro->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    add_common(repro);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(poly_arg, common);
        if (*patch)
            return run_patchwork(poly_arg, lifting_path, t_flags, subdivision_out, common.out);
        if (*plot) return run_plot(poly_arg, window_text, resolution, common.out, common);
        if (*repro) return run_reproduce(d, t_flags, format, common);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
