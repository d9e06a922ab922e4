#include "antipodes/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "antipodes/counting.hpp"
#include "antipodes/csv.hpp"
#include "antipodes/errors.hpp"
#include "antipodes/experiments.hpp"
#include "antipodes/generators.hpp"
#include "antipodes/graph.hpp"
#include "antipodes/lens.hpp"
#include "antipodes/pipeline.hpp"
#include "antipodes/point_io.hpp"
#include "antipodes/svg.hpp"

namespace antipodes::cli {
namespace {

using nlohmann::ordered_json;

struct GeneratorOptions {
    std::string family = "circle";
    std::size_t n = 1000;
    std::optional<double> eps;
    std::size_t k = 0;
    std::size_t d = 2;
    std::uint64_t seed = 0;
    double vertex_scale = 0.5;

    void add(CLI::App& app) {
        app.add_option("--family", family,
                       "circle|reuleaux|polygon|sphere|origin_plus_cap|two_clusters|random_disk")
            ->capture_default_str();
        app.add_option("--n", n, "point count")->capture_default_str()->check(CLI::PositiveNumber);
        app.add_option("--k", k, "polygon side count (0: derived from eps)")->capture_default_str();
        app.add_option("--d", d, "ambient dimension")->capture_default_str()->check(CLI::PositiveNumber);
        app.add_option("--seed", seed, "seed for randomized families")->capture_default_str();
        app.add_option("--vertex-scale", vertex_scale, "Reuleaux vertex mass factor")->capture_default_str();
    }

    GeneratorSpec spec() const {
        GeneratorSpec s;
        s.family = parse_family(family);
        s.n = n;
        s.epsilon = eps;
        s.k = k;
        s.d = d;
        s.seed = seed;
        s.vertex_scale = vertex_scale;
        return s;
    }

    void echo(ordered_json& config) const {
        config["family"] = family;
        config["n"] = n;
        config["k"] = k;
        config["d"] = d;
        config["seed"] = seed;
        config["vertex_scale"] = vertex_scale;
    }
};

ordered_json optional_double(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

void open_out(std::ofstream& f, const std::string& path) {
    f.open(path);
    if (!f) {
        throw InputError("cannot write '" + path + "'");
    }
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw InputError("cannot open '" + path + "'");
    }
    return f;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

ordered_json bound_json(const BoundReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["epsilon"] = r.epsilon;
    j["hull_size"] = r.hull_size;
    j["strip_size"] = r.strip_size;
    j["exact_antipodes"] = r.exact_antipodes;
    j["exact_neighbors"] = r.exact_neighbors;
    j["quad_form"] = r.quad_form;
    j["norm_sq"] = r.norm_sq;
    j["lambda1"] = r.lambda1;
    j["lambda1_upper"] = r.lambda1_upper;
    j["lambda1_iterations"] = r.lambda1_iterations;
    j["trace_mtm"] = r.trace_mtm;
    j["k"] = r.k;
    j["k_times_eps"] = r.k_times_eps;
    j["chain"] = {{"antipodes_le_quad_form", r.flags.antipodes_le_quad_form},
                  {"neighbors_ge_norm_sq", r.flags.neighbors_ge_norm_sq},
                  {"quad_form_le_spectral", r.flags.quad_form_le_spectral},
                  {"spectral_le_trace", r.flags.spectral_le_trace}};
    j["chain_ok"] = r.chain_ok;
    return j;
}

std::vector<double> parse_eps_list(const std::vector<double>& list, const std::string& dyadic) {
    if (!dyadic.empty()) {
        if (!list.empty()) {
            throw InputError("give either --eps or --eps-dyadic, not both");
        }
        const auto colon = dyadic.find(':');
        if (colon == std::string::npos) {
            throw InputError("--eps-dyadic expects a:b, e.g. 4:9");
        }
        try {
            return dyadic_epsilons(std::stoi(dyadic.substr(0, colon)), std::stoi(dyadic.substr(colon + 1)));
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const InputError*>(&e)) {
                throw;
            }
            throw InputError("--eps-dyadic expects integers a:b, got '" + dyadic + "'");
        }
    }
    if (list.empty()) {
        throw InputError("give --eps or --eps-dyadic");
    }
    for (double e : list) {
        Epsilon{e};
    }
    return list;
}

void write_svg_file(const std::string& path, std::span<const SweepRow> rows, const std::optional<ScalingFit>& fit,
                    const std::string& title) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows) {
        if (r.ratio && *r.ratio > 0.0) {
            pts.emplace_back(r.epsilon, *r.ratio);
        }
    }
    LogLogPlot plot;
    plot.title = title;
    plot.points = pts;
    if (fit) {
        plot.fit = LogLogLine{fit->slope, fit->intercept};
    }
    std::ofstream f;
    open_out(f, path);
    write_loglog_svg(f, plot);
}

ordered_json fit_json(const ScalingFit& fit) {
    ordered_json j;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["r_squared"] = fit.r_squared;
    j["epsilon_range"] = {fit.eps_min, fit.eps_max};
    j["rows_used"] = fit.rows_used;
    j["rows_excluded"] = fit.rows_excluded;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Antipode and neighbor pair counting, certificates and experiments"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (0: all cores); outputs do not depend on it");

    // generate
    auto* gen = app.add_subcommand("generate", "write a point set (or the star metric)");
    GeneratorOptions gen_opts;
    gen_opts.add(*gen);
    gen->add_option("--eps", gen_opts.eps, "epsilon for families that need it");
    std::string gen_out;
    bool gen_normalize = false;
    gen->add_option("--out", gen_out, "output file (default: stdout)");
    gen->add_flag("--normalize", gen_normalize, "center and rescale to diameter 1");

    // count
    auto* count = app.add_subcommand("count", "count ordered neighbor and antipode pairs");
    std::string count_in;
    std::string count_metric;
    std::optional<double> count_eps;
    std::string engine = "grid";
    std::optional<double> near;
    std::optional<double> far;
    auto* in_opt = count->add_option("--in", count_in, "point file");
    auto* metric_opt = count->add_option("--metric", count_metric, "finite metric file");
    in_opt->excludes(metric_opt);
    count->add_option("--eps", count_eps, "epsilon (point sets)");
    count->add_option("--engine", engine, "grid|brute")->capture_default_str()->check(CLI::IsMember({"grid", "brute"}));
    count->add_option("--near", near, "neighbor threshold (metrics)");
    count->add_option("--far", far, "antipode threshold (metrics)");

    // bound
    auto* bound = app.add_subcommand("bound", "run the box certificate and report every inequality");
    std::string bound_in;
    double bound_eps = 0.0;
    std::string emit_matrix;
    bool verify_filter = false;
    bound->add_option("--in", bound_in, "point file")->required();
    bound->add_option("--eps", bound_eps, "epsilon")->required();
    bound->add_option("--emit-matrix", emit_matrix, "write the box graph as an edge list");
    bound->add_flag("--verify-filter", verify_filter, "re-check the strip filter by brute force");

    // lens
    auto* lens = app.add_subcommand("lens", "two-annuli intersection for anchors at distance d");
    double lens_d = 0.0;
    double lens_eps = 0.0;
    bool lens_audit = false;
    lens->add_option("--d", lens_d, "anchor distance")->required();
    lens->add_option("--eps", lens_eps, "epsilon")->required();
    lens->add_flag("--audit", lens_audit, "rasterize the enlarged lens and count eps/4 cells");

    // profile
    auto* profile = app.add_subcommand("profile", "common-neighbor profile of a box graph (CSV s,count)");
    std::string edges_in;
    std::optional<double> radius;
    std::optional<double> profile_eps;
    std::string profile_out;
    std::string profile_json;
    profile->add_option("--edges", edges_in, "edge list written by bound --emit-matrix")->required();
    profile->add_option("--radius", radius, "forbidden radius");
    profile->add_option("--eps", profile_eps, "epsilon; the radius defaults to 10 sqrt(eps)");
    profile->add_option("--out", profile_out, "CSV file (default: stdout)");
    profile->add_option("--json", profile_json, "also write a JSON summary here");

    // sweep
    auto* sw = app.add_subcommand("sweep", "counts over a decreasing list of epsilons (CSV)");
    GeneratorOptions sweep_opts;
    sweep_opts.add(*sw);
    std::vector<double> eps_list;
    std::string dyadic;
    bool with_bounds = false;
    std::string sweep_out;
    std::string sweep_svg;
    sw->add_option("--eps", eps_list, "epsilons, strictly decreasing")->delimiter(',');
    sw->add_option("--eps-dyadic", dyadic, "a:b expands to 2^-a, ..., 2^-b");
    sw->add_flag("--with-bounds", with_bounds, "append certificate columns");
    sw->add_option("--out", sweep_out, "CSV file (default: stdout)");
    sw->add_option("--svg", sweep_svg, "log-log plot of ratio against epsilon");

    // fit
    auto* fit = app.add_subcommand("fit", "scaling exponent of neighbors/antipodes against epsilon");
    std::string fit_in;
    std::string fit_svg;
    fit->add_option("--in", fit_in, "sweep CSV")->required();
    fit->add_option("--svg", fit_svg, "log-log plot with the fitted line");

    // search
    auto* search = app.add_subcommand("search", "simulated annealing for small neighbors/antipodes ratios");
    std::size_t search_n = 500;
    double search_eps = 0.0;
    std::uint64_t search_seed = 0;
    SearchSchedule schedule;
    std::string search_out;
    std::string search_trace;
    search->add_option("--n", search_n, "point count")->capture_default_str();
    search->add_option("--eps", search_eps, "epsilon")->required();
    search->add_option("--seed", search_seed, "seed")->capture_default_str();
    search->add_option("--proposals", schedule.proposals, "proposal count")->capture_default_str();
    search->add_option("--cooling", schedule.cooling, "temperature factor per proposal")->capture_default_str();
    search->add_option("--out", search_out, "best point set file");
    search->add_option("--trace", search_trace, "write the JSON report here instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        ordered_json config;
        config["threads"] = threads;
        if (gen->parsed()) {
            config["subcommand"] = "generate";
            gen_opts.echo(config);
            config["epsilon"] = optional_double(gen_opts.eps);
            config["normalize"] = gen_normalize;
            config["out"] = gen_out;
            std::ofstream file;
            if (!gen_out.empty()) {
                open_out(file, gen_out);
            }
            std::ostream& dst = gen_out.empty() ? out : file;
            if (gen_opts.family == "star") {
                const FiniteMetric m = star_metric(gen_opts.n);
                write_metric(dst, m);
                if (!gen_out.empty()) {
                    emit(out, {{"config", config}, {"n", m.size()}, {"diameter", m.diameter()}});
                }
                return 0;
            }
            PointSet ps = generate(gen_opts.spec());
            if (gen_normalize) {
                ps = normalize_to_unit_diameter(ps);
            }
            write_point_set(dst, ps);
            if (!gen_out.empty()) {
                emit(out, {{"config", config}, {"n", ps.size()}, {"d", ps.dim()}, {"diameter", ps.diameter()}});
            }
            return 0;
        }
        if (count->parsed()) {
            config["subcommand"] = "count";
            ordered_json result;
            if (!count_metric.empty()) {
                if (!near || !far) {
                    throw InputError("--metric needs --near and --far");
                }
                config["metric"] = count_metric;
                config["near"] = *near;
                config["far"] = *far;
                auto f = open_in(count_metric);
                const FiniteMetric m = read_metric(f);
                const PairCounts c = count_pairs_metric(m, *near, *far);
                result["config"] = config;
                result["n"] = c.n;
                result["diameter"] = m.diameter();
                result["neighbors"] = c.neighbors_ordered;
                result["antipodes"] = c.antipodes_ordered;
                result["ratio_antipodes_per_neighbor"] =
                    c.neighbors_ordered ? ordered_json(static_cast<double>(c.antipodes_ordered) /
                                                       static_cast<double>(c.neighbors_ordered))
                                        : ordered_json(nullptr);
                emit(out, result);
                return 0;
            }
            if (count_in.empty() || !count_eps) {
                throw InputError("count needs --in and --eps (or --metric with --near/--far)");
            }
            const Epsilon eps(*count_eps);
            config["in"] = count_in;
            config["epsilon"] = eps.value();
            config["engine"] = engine;
            const PointSet ps = read_point_set_file(count_in);
            const CountOptions opts{threads};
            const PairCounts c = engine == "brute" ? count_pairs_brute(ps, eps, opts) : count_pairs_grid(ps, eps, opts);
            result["config"] = config;
            result["n"] = c.n;
            result["d"] = ps.dim();
            result["epsilon"] = c.epsilon;
            result["diameter"] = ps.diameter();
            result["neighbors"] = c.neighbors_ordered;
            result["antipodes"] = c.antipodes_ordered;
            result["ratio"] = c.antipodes_ordered
                                  ? ordered_json(static_cast<double>(c.neighbors_ordered) /
                                                 static_cast<double>(c.antipodes_ordered))
                                  : ordered_json(nullptr);
            emit(out, result);
            return 0;
        }
        if (bound->parsed()) {
            const Epsilon eps(bound_eps);
            config["subcommand"] = "bound";
            config["in"] = bound_in;
            config["epsilon"] = eps.value();
            config["emit_matrix"] = emit_matrix;
            config["verify_filter"] = verify_filter;
            const PointSet ps = read_point_set_file(bound_in);
            const BoundRun r = run_bound_pipeline(ps, eps, BoundOptions{threads, verify_filter});
            if (!emit_matrix.empty()) {
                std::ofstream f;
                open_out(f, emit_matrix);
                write_edge_list(f, BoxGraph(r.partition, r.matrix));
            }
            ordered_json result{{"config", config}};
            result.update(bound_json(r.report));
            emit(out, result);
            if (!r.report.chain_ok) {
                err << "certificate chain violated\n";
                return kExitCertificateViolation;
            }
            return 0;
        }
        if (lens->parsed()) {
            const Epsilon eps(lens_eps);
            config["subcommand"] = "lens";
            config["d"] = lens_d;
            config["epsilon"] = eps.value();
            config["audit"] = lens_audit;
            const LensGeometry g = annuli_intersection(lens_d, eps);
            ordered_json result{{"config", config},
                                {"d", g.d},
                                {"epsilon", g.epsilon},
                                {"y_outer", g.y_outer},
                                {"y_inner", g.y_inner},
                                {"x_side", g.x_side},
                                {"y_side", g.y_side},
                                {"side_width", g.side_width},
                                {"cover_count", g.cover_count}};
            if (lens_audit) {
                const LensCover c = lens_cover_audit(lens_d, eps);
                result["audit"] = {{"cells", c.cells}, {"enlargement", c.enlargement}, {"cells_times_d", c.constant}};
            }
            emit(out, result);
            return 0;
        }
        if (profile->parsed()) {
            if (!radius && !profile_eps) {
                throw InputError("profile needs --radius or --eps");
            }
            const double r = radius ? *radius : default_forbidden_radius(Epsilon(*profile_eps).value());
            config["subcommand"] = "profile";
            config["edges"] = edges_in;
            config["forbidden_radius"] = r;
            config["epsilon"] = optional_double(profile_eps);
            const BoxGraph g = read_edge_list_file(edges_in);
            const NeighborProfile p = common_neighbor_profile(g, r, threads);
            std::ofstream file;
            if (!profile_out.empty()) {
                open_out(file, profile_out);
            }
            std::ostream& dst = profile_out.empty() ? out : file;
            dst << "s,count\n";
            for (const auto& row : p.rows) {
                dst << row.s << ',' << row.count << '\n';
            }
            if (!profile_json.empty()) {
                std::ofstream jf;
                open_out(jf, profile_json);
                ordered_json rows = ordered_json::array();
                for (const auto& row : p.rows) {
                    rows.push_back({{"s", row.s}, {"count", row.count}});
                }
                emit(jf, {{"config", config},
                          {"k", g.k()},
                          {"edges", g.edge_count()},
                          {"forbidden_radius", p.forbidden_radius},
                          {"max_forbidden", p.max_forbidden},
                          {"c_forbidden", p.c_forbidden},
                          {"c_emp", p.c_emp},
                          {"rows", rows}});
            }
            return 0;
        }
        if (sw->parsed()) {
            const std::vector<double> list = parse_eps_list(eps_list, dyadic);
            config["subcommand"] = "sweep";
            sweep_opts.echo(config);
            config["epsilons"] = list;
            config["with_bounds"] = with_bounds;
            std::vector<std::string> warnings;
            const auto rows = sweep(sweep_opts.spec(), list, SweepOptions{with_bounds, threads}, &warnings);
            for (const auto& w : warnings) {
                err << "warning: " << w << '\n';
            }
            std::ofstream file;
            if (!sweep_out.empty()) {
                open_out(file, sweep_out);
            }
            write_sweep_csv(sweep_out.empty() ? out : file, rows);
            if (!sweep_svg.empty()) {
                std::optional<ScalingFit> f;
                try {
                    f = fit_exponent(rows);
                } catch (const InputError&) {
                }
                write_svg_file(sweep_svg, rows, f, sweep_opts.family + " sweep");
            }
            for (const auto& r : rows) {
                if (r.bounds && !r.bounds->chain_ok) {
                    err << "certificate chain violated at eps=" << r.epsilon << '\n';
                    return kExitCertificateViolation;
                }
            }
            return 0;
        }
        if (fit->parsed()) {
            config["subcommand"] = "fit";
            config["in"] = fit_in;
            auto f = open_in(fit_in);
            const auto rows = read_sweep_csv(f);
            const ScalingFit sf = fit_exponent(rows);
            ordered_json result{{"config", config}};
            result.update(fit_json(sf));
            emit(out, result);
            if (!fit_svg.empty()) {
                write_svg_file(fit_svg, rows, sf, "neighbors / antipodes");
            }
            return 0;
        }
        if (search->parsed()) {
            const Epsilon eps(search_eps);
            config["subcommand"] = "search";
            config["n"] = search_n;
            config["epsilon"] = eps.value();
            config["seed"] = search_seed;
            config["proposals"] = schedule.proposals;
            config["cooling"] = schedule.cooling;
            config["sigma_start_eps"] = schedule.sigma_start;
            config["sigma_end_eps"] = schedule.sigma_end;
            const SearchResult r = extremal_search(search_n, eps, search_seed, schedule);
            if (!search_out.empty()) {
                write_point_set_file(search_out, r.best);
            }
            ordered_json trace = ordered_json::array();
            for (const auto& [t, v] : r.trace) {
                trace.push_back({t, v});
            }
            ordered_json result{{"config", config},
                                {"note", "annealing result; evidence about the optimal rate, not a proof"},
                                {"initial_objective", r.initial_objective},
                                {"best_objective", r.best_objective},
                                {"final_objective", r.final_objective},
                                {"best_neighbors", r.best_neighbors},
                                {"best_antipodes", r.best_antipodes},
                                {"best_diameter", r.best.diameter()},
                                {"floor", theorem_floor(eps.value())},
                                {"accepted", r.accepted},
                                {"proposals", r.proposals},
                                {"reseeded", r.reseeded},
                                {"trace", trace}};
            if (!search_trace.empty()) {
                std::ofstream f;
                open_out(f, search_trace);
                emit(f, result);
            } else {
                emit(out, result);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace antipodes::cli
