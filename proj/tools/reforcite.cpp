// Command-line front end: simulate | predict | fit | compare | stats.
// Every run writes a run.json next to its outputs with the exact config and
// seed; feeding that file back through --config reproduces the run.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reforcite/fitting.hpp"
#include "reforcite/ingest.hpp"
#include "reforcite/meanfield.hpp"
#include "reforcite/metrics.hpp"
#include "reforcite/models.hpp"
#include "reforcite/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace reforcite;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string model;
    double p = 0.5;
    double p1 = 0.5, p2 = 0.5;
    double alpha = -1.0, beta = 0.99;
    double pa = 0.01, b = 1.0;
    std::uint32_t m = 1;
    std::size_t n = 0;  // 0 = take the real network's node count
    std::uint64_t seed = 42;
    int realizations = 0;  // 0 = subcommand default
    std::size_t snapshot_step = 5000;
    std::uint32_t sample_sources = 10;
    bool exact_diameter = false;
    int o_grid = 100;
    std::string order = "first-appearance";
    std::string out;
    std::string data;
    std::string degree_file;
    // predict
    std::string quantity = "avg-degree";
    double t_min = 10.0, t_max = 100000.0;
    int points = 50;
    double x_min = 1.0, x_max = 100.0;
    double k0 = 1.0;
    // fit
    double grid_step = 0.01;
    std::string alpha_grid = "-2,-1,0";
    std::string beta_grid = "0.5,0.9,0.99";
    std::string pa_grid = "0.001,0.01,0.03,0.05,0.1,0.2";
    std::string b_grid = "0.5,1,2,5,10";
    std::string config;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_double_list(const std::string& s, const char* name) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw UsageError(std::string(name) + ": cannot parse '" + tok + "' as a number");
        }
    }
    if (out.empty()) throw UsageError(std::string(name) + ": empty list");
    return out;
}

void apply_config(Options& o, const json& j) {
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("model", o.model);
    get("p", o.p);
    get("p1", o.p1);
    get("p2", o.p2);
    get("alpha", o.alpha);
    get("beta", o.beta);
    get("pa", o.pa);
    get("b", o.b);
    get("m", o.m);
    get("n", o.n);
    get("seed", o.seed);
    get("realizations", o.realizations);
    get("snapshot-step", o.snapshot_step);
    get("sample-sources", o.sample_sources);
    get("exact-diameter", o.exact_diameter);
    get("o-grid", o.o_grid);
    get("order", o.order);
    get("out", o.out);
    get("data", o.data);
    get("degree-file", o.degree_file);
    get("quantity", o.quantity);
    get("t-min", o.t_min);
    get("t-max", o.t_max);
    get("points", o.points);
    get("x-min", o.x_min);
    get("x-max", o.x_max);
    get("k0", o.k0);
    get("grid-step", o.grid_step);
    get("alpha-grid", o.alpha_grid);
    get("beta-grid", o.beta_grid);
    get("pa-grid", o.pa_grid);
    get("b-grid", o.b_grid);
}

void load_config_file(Options& o, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError("config file " + path + ": " + e.what());
    }
    apply_config(o, j.contains("config") ? j.at("config") : j);
}

json config_echo(const std::string& command, const Options& o) {
    json c;
    c["seed"] = o.seed;
    if (command == "simulate" || command == "fit" || command == "compare") {
        c["model"] = o.model;
        c["n"] = o.n;
        c["realizations"] = o.realizations;
    }
    if (command != "predict") c["order"] = o.order;
    if (!o.data.empty()) c["data"] = o.data;
    if (!o.degree_file.empty()) c["degree-file"] = o.degree_file;
    if (command == "simulate" || command == "compare") {
        c["snapshot-step"] = o.snapshot_step;
        c["sample-sources"] = o.sample_sources;
        c["exact-diameter"] = o.exact_diameter;
        c["o-grid"] = o.o_grid;
    }
    if (command == "predict") {
        c["model"] = o.model;
        c["quantity"] = o.quantity;
        c["t-min"] = o.t_min;
        c["t-max"] = o.t_max;
        c["points"] = o.points;
        c["x-min"] = o.x_min;
        c["x-max"] = o.x_max;
        c["k0"] = o.k0;
    }
    if (command == "fit") {
        c["grid-step"] = o.grid_step;
        c["alpha-grid"] = o.alpha_grid;
        c["beta-grid"] = o.beta_grid;
        c["pa-grid"] = o.pa_grid;
        c["b-grid"] = o.b_grid;
    }
    if (o.model == "reforcite1" || o.model == "cp") c["p"] = o.p;
    if (o.model == "reforcite2") {
        c["p1"] = o.p1;
        c["p2"] = o.p2;
    }
    if (o.model == "cpt") {
        c["alpha"] = o.alpha;
        c["beta"] = o.beta;
    }
    if (o.model == "forestfire") {
        c["pa"] = o.pa;
        c["b"] = o.b;
    }
    if (o.model == "pa") c["m"] = o.m;
    // the output directory is deliberately not echoed: run.json must be
    // byte-identical wherever the run lands, and reruns pass --out anyway
    return c;
}

std::pair<OrderStrategy, fs::path> parse_order(const std::string& value) {
    if (value == "first-appearance") return {OrderStrategy::FirstAppearance, {}};
    if (value.rfind("timestamps:", 0) == 0)
        return {OrderStrategy::Timestamps, fs::path(value.substr(11))};
    if (value.rfind("given-file:", 0) == 0)
        return {OrderStrategy::GivenFile, fs::path(value.substr(11))};
    throw UsageError("--order must be first-appearance, timestamps:<file> or given-file:<file> "
                     "(got '" + value + "')");
}

LoadedGraph load_data(const Options& o) {
    if (o.data.empty()) throw UsageError("missing --data <edge list>");
    auto [strategy, companion] = parse_order(o.order);
    return load_graph(o.data, strategy, companion);
}

std::vector<std::uint32_t> read_degree_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open degree file: " + path.string());
    std::vector<std::uint32_t> seq;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        try {
            seq.push_back(std::uint32_t(std::stoul(line)));
        } catch (const std::exception&) {
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": expected an integer, got \"" + line + "\"");
        }
    }
    if (seq.empty()) throw DataError(path.string() + ": no degrees found");
    return seq;
}

ModelParams build_params(const Options& o, const std::vector<std::uint32_t>& cpt_sequence) {
    if (o.model == "reforcite1") return RefOrCite1Params{o.p};
    if (o.model == "reforcite2") return RefOrCite2Params{o.p1, o.p2};
    if (o.model == "cp") return CpParams{o.p};
    if (o.model == "cpt") return CptParams{o.alpha, o.beta, cpt_sequence};
    if (o.model == "forestfire") return ForestFireParams{o.pa, o.b};
    if (o.model == "pa") return PaParams{o.m};
    throw UsageError("--model must be one of reforcite1|reforcite2|cp|cpt|forestfire|pa "
                     "(got '" + o.model + "')");
}

json params_json(const ModelParams& params) {
    json j;
    j["model"] = model_name(params);
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RefOrCite1Params> || std::is_same_v<T, CpParams>) {
                j["p"] = p.p;
            } else if constexpr (std::is_same_v<T, RefOrCite2Params>) {
                j["p1"] = p.p1;
                j["p2"] = p.p2;
            } else if constexpr (std::is_same_v<T, CptParams>) {
                j["alpha"] = p.alpha;
                j["beta"] = p.beta;
            } else if constexpr (std::is_same_v<T, ForestFireParams>) {
                j["pa"] = p.p_forward;
                j["b"] = p.b_backward;
            } else {
                j["m"] = p.m;
            }
        },
        params);
    return j;
}

DiameterOptions diameter_options(const Options& o) {
    DiameterOptions d;
    d.schedule.step_size = o.snapshot_step;
    d.sample_sources = o.sample_sources;
    d.exact = o.exact_diameter;
    d.seed = derive_seed(o.seed, 0xd1a);
    return d;
}

std::vector<double> o_grid_points(const Options& o) {
    if (o.o_grid < 1) throw UsageError("--o-grid must be >= 1 (got " +
                                       std::to_string(o.o_grid) + ")");
    std::vector<double> grid;
    grid.reserve(std::size_t(o.o_grid));
    for (int i = 1; i <= o.o_grid; ++i) grid.push_back(double(i) / double(o.o_grid));
    return grid;
}

fs::path ensure_out_dir(const Options& o) {
    if (o.out.empty()) throw UsageError("missing --out <directory>");
    fs::path dir(o.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError("cannot create output directory " + dir.string() + ": " +
                            ec.message());
    return dir;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path.string());
    return out;
}

void write_json(const fs::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_histogram_csv(const fs::path& path, const DegreeDistribution& d) {
    auto out = open_out(path);
    out << "degree,count\n";
    for (const auto& [degree, count] : d.counts) out << degree << ',' << count << '\n';
}

void write_obsolescence_csv(const fs::path& path, const ObsolescenceCurve& curve) {
    auto out = open_out(path);
    out.precision(10);
    out << "o,r\n";
    for (const auto& pt : curve) out << pt.o << ',' << pt.r << '\n';
}

void write_snapshots_csv(const fs::path& path, const std::vector<SnapshotDiameter>& snaps) {
    auto out = open_out(path);
    out << "nodes,diameter\n";
    for (const auto& s : snaps) out << s.nodes << ',' << s.diameter << '\n';
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(Options& o) {
    if (o.model.empty()) throw UsageError("missing --model");
    if (o.n == 0) throw UsageError("missing --n (number of nodes to grow)");
    if (o.realizations == 0) o.realizations = 1;
    if (o.realizations < 1) throw UsageError("--realizations must be >= 1");

    std::vector<std::uint32_t> cpt_sequence;
    if (o.model == "cpt") {
        if (!o.degree_file.empty())
            cpt_sequence = read_degree_file(o.degree_file);
        else if (!o.data.empty())
            cpt_sequence = observed_stats(load_data(o).graph).out_degree_sequence;
        else
            throw UsageError("cpt needs --degree-file or --data for its out-degree sequence");
    }
    const auto params = build_params(o, cpt_sequence);
    validate(params);

    const fs::path dir = ensure_out_dir(o);
    json results = json::array();
    for (int r = 0; r < o.realizations; ++r) {
        const auto run_seed = derive_seed(o.seed, std::uint64_t(r));
        const auto g = grow(params, o.n, run_seed);

        const fs::path rdir = o.realizations == 1 ? dir : dir / ("r" + std::to_string(r));
        if (o.realizations != 1) fs::create_directories(rdir);

        write_edge_list(g, rdir / "edges.txt");
        write_histogram_csv(rdir / "degree_histogram.csv", in_degree_distribution(g));
        const auto snaps = snapshot_diameters(g, diameter_options(o));
        write_snapshots_csv(rdir / "diameter_snapshots.csv", snaps);

        double diam_sum = 0.0;
        for (const auto& s : snaps) diam_sum += s.diameter;
        json res;
        res["realization"] = r;
        res["seed"] = run_seed;
        res["nodes"] = g.node_count();
        res["edges"] = g.edge_count();
        res["average_degree"] = g.average_degree();
        res["average_in_degree"] = g.average_in_degree();
        res["triangles"] = count_triangles(g);
        res["h_index"] = network_h_index(g);
        res["avg_diameter"] = diam_sum / double(snaps.size());
        results.push_back(std::move(res));
    }

    json meta;
    meta["command"] = "simulate";
    meta["version"] = kVersion;
    meta["config"] = config_echo("simulate", o);
    meta["params"] = params_json(params);
    meta["results"] = results;
    write_json(dir / "run.json", meta);
    std::cout << "simulate: wrote " << o.realizations << " realization(s) under " << dir.string()
              << '\n';
    return 0;
}

// ----------------------------------------------------------------- predict

int cmd_predict(Options& o) {
    if (o.model.empty()) throw UsageError("missing --model");
    if (o.points < 2) throw UsageError("--points must be >= 2");

    std::vector<std::pair<double, double>> rows;
    std::string header;
    auto log_grid = [&](double lo, double hi) {
        if (!(lo > 0.0 && hi > lo)) throw UsageError("need 0 < min < max for the grid");
        std::vector<double> xs;
        for (int i = 0; i < o.points; ++i)
            xs.push_back(lo * std::pow(hi / lo, double(i) / double(o.points - 1)));
        return xs;
    };

    if (o.quantity == "avg-degree") {
        if (o.model != "reforcite1") throw UsageError("avg-degree predictions are reforcite1");
        header = "t,value";
        for (double t : log_grid(o.t_min, o.t_max))
            rows.emplace_back(t, meanfield::avg_degree(t, o.p));
    } else if (o.quantity == "avg-in-degree") {
        if (o.model != "reforcite2") throw UsageError("avg-in-degree predictions are reforcite2");
        header = "t,value";
        for (double t : log_grid(o.t_min, o.t_max))
            rows.emplace_back(t, meanfield::avg_in_degree(t, o.p1, o.p2));
    } else if (o.quantity == "triangles") {
        if (o.model != "reforcite1") throw UsageError("triangle predictions are reforcite1");
        header = "t,value";
        for (double t : log_grid(std::max(o.t_min, 4.0), o.t_max))
            rows.emplace_back(t, meanfield::triangle_count(t, o.p));
    } else if (o.quantity == "rescaled-ccdf") {
        if (o.model != "reforcite1") throw UsageError("the rescaled law is reforcite1");
        header = "x,ccdf";
        for (double x : log_grid(std::max(o.x_min, 1.0), o.x_max))
            rows.emplace_back(x, meanfield::ccdf_rescaled(x, o.p));
    } else if (o.quantity == "degree-ccdf") {
        if (o.model != "reforcite1") throw UsageError("the degree ccdf is reforcite1");
        header = "k,ccdf";
        for (double k : log_grid(std::max(o.x_min, o.k0), o.x_max))
            rows.emplace_back(k, meanfield::degree_ccdf(k, o.k0, o.p));
    } else {
        throw UsageError("--quantity must be one of avg-degree|avg-in-degree|triangles|"
                         "rescaled-ccdf|degree-ccdf (got '" + o.quantity + "')");
    }

    auto emit = [&](std::ostream& out) {
        out.precision(12);
        out << header << '\n';
        for (const auto& [x, y] : rows) out << x << ',' << y << '\n';
    };
    if (o.out.empty()) {
        emit(std::cout);
    } else {
        const fs::path dir = ensure_out_dir(o);
        auto out = open_out(dir / "predict.csv");
        emit(out);
        json meta;
        meta["command"] = "predict";
        meta["version"] = kVersion;
        meta["config"] = config_echo("predict", o);
        write_json(dir / "run.json", meta);
        std::cout << "predict: wrote " << (dir / "predict.csv").string() << '\n';
    }
    return 0;
}

// --------------------------------------------------------------------- fit

void write_trace_csv(const fs::path& path, const FitResult& fit) {
    auto out = open_out(path);
    out.precision(12);
    const auto& first = fit.trace.front().params;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RefOrCite1Params> || std::is_same_v<T, CpParams>)
                out << "p,mean_l1\n";
            else if constexpr (std::is_same_v<T, RefOrCite2Params>)
                out << "p1,p2,mean_l1\n";
            else if constexpr (std::is_same_v<T, CptParams>)
                out << "alpha,beta,mean_l1\n";
            else if constexpr (std::is_same_v<T, ForestFireParams>)
                out << "pa,b,mean_l1\n";
            else
                out << "m,mean_l1\n";
        },
        first);
    for (const auto& pt : fit.trace) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, RefOrCite1Params> || std::is_same_v<T, CpParams>)
                    out << p.p;
                else if constexpr (std::is_same_v<T, RefOrCite2Params>)
                    out << p.p1 << ',' << p.p2;
                else if constexpr (std::is_same_v<T, CptParams>)
                    out << p.alpha << ',' << p.beta;
                else if constexpr (std::is_same_v<T, ForestFireParams>)
                    out << p.p_forward << ',' << p.b_backward;
                else
                    out << p.m;
            },
            pt.params);
        out << ',' << pt.mean_l1 << '\n';
    }
}

int cmd_fit(Options& o) {
    if (o.model.empty()) throw UsageError("missing --model");
    if (o.realizations == 0) o.realizations = 3;
    if (o.realizations < 1) throw UsageError("--realizations must be >= 1");

    const auto loaded = load_data(o);
    const auto observed = observed_stats(loaded.graph);

    FitConfig config;
    config.grid_step = o.grid_step;
    config.realizations = o.realizations;
    config.target = observed.in_degrees;
    config.n = o.n == 0 ? observed.n : o.n;  // same node count as the real network by default
    config.master_seed = o.seed;

    FitResult fit;
    json extra;
    if (o.model == "reforcite1") {
        fit = fit_single_parameter(SingleParamModel::RefOrCite1, config);
    } else if (o.model == "cp") {
        fit = fit_single_parameter(SingleParamModel::Cp, config);
    } else if (o.model == "reforcite2") {
        const double c = solve_p_sum(observed.avg_in_degree, double(config.n));
        extra["p_sum"] = c;
        fit = fit_reforcite2(config, c);
    } else if (o.model == "cpt") {
        fit = fit_cpt(config, parse_double_list(o.alpha_grid, "--alpha-grid"),
                      parse_double_list(o.beta_grid, "--beta-grid"),
                      observed.out_degree_sequence);
    } else if (o.model == "forestfire") {
        fit = fit_forest_fire(config, parse_double_list(o.pa_grid, "--pa-grid"),
                              parse_double_list(o.b_grid, "--b-grid"));
    } else {
        throw UsageError("--model for fit must be one of reforcite1|cp|reforcite2|cpt|forestfire "
                         "(got '" + o.model + "')");
    }

    const fs::path dir = ensure_out_dir(o);
    write_trace_csv(dir / "grid_trace.csv", fit);

    json meta;
    meta["command"] = "fit";
    meta["version"] = kVersion;
    meta["config"] = config_echo("fit", o);
    meta["observed"] = {{"n", observed.n},
                        {"m", observed.m},
                        {"avg_in_degree", observed.avg_in_degree}};
    meta["fit_n"] = config.n;
    if (!extra.empty()) meta.update(extra);
    meta["best"] = params_json(fit.best);
    meta["l1"] = fit.l1;
    meta["grid_points"] = fit.trace.size();
    write_json(dir / "fit.json", meta);

    std::cout << "fit: best " << params_json(fit.best).dump() << " l1=" << fit.l1 << " ("
              << fit.trace.size() << " grid points)\n";
    return 0;
}

// ----------------------------------------------------------------- compare

int cmd_compare(Options& o) {
    if (o.model.empty()) throw UsageError("missing --model");
    if (o.realizations == 0) o.realizations = 30;
    if (o.realizations < 1) throw UsageError("--realizations must be >= 1");

    const auto loaded = load_data(o);
    std::vector<std::uint32_t> cpt_sequence;  // compare fills it from the data itself
    auto params = build_params(o, cpt_sequence);

    CompareOptions copts;
    copts.realizations = o.realizations;
    copts.master_seed = o.seed;
    copts.eval.diameter = diameter_options(o);
    copts.eval.o_grid = o_grid_points(o);
    const auto cmp = compare_model(loaded.graph, params, copts);

    const fs::path dir = ensure_out_dir(o);
    write_obsolescence_csv(dir / "obsolescence_observed.csv", cmp.observed.obsolescence);
    write_obsolescence_csv(dir / "obsolescence_simulated.csv", cmp.mean_obsolescence);

    auto stat = [](const AggregateStat& s) { return json{{"mean", s.mean}, {"std", s.stddev}}; };
    json meta;
    meta["command"] = "compare";
    meta["version"] = kVersion;
    meta["config"] = config_echo("compare", o);
    meta["params"] = params_json(params);
    meta["observed"] = {{"n", cmp.observed.n},
                        {"m", cmp.observed.m},
                        {"triangles", cmp.observed.triangles},
                        {"avg_diameter", cmp.observed.avg_diameter},
                        {"h_index", cmp.observed.h_index}};
    meta["data_warnings"] = {{"duplicate_edges", loaded.stats.duplicate_edges},
                             {"self_loops", loaded.stats.self_loops},
                             {"forward_edges", loaded.stats.forward_edges}};
    meta["l1"] = stat(cmp.l1);
    meta["triangle_ratio"] = stat(cmp.triangle_ratio);
    meta["diameter_ratio"] = stat(cmp.diameter_ratio);
    meta["h_index_ratio"] = stat(cmp.h_index_ratio);
    write_json(dir / "compare.json", meta);

    std::cout << "compare: l1=" << cmp.l1.mean << " triangle_ratio=" << cmp.triangle_ratio.mean
              << " diameter_ratio=" << cmp.diameter_ratio.mean
              << " h_index_ratio=" << cmp.h_index_ratio.mean << " over " << o.realizations
              << " runs -> " << (dir / "compare.json").string() << '\n';
    return 0;
}

// ------------------------------------------------------------------- stats

int cmd_stats(Options& o) {
    const auto loaded = load_data(o);
    const auto s = observed_stats(loaded.graph);

    json j;
    j["command"] = "stats";
    j["version"] = kVersion;
    j["config"] = config_echo("stats", o);
    j["n"] = s.n;
    j["m"] = s.m;
    j["avg_in_degree"] = s.avg_in_degree;
    j["triangles"] = s.triangles;
    j["h_index"] = s.h_index;
    j["data_warnings"] = {{"duplicate_edges", loaded.stats.duplicate_edges},
                          {"self_loops", loaded.stats.self_loops},
                          {"forward_edges", loaded.stats.forward_edges}};

    if (!o.out.empty()) {
        const fs::path dir = ensure_out_dir(o);
        write_json(dir / "stats.json", j);
        write_histogram_csv(dir / "degree_histogram.csv", s.in_degrees);
        write_edge_list(loaded.graph, dir / "edges.txt");  // canonical renumbered form
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

void add_common_flags(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "RNG master seed");
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--config", o.config, "JSON config file mirroring the flags");
}

void add_model_flags(CLI::App* sub, Options& o) {
    sub->add_option("--model", o.model, "reforcite1|reforcite2|cp|cpt|forestfire|pa");
    sub->add_option("--p", o.p, "copy probability (reforcite1, cp)");
    sub->add_option("--p1", o.p1, "out-neighbour (reference) copy probability");
    sub->add_option("--p2", o.p2, "in-neighbour (citation) copy probability");
    sub->add_option("--alpha", o.alpha, "cpt age exponent");
    sub->add_option("--beta", o.beta, "cpt neighbour-attachment probability");
    sub->add_option("--pa", o.pa, "forest fire forward burning probability");
    sub->add_option("--b", o.b, "forest fire backward burning ratio");
    sub->add_option("--m", o.m, "pa edges per new node");
}

void add_data_flags(CLI::App* sub, Options& o) {
    sub->add_option("--data", o.data, "edge list file (\"from to\" lines, # comments)");
    sub->add_option("--order", o.order,
                    "first-appearance | timestamps:<file> | given-file:<file>");
}

void add_metric_flags(CLI::App* sub, Options& o) {
    sub->add_option("--snapshot-step", o.snapshot_step, "snapshot spacing in nodes");
    sub->add_option("--sample-sources", o.sample_sources, "BFS seeds per snapshot diameter");
    sub->add_flag("--exact-diameter", o.exact_diameter, "all-pairs BFS diameters");
    sub->add_option("--o-grid", o.o_grid, "number of obsolescence grid points in (0,1]");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;

    // config file values act as defaults; explicit flags override them
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        try {
            if (arg == "--config" && i + 1 < argc) {
                load_config_file(o, argv[i + 1]);
                break;
            }
            if (arg.rfind("--config=", 0) == 0) {
                load_config_file(o, arg.substr(9));
                break;
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 3;
        }
    }

    CLI::App app{"growth models, mean-field predictions and evaluation for citation networks"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "grow a network and write its measurements");
    add_model_flags(sim, o);
    add_data_flags(sim, o);
    add_metric_flags(sim, o);
    add_common_flags(sim, o);
    sim->add_option("--n", o.n, "number of nodes to grow");
    sim->add_option("--realizations", o.realizations, "independent runs (default 1)");
    sim->add_option("--degree-file", o.degree_file, "cpt out-degree sequence, one per line");

    auto* pre = app.add_subcommand("predict", "closed-form prediction series as CSV");
    add_model_flags(pre, o);
    add_common_flags(pre, o);
    pre->add_option("--quantity", o.quantity,
                    "avg-degree|avg-in-degree|triangles|rescaled-ccdf|degree-ccdf");
    pre->add_option("--t-min", o.t_min, "smallest t");
    pre->add_option("--t-max", o.t_max, "largest t");
    pre->add_option("--points", o.points, "number of grid points");
    pre->add_option("--x-min", o.x_min, "smallest x (ccdf quantities)");
    pre->add_option("--x-max", o.x_max, "largest x (ccdf quantities)");
    pre->add_option("--k0", o.k0, "birth out-degree (degree-ccdf)");

    auto* fit = app.add_subcommand("fit", "grid-search parameters against a real network");
    add_model_flags(fit, o);
    add_data_flags(fit, o);
    add_common_flags(fit, o);
    fit->add_option("--n", o.n, "nodes per fitted simulation (default: real n)");
    fit->add_option("--realizations", o.realizations, "runs per grid point (default 3)");
    fit->add_option("--grid-step", o.grid_step, "probability grid resolution");
    fit->add_option("--alpha-grid", o.alpha_grid, "cpt alpha values, comma separated");
    fit->add_option("--beta-grid", o.beta_grid, "cpt beta values, comma separated");
    fit->add_option("--pa-grid", o.pa_grid, "forest fire pa values, comma separated");
    fit->add_option("--b-grid", o.b_grid, "forest fire b values, comma separated");

    auto* cmp = app.add_subcommand("compare", "model vs real network across all metrics");
    add_model_flags(cmp, o);
    add_data_flags(cmp, o);
    add_metric_flags(cmp, o);
    add_common_flags(cmp, o);
    cmp->add_option("--realizations", o.realizations, "model runs to average (default 30)");

    auto* sta = app.add_subcommand("stats", "observed statistics of a real network");
    add_data_flags(sta, o);
    add_common_flags(sta, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(o);
        if (pre->parsed()) return cmd_predict(o);
        if (fit->parsed()) return cmd_fit(o);
        if (cmp->parsed()) return cmd_compare(o);
        if (sta->parsed()) return cmd_stats(o);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
