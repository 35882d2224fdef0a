#include "sedge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sedge/raster.hpp"

namespace sedge {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string utc_now() {
    const std::time_t t =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const std::filesystem::path& out,
                    const std::vector<std::string>& argv,
                    const std::string& command, const nlohmann::json& parameters) {
    nlohmann::json doc{
        {"tool", "sedge"},
        {"version", kVersion},
        {"command", command},
        {"argv", argv},
        {"parameters", parameters},
        {"created", utc_now()},
    };
    const std::filesystem::path path = out.string() + ".manifest.json";
    std::ofstream f(path, std::ios::binary);
    f << doc.dump(2) << '\n';
    if (!f) {
        throw RasterError(path.string() + ": cannot write manifest");
    }
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
    std::vector<Method> methods;
    for (const std::string& name : names) {
        methods.push_back(method_from_string(name));
    }
    return methods;
}

RasterImage window_to_raster(const Window& w) {
    RasterImage img;
    img.rows = w.rows();
    img.cols = w.cols();
    img.pixels.assign(w.row_major().begin(), w.row_major().end());
    return img;
}

void write_raster_by_extension(const std::filesystem::path& path,
                               const RasterImage& img) {
    if (path.extension() == ".csv") {
        write_csv(path, img);
    } else {
        write_matrix(path, img);
    }
}

// ----- subcommand payloads ---------------------------------------------

struct SimulateArgs {
    double alpha_left = 0, alpha_right = 0, looks = 1;
    std::size_t rows = 20, cols = 100, edge = 50;
    std::uint64_t seed = 0;
    std::string out;
};

struct BenchmarkArgs {
    std::string grid = "paper";
    std::size_t replications = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> methods;
    unsigned threads = 1;
    double alpha_left = 0, alpha_right = 0, looks = 1;
    std::size_t rows = 20, cols = 100, edge = 50;
    std::string out;
};

struct DetectArgs {
    std::string input, format = "auto", method;
    std::size_t strip_height = 20;
    double looks = 0;
    bool has_looks = false;
    std::string out;
};

struct TraceArgs {
    std::string input, format = "auto", method;
    double looks = 0;
    bool has_looks = false;
    std::string out;
};

int do_simulate(const SimulateArgs& a, const std::vector<std::string>& argv) {
    CellConfig c;
    c.alpha_left = a.alpha_left;
    c.alpha_right = a.alpha_right;
    c.looks = a.looks;
    c.rows = a.rows;
    c.cols = a.cols;
    c.edge_col = a.edge;
    c.seed = a.seed;
    const Window w = generate_window(c, 0);
    write_raster_by_extension(a.out, window_to_raster(w));
    write_manifest(a.out, argv, "simulate",
                   {{"alpha_left", a.alpha_left},
                    {"alpha_right", a.alpha_right},
                    {"looks", a.looks},
                    {"rows", a.rows},
                    {"cols", a.cols},
                    {"edge", a.edge},
                    {"seed", a.seed},
                    {"out", a.out}});
    return 0;
}

int do_benchmark(const BenchmarkArgs& a, const std::vector<std::string>& argv) {
    const std::vector<Method> methods =
        a.methods.empty() ? all_methods() : parse_methods(a.methods);

    std::vector<CellConfig> grid;
    if (a.grid == "paper") {
        grid = paper_grid(a.replications, methods, a.seed);
    } else if (a.grid == "custom") {
        CellConfig c;
        c.alpha_left = a.alpha_left;
        c.alpha_right = a.alpha_right;
        c.looks = a.looks;
        c.rows = a.rows;
        c.cols = a.cols;
        c.edge_col = a.edge;
        c.replications = a.replications;
        c.methods = methods;
        c.seed = a.seed;
        grid.push_back(c);
    } else {
        throw CLI::ValidationError("--grid must be 'paper' or 'custom'");
    }

    const ExperimentReport report = run_grid(grid, a.threads);
    emit_report(report, a.out);

    std::vector<std::string> method_names;
    for (Method m : methods) method_names.push_back(to_string(m));
    write_manifest(a.out, argv, "benchmark",
                   {{"grid", a.grid},
                    {"replications", a.replications},
                    {"seed", a.seed},
                    {"methods", method_names},
                    {"threads", a.threads},
                    {"out", a.out}});
    return 0;
}

DetectOptions options_for(Method method, bool has_looks, double looks) {
    DetectOptions opts;
    if (method == Method::gambini) {
        if (!has_looks) {
            throw CLI::ValidationError("--looks is required for method=gambini");
        }
    }
    if (has_looks) opts.looks = looks;
    return opts;
}

int do_detect(const DetectArgs& a, const std::vector<std::string>& argv) {
    const Method method = method_from_string(a.method);
    const DetectOptions opts = options_for(method, a.has_looks, a.looks);
    const RasterImage img = load_raster(a.input, raster_format_from_string(a.format));
    const std::vector<Window> strips = extract_strips(img, a.strip_height);
    if (strips.empty()) {
        std::cerr << "sedge detect: warning: image has fewer rows than one strip; "
                     "no strips to scan\n";
    }

    std::ofstream out(a.out, std::ios::binary);
    if (!out) {
        throw RasterError(a.out + ": cannot open for writing");
    }
    out << "strip,row_start,edge_col\n";
    std::size_t failures = 0;
    for (std::size_t s = 0; s < strips.size(); ++s) {
        try {
            const EdgeEstimate est = detect_edge(strips[s], method, opts);
            out << s << ',' << s * a.strip_height << ',' << est.edge_index << '\n';
        } catch (const DetectionFailed& e) {
            ++failures;
            std::cerr << "sedge detect: strip " << s << ": " << e.what() << '\n';
        }
    }
    if (!out) {
        throw RasterError(a.out + ": write failed");
    }
    out.close();
    write_manifest(a.out, argv, "detect",
                   {{"input", a.input},
                    {"format", a.format},
                    {"strip_height", a.strip_height},
                    {"method", a.method},
                    {"looks", a.has_looks ? nlohmann::json(a.looks) : nlohmann::json()},
                    {"out", a.out}});
    return failures == 0 ? 0 : 3;
}

int do_trace(const TraceArgs& a, const std::vector<std::string>& argv) {
    const Method method = method_from_string(a.method);
    const DetectOptions opts = options_for(method, a.has_looks, a.looks);
    const RasterImage img = load_raster(a.input, raster_format_from_string(a.format));
    const Window w(img.pixels, img.rows, img.cols);
    const EdgeEstimate est = detect_edge(w, method, opts);

    std::ofstream out(a.out, std::ios::binary);
    if (!out) {
        throw RasterError(a.out + ": cannot open for writing");
    }
    out << "split,statistic\n";
    char buf[40];
    for (std::size_t k = 0; k < est.trace.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.10g", est.trace[k]);
        out << est.candidates.first + k << ',' << buf << '\n';
    }
    if (!out) {
        throw RasterError(a.out + ": write failed");
    }
    out.close();
    write_manifest(a.out, argv, "trace",
                   {{"input", a.input},
                    {"format", a.format},
                    {"method", a.method},
                    {"looks", a.has_looks ? nlohmann::json(a.looks) : nlohmann::json()},
                    {"out", a.out}});
    return 0;
}

}  // namespace

void emit_report(const ExperimentReport& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw RasterError(path.string() + ": cannot open for writing");
    }
    out << "alpha_left,alpha_right,looks,method,error_rate,failures,replications,"
           "mean_time_s\n";
    for (const CellResult& cell : report) {
        for (const auto& [method, stats] : cell.per_method) {
            out << g6(cell.cell.alpha_left) << ',' << g6(cell.cell.alpha_right) << ','
                << g6(cell.cell.looks) << ',' << to_string(method) << ','
                << g6(stats.error_rate) << ',' << stats.failures << ','
                << stats.replications << ',' << g6(stats.mean_time_s) << '\n';
        }
    }
    if (!out) {
        throw RasterError(path.string() + ": write failed");
    }
}

int run_cli(const std::vector<std::string>& argv) {
    CLI::App app{"statistical edge detection in speckled (SAR-like) imagery"};
    app.name("sedge");
    app.require_subcommand(1);

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "write one two-sided synthetic window (matrix or CSV)");
    simulate->add_option("--alpha-left", sim.alpha_left, "left roughness (<= -2)")
        ->required();
    simulate->add_option("--alpha-right", sim.alpha_right, "right roughness (<= -2)")
        ->required();
    simulate->add_option("--looks", sim.looks, "number of looks L (>= 1)")->required();
    simulate->add_option("--rows", sim.rows, "window rows")->capture_default_str();
    simulate->add_option("--cols", sim.cols, "window columns")->capture_default_str();
    simulate->add_option("--edge", sim.edge, "true edge column")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "RNG seed")->required();
    simulate->add_option("--out", sim.out, "output file (.csv for CSV)")->required();

    BenchmarkArgs bench;
    CLI::App* benchmark = app.add_subcommand(
        "benchmark", "Monte Carlo error-rate and timing comparison");
    benchmark->add_option("--grid", bench.grid, "paper|custom")->capture_default_str();
    benchmark->add_option("--replications", bench.replications, "windows per cell")
        ->required();
    benchmark->add_option("--seed", bench.seed, "base RNG seed")->capture_default_str();
    benchmark->add_option("--methods", bench.methods,
                          "comma-separated method list (default: all five)")
        ->delimiter(',');
    benchmark->add_option("--threads", bench.threads, "worker threads")
        ->capture_default_str();
    benchmark->add_option("--alpha-left", bench.alpha_left, "custom grid only");
    benchmark->add_option("--alpha-right", bench.alpha_right, "custom grid only");
    benchmark->add_option("--looks", bench.looks, "custom grid only");
    benchmark->add_option("--rows", bench.rows, "custom grid only")
        ->capture_default_str();
    benchmark->add_option("--cols", bench.cols, "custom grid only")
        ->capture_default_str();
    benchmark->add_option("--edge", bench.edge, "custom grid only")
        ->capture_default_str();
    benchmark->add_option("--out", bench.out, "report CSV path")->required();

    DetectArgs det;
    CLI::App* detect = app.add_subcommand("detect", "per-strip edge detection");
    detect->add_option("--input", det.input, "raster path")->required();
    detect->add_option("--format", det.format, "auto|matrix|pgm|csv")
        ->capture_default_str();
    detect->add_option("--strip-height", det.strip_height, "rows per strip")
        ->capture_default_str();
    detect->add_option("--method", det.method,
                       "gambini|mann_whitney|kruskal|variance|tpe")
        ->required();
    CLI::Option* det_looks =
        detect->add_option("--looks", det.looks, "number of looks (gambini)");
    detect->add_option("--out", det.out, "edges CSV path")->required();

    TraceArgs tra;
    CLI::App* trace = app.add_subcommand(
        "trace", "per-candidate statistic values for one window");
    trace->add_option("--input", tra.input, "raster path")->required();
    trace->add_option("--format", tra.format, "auto|matrix|pgm|csv")
        ->capture_default_str();
    trace->add_option("--method", tra.method,
                      "gambini|mann_whitney|kruskal|variance|tpe")
        ->required();
    CLI::Option* tra_looks =
        trace->add_option("--looks", tra.looks, "number of looks (gambini)");
    trace->add_option("--out", tra.out, "trace CSV path")->required();

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
        det.has_looks = det_looks->count() > 0;
        tra.has_looks = tra_looks->count() > 0;
        if (simulate->parsed()) return do_simulate(sim, argv);
        if (benchmark->parsed()) return do_benchmark(bench, argv);
        if (detect->parsed()) return do_detect(det, argv);
        if (trace->parsed()) return do_trace(tra, argv);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const RasterError& e) {
        std::cerr << "sedge: " << e.what() << '\n';
        return 2;
    } catch (const DetectionFailed& e) {
        std::cerr << "sedge: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sedge: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "sedge: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace sedge
