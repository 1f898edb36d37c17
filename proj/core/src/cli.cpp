#include "tracespeed/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracespeed/cost.hpp"
#include "tracespeed/statspeed.hpp"
#include "tracespeed/verify.hpp"

namespace tracespeed::cli {

namespace {

using nlohmann::json;

PolarizationSchedule schedule_from_json(const json& j, std::int64_t default_k_ref) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "table") {
        std::vector<std::pair<std::int64_t, double>> knots;
        for (const auto& entry : j.at("table")) {
            knots.emplace_back(entry.at(0).get<std::int64_t>(), entry.at(1).get<double>());
        }
        return PolarizationSchedule::tabulated(std::move(knots));
    }
    const auto k_ref = j.value("k_ref", default_k_ref);
    if (kind == "constant") {
        return PolarizationSchedule::constant(j.at("eps_initial").get<double>());
    }
    const double eps_initial = j.at("eps_initial").get<double>();
    const double eps_final = j.at("eps_final").get<double>();
    if (kind == "linear") return PolarizationSchedule::linear(eps_initial, eps_final, k_ref);
    if (kind == "exponential") {
        return PolarizationSchedule::exponential(eps_initial, eps_final, k_ref);
    }
    throw std::invalid_argument("schedule: unknown kind \"" + kind + "\"");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, sep)) out.push_back(item);
    return out;
}

PolarizationSchedule schedule_from_shorthand(const std::string& spec,
                                             std::int64_t default_k_ref) {
    const auto parts = split(spec, ':');
    const std::string& kind = parts.front();
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() < lo + 1 || parts.size() > hi + 1) {
            throw std::invalid_argument("schedule shorthand \"" + spec +
                                        "\": wrong number of fields");
        }
    };
    if (kind == "constant") {
        need(1, 1);
        return PolarizationSchedule::constant(std::stod(parts[1]));
    }
    if (kind == "linear" || kind == "exponential") {
        need(2, 3);
        const double eps_initial = std::stod(parts[1]);
        const double eps_final = std::stod(parts[2]);
        const std::int64_t k_ref = parts.size() == 4 ? std::stoll(parts[3]) : default_k_ref;
        return kind == "linear"
                   ? PolarizationSchedule::linear(eps_initial, eps_final, k_ref)
                   : PolarizationSchedule::exponential(eps_initial, eps_final, k_ref);
    }
    if (kind == "table") {
        need(1, 1);
        std::vector<std::pair<std::int64_t, double>> knots;
        for (const auto& pair : split(parts[1], ',')) {
            const auto eq = pair.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("schedule table entry \"" + pair +
                                            "\" is not K=EPS");
            }
            knots.emplace_back(std::stoll(pair.substr(0, eq)), std::stod(pair.substr(eq + 1)));
        }
        return PolarizationSchedule::tabulated(std::move(knots));
    }
    throw std::invalid_argument("schedule shorthand: unknown kind \"" + kind + "\"");
}

}  // namespace

PolarizationSchedule parse_schedule_spec(const std::string& spec, std::int64_t default_k_ref) {
    if (spec.empty()) return PolarizationSchedule::constant(1.0);
    if (spec.front() == '{') {
        return schedule_from_json(json::parse(spec), default_k_ref);
    }
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        json j;
        in >> j;
        return schedule_from_json(j, default_k_ref);
    }
    return schedule_from_shorthand(spec, default_k_ref);
}

Table constants_table(int n) {
    const auto params = GroverParams::make(n);
    const auto constants = grover_constants();
    Table t;
    t.columns = {"n", "r", "k_factor", "theta", "k_gr", "k_gr_tilde", "eps_c", "ts_pure_max"};
    t.rows = {{static_cast<double>(n), constants.r, constants.k_factor, params.theta,
               static_cast<double>(grover_step_count(params)),
               static_cast<double>(std::llround(constants.r * sqrt_register_size(params))),
               critical_polarization(params), ts_pure_max(params)}};
    return t;
}

namespace {

/// k = 0..k_hi at a uniform stride keeping at most ~2000 rows, always
/// including 0, k_mid and k_hi (the figure-critical points).
std::vector<std::int64_t> sampled_steps(std::int64_t k_hi, std::int64_t k_mid) {
    const std::int64_t stride = std::max<std::int64_t>(1, (k_hi + 1 + 1997) / 1998);
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 0; k <= k_hi; k += stride) ks.push_back(k);
    ks.push_back(std::min(k_mid, k_hi));
    ks.push_back(k_hi);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

}  // namespace

Table fig1_table(int n, std::int64_t k_max) {
    if (n < 2) throw std::invalid_argument("fig1: n must be >= 2");
    const auto params = GroverParams::make(n);
    const std::int64_t k_gr = grover_step_count(params);
    const std::int64_t k_hi = k_max >= 0 ? k_max : k_gr;
    const double thr_bipartite = std::sqrt(static_cast<double>(n));
    const double thr_tripartite = std::sqrt(2.0 * n);
    const double thr_half = std::sqrt(0.5 * n * n);
    Table t;
    t.columns = {"k", "k_over_kgr", "ts_pure", "thr_bipartite", "thr_tripartite", "thr_half"};
    for (std::int64_t k : sampled_steps(k_hi, std::llround(0.5 * k_gr))) {
        t.rows.push_back({static_cast<double>(k),
                          static_cast<double>(k) / static_cast<double>(k_gr),
                          ts_pure_analytic(params, k), thr_bipartite, thr_tripartite, thr_half});
    }
    return t;
}

Table fig2_table(int n, double eps_f, std::int64_t k_max) {
    if (n < 2) throw std::invalid_argument("fig2: n must be >= 2");
    const auto params = GroverParams::make(n);
    const std::int64_t k_gr = grover_step_count(params);
    const std::int64_t k_hi = k_max >= 0 ? k_max : k_gr;
    const auto constant = PolarizationSchedule::constant(eps_f);
    const auto linear = PolarizationSchedule::linear(1.0, eps_f, k_gr);
    const auto exponential = PolarizationSchedule::exponential(1.0, eps_f, k_gr);
    Table t;
    t.columns = {"k",            "k_over_kgr", "eps_constant", "eps_linear",
                 "eps_exponential", "ts_constant", "ts_linear",   "ts_exponential"};
    for (std::int64_t k : sampled_steps(k_hi, std::llround(0.5 * k_gr))) {
        const double ts_pure = ts_pure_analytic(params, k);
        const double e_const = polarization_at(constant, k);
        const double e_lin = polarization_at(linear, k);
        const double e_exp = polarization_at(exponential, k);
        t.rows.push_back({static_cast<double>(k),
                          static_cast<double>(k) / static_cast<double>(k_gr), e_const, e_lin,
                          e_exp, e_const * ts_pure, e_lin * ts_pure, e_exp * ts_pure});
    }
    return t;
}

namespace {

PolarizationSchedule scale_schedule(const PolarizationSchedule& base, double eps_initial) {
    const double f = eps_initial / base.eps_initial;
    auto clamp01 = [](double e) { return std::min(1.0, e); };
    switch (base.kind) {
        case ScheduleKind::constant:
            return PolarizationSchedule::constant(clamp01(eps_initial));
        case ScheduleKind::linear:
            return PolarizationSchedule::linear(clamp01(eps_initial),
                                                clamp01(f * base.eps_final), base.k_ref);
        case ScheduleKind::exponential:
            return PolarizationSchedule::exponential(clamp01(eps_initial),
                                                     clamp01(f * base.eps_final), base.k_ref);
        case ScheduleKind::table: {
            auto knots = base.table;
            for (auto& knot : knots) knot.second = clamp01(f * knot.second);
            return PolarizationSchedule::tabulated(std::move(knots));
        }
    }
    throw std::logic_error("scale_schedule: unknown schedule kind");
}

std::vector<double> default_eps_grid(const GroverParams& params) {
    // logarithmic in eps/eps_c, straddling the crossover, plus the pure case
    const double eps_c = critical_polarization(params);
    std::vector<double> grid;
    for (double factor : {0.125, 0.25, 0.5, 1.0 / 1.1, 1.1, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0,
                          128.0, 256.0, 512.0}) {
        const double eps = factor * eps_c;
        if (eps >= 1.0) break;
        grid.push_back(eps);
    }
    grid.push_back(1.0);
    return grid;
}

std::vector<double> report_row(const GroverParams& params, const CostReport& report,
                               double eps_column) {
    return {eps_column,
            static_cast<double>(report.k_opt),
            report.c_qu,
            report.c_cl,
            report.speedup,
            report.bound,
            report.bound_satisfied ? 1.0 : 0.0};
}

}  // namespace

Table cost_sweep_table(int n, const std::string& schedule_spec, const std::string& eps_list,
                       bool force_large) {
    const auto params = GroverParams::make(n);
    const auto base = parse_schedule_spec(schedule_spec, grover_step_count(params));
    std::vector<double> grid;
    if (eps_list.empty()) {
        grid = default_eps_grid(params);
    } else {
        for (const auto& item : split(eps_list, ',')) grid.push_back(std::stod(item));
    }
    Table t;
    t.columns = {"eps", "k_opt", "c_qu", "c_cl", "speedup", "bound", "bound_satisfied"};
    for (double eps : grid) {
        const auto schedule = scale_schedule(base, eps);
        t.rows.push_back(report_row(params, speedup_report(params, schedule, force_large), eps));
    }
    return t;
}

Table bound_check_table(int n, const std::string& schedule_spec, bool force_large) {
    const auto params = GroverParams::make(n);
    const auto schedule = parse_schedule_spec(schedule_spec, grover_step_count(params));
    const auto report = speedup_report(params, schedule, force_large);
    Table t;
    t.columns = {"n",    "eps_initial", "eps_final", "k_opt",           "c_qu",
                 "c_cl", "speedup",     "bound",     "bound_satisfied"};
    t.rows = {{static_cast<double>(n), schedule.eps_initial, schedule.eps_final,
               static_cast<double>(report.k_opt), report.c_qu, report.c_cl, report.speedup,
               report.bound, report.bound_satisfied ? 1.0 : 0.0}};
    return t;
}

namespace {

void emit(const Table& table, const RunConfig& rc) {
    const std::string text = rc.format == "json" ? to_json(table) : to_csv(table);
    if (rc.output_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(rc.output_path, text);
    }
}

void emit_svg(const Table& table, const RunConfig& rc,
              const std::vector<std::string>& y_columns) {
    if (rc.svg_path.empty()) return;
    write_text_file(rc.svg_path, to_svg_chart(table, "k_over_kgr", y_columns));
}

void overlay_config(RunConfig& rc, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    json j;
    in >> j;
    rc.command = j.value("command", rc.command);
    rc.n = j.value("n", rc.n);
    if (j.contains("schedule")) {
        rc.schedule_spec = j["schedule"].is_string() ? j["schedule"].get<std::string>()
                                                     : j["schedule"].dump();
    }
    rc.k_max = j.value("k_max", rc.k_max);
    rc.output_path = j.value("output_path", rc.output_path);
    rc.seed = j.value("seed", rc.seed);
    rc.format = j.value("format", rc.format);
    rc.eps_f = j.value("eps_f", rc.eps_f);
    rc.n_max = j.value("n_max", rc.n_max);
    rc.grid_points = j.value("grid", rc.grid_points);
    rc.svg_path = j.value("svg", rc.svg_path);
    rc.eps_list = j.value("eps", rc.eps_list);
    rc.force_large = j.value("force_large", rc.force_large);
}

int run_verify(const RunConfig& rc) {
    verify::Options options;
    options.n_max = rc.n_max;
    options.seed = rc.seed;
    options.grid_points = rc.grid_points;
    options.k_fault_factor = rc.inject_k_fault ? 1.01 : 1.0;
    const auto results = verify::run_all(options);

    std::ostringstream out;
    int failed = 0;
    if (rc.format == "json") {
        out << "[\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            if (!r.passed) ++failed;
            out << "  {\"name\": \"" << r.name << "\", \"passed\": "
                << (r.passed ? "true" : "false") << ", \"worst\": " << format_double(r.worst)
                << ", \"tolerance\": " << format_double(r.tolerance) << "}"
                << (i + 1 < results.size() ? ",\n" : "\n");
        }
        out << "]\n";
    } else {
        for (const auto& r : results) {
            if (!r.passed) ++failed;
            out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  worst "
                << format_double(r.worst) << "  tol " << format_double(r.tolerance);
            if (!r.detail.empty()) out << "  (" << r.detail << ")";
            out << '\n';
        }
        out << "verification: " << (results.size() - static_cast<std::size_t>(failed)) << '/'
            << results.size() << " checks passed (seed " << rc.seed << ")\n";
    }
    if (rc.output_path.empty()) {
        std::cout << out.str();
    } else {
        write_text_file(rc.output_path, out.str());
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    RunConfig rc;

    // --config is resolved before CLI11 so flags can override its values
    std::vector<std::string> cleaned;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                std::cerr << "error: --config needs a file path\n";
                return 2;
            }
            try {
                overlay_config(rc, args[++i]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
        } else {
            cleaned.push_back(args[i]);
        }
    }
    static const std::vector<std::string> known_commands = {"constants", "fig1",       "fig2",
                                                            "cost-sweep", "bound-check", "verify"};
    const bool has_command =
        std::any_of(cleaned.begin(), cleaned.end(), [&](const std::string& a) {
            return std::find(known_commands.begin(), known_commands.end(), a) !=
                   known_commands.end();
        });
    if (!has_command && !rc.command.empty()) {
        cleaned.insert(cleaned.begin(), rc.command);
    }

    CLI::App app{"trace-speed quantification of the Grover search speed-up"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", rc.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* constants = app.add_subcommand("constants", "r, K and per-n derived constants");
    constants->add_option("--n", rc.n, "qubit count")->capture_default_str();
    constants->add_option("--out", rc.output_path, "output path (default stdout)");

    auto* fig1 = app.add_subcommand("fig1", "pure-state trace speed vs iteration step");
    fig1->add_option("--n", rc.n, "qubit count")->capture_default_str();
    fig1->add_option("--out", rc.output_path, "output path (default stdout)");
    fig1->add_option("--k-max", rc.k_max, "cap the sampled step range");
    fig1->add_option("--svg", rc.svg_path, "also write a minimal SVG chart");

    auto* fig2 = app.add_subcommand("fig2",
                                    "polarization schedules and their trace-speed curves");
    fig2->add_option("--n", rc.n, "qubit count")->capture_default_str();
    fig2->add_option("--eps-f", rc.eps_f, "final polarization")->capture_default_str();
    fig2->add_option("--out", rc.output_path, "output path (default stdout)");
    fig2->add_option("--k-max", rc.k_max, "cap the sampled step range");
    fig2->add_option("--svg", rc.svg_path, "also write a minimal SVG chart");

    auto* sweep = app.add_subcommand("cost-sweep", "cost, speed-up and bound per polarization");
    sweep->add_option("--n", rc.n, "qubit count")->capture_default_str();
    sweep->add_option("--schedule", rc.schedule_spec,
                      "schedule template (file, inline JSON or kind:... shorthand)");
    sweep->add_option("--eps", rc.eps_list, "comma-separated eps values (default: grid around eps_c)");
    sweep->add_option("--out", rc.output_path, "output path (default stdout)");
    sweep->add_flag("--force-large", rc.force_large, "allow n > 40");

    auto* bound = app.add_subcommand("bound-check", "speed-up vs trace-speed bound for one schedule");
    bound->add_option("--n", rc.n, "qubit count")->capture_default_str();
    bound->add_option("--schedule", rc.schedule_spec,
                      "schedule (file, inline JSON or kind:... shorthand)");
    bound->add_option("--out", rc.output_path, "output path (default stdout)");
    bound->add_flag("--force-large", rc.force_large, "allow n > 40");

    auto* verify_cmd = app.add_subcommand("verify", "oracle cross-checks; nonzero exit on failure");
    verify_cmd->add_option("--n-max", rc.n_max, "largest qubit count checked")
        ->capture_default_str();
    verify_cmd->add_option("--seed", rc.seed, "seed for the randomized suites")
        ->capture_default_str();
    verify_cmd->add_option("--grid", rc.grid_points, "direction-grid resolution")
        ->capture_default_str();
    verify_cmd->add_option("--out", rc.output_path, "output path (default stdout)");
    verify_cmd->add_flag("--inject-k-fault", rc.inject_k_fault,
                         "perturb K by 1% (negative control; verification must fail)");

    std::vector<const char*> argv;
    argv.push_back("tracespeed");
    for (const auto& a : cleaned) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (constants->parsed()) {
            emit(constants_table(rc.n), rc);
        } else if (fig1->parsed()) {
            const Table t = fig1_table(rc.n, rc.k_max);
            emit(t, rc);
            emit_svg(t, rc, {"ts_pure", "thr_bipartite", "thr_tripartite", "thr_half"});
        } else if (fig2->parsed()) {
            const Table t = fig2_table(rc.n, rc.eps_f, rc.k_max);
            emit(t, rc);
            emit_svg(t, rc, {"ts_constant", "ts_linear", "ts_exponential", "eps_constant",
                             "eps_linear", "eps_exponential"});
        } else if (sweep->parsed()) {
            emit(cost_sweep_table(rc.n, rc.schedule_spec, rc.eps_list, rc.force_large), rc);
        } else if (bound->parsed()) {
            emit(bound_check_table(rc.n, rc.schedule_spec, rc.force_large), rc);
        } else if (verify_cmd->parsed()) {
            return run_verify(rc);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace tracespeed::cli
