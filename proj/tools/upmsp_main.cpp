// upmsp: solver and neighbourhood-utility laboratory for unrelated
// parallel machine scheduling with sequence-dependent setups.
//
// Subcommands: generate, solve, experiment, fit, compare, report.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "upmsp/instance.hpp"
#include "upmsp/regression.hpp"
#include "upmsp/sa.hpp"
#include "upmsp/telemetry.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace upmsp;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::uint64_t fallback_seed() {
    if (const char* env = std::getenv("UPMSP_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1;
}

std::string instance_file_name(int M, int J, Time S, std::uint64_t seed) {
    std::ostringstream name;
    name << "inst_M" << M << "_J" << J << "_S" << S << "_s" << seed << ".txt";
    return name.str();
}

// Expands a mix of files, directories (all *.jsonl inside) and simple
// `*` glob patterns, sorted for determinism.
std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs,
                                    const std::string& dir_extension) {
    std::vector<fs::path> out;
    for (const auto& raw : inputs) {
        fs::path p(raw);
        if (fs::is_directory(p)) {
            for (const auto& entry : fs::directory_iterator(p))
                if (entry.is_regular_file() &&
                    entry.path().extension() == dir_extension)
                    out.push_back(entry.path());
        } else if (raw.find('*') != std::string::npos) {
            fs::path parent = p.parent_path().empty() ? "." : p.parent_path();
            std::string pattern = p.filename().string();
            std::string rx;
            for (char c : pattern) {
                if (c == '*') rx += ".*";
                else if (std::isalnum(static_cast<unsigned char>(c))) rx += c;
                else { rx += '\\'; rx += c; }
            }
            std::regex re(rx);
            if (fs::is_directory(parent))
                for (const auto& entry : fs::directory_iterator(parent))
                    if (entry.is_regular_file() &&
                        std::regex_match(entry.path().filename().string(), re))
                        out.push_back(entry.path());
        } else {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EnumerationEvent> read_all_events(
    const std::vector<fs::path>& files) {
    std::vector<EnumerationEvent> events;
    for (const auto& f : files) {
        auto part = read_events_file(f);
        events.insert(events.end(), part.begin(), part.end());
    }
    return events;
}

struct SolveFlags {
    std::uint64_t seed = 0;
    bool seed_given = false;
    long long budget_ms = 30000;
    long long max_iters = 1000000;
    double alpha = 0.96;
    long long plateau = 0;
    double initial_temp = 0.0;
    std::string policy = "uniform";
    std::string model_path;
    double p_max = 0.5;
    long long census_every = 1;

    void add_to(CLI::App* cmd, bool with_policy = true) {
        cmd->add_option("--seed", seed, "RNG seed (default: UPMSP_SEED or 1)")
            ->each([this](const std::string&) { seed_given = true; });
        cmd->add_option("--budget-ms", budget_ms,
                        "wall-clock budget in ms, 0 disables");
        cmd->add_option("--max-iters", max_iters,
                        "iteration budget, 0 disables");
        cmd->add_option("--alpha", alpha, "cooling rate in (0,1)");
        cmd->add_option("--plateau", plateau,
                        "iterations per temperature, 0 = n*m");
        cmd->add_option("--initial-temp", initial_temp,
                        "initial temperature, 0 = auto");
        if (with_policy) {
            cmd->add_option("--policy", policy, "uniform | adaptive")
                ->check(CLI::IsMember({"uniform", "adaptive"}));
            cmd->add_option("--model", model_path,
                            "utility model file (adaptive policy)");
        }
        cmd->add_option("--p-max", p_max,
                        "selection probability cap, in [1/6, 1)");
        cmd->add_option("--census-every", census_every,
                        "record every k-th incumbent change");
    }

    SAConfig config() const {
        SAConfig c;
        c.seed = seed_given ? seed : fallback_seed();
        c.budget_ms = budget_ms;
        c.max_iters = max_iters;
        c.alpha = alpha;
        c.plateau = plateau;
        c.initial_temperature = initial_temp;
        c.policy = policy == "adaptive" ? PolicyKind::Adaptive
                                        : PolicyKind::Uniform;
        c.p_max = p_max;
        c.census_every = census_every;
        return c;
    }
};

// ---------------------------------------------------------------- generate

int cmd_generate(int M, int J, Time S, Time proc_low, Time proc_high,
                 std::uint64_t seed, const std::string& out_dir) {
    GeneratorSpec spec{M, J, S, proc_low, proc_high, seed};
    Instance inst = generate(spec);
    fs::path dir(out_dir);
    fs::create_directories(dir);
    fs::path file = dir / instance_file_name(M, J, S, seed);
    write_instance_file(inst, file);
    std::cout << file.string() << '\n';
    return 0;
}

// ------------------------------------------------------------------- solve

int cmd_solve(const std::string& instance_path, const SolveFlags& flags,
              const std::string& telemetry_path, bool exhaustive_check) {
    Instance inst = read_instance_file(instance_path);
    SAConfig config = flags.config();

    std::array<UtilityModel, kNumNeighbourhoods> models;
    const std::array<UtilityModel, kNumNeighbourhoods>* models_ptr = nullptr;
    if (config.policy == PolicyKind::Adaptive) {
        models = load_models(flags.model_path);
        models_ptr = &models;
    }

    std::optional<TelemetrySink> sink;
    if (!telemetry_path.empty())
        sink.emplace(telemetry_path, config.census_every);

    std::string run_id = fs::path(instance_path).stem().string() + "_r" +
                         std::to_string(config.seed);
    SAResult result = run_sa(inst, config, models_ptr,
                             sink ? &*sink : nullptr, run_id);

    ordered_json out;
    out["instance"] = instance_path;
    out["run_id"] = run_id;
    out["M"] = inst.machines;
    out["J"] = inst.jobs;
    out["S"] = inst.max_setup;
    out["seed"] = config.seed;
    out["policy"] = flags.policy;
    out["cmax"] = result.best_cmax;
    out["spt"] = result.best.spt;
    out["iterations"] = result.iterations;
    out["incumbent_changes"] = result.incumbent_changes;
    out["initial_temperature"] = result.initial_temperature;
    out["elapsed_ms"] = result.elapsed_ms;
    out["best"] = result.best.seq;
    if (exhaustive_check) {
        Time opt = exhaustive_optimum(inst);
        out["exhaustive_optimum"] = opt;
        out["optimal"] = result.best_cmax == opt;
    }
    std::cout << out.dump() << '\n';
    return 0;
}

// -------------------------------------------------------------- experiment

struct GridSpec {
    std::vector<int> machines{2, 4};
    std::vector<int> jobs{20, 40};
    std::vector<Time> setups{9, 99};
};

GridSpec parse_grid(const std::string& text) {
    GridSpec grid;
    if (text.empty()) return grid;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid part needs K=v1,v2: " + part);
        std::string key = part.substr(0, eq);
        std::vector<Time> vals;
        std::stringstream vs(part.substr(eq + 1));
        std::string v;
        while (std::getline(vs, v, ',')) vals.push_back(std::stoll(v));
        if (vals.empty())
            throw std::invalid_argument("empty grid values for " + key);
        if (key == "M") {
            grid.machines.assign(vals.begin(), vals.end());
        } else if (key == "J") {
            grid.jobs.assign(vals.begin(), vals.end());
        } else if (key == "S") {
            grid.setups = vals;
        } else {
            throw std::invalid_argument("unknown grid key: " + key);
        }
    }
    return grid;
}

int cmd_experiment(const std::string& grid_text, int instances_per_cell,
                   int sa_seeds, const SolveFlags& flags,
                   const std::string& out_dir, int jobs_parallel) {
    GridSpec grid = parse_grid(grid_text);
    fs::path dir(out_dir);
    fs::create_directories(dir / "instances");
    fs::create_directories(dir / "telemetry");

    std::uint64_t base_seed = flags.seed_given ? flags.seed : fallback_seed();

    struct Task {
        fs::path instance_file;
        fs::path telemetry_file;
        std::string run_id;
        std::uint64_t sa_seed;
    };
    std::vector<Task> tasks;
    for (int M : grid.machines)
        for (int J : grid.jobs)
            for (Time S : grid.setups)
                for (int i = 0; i < instances_per_cell; ++i) {
                    std::uint64_t inst_seed = base_seed + i;
                    GeneratorSpec spec{M, J, S, 1, 99, inst_seed};
                    Instance inst = generate(spec);
                    fs::path file = dir / "instances" /
                                    instance_file_name(M, J, S, inst_seed);
                    write_instance_file(inst, file);
                    for (int s = 0; s < sa_seeds; ++s) {
                        std::uint64_t sa_seed = base_seed + s;
                        std::string run_id = file.stem().string() + "_r" +
                                             std::to_string(sa_seed);
                        tasks.push_back({file,
                                         dir / "telemetry" /
                                             (run_id + ".jsonl"),
                                         run_id, sa_seed});
                    }
                }

    if (jobs_parallel < 1)
        jobs_parallel = std::max(1u, std::thread::hardware_concurrency());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (!failed) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& task = tasks[i];
            try {
                Instance inst = read_instance_file(task.instance_file);
                SAConfig config = flags.config();
                config.seed = task.sa_seed;
                config.policy = PolicyKind::Uniform;
                TelemetrySink sink(task.telemetry_file, config.census_every);
                run_sa(inst, config, nullptr, &sink, task.run_id);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed) first_error = e.what();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs_parallel; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed) throw std::runtime_error("experiment run failed: " + first_error);

    std::cout << "instances: " << dir / "instances" << "\n"
              << "telemetry: " << dir / "telemetry" << " (" << tasks.size()
              << " runs)\n";
    return 0;
}

// --------------------------------------------------------------------- fit

int cmd_fit(const std::vector<std::string>& telemetry,
            const std::string& out_path) {
    auto files = expand_inputs(telemetry, ".jsonl");
    if (files.empty()) throw std::runtime_error("no telemetry inputs found");
    auto events = read_all_events(files);
    std::array<UtilityModel, kNumNeighbourhoods> models;
    for (int i = 0; i < kNumNeighbourhoods; ++i) {
        auto design = build_design(events, kAllNeighbourhoods[i]);
        models[i] = fit_ols(design, kAllNeighbourhoods[i],
                            RankPolicy::DropDependent);
        if (!models[i].dropped_terms.empty()) {
            std::cerr << "note: " << name_of(models[i].id)
                      << ": dependent columns zeroed:";
            for (const auto& term : models[i].dropped_terms)
                std::cerr << ' ' << term;
            std::cerr << '\n';
        }
    }
    save_models(models, out_path);
    std::cout << "fitted 6 models from " << events.size() << " events -> "
              << out_path << '\n';
    return 0;
}

// ----------------------------------------------------------------- compare

int cmd_compare(const std::vector<std::string>& instances,
                const std::string& model_path, int seeds,
                const SolveFlags& flags, const std::string& out_path) {
    auto files = expand_inputs(instances, ".txt");
    if (files.empty()) throw std::runtime_error("no instance inputs found");
    auto models = load_models(model_path);

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "instance,seed,cmax_uniform,cmax_adaptive,diff\n";
    std::uint64_t base_seed = flags.seed_given ? flags.seed : fallback_seed();
    for (const auto& file : files) {
        Instance inst = read_instance_file(file);
        for (int s = 0; s < seeds; ++s) {
            SAConfig config = flags.config();
            config.seed = base_seed + s;
            config.policy = PolicyKind::Uniform;
            Time uniform_cmax = run_sa(inst, config).best_cmax;
            config.policy = PolicyKind::Adaptive;
            Time adaptive_cmax =
                run_sa(inst, config, &models).best_cmax;
            out << file.filename().string() << ',' << config.seed << ','
                << uniform_cmax << ',' << adaptive_cmax << ','
                << (uniform_cmax - adaptive_cmax) << '\n';
        }
    }
    std::cout << "comparison table -> " << out_path << '\n';
    return 0;
}

// ------------------------------------------------------------------ report

struct DecileCell {
    double sum = 0;
    long long count = 0;
};

int decile_of(double t) {
    int d = static_cast<int>(t * 10.0);
    return std::clamp(d, 0, 9);
}

std::string format_double(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

int cmd_report(const std::vector<std::string>& inputs,
               const std::string& out_dir) {
    auto files = expand_inputs(inputs, ".jsonl");
    if (files.empty()) throw std::runtime_error("no telemetry inputs found");
    auto events = read_all_events(files);
    fs::path dir(out_dir);
    fs::create_directories(dir);

    // (neighbourhood, M, J, decile) -> mean E[u]
    std::map<std::tuple<int, int, int, int>, DecileCell> table;
    for (const auto& e : events) {
        int d = decile_of(e.t);
        for (int i = 0; i < kNumNeighbourhoods; ++i) {
            auto& cell = table[{i, e.M, e.J, d}];
            cell.sum += e.stats[i].expected_utility;
            cell.count += 1;
        }
    }

    std::ofstream csv(dir / "utility_by_decile.csv");
    if (!csv) throw std::runtime_error("cannot write report CSV");
    csv << "neighbourhood,M,J,decile,count,mean_expected_utility\n";
    for (const auto& [key, cell] : table) {
        auto [id, M, J, d] = key;
        csv << name_of(kAllNeighbourhoods[id]) << ',' << M << ',' << J << ','
            << d << ',' << cell.count << ','
            << format_double(cell.sum / static_cast<double>(cell.count))
            << '\n';
    }

    // one SVG per neighbourhood: mean E[u] vs t deciles, one curve per
    // (M, J) cell, both axes log-scaled
    static const char* kPalette[] = {"#1b6ca8", "#d1495b", "#2e933c",
                                     "#ef8a17", "#6a4c93", "#3bb2c4",
                                     "#8d5a2b", "#636363"};
    const double width = 640, height = 480;
    const double left = 70, right = 20, top = 30, bottom = 55;
    for (int i = 0; i < kNumNeighbourhoods; ++i) {
        std::set<std::pair<int, int>> cells;
        double min_u = 1e300, max_u = 0;
        for (const auto& [key, cell] : table) {
            if (std::get<0>(key) != i) continue;
            cells.insert({std::get<1>(key), std::get<2>(key)});
            double mean = cell.sum / static_cast<double>(cell.count);
            if (mean > 0) {
                min_u = std::min(min_u, mean);
                max_u = std::max(max_u, mean);
            }
        }
        if (max_u <= 0) {
            min_u = 1e-8;
            max_u = 1e-2;
        }
        double ylo = std::log10(min_u) - 0.2, yhi = std::log10(max_u) + 0.2;
        if (yhi - ylo < 1.0) yhi = ylo + 1.0;
        double xlo = std::log10(0.05), xhi = std::log10(0.95);

        auto xpos = [&](double t) {
            return left + (std::log10(t) - xlo) / (xhi - xlo) *
                              (width - left - right);
        };
        auto ypos = [&](double u) {
            return height - bottom -
                   (std::log10(u) - ylo) / (yhi - ylo) *
                       (height - top - bottom);
        };

        std::ofstream svg(dir / (std::string("utility_") +
                                 name_of(kAllNeighbourhoods[i]) + ".svg"));
        if (!svg) throw std::runtime_error("cannot write report SVG");
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
            << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
            << height << "\">\n";
        svg << "<!-- mean expected utility per normalised-time decile,\n"
               "     one curve per (M, J) cell; data rows: M J decile mean -->\n";
        svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        svg << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"15\">"
            << name_of(kAllNeighbourhoods[i]) << "</text>\n";
        // axes
        svg << "<line x1=\"" << left << "\" y1=\"" << height - bottom
            << "\" x2=\"" << width - right << "\" y2=\"" << height - bottom
            << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
            << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\">t (log scale)</text>\n";
        svg << "<text x=\"16\" y=\"" << height / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\" transform=\"rotate(-90 16 " << height / 2
            << ")\">mean E[u] (log scale)</text>\n";
        for (int d = 0; d < 10; ++d) {
            double mid = 0.05 + d * 0.1;
            svg << "<text x=\"" << xpos(mid) << "\" y=\"" << height - bottom + 18
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                   "font-size=\"10\">" << format_double(mid) << "</text>\n";
        }
        int color = 0;
        double legend_y = top + 12;
        for (const auto& [M, J] : cells) {
            std::ostringstream points;
            std::ostringstream data;
            for (int d = 0; d < 10; ++d) {
                auto it = table.find({i, M, J, d});
                if (it == table.end()) continue;
                double mean =
                    it->second.sum / static_cast<double>(it->second.count);
                data << "<!-- " << M << ' ' << J << ' ' << d << ' '
                     << format_double(mean) << " -->\n";
                if (mean <= 0) continue;
                points << xpos(0.05 + d * 0.1) << ',' << ypos(mean) << ' ';
            }
            const char* stroke = kPalette[color % 8];
            svg << data.str();
            svg << "<polyline fill=\"none\" stroke=\"" << stroke
                << "\" stroke-width=\"1.5\" points=\"" << points.str()
                << "\"/>\n";
            svg << "<text x=\"" << width - right - 110 << "\" y=\"" << legend_y
                << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
                << stroke << "\">M=" << M << " J=" << J << "</text>\n";
            legend_y += 14;
            ++color;
        }
        svg << "</svg>\n";
    }
    std::cout << "report -> " << dir.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unrelated parallel machine scheduling with "
                 "sequence-dependent setups: SA solver and neighbourhood "
                 "utility laboratory"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a benchmark instance");
    int gen_m = 2, gen_j = 20;
    Time gen_s = 9, gen_plo = 1, gen_phi = 99;
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
    std::string gen_out = ".";
    gen->add_option("--machines", gen_m, "machine count M")->required();
    gen->add_option("--jobs", gen_j, "job count J")->required();
    gen->add_option("--max-setup", gen_s, "maximum setup time S");
    gen->add_option("--proc-low", gen_plo, "processing-time lower bound");
    gen->add_option("--proc-high", gen_phi, "processing-time upper bound");
    gen->add_option("--seed", gen_seed, "generator seed")
        ->each([&](const std::string&) { gen_seed_given = true; });
    gen->add_option("--out", gen_out, "output directory");

    // solve
    auto* solve = app.add_subcommand("solve", "run Simulated Annealing");
    std::string solve_instance, solve_telemetry;
    bool solve_exhaustive = false;
    SolveFlags solve_flags;
    solve->add_option("--instance", solve_instance, "instance file")
        ->required();
    solve_flags.add_to(solve);
    solve->add_option("--telemetry", solve_telemetry,
                      "record a census on incumbent changes to this file");
    solve->add_flag("--exhaustive-check", solve_exhaustive,
                    "also brute-force the optimum (jobs <= 8)");

    // experiment
    auto* exp = app.add_subcommand(
        "experiment", "generate a grid of instances and run them with "
                      "telemetry");
    std::string exp_grid = "M=2,4;J=20,40;S=9,99";
    int exp_instances = 2, exp_seeds = 1, exp_parallel = 0;
    std::string exp_out = "experiment_out";
    SolveFlags exp_flags;
    exp->add_option("--grid", exp_grid, "grid spec, e.g. M=2,4;J=20,40;S=9,99");
    exp->add_option("--instances-per-cell", exp_instances,
                    "instances per grid cell");
    exp->add_option("--seeds", exp_seeds, "SA seeds per instance");
    exp->add_option("--out-dir", exp_out, "output directory");
    exp->add_option("--jobs-parallel", exp_parallel,
                    "worker threads, 0 = all cores");
    exp_flags.add_to(exp, false);

    // fit
    auto* fit = app.add_subcommand("fit", "fit the six utility models");
    std::vector<std::string> fit_telemetry;
    std::string fit_out = "models.json";
    fit->add_option("--telemetry", fit_telemetry,
                    "telemetry files, dirs or globs")
        ->required();
    fit->add_option("--out", fit_out, "model output file");

    // compare
    auto* cmp = app.add_subcommand("compare",
                                   "paired uniform-vs-adaptive runs");
    std::vector<std::string> cmp_instances;
    std::string cmp_model, cmp_out = "compare.csv";
    int cmp_seeds = 5;
    SolveFlags cmp_flags;
    cmp->add_option("--instances", cmp_instances,
                    "instance files, dirs or globs")
        ->required();
    cmp->add_option("--model", cmp_model, "utility model file")->required();
    cmp->add_option("--seeds", cmp_seeds, "seeds per instance");
    cmp->add_option("--out", cmp_out, "CSV output file");
    cmp_flags.add_to(cmp, false);

    // report
    auto* rep = app.add_subcommand("report",
                                   "CSV tables and SVG plots from telemetry");
    std::vector<std::string> rep_in;
    std::string rep_out = "report_out";
    rep->add_option("--in", rep_in, "telemetry files, dirs or globs")
        ->required();
    rep->add_option("--out-dir", rep_out, "report output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(gen_m, gen_j, gen_s, gen_plo, gen_phi,
                                gen_seed_given ? gen_seed : fallback_seed(),
                                gen_out);
        if (solve->parsed()) {
            if (solve_flags.policy == "adaptive" &&
                solve_flags.model_path.empty()) {
                std::cerr << "usage error: --policy adaptive needs --model\n";
                return kExitUsage;
            }
            return cmd_solve(solve_instance, solve_flags, solve_telemetry,
                             solve_exhaustive);
        }
        if (exp->parsed())
            return cmd_experiment(exp_grid, exp_instances, exp_seeds,
                                  exp_flags, exp_out, exp_parallel);
        if (fit->parsed()) return cmd_fit(fit_telemetry, fit_out);
        if (cmp->parsed())
            return cmd_compare(cmp_instances, cmp_model, cmp_seeds, cmp_flags,
                               cmp_out);
        if (rep->parsed()) return cmd_report(rep_in, rep_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
