// Command-line surface for tail-behavior diagnostics of stochastic
// frontier error components: calibration management, data tests,
// simulation replication, and density/power debug surfaces.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evtail/csv.hpp"
#include "evtail/errors.hpp"
#include "evtail/regression.hpp"
#include "evtail/scenario.hpp"
#include "evtail/tail_tests.hpp"

namespace fs = std::filesystem;
using namespace evtail;

namespace {

constexpr const char* kToolVersion = "1.0.0";

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

std::string fnv1a_digest(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

// Sidecar describing how an output file was produced; sufficient to
// reproduce the run bit-exactly.
void write_manifest(const fs::path& output, const std::vector<std::string>& argv_copy,
                    std::uint64_t seed, const std::vector<fs::path>& inputs,
                    const std::vector<std::string>& calibration_ids) {
    nlohmann::json m;
    m["tool_version"] = kToolVersion;
    m["command_line"] = argv_copy;
    m["seed"] = seed;
    nlohmann::json digests = nlohmann::json::object();
    for (const auto& p : inputs) digests[p.string()] = fnv1a_digest(p);
    m["input_digests"] = digests;
    m["calibration_ids"] = calibration_ids;
    m["timestamp"] = static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    write_file_atomic(output.string() + ".manifest.json", m.dump(2) + "\n");
}

std::string fmt(double v, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) continue;
        out.push_back(std::stod(piece));
    }
    return out;
}

int cmd_calibrate(const std::string& kind_str, const std::vector<int>& ks, double alpha,
                  std::int64_t draws, int iterations, double kappa, std::uint64_t seed,
                  const fs::path& out_dir, const std::vector<std::string>& argv_copy) {
    const TestKind kind = test_kind_from_string(kind_str);
    fs::create_directories(out_dir);
    for (int k : ks) {
        CalibrationArtifact artifact =
            kind == TestKind::thin_tail
                ? simulate_thin_calibration(k, alpha, draws, seed)
                : calibrate_lfd(k, alpha, draws, iterations, kappa, seed);
        const fs::path file = out_dir / artifact_filename(artifact);
        write_file_atomic(file, serialize(artifact));
        write_manifest(file, argv_copy, seed, {}, {artifact.id()});
        std::cout << "wrote " << file.string() << " (cv=" << fmt(artifact.cv) << ")\n";
    }
    return 0;
}

int cmd_test(const fs::path& input, const std::string& response_col,
             const std::vector<std::string>& design_cols, const std::string& group_col,
             const std::string& orientation_str, const std::vector<int>& ks,
             const std::string& tails, const fs::path& calib_dir, double alpha,
             std::uint64_t seed, const fs::path& out, bool censor_display,
             const std::vector<std::string>& argv_copy) {
    const auto table = read_csv(input);
    const auto resp_idx = table.column(response_col);
    std::vector<std::size_t> design_idx;
    for (const auto& c : design_cols) design_idx.push_back(table.column(c));
    std::optional<std::size_t> group_idx;
    if (!group_col.empty()) group_idx = table.column(group_col);

    Dataset data;
    const auto n = static_cast<Eigen::Index>(table.rows.size());
    data.response.resize(n);
    data.design.resize(n, static_cast<Eigen::Index>(design_cols.size()) + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto row = static_cast<std::size_t>(i);
        data.response(i) = numeric_cell(table, row, resp_idx);
        data.design(i, 0) = 1.0;
        for (std::size_t j = 0; j < design_idx.size(); ++j) {
            data.design(i, static_cast<Eigen::Index>(j) + 1) =
                numeric_cell(table, row, design_idx[j]);
        }
        if (group_idx) data.groups.push_back(table.rows[row][*group_idx]);
    }

    CalibrationStore store;
    store.load_directory(calib_dir);
    std::vector<std::string> calib_ids;
    for (int k : ks) calib_ids.push_back(store.get(TestKind::thin_tail, k, alpha).id());

    const Orientation orientation =
        orientation_str == "cost" ? Orientation::cost : Orientation::production;
    auto rows = run_frontier_diagnostic(data, orientation, ks, store, alpha);

    std::ostringstream csv;
    csv << "group,k,tail,statistic,p_value,reject";
    if (censor_display) csv << ",p_display";
    csv << ",error\n";
    for (const auto& r : rows) {
        const bool wanted = tails == "both" || tails == r.tail;
        if (!wanted) continue;
        csv << r.group << ',' << r.k << ',' << r.tail << ',';
        if (r.error.empty()) {
            csv << fmt(r.statistic) << ',' << fmt(r.p_value) << ',' << (r.reject ? 1 : 0);
            if (censor_display) {
                csv << ',' << (r.p_value > 0.1 ? std::string(">0.1") : fmt(r.p_value, "%.2f"));
            }
            csv << ',';
        } else {
            csv << ",,";
            if (censor_display) csv << ',';
            csv << r.error;
        }
        csv << '\n';
    }
    write_file_atomic(out, csv.str());
    write_manifest(out, argv_copy, seed, {input}, calib_ids);
    std::cout << "wrote " << out.string() << " (" << rows.size() << " cells)\n";
    return 0;
}

int cmd_simulate(const std::string& preset, const fs::path& config, std::int64_t reps_override,
                 std::uint64_t seed_override, bool seed_given, const fs::path& calib_dir,
                 const fs::path& out, const std::vector<std::string>& argv_copy) {
    SimulationPlan plan;
    std::vector<fs::path> inputs;
    if (!preset.empty()) {
        plan = preset_plan(preset);
    } else {
        std::ifstream in(config);
        if (!in) throw DataError("cannot open " + config.string());
        std::stringstream buf;
        buf << in.rdbuf();
        plan = parse_plan(buf.str());
        inputs.push_back(config);
    }
    if (reps_override > 0) plan.replications = reps_override;
    if (seed_given) plan.seed = seed_override;

    CalibrationStore store;
    store.load_directory(calib_dir);

    std::vector<std::string> calib_ids;
    for (const auto& s : plan.scenarios) {
        const TestKind kind = s.test == ScenarioTest::equal_tail ? TestKind::equal_tail
                                                                 : TestKind::thin_tail;
        calib_ids.push_back(store.get(kind, s.k, plan.alpha).id());
    }

    std::ostringstream csv;
    csv << "scenario,n,k,rate,se,reps,seed\n";
    for (const auto& s : plan.scenarios) {
        const auto cell = run_scenario(s, plan.replications, store, plan.alpha, plan.seed);
        csv << cell.scenario << ',' << cell.n << ',' << cell.k << ',' << fmt(cell.rate)
            << ',' << fmt(cell.se) << ',' << cell.reps << ',' << cell.seed << '\n';
        std::cout << cell.scenario << " n=" << cell.n << " k=" << cell.k
                  << " rate=" << fmt(cell.rate, "%.3f") << "\n";
    }
    write_file_atomic(out, csv.str());
    write_manifest(out, argv_copy, plan.seed, inputs, calib_ids);
    return 0;
}

int cmd_density(int k, const std::string& xi_list, const std::string& v_list,
                const std::optional<fs::path>& out,
                const std::vector<std::string>& argv_copy) {
    const auto xis = parse_double_list(xi_list);
    auto interior = parse_double_list(v_list);
    if (static_cast<int>(interior.size()) != k - 2) {
        throw CLI::ValidationError("--v must supply exactly k-2 interior coordinates");
    }
    std::vector<double> coords;
    coords.push_back(1.0);
    for (double v : interior) coords.push_back(v);
    coords.push_back(0.0);
    const NormalizedTail vstar(coords);
    std::ostringstream csv;
    csv << "xi,density\n";
    for (double xi : xis) {
        csv << fmt(xi) << ',' << fmt(normalized_density(TailIndex(xi), vstar)) << '\n';
    }
    if (out) {
        write_file_atomic(*out, csv.str());
        write_manifest(*out, argv_copy, 0, {}, {});
    } else {
        std::cout << csv.str();
    }
    return 0;
}

int cmd_power(int k, double alpha, std::int64_t draws, const std::string& grid_list,
              std::uint64_t seed, const std::optional<fs::path>& out,
              const std::vector<std::string>& argv_copy) {
    const auto grid = parse_double_list(grid_list);
    const auto w = WeightGrid::uniform(50);
    const auto power = asymptotic_power_curve(k, grid, draws, alpha, w, seed);
    std::ostringstream csv;
    csv << "xi,power\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv << fmt(grid[i]) << ',' << fmt(power[i]) << '\n';
    }
    if (out) {
        write_file_atomic(*out, csv.str());
        write_manifest(*out, argv_copy, seed, {}, {});
    } else {
        std::cout << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> argv_copy(argv, argv + argc);

    CLI::App app{"Nonparametric extreme-value tail tests for stochastic frontier models"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    const char* env_calib = std::getenv("EVTAIL_CALIBRATION_DIR");
    const std::string default_calib = env_calib ? env_calib : "calibrations";

    // calibrate
    auto* cal = app.add_subcommand("calibrate", "Simulate and persist calibration artifacts");
    std::string cal_kind = "thin";
    std::vector<int> cal_k = {10, 20, 50};
    double cal_alpha = 0.05;
    std::int64_t cal_draws = 10000;
    int cal_iterations = 500;
    double cal_kappa = 2.0;
    std::uint64_t cal_seed = 1;
    std::string cal_out = default_calib;
    cal->add_option("--kind", cal_kind, "thin or equal")->check(CLI::IsMember({"thin", "equal"}));
    cal->add_option("--k", cal_k, "tail sizes")->delimiter(',');
    cal->add_option("--alpha", cal_alpha, "significance level");
    cal->add_option("--draws", cal_draws, "Monte Carlo draws");
    cal->add_option("--iterations", cal_iterations, "LFD iteration count (equal kind)");
    cal->add_option("--kappa", cal_kappa, "LFD step length (equal kind)");
    cal->add_option("--seed", cal_seed, "root seed");
    cal->add_option("--out", cal_out, "output directory");

    // test
    auto* tst = app.add_subcommand("test", "Run the frontier tail diagnostics on a CSV");
    std::string t_input, t_response, t_group, t_orientation = "production", t_tails = "both";
    std::vector<std::string> t_design;
    std::vector<int> t_k = {25, 50, 75, 100};
    std::string t_calib = default_calib, t_out = "results.csv";
    double t_alpha = 0.05;
    std::uint64_t t_seed = 1;
    bool t_censor = false;
    tst->add_option("--input", t_input, "input CSV")->required();
    tst->add_option("--response", t_response, "response column")->required();
    tst->add_option("--design", t_design, "design columns (constant added automatically)")
        ->delimiter(',');
    tst->add_option("--group", t_group, "optional group column");
    tst->add_option("--orientation", t_orientation, "production or cost")
        ->check(CLI::IsMember({"production", "cost"}));
    tst->add_option("--k", t_k, "tail sizes")->delimiter(',');
    tst->add_option("--tails", t_tails, "left, right, or both")
        ->check(CLI::IsMember({"left", "right", "both"}));
    tst->add_option("--calib", t_calib, "calibration directory");
    tst->add_option("--alpha", t_alpha, "significance level");
    tst->add_option("--seed", t_seed, "seed recorded in the manifest");
    tst->add_option("--out", t_out, "output CSV");
    tst->add_flag("--censor-display", t_censor, "add a display column that censors p-values above 0.1");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run Monte Carlo scenario cells");
    std::string s_preset, s_config;
    std::int64_t s_reps = 0;
    std::uint64_t s_seed = 0;
    std::string s_calib = default_calib, s_out = "rejections.csv";
    auto* preset_opt = sim->add_option("--preset", s_preset, "table1, table2, table3, or table4")
                           ->check(CLI::IsMember({"table1", "table2", "table3", "table4"}));
    auto* config_opt = sim->add_option("--config", s_config, "scenario config JSON");
    preset_opt->excludes(config_opt);
    sim->add_option("--reps", s_reps, "replication override");
    auto* sim_seed_opt = sim->add_option("--seed", s_seed, "root seed override");
    sim->add_option("--calib", s_calib, "calibration directory");
    sim->add_option("--out", s_out, "output CSV");

    // density
    auto* den = app.add_subcommand("density", "Evaluate the limiting normalized density");
    int d_k = 3;
    std::string d_xi = "0", d_v;
    std::string d_out;
    den->add_option("--k", d_k, "tail size (>= 3)")->check(CLI::Range(3, 200));
    den->add_option("--xi", d_xi, "comma list of tail indices");
    den->add_option("--v", d_v, "comma list of the k-2 interior coordinates");
    den->add_option("--out", d_out, "output CSV (default stdout)");

    // power
    auto* pow_cmd = app.add_subcommand("power", "Asymptotic power curve of the thin-tail test");
    int p_k = 20;
    double p_alpha = 0.05;
    std::int64_t p_draws = 10000;
    std::string p_grid = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
    std::uint64_t p_seed = 1;
    std::string p_out;
    pow_cmd->add_option("--k", p_k, "tail size (>= 3)")->check(CLI::Range(3, 200));
    pow_cmd->add_option("--alpha", p_alpha, "significance level");
    pow_cmd->add_option("--draws", p_draws, "Monte Carlo draws per grid point");
    pow_cmd->add_option("--grid", p_grid, "comma list of tail indices");
    pow_cmd->add_option("--seed", p_seed, "root seed");
    pow_cmd->add_option("--out", p_out, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
        if (*cal) {
            return cmd_calibrate(cal_kind, cal_k, cal_alpha, cal_draws, cal_iterations,
                                 cal_kappa, cal_seed, cal_out, argv_copy);
        }
        if (*tst) {
            return cmd_test(t_input, t_response, t_design, t_group, t_orientation, t_k,
                            t_tails, t_calib, t_alpha, t_seed, t_out, t_censor, argv_copy);
        }
        if (*sim) {
            if (s_preset.empty() && s_config.empty()) {
                throw CLI::RequiredError("--preset or --config");
            }
            return cmd_simulate(s_preset, s_config, s_reps, s_seed, sim_seed_opt->count() > 0,
                                s_calib, s_out, argv_copy);
        }
        if (*den) return cmd_density(d_k, d_xi, d_v, d_out.empty() ? std::nullopt
                                                                   : std::optional<fs::path>(d_out),
                                     argv_copy);
        if (*pow_cmd) {
            return cmd_power(p_k, p_alpha, p_draws, p_grid, p_seed,
                             p_out.empty() ? std::nullopt : std::optional<fs::path>(p_out),
                             argv_copy);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const CalibrationDivergence& e) {
        std::cerr << "calibration failed: " << e.what()
                  << " (try a smaller --kappa or more --draws)\n";
        return kExitNumeric;
    } catch (const CalibrationMismatch& e) {
        std::cerr << "calibration error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const QuadratureFailure& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const RankDeficient& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
