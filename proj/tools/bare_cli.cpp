// Command-line front end: code construction, ordering search, lookup-table
// builds, golden-table verification, and Monte Carlo rate estimation.
//
// Exit codes: 0 success, 2 validation failure, 3 golden mismatch.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bare/fixtures.hpp"
#include "bare/io_util.hpp"

using namespace bare;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitGoldenMismatch = 3;

struct CodeBundle {
    Fixture fixture;     // populated for bundled ids
    bool bundled = false;
    BareCode code;
    std::vector<StabilizerOrdering> orderings;
    std::vector<LookupEntry> overlay;
};

// --code accepts a bundled size (6..10) or a path to a code JSON file.
CodeBundle resolve_code(const std::string& spec, const std::string& data_dir) {
    CodeBundle bundle;
    if (spec.size() <= 2 && spec.find_first_not_of("0123456789") == std::string::npos) {
        bundle.fixture = load_fixture(std::stoi(spec), data_dir);
        bundle.bundled = true;
        bundle.code = bundle.fixture.code;
        bundle.orderings = bundle.fixture.orderings;
        bundle.overlay = bundle.fixture.overlay();
        return bundle;
    }
    std::string text = read_file(spec);
    bundle.code = code_from_json_text(text);
    json j = json::parse(text);
    if (j.contains("orderings")) {
        for (auto it = j.at("orderings").begin(); it != j.at("orderings").end(); ++it) {
            StabilizerOrdering ord;
            ord.generator_index = std::stoi(it.key()) - 1;
            for (const auto& gate : it.value().at("reordered"))
                ord.gates.push_back({gate.at(0).get<int>(), gate.at(1).get<std::string>().at(0)});
            bundle.orderings.push_back(std::move(ord));
        }
    }
    if (j.contains("manual_lookup")) {
        int m = bundle.code.group.num_generators();
        for (const auto& e : j.at("manual_lookup")) {
            Syndrome s = Syndrome::parse(e.at("syndrome").get<std::string>());
            if (s.m != m) throw std::invalid_argument("manual entry syndrome length mismatch");
            bundle.overlay.push_back(
                {s, PauliString::parse(e.at("correction").get<std::string>()), LookupSource::manual, -1});
        }
    }
    return bundle;
}

json config_json(const std::string& command, const json& fields) {
    json j = fields;
    j["command"] = command;
    return j;
}

std::string stamp(const json& config) {
    std::string text = config.dump();
    return "# config_hash=" + hex64(fnv1a64(text)) + " config=" + text + "\n";
}

int cmd_build_code(const std::string& graph_path, const std::string& out_path) {
    GraphMessageState graph = load_graph_file(graph_path);
    CheckMatrix pre = build_premeasurement_check(graph);
    BareCode code = encode_by_measurement(pre, graph.n_message, graph);

    auto distance = compute_distance(code, 3);
    FaultBudget budget = compute_budget(code);
    bool degree_ok = graph.n_message >= 1 && message_degree_check(graph, 3);

    std::cout << "n=" << code.n << " k=" << code.k << "\n";
    std::cout << "distance(w_max=3): " << (distance ? std::to_string(*distance) : "> 3") << "\n";
    std::cout << "message degree >= 3: " << (degree_ok ? "yes" : "no") << "\n";
    std::cout << "budget: kappa=" << budget.kappa << " s_u=" << budget.s_u
              << " ancilla_hook_bound=" << budget.ancilla_hook_bound << " gate_hook_bound=" << budget.gate_hook_bound
              << " ancilla_budget=" << (budget.ancilla_budget_ok ? "ok" : "violated")
              << " gate_budget=" << (budget.gate_budget_ok ? "ok" : "violated") << "\n";
    for (int gi = 0; gi < code.group.num_generators(); ++gi)
        std::cout << "g" << gi + 1 << " = " << code.group.generator(gi).str() << "\n";
    if (code.k == 1)
        std::cout << "logical_x = " << code.logical_x.str()
                  << "\nlogical_z = " << code.logical_z.str() << "\n";

    // Choose fault-tolerant orderings so the emitted code is directly
    // usable for extraction and simulation.
    std::vector<StabilizerOrdering> orderings;
    bool all_orderable = true;
    try {
        orderings = choose_orderings(code);
        for (const auto& ord : orderings) {
            std::cout << "ordering g" << ord.generator_index + 1 << ":";
            for (const auto& gate : ord.gates) std::cout << ' ' << gate.pauli << gate.qubit;
            std::cout << "\n";
        }
    } catch (const std::runtime_error& e) {
        std::cerr << "warning: " << e.what() << "\n";
        all_orderable = false;
    }

    if (!out_path.empty()) write_file(out_path, code_to_json(code, orderings, {}));

    if (code.k >= 1 && (!distance || *distance < 3)) {
        std::cerr << "warning: distance below 3\n";
        return kExitValidation;
    }
    return all_orderable ? 0 : kExitValidation;
}

int cmd_search_orderings(const CodeBundle& bundle, int generator, size_t limit,
                         const std::string& out_path) {
    int gi = generator - 1;
    if (gi < 0 || gi >= bundle.code.group.num_generators())
        throw std::invalid_argument("generator index out of range");
    if (bundle.code.group.generator(gi).weight() <= 2) {
        std::cout << "generator " << generator
                  << " has weight <= 2: reordering not applicable\n";
        return 0;
    }
    auto results = search_orderings(bundle.code, gi, limit);
    std::cout << "valid orderings: " << results.size() << "\n";
    json out;
    out["generator"] = generator;
    out["original"] = bundle.code.group.generator(gi).str();
    out["config_hash"] = hex64(fnv1a64(
        config_json("search-orderings", {{"generator", generator}, {"limit", limit}}).dump()));
    auto& arr = out["orderings"] = json::array();
    for (const auto& ord : results) {
        json gates = json::array();
        for (const auto& gate : ord.gates) gates.push_back({gate.qubit, std::string(1, gate.pauli)});
        arr.push_back(std::move(gates));
    }
    if (!out_path.empty())
        write_file(out_path, out.dump(1) + "\n");
    else
        std::cout << out.dump(1) << "\n";
    return 0;
}

int cmd_build_lut(const CodeBundle& bundle, const std::string& code_spec,
                  const std::string& out_path) {
    LookupTable table = build_lookup(bundle.code, bundle.orderings, bundle.overlay);
    json cfg = config_json("build-lut", {{"code", code_spec}, {"n", bundle.code.n}});
    std::string csv = stamp(cfg) + lookup_to_csv(table);
    if (!out_path.empty())
        write_file(out_path, csv);
    else
        std::cout << csv;
    return 0;
}

int cmd_hook_table(const CodeBundle& bundle, int generator, const std::string& out_path) {
    int gi = generator - 1;
    const StabilizerOrdering* chosen = nullptr;
    for (const auto& ord : bundle.orderings)
        if (ord.generator_index == gi) chosen = &ord;
    if (chosen == nullptr)
        throw std::invalid_argument("no bundled ordering for generator " +
                                    std::to_string(generator));
    HookTable hooks = enumerate_prefix_syndromes(bundle.code, *chosen);
    std::string csv = hook_table_to_csv(hooks);
    if (!out_path.empty())
        write_file(out_path, csv);
    else
        std::cout << csv;
    return 0;
}

int cmd_verify_tables(int n, const std::string& data_dir) {
    Fixture fx = load_fixture(n, data_dir);
    GoldenVerifyResult result = verify_golden_tables(fx);
    for (const auto& note : fx.notes) std::cout << "note: " << note << "\n";
    if (result.clean()) {
        std::cout << fx.name << ": all golden tables reproduced (" << result.single_rows
                  << " single-qubit rows, " << result.propagated_columns
                  << " propagated columns, " << result.left_alone_rows << " left-alone rows)\n";
        return 0;
    }
    for (const auto& line : result.mismatches) std::cout << "MISMATCH " << line << "\n";
    return kExitGoldenMismatch;
}

int cmd_simulate(const CodeBundle& bundle, NoiseModel model, double p, uint64_t trials,
                 uint64_t seed, RepeatPolicy policy, int threads, const std::string& out_path) {
    LookupTable table = build_lookup(bundle.code, bundle.orderings, bundle.overlay);
    ExtractionCircuit circuit = build_circuit(bundle.code, bundle.orderings);
    NoiseConfig noise{model, p, 0, 0, 0, /*tie_to_ps=*/true};
    RateEstimate est =
        estimate_rates(bundle.code, circuit, table, noise, trials, seed, policy, threads);

    json cfg = config_json("simulate", {{"model", to_string(model)},
                                        {"p", p},
                                        {"trials", trials},
                                        {"seed", seed},
                                        {"repeat_policy", to_string(policy)},
                                        {"n", bundle.code.n}});
    std::ostringstream csv;
    csv << stamp(cfg) << kRatesCsvHeader << "\n"
        << rates_csv_row(model, noise.applied(), est, seed) << "\n";
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else
        std::cout << csv.str();
    std::cout << "total_rate=" << format_double(est.total_rate)
              << " logical_rate=" << format_double(est.logical_rate) << "\n";
    return 0;
}

int cmd_threshold(const CodeBundle& bundle, NoiseModel model, std::vector<double> p_values,
                  uint64_t trials, uint64_t seed, RepeatPolicy policy, int threads,
                  CrossingKind kind, const std::string& out_prefix, bool emit_plot_script) {
    LookupTable table = build_lookup(bundle.code, bundle.orderings, bundle.overlay);
    ExtractionCircuit circuit = build_circuit(bundle.code, bundle.orderings);
    std::sort(p_values.begin(), p_values.end());
    auto points = sweep(bundle.code, circuit, table, model, p_values, trials, seed, policy, threads);
    PseudoThreshold th = pseudo_threshold(points, kind);

    json cfg = config_json("threshold", {{"model", to_string(model)},
                                         {"p_list", p_values},
                                         {"trials", trials},
                                         {"seed", seed},
                                         {"repeat_policy", to_string(policy)},
                                         {"kind", to_string(kind)},
                                         {"n", bundle.code.n}});
    std::ostringstream csv;
    csv << stamp(cfg) << kRatesCsvHeader << "\n";
    for (const auto& pt : points) {
        NoiseConfig noise{model, pt.p, 0, 0, 0, true};
        csv << rates_csv_row(model, noise.applied(), pt.estimate, seed) << "\n";
    }

    json summary;
    summary["kind"] = to_string(kind);
    summary["p_star"] = th.value ? json(*th.value) : json(nullptr);
    summary["bracket"] =
        th.bracket ? json({th.bracket->first, th.bracket->second}) : json(nullptr);
    summary["none_reason"] = th.none_reason ? json(to_string(*th.none_reason)) : json(nullptr);
    summary["skipped_zero_rate_points"] = th.skipped_zero_rate_points;
    summary["config_hash"] = hex64(fnv1a64(cfg.dump()));

    if (!out_prefix.empty()) {
        write_file(out_prefix + ".csv", csv.str());
        write_file(out_prefix + "_threshold.json", summary.dump(1) + "\n");
        if (emit_plot_script) {
            std::ostringstream plot;
            plot << "# gnuplot script: plot the sweep written alongside this file\n"
                 << "set logscale xy\n"
                 << "set xlabel 'physical error rate'\n"
                 << "set ylabel 'error rate'\n"
                 << "set datafile separator ','\n"
                 << "plot '" << out_prefix << ".csv' every ::2 using 2:11 with linespoints"
                 << " title 'total', \\\n"
                 << "     '" << out_prefix << ".csv' every ::2 using 2:12 with linespoints"
                 << " title 'logical', x title 'p'\n";
            write_file(out_prefix + ".gnuplot", plot.str());
        }
    } else {
        std::cout << csv.str();
    }
    std::cout << summary.dump(1) << "\n";
    return 0;
}

int cmd_fault_check(const CodeBundle& bundle, NoiseModel model, const std::string& out_path) {
    LookupTable table = build_lookup(bundle.code, bundle.orderings, bundle.overlay);
    ExtractionCircuit circuit = build_circuit(bundle.code, bundle.orderings);
    auto report = exhaustive_single_fault_check(bundle.code, circuit, table, model);

    std::ostringstream csv;
    csv << "location,kind,pauli,residual_class\n";
    for (const auto& row : report.rows) {
        std::string pauli;
        pauli += row.fault.pauli_ancilla;
        pauli += row.fault.pauli_data;
        csv << 'g' << row.fault.block + 1 << ":gate" << row.fault.gate + 1 << ','
            << to_string(row.fault.kind) << ',' << pauli << ',' << to_string(row.residual) << "\n";
    }
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else
        std::cout << csv.str();
    std::cout << "faults checked: " << report.faults_checked
              << ", logical failures: " << report.failures.size() << "\n";
    return report.failures.empty() ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bare-ancilla [[n,1,3]] graph-code toolkit"};
    app.require_subcommand(1);

    std::string data_dir;
    app.add_option("--data-dir", data_dir, "fixture data directory (default: built-in)");

    std::string graph_path, code_spec, out_path;
    int generator = 1;
    size_t limit = 0;
    std::string model_name = "depolarizing", policy_name = "if-nonzero", kind_name = "logical";
    double p = 0.0;
    std::vector<double> p_list;
    uint64_t trials = 10000, seed = 1;
    int threads = 1;
    bool emit_plot = false;
    int verify_n = 6;

    auto* build = app.add_subcommand("build-code", "encode a graph file into a code");
    build->add_option("--graph", graph_path, "graph JSON file")->required();
    build->add_option("--out", out_path, "output code JSON");

    auto* search = app.add_subcommand("search-orderings", "enumerate valid gate orderings");
    search->add_option("--code", code_spec, "bundled size 6..10 or code JSON path")->required();
    search->add_option("--generator", generator, "1-based generator index")->required();
    search->add_option("--limit", limit, "stop after this many orderings (0 = all)");
    search->add_option("--out", out_path, "output JSON path");

    auto* lut = app.add_subcommand("build-lut", "build and export the lookup table");
    lut->add_option("--code", code_spec)->required();
    lut->add_option("--out", out_path, "output CSV path");

    auto* verify = app.add_subcommand("verify-tables", "diff regenerated tables against goldens");
    verify->add_option("--code", verify_n, "bundled code size 6..10")->required();

    auto* sim = app.add_subcommand("simulate", "Monte Carlo error-rate estimation");
    sim->add_option("--code", code_spec)->required();
    sim->add_option("--model", model_name)->check(CLI::IsMember({"depolarizing", "anisotropic"}));
    sim->add_option("--p", p, "physical rate (applied to every channel)")->required();
    sim->add_option("--trials", trials);
    sim->add_option("--seed", seed);
    sim->add_option("--repeat-policy", policy_name)
        ->check(CLI::IsMember({"if-nonzero", "always", "agreement"}));
    sim->add_option("--threads", threads);
    sim->add_option("--out", out_path, "output CSV path");

    auto* thr = app.add_subcommand("threshold", "sweep physical rates and locate the crossing");
    thr->add_option("--code", code_spec)->required();
    thr->add_option("--model", model_name)->check(CLI::IsMember({"depolarizing", "anisotropic"}));
    thr->add_option("--p-list", p_list, "physical rates")->required()->delimiter(',');
    thr->add_option("--trials", trials);
    thr->add_option("--seed", seed);
    thr->add_option("--repeat-policy", policy_name)
        ->check(CLI::IsMember({"if-nonzero", "always", "agreement"}));
    thr->add_option("--threads", threads);
    thr->add_option("--kind", kind_name)->check(CLI::IsMember({"logical", "total"}));
    thr->add_option("--out", out_path, "output path prefix");
    thr->add_flag("--emit-plot-script", emit_plot, "also write a gnuplot script");

    auto* hooks = app.add_subcommand("hook-table", "export a bundled ordering's hook table");
    hooks->add_option("--code", code_spec)->required();
    hooks->add_option("--generator", generator, "1-based generator index")->required();
    hooks->add_option("--out", out_path, "output CSV path");

    auto* fault = app.add_subcommand("fault-check", "exhaustive single-fault enumeration");
    fault->add_option("--code", code_spec)->required();
    fault->add_option("--model", model_name)->check(CLI::IsMember({"depolarizing", "anisotropic"}));
    fault->add_option("--out", out_path, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build_code(graph_path, out_path);
        if (verify->parsed()) return cmd_verify_tables(verify_n, data_dir);

        CodeBundle bundle = resolve_code(code_spec, data_dir);
        if (search->parsed()) return cmd_search_orderings(bundle, generator, limit, out_path);
        if (lut->parsed()) return cmd_build_lut(bundle, code_spec, out_path);
        if (hooks->parsed()) return cmd_hook_table(bundle, generator, out_path);
        NoiseModel model = noise_model_from_string(model_name);
        RepeatPolicy policy = repeat_policy_from_string(policy_name);
        if (sim->parsed())
            return cmd_simulate(bundle, model, p, trials, seed, policy, threads, out_path);
        if (thr->parsed()) {
            CrossingKind kind =
                kind_name == "logical" ? CrossingKind::logical : CrossingKind::total;
            return cmd_threshold(bundle, model, p_list, trials, seed, policy, threads, kind,
                                 out_path, emit_plot);
        }
        if (fault->parsed()) return cmd_fault_check(bundle, model, out_path);
    } catch (const EncodingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
