#include "bare/fixtures.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "bare/io_util.hpp"

#ifndef BARE_DATA_DIR
#define BARE_DATA_DIR "data"
#endif

namespace bare {

using nlohmann::json;

std::vector<LookupEntry> Fixture::overlay() const {
    std::vector<LookupEntry> out = manual_overlay;
    out.insert(out.end(), left_alone_overlay.begin(), left_alone_overlay.end());
    return out;
}

LookupTable Fixture::build_table() const { return build_lookup(code, orderings, overlay()); }

std::string default_data_dir() { return BARE_DATA_DIR; }

namespace {

GraphMessageState graph_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return GraphMessageState::make(j.at("n_cluster").get<int>(), j.at("n_message").get<int>(),
                                   std::move(edges));
}

json graph_to_json(const GraphMessageState& g) {
    json j;
    j["n_cluster"] = g.n_cluster;
    j["n_message"] = g.n_message;
    auto& edges = j["edges"] = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return j;
}

std::vector<StabilizerOrdering> orderings_from_json(const json& j) {
    std::vector<StabilizerOrdering> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        StabilizerOrdering ord;
        ord.generator_index = std::stoi(it.key()) - 1;
        for (const auto& gate : it.value().at("reordered"))
            ord.gates.push_back({gate.at(0).get<int>(), gate.at(1).get<std::string>().at(0)});
        out.push_back(std::move(ord));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.generator_index < b.generator_index; });
    return out;
}

std::vector<LookupEntry> entries_from_json(const json& j, int m, LookupSource source) {
    std::vector<LookupEntry> out;
    for (const auto& e : j) {
        Syndrome s = Syndrome::parse(e.at("syndrome").get<std::string>());
        if (s.m != m) throw std::invalid_argument("fixture syndrome length mismatch");
        out.push_back({s, PauliString::parse(e.at("correction").get<std::string>()), source, -1});
    }
    return out;
}

std::vector<GoldenRow> golden_from_json(const json& j, int m) {
    std::vector<GoldenRow> out;
    for (const auto& e : j) {
        Syndrome s = Syndrome::parse(e.at("syndrome").get<std::string>());
        if (s.m != m) throw std::invalid_argument("fixture syndrome length mismatch");
        out.push_back({PauliString::parse(e.at("error").get<std::string>()), s});
    }
    return out;
}

}  // namespace

GraphMessageState load_graph_file(const std::string& path) {
    return graph_from_json(json::parse(read_file(path)));
}

void write_graph_file(const std::string& path, const GraphMessageState& g) {
    write_file(path, graph_to_json(g).dump(1) + "\n");
}

Fixture load_fixture_file(const std::string& path) {
    json j = json::parse(read_file(path));
    Fixture fx;
    fx.name = j.at("name").get<std::string>();

    std::vector<PauliString> gens;
    for (const auto& g : j.at("generators")) gens.push_back(PauliString::parse(g.get<std::string>()));
    fx.code = make_bare_code(std::move(gens), PauliString::parse(j.at("logical_x").get<std::string>()),
                             PauliString::parse(j.at("logical_z").get<std::string>()),
                             graph_from_json(j.at("graph")));
    int m = fx.code.group.num_generators();

    fx.orderings = orderings_from_json(j.at("orderings"));
    fx.manual_overlay = entries_from_json(j.at("manual_lookup"), m, LookupSource::manual);
    fx.left_alone_overlay = entries_from_json(j.at("left_alone"), m, LookupSource::min_weight);
    fx.golden_single = golden_from_json(j.at("golden").at("single_qubit"), m);
    for (auto it = j.at("golden").at("propagated").begin(); it != j.at("golden").at("propagated").end();
         ++it)
        fx.golden_propagated[std::stoi(it.key())] = golden_from_json(it.value(), m);
    if (j.contains("hook_classification")) {
        for (const auto& e : j.at("hook_classification"))
            fx.hook_marks.push_back({e.at("generator").get<int>(),
                                     PauliString::parse(e.at("error").get<std::string>()),
                                     Syndrome::parse(e.at("syndrome").get<std::string>()),
                                     e.at("mark").get<std::string>()});
    }
    for (const auto& note : j.at("notes")) fx.notes.push_back(note.get<std::string>());
    return fx;
}

Fixture load_fixture(int n, const std::string& data_dir) {
    std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    return load_fixture_file(dir + "/fixtures/bare_n" + std::to_string(n) + ".json");
}

std::vector<int> bundled_code_sizes() { return {6, 7, 8, 9, 10}; }

std::string code_to_json(const BareCode& code, const std::vector<StabilizerOrdering>& orderings,
                         const std::vector<LookupEntry>& manual_overlay) {
    json j;
    j["n"] = code.n;
    auto& gens = j["generators"] = json::array();
    for (const auto& g : code.generators()) gens.push_back(g.str());
    j["logical_x"] = code.logical_x.num_qubits() ? code.logical_x.str() : "";
    j["logical_z"] = code.logical_z.num_qubits() ? code.logical_z.str() : "";
    auto& ords = j["orderings"] = json::object();
    for (const auto& ord : orderings) {
        json entry;
        entry["original"] = code.group.generator(ord.generator_index).str();
        auto& reordered = entry["reordered"] = json::array();
        for (const auto& gate : ord.gates) reordered.push_back({gate.qubit, std::string(1, gate.pauli)});
        ords[std::to_string(ord.generator_index + 1)] = std::move(entry);
    }
    auto& manual = j["manual_lookup"] = json::array();
    for (const auto& e : manual_overlay)
        manual.push_back({{"syndrome", e.syndrome.str()}, {"correction", e.correction.str()}});
    if (code.source_graph.n_cluster > 0) j["graph"] = graph_to_json(code.source_graph);
    return j.dump(1) + "\n";
}

BareCode code_from_json_text(const std::string& text) {
    json j = json::parse(text);
    std::vector<PauliString> gens;
    for (const auto& g : j.at("generators")) gens.push_back(PauliString::parse(g.get<std::string>()));
    std::string lx = j.at("logical_x").get<std::string>();
    std::string lz = j.at("logical_z").get<std::string>();
    GraphMessageState graph;
    if (j.contains("graph")) graph = graph_from_json(j.at("graph"));
    return make_bare_code(std::move(gens), PauliString::parse(lx), PauliString::parse(lz),
                          std::move(graph));
}

std::map<std::string, std::string> load_checksums(const std::string& data_dir) {
    std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    json j = json::parse(read_file(dir + "/fixtures/checksums.json"));
    std::map<std::string, std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value().get<std::string>();
    return out;
}

GoldenVerifyResult verify_golden_tables(const Fixture& fx) {
    const BareCode& code = fx.code;
    int m = code.group.num_generators();
    GoldenVerifyResult result;
    auto mismatch = [&](const std::string& table, const std::string& what) {
        result.mismatches.push_back(table + ": " + what);
    };

    // Single-qubit table: bit-exact, Z block then X then Y.
    HxyzMatrix hxyz(code);
    std::vector<GoldenRow> regen_single;
    for (char p : {'Z', 'X', 'Y'})
        for (int q = 0; q < code.n; ++q)
            regen_single.push_back({PauliString::single(code.n, q, p), hxyz.column(q, p)});
    result.single_rows = static_cast<int>(regen_single.size());
    if (regen_single.size() != fx.golden_single.size()) mismatch("single", "row count");
    for (size_t i = 0; i < std::min(regen_single.size(), fx.golden_single.size()); ++i) {
        if (regen_single[i].error != fx.golden_single[i].error ||
            regen_single[i].syndrome != fx.golden_single[i].syndrome)
            mismatch("single", fx.golden_single[i].error.str() + " expected " +
                                   fx.golden_single[i].syndrome.str() + " got " +
                                   regen_single[i].syndrome.str());
    }

    // Propagated tables: per ordering, the same syndrome multiset; each
    // fixture row must be syndrome-consistent and class-equivalent to the
    // regenerated entry.
    std::set<uint32_t> part2;
    for (const auto& ord : fx.orderings) {
        HookTable hooks = enumerate_prefix_syndromes(code, ord);
        for (const auto& e : hooks.entries) part2.insert(e.syndrome.bits);
        std::string column = "propagated g" + std::to_string(ord.generator_index + 1);
        auto it = fx.golden_propagated.find(ord.generator_index + 1);
        if (it == fx.golden_propagated.end()) {
            mismatch(column, "missing golden column");
            continue;
        }
        ++result.propagated_columns;
        std::vector<GoldenRow> want = it->second;
        std::vector<HookEntry> got = hooks.entries;
        auto by_syndrome = [](const auto& a, const auto& b) { return a.syndrome < b.syndrome; };
        std::sort(want.begin(), want.end(), by_syndrome);
        std::sort(got.begin(), got.end(), by_syndrome);
        if (want.size() != got.size()) mismatch(column, "row count");
        for (size_t i = 0; i < std::min(want.size(), got.size()); ++i) {
            if (want[i].syndrome != got[i].syndrome) {
                mismatch(column,
                         "syndrome " + want[i].syndrome.str() + " vs " + got[i].syndrome.str());
            } else if (code.group.syndrome_of(want[i].error) != want[i].syndrome) {
                mismatch(column, "row " + want[i].error.str() + " inconsistent");
            } else if (!code.group.contains(want[i].error * got[i].error)) {
                mismatch(column, "row " + want[i].error.str() + " not equivalent to regenerated " +
                                     got[i].error.str());
            }
        }
    }

    // Left-alone table: exact syndrome-set reproduction plus per-row
    // consistency and weight minimality.
    std::set<uint32_t> part1;
    for (char p : {'Z', 'X', 'Y'})
        for (int q = 0; q < code.n; ++q) {
            Syndrome s = hxyz.column(q, p);
            if (!s.zero()) part1.insert(s.bits);
        }
    std::set<uint32_t> remaining;
    for (uint32_t v = 1; v < (uint32_t{1} << m); ++v)
        if (!part1.count(v) && !part2.count(v)) remaining.insert(v);
    if (!fx.left_alone_overlay.empty()) {
        result.left_alone_rows = static_cast<int>(fx.left_alone_overlay.size());
        std::set<uint32_t> fixture_set;
        for (const auto& e : fx.left_alone_overlay) fixture_set.insert(e.syndrome.bits);
        if (fixture_set != remaining)
            mismatch("left-alone", "syndrome set mismatch (fixture " +
                                       std::to_string(fixture_set.size()) + ", regenerated " +
                                       std::to_string(remaining.size()) + ")");
        for (const auto& e : fx.left_alone_overlay) {
            if (code.group.syndrome_of(e.correction) != e.syndrome)
                mismatch("left-alone",
                         "row " + e.correction.str() + " inconsistent with " + e.syndrome.str());
            else if (min_weight_completion(code, e.syndrome).weight() != e.correction.weight())
                mismatch("left-alone", "row " + e.correction.str() + " not minimum weight for " +
                                           e.syndrome.str());
        }
    }
    return result;
}

}  // namespace bare
