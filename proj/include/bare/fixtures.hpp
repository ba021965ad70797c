#pragma once

#include <map>
#include <string>
#include <vector>

#include "bare/decoder.hpp"

namespace bare {

struct GoldenRow {
    PauliString error;
    Syndrome syndrome;
};

struct HookMark {
    int generator = 0;  // 1-based, as printed
    PauliString error;
    Syndrome syndrome;
    std::string mark;  // yellow | red | black
};

/*
 * One bundled code: the source graph, transcribed generators and logicals,
 * chosen orderings, lookup overlay (manual hook entries plus the published
 * left-alone assignments), golden syndrome tables, and transcription notes.
 */
struct Fixture {
    std::string name;
    BareCode code;
    std::vector<StabilizerOrdering> orderings;          // weight > 2 generators only
    std::vector<LookupEntry> manual_overlay;            // source = manual
    std::vector<LookupEntry> left_alone_overlay;        // source = min_weight
    std::vector<GoldenRow> golden_single;               // Z block, X block, Y block
    std::map<int, std::vector<GoldenRow>> golden_propagated;  // keyed by 1-based generator
    std::vector<HookMark> hook_marks;                   // [[6,1,3]] only
    std::vector<std::string> notes;

    std::vector<LookupEntry> overlay() const;           // manual + left-alone
    LookupTable build_table() const;
};

// Data directory resolution: explicit path, else the compiled-in source path.
std::string default_data_dir();

GraphMessageState load_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const GraphMessageState& g);

Fixture load_fixture_file(const std::string& path);
Fixture load_fixture(int n, const std::string& data_dir = "");
std::vector<int> bundled_code_sizes();  // {6,7,8,9,10}

// Code fixture JSON (External Interfaces shape); graph optional on read.
std::string code_to_json(const BareCode& code, const std::vector<StabilizerOrdering>& orderings,
                         const std::vector<LookupEntry>& manual_overlay);
BareCode code_from_json_text(const std::string& text);

// Fixture files are locked by checksum; regeneration differences are test
// failures, not auto-updates.
std::map<std::string, std::string> load_checksums(const std::string& data_dir);

struct GoldenVerifyResult {
    std::vector<std::string> mismatches;
    int single_rows = 0;
    int propagated_columns = 0;
    int left_alone_rows = 0;
    bool clean() const { return mismatches.empty(); }
};

/*
 * Regenerates the three golden table kinds from scratch and diffs them
 * against the fixture transcription:
 *   single-qubit rows bit-exact in block order;
 *   propagated rows syndrome-exact with operator equivalence modulo the
 *   stabilizer group (printed rows mix prefix, suffix and degenerate forms);
 *   the left-alone syndrome set exactly equal to the complement of parts
 *   1-2, each row syndrome-consistent and of verified minimal weight.
 */
GoldenVerifyResult verify_golden_tables(const Fixture& fx);

}  // namespace bare
