#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bare/stabilizer.hpp"

namespace bare {

/*
 * Graph-message state: n_cluster graph qubits plus n_message message qubits
 * entangled into one cluster. Node indices are dense and 0-based with the
 * message qubits occupying the top n_message indices.
 */
struct GraphMessageState {
    int n_cluster = 0;
    int n_message = 0;
    std::vector<std::pair<int, int>> edges;  // unordered pairs, stored sorted

    int num_nodes() const { return n_cluster + n_message; }
    bool is_message(int node) const { return node >= n_cluster; }
    std::vector<int> neighbors(int node) const;
    int degree(int node) const;

    // No self-loops, no duplicate edges, indices in range, every message
    // qubit connected. Throws std::invalid_argument on violation.
    void validate() const;

    static GraphMessageState make(int n_cluster, int n_message,
                                  std::vector<std::pair<int, int>> edges);
};

struct EncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * An [[n,1,3]]-family code: stabilizer group, logical pair, source graph.
 * k = 0 marks a degenerate (no-logical) code from an all-cluster graph.
 */
struct BareCode {
    int n = 0;
    int k = 0;
    StabilizerGroup group;
    PauliString logical_x, logical_z;
    GraphMessageState source_graph;

    const std::vector<PauliString>& generators() const { return group.generators(); }
};

// Validates the full BareCode contract (commutation, logical pair, logicals
// outside the group) and assembles the value.
BareCode make_bare_code(std::vector<PauliString> generators, PauliString logical_x,
                        PauliString logical_z, GraphMessageState source_graph);

// Rows X_j prod_{i in N(j)} Z_i for each cluster qubit j, over all
// n_cluster + n_message qubits: the [I : 0 | A_cc : A_cm] block form.
CheckMatrix build_premeasurement_check(const GraphMessageState& g);

/*
 * Encoding by X-measurement of the message qubits, as parity-check matrix
 * surgery: per message qubit (highest index first) pick the first row with
 * a 1 in its H_z column, add that pivot row to every other such row, then
 * delete the pivot row and the qubit's column pair. The logical Z is read
 * off the pre-elimination message column, the logical X off the pivot row
 * restricted to the surviving qubits.
 */
BareCode encode_by_measurement(const CheckMatrix& pre, int k, GraphMessageState source_graph = {});

// Smallest weight w <= w_max of a Pauli commuting with every generator but
// lying outside the group; nullopt means "> w_max" (and always for k = 0).
std::optional<int> compute_distance(const BareCode& code, int w_max);

// True iff every message node has degree >= d.
bool message_degree_check(const GraphMessageState& g, int d);

}  // namespace bare
