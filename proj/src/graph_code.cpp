#include "bare/graph_code.hpp"

#include <algorithm>
#include <set>

namespace bare {

std::vector<int> GraphMessageState::neighbors(int node) const {
    std::vector<int> out;
    for (auto [u, v] : edges) {
        if (u == node) out.push_back(v);
        if (v == node) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int GraphMessageState::degree(int node) const { return static_cast<int>(neighbors(node).size()); }

void GraphMessageState::validate() const {
    if (n_cluster <= 0 || n_message < 0) throw std::invalid_argument("bad graph dimensions");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop in graph");
        if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes())
            throw std::invalid_argument("edge index out of range");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge in graph");
    }
    for (int mq = n_cluster; mq < num_nodes(); ++mq)
        if (degree(mq) < 1) throw std::invalid_argument("disconnected message qubit: no pivot available for encoding");
}

GraphMessageState GraphMessageState::make(int n_cluster, int n_message,
                                          std::vector<std::pair<int, int>> edges) {
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    GraphMessageState g{n_cluster, n_message, std::move(edges)};
    g.validate();
    return g;
}

BareCode make_bare_code(std::vector<PauliString> generators, PauliString logical_x,
                        PauliString logical_z, GraphMessageState source_graph) {
    BareCode code;
    code.group = StabilizerGroup(std::move(generators));
    code.n = code.group.num_qubits();
    code.k = logical_x.num_qubits() == 0 ? 0 : 1;
    if (code.k == 1) {
        if (logical_x.num_qubits() != code.n || logical_z.num_qubits() != code.n)
            throw std::invalid_argument("logical operator length mismatch");
        if (symplectic_product(logical_x, logical_z) != 1)
            throw std::invalid_argument("logical pair must anticommute");
        for (const auto& g : code.group.generators()) {
            if (symplectic_product(logical_x, g) || symplectic_product(logical_z, g))
                throw std::invalid_argument("logicals must commute with all generators");
        }
        if (code.group.contains(logical_x) || code.group.contains(logical_z))
            throw std::invalid_argument("logicals must lie outside the stabilizer group");
    }
    code.logical_x = std::move(logical_x);
    code.logical_z = std::move(logical_z);
    code.source_graph = std::move(source_graph);
    return code;
}

CheckMatrix build_premeasurement_check(const GraphMessageState& g) {
    g.validate();
    int total = g.num_nodes();
    std::vector<PauliString> rows;
    rows.reserve(g.n_cluster);
    for (int j = 0; j < g.n_cluster; ++j) {
        PauliString row(total);
        row.set_pauli(j, 'X');
        for (int i : g.neighbors(j)) row.set_pauli(i, 'Z');
        rows.push_back(std::move(row));
    }
    return CheckMatrix::from_rows(rows);
}

BareCode encode_by_measurement(const CheckMatrix& pre, int k, GraphMessageState source_graph) {
    int total = pre.n;
    int n = total - k;
    if (k < 0 || n <= 0) throw std::invalid_argument("bad message count");
    if (k > 1) throw std::invalid_argument("logical extraction implemented for k <= 1");

    std::vector<PauliString> rows;
    for (int i = 0; i < pre.m; ++i) rows.push_back(pre.row(i));

    PauliString logical_x, logical_z;
    if (k == 1) {
        int target = total - 1;  // highest-index message qubit
        int pivot = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].z_bit(target)) { pivot = static_cast<int>(i); break; }
        }
        if (pivot < 0) throw EncodingError("no pivot: message qubit has no Z coupling");

        // Logical Z: every 1 in the message column of H_z marks a Pauli-Z;
        // row index i corresponds to cluster qubit i in the graph form.
        logical_z = PauliString(n);
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].z_bit(target)) logical_z.set_pauli(static_cast<int>(i), 'Z');

        for (size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != pivot && rows[i].z_bit(target)) rows[i].mul_inplace(rows[pivot]);

        // Logical X: the pivot row restricted to the first n qubits.
        logical_x = PauliString(n);
        for (int q = 0; q < n; ++q) logical_x.set_pauli(q, rows[pivot].pauli_at(q));

        rows.erase(rows.begin() + pivot);
    }

    std::vector<PauliString> enc;
    enc.reserve(rows.size());
    for (const auto& r : rows) {
        PauliString p(n);
        for (int q = 0; q < n; ++q) p.set_pauli(q, r.pauli_at(q));
        enc.push_back(std::move(p));
    }
    return make_bare_code(std::move(enc), std::move(logical_x), std::move(logical_z),
                          std::move(source_graph));
}

std::optional<int> compute_distance(const BareCode& code, int w_max) {
    if (w_max > code.n) throw std::invalid_argument("w_max exceeds qubit count");
    if (code.k == 0) return std::nullopt;
    int n = code.n;
    // Weight-ordered enumeration with early exit; at this family's scale
    // (w <= 3, n <= 10) the scan doubles as the distance oracle.
    for (int w = 1; w <= w_max; ++w) {
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        while (true) {
            std::vector<int> pidx(w, 0);
            while (true) {
                PauliString e(n);
                for (int i = 0; i < w; ++i) e.set_pauli(comb[i], "XYZ"[pidx[i]]);
                bool commutes = true;
                for (const auto& g : code.generators()) {
                    if (symplectic_product(g, e)) { commutes = false; break; }
                }
                if (commutes && !code.group.contains(e)) return w;
                int d = w - 1;
                while (d >= 0 && pidx[d] == 2) pidx[d--] = 0;
                if (d < 0) break;
                ++pidx[d];
            }
            int d = w - 1;
            while (d >= 0 && comb[d] == n - w + d) --d;
            if (d < 0) break;
            ++comb[d];
            for (int i = d + 1; i < w; ++i) comb[i] = comb[i - 1] + 1;
        }
    }
    return std::nullopt;
}

bool message_degree_check(const GraphMessageState& g, int d) {
    if (g.n_message < 1) throw std::invalid_argument("no message qubits");
    for (int mq = g.n_cluster; mq < g.num_nodes(); ++mq)
        if (g.degree(mq) < d) return false;
    return true;
}

}  // namespace bare
