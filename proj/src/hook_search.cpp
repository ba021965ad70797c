#include "bare/hook_search.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bare {

HxyzMatrix::HxyzMatrix(const BareCode& code)
    : n_(code.n), m_(code.group.num_generators()), cols_(static_cast<size_t>(code.n) * 3) {
    for (int q = 0; q < n_; ++q) {
        const char paulis[3] = {'Z', 'X', 'Y'};
        for (int pi = 0; pi < 3; ++pi)
            cols_[static_cast<size_t>(q) * 3 + pi] =
                code.group.syndrome_of(PauliString::single(n_, q, paulis[pi]));
    }
}

Syndrome HxyzMatrix::column(int qubit, char pauli) const {
    if (qubit < 0 || qubit >= n_) throw std::out_of_range("qubit index out of range");
    int pi;
    switch (pauli) {
        case 'Z': pi = 0; break;
        case 'X': pi = 1; break;
        case 'Y': pi = 2; break;
        default: throw std::invalid_argument("bad Pauli character");
    }
    return cols_[static_cast<size_t>(qubit) * 3 + pi];
}

HxyzMatrix build_hxyz(const BareCode& code) { return HxyzMatrix(code); }

StabilizerOrdering StabilizerOrdering::listed_order(const BareCode& code, int generator_index) {
    const PauliString& g = code.group.generator(generator_index);
    StabilizerOrdering ord{generator_index, {}};
    for (int q = 0; q < g.num_qubits(); ++q) {
        char p = g.pauli_at(q);
        if (p != 'I') ord.gates.push_back({q, p});
    }
    return ord;
}

namespace {

void check_is_support_permutation(const BareCode& code, const StabilizerOrdering& ord) {
    auto listed = StabilizerOrdering::listed_order(code, ord.generator_index).gates;
    auto perm = ord.gates;
    auto key = [](const OrderedGate& g) { return std::pair{g.qubit, g.pauli}; };
    std::sort(perm.begin(), perm.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    if (perm != listed)
        throw std::invalid_argument("ordering is not a permutation of the generator's support");
}

// Appends the i-th step's entries; returns false on a zero or duplicate
// syndrome, leaving the offending entry in *offending when provided.
bool hook_step(const StabilizerOrdering& ord, const HxyzMatrix& hxyz,
               int i, int w, Syndrome& c, PauliString& prefix, std::set<uint32_t>& seen,
               HookTable* table, HookEntry* offending) {
    auto [q, p_orig] = ord.gates[static_cast<size_t>(i - 1)];
    for (char p : {'X', 'Y', 'Z'}) {
        if ((w == 3 || i == w - 1) && p == p_orig) continue;
        Syndrome cp = c ^ hxyz.column(q, p);
        PauliString err = prefix;
        err.set_pauli(q, p);
        HookEntry entry{std::move(err), cp, i, p, p == p_orig};
        if (cp.zero() || !seen.insert(cp.bits).second) {
            if (offending) *offending = std::move(entry);
            return false;
        }
        if (table) {
            if (entry.original) table->originals.push_back(entry);
            table->entries.push_back(std::move(entry));
        }
    }
    c = c ^ hxyz.column(q, p_orig);
    prefix.set_pauli(q, p_orig);
    return true;
}

}  // namespace

HookTable enumerate_prefix_syndromes(const BareCode& code, const StabilizerOrdering& ord) {
    check_is_support_permutation(code, ord);
    int w = static_cast<int>(ord.gates.size());
    if (w <= 2) throw std::invalid_argument("ordering enumeration needs weight > 2");
    HxyzMatrix hxyz(code);
    HookTable table;
    Syndrome c = hxyz.column(ord.gates[0].qubit, ord.gates[0].pauli);
    PauliString prefix = PauliString::single(code.n, ord.gates[0].qubit, ord.gates[0].pauli);
    std::set<uint32_t> seen;
    HookEntry offending{PauliString(), {}, 0, 'I', false};
    for (int i = 2; i <= w - 1; ++i) {
        if (!hook_step(ord, hxyz, i, w, c, prefix, seen, &table, &offending)) {
            throw OrderingInvalidError(
                offending.syndrome.zero() ? "ordering produces a zero hook syndrome"
                                          : "ordering produces a duplicate hook syndrome",
                offending.error, offending.syndrome);
        }
    }
    return table;
}

bool is_valid_ordering(const BareCode& code, const StabilizerOrdering& ord) {
    try {
        enumerate_prefix_syndromes(code, ord);
        return true;
    } catch (const OrderingInvalidError&) {
        return false;
    }
}

std::vector<StabilizerOrdering> search_orderings(const BareCode& code, int generator_index,
                                                 size_t limit) {
    auto support = StabilizerOrdering::listed_order(code, generator_index).gates;
    int w = static_cast<int>(support.size());
    if (w <= 2)
        throw std::invalid_argument("weight-2 generators need no reordering");

    HxyzMatrix hxyz(code);
    std::vector<StabilizerOrdering> results;
    std::vector<int> chosen;  // indices into support, lexicographic enumeration
    std::vector<bool> used(support.size(), false);
    StabilizerOrdering current{generator_index, {}};

    // Depth-first over position sequences in increasing index order, pruning
    // a subtree as soon as the partial prefix already violates the zero or
    // duplicate rule. Prefix validity is monotone: every completed step's
    // entries stay fixed as the permutation is extended.
    struct Frame {
        Syndrome c;
        PauliString prefix;
        std::set<uint32_t> seen;
    };

    auto extend = [&](auto&& self, const Frame& frame) -> bool {
        int depth = static_cast<int>(current.gates.size());
        if (depth == w) {
            results.push_back(current);
            return limit == 0 || results.size() < limit;
        }
        for (int idx = 0; idx < w; ++idx) {
            if (used[idx]) continue;
            used[idx] = true;
            current.gates.push_back(support[static_cast<size_t>(idx)]);
            bool keep_going = true;
            if (depth == 0) {
                Frame next{hxyz.column(support[idx].qubit, support[idx].pauli),
                           PauliString::single(code.n, support[idx].qubit, support[idx].pauli),
                           {}};
                keep_going = self(self, next);
            } else {
                int i = depth + 1;  // 1-based position just placed
                Frame next = frame;
                bool ok = true;
                if (i >= 2 && i <= w - 1)
                    ok = hook_step(current, hxyz, i, w, next.c, next.prefix, next.seen,
                                   nullptr, nullptr);
                if (ok) keep_going = self(self, next);
            }
            current.gates.pop_back();
            used[idx] = false;
            if (!keep_going) return false;
        }
        return true;
    };
    extend(extend, Frame{});
    return results;
}

std::vector<StabilizerOrdering> choose_orderings(const BareCode& code) {
    HxyzMatrix hxyz(code);
    // Syndrome -> representative error among the already assigned ones.
    std::map<uint32_t, PauliString> assigned;
    for (char p : {'Z', 'X', 'Y'})
        for (int q = 0; q < code.n; ++q) {
            Syndrome s = hxyz.column(q, p);
            if (!s.zero()) assigned.emplace(s.bits, PauliString::single(code.n, q, p));
        }

    std::vector<StabilizerOrdering> chosen;
    for (int gi = 0; gi < code.group.num_generators(); ++gi) {
        if (code.group.generator(gi).weight() <= 2) continue;
        const StabilizerOrdering* accepted = nullptr;
        auto candidates = search_orderings(code, gi);
        std::vector<HookEntry> hooks;
        for (const auto& candidate : candidates) {
            hooks = enumerate_prefix_syndromes(code, candidate).originals;
            bool ok = true;
            for (const auto& hook : hooks) {
                auto it = assigned.find(hook.syndrome.bits);
                if (it != assigned.end() && !code.group.contains(hook.error * it->second)) {
                    ok = false;
                    break;
                }
            }
            if (ok) { accepted = &candidate; break; }
        }
        if (accepted == nullptr)
            throw std::runtime_error("no admissible ordering for generator " +
                                     std::to_string(gi + 1));
        for (const auto& hook : hooks) assigned.emplace(hook.syndrome.bits, hook.error);
        chosen.push_back(*accepted);
    }
    return chosen;
}

std::string hook_table_to_csv(const HookTable& table) {
    std::string out = "error,syndrome,set\n";
    for (const auto& e : table.entries) {
        out += e.error.str() + ',' + e.syndrome.str() + ',';
        out += e.original ? "mu_o" : "mu_a";
        out += '\n';
    }
    return out;
}

FaultBudget compute_budget(const BareCode& code) {
    HxyzMatrix hxyz(code);
    std::set<uint32_t> distinct;
    for (int q = 0; q < code.n; ++q)
        for (char p : {'Z', 'X', 'Y'}) {
            Syndrome s = hxyz.column(q, p);
            if (!s.zero()) distinct.insert(s.bits);
        }
    FaultBudget b;
    b.kappa = static_cast<int>(distinct.size());
    b.s_u = (1 << code.group.num_generators()) - 1 - b.kappa;
    for (const auto& g : code.generators()) {
        int w = g.weight();
        if (w > 3) b.ancilla_hook_bound += w - 3;
        if (w >= 3) b.gate_hook_bound += 3 * (w - 2);
    }
    b.ancilla_budget_ok = b.s_u >= b.ancilla_hook_bound;
    b.gate_budget_ok = b.s_u >= b.gate_hook_bound;
    return b;
}

}  // namespace bare
