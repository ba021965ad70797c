#pragma once

#include <stdexcept>
#include <vector>

#include "bare/graph_code.hpp"

namespace bare {

/*
 * Modified parity-check matrix [H_x | H_z | H_x ^ H_z]: column (q, P) is the
 * syndrome of the single-qubit error P at qubit q (Z errors from the H_x
 * block, X errors from H_z, Y errors from the XOR block).
 */
class HxyzMatrix {
  public:
    HxyzMatrix() = default;
    explicit HxyzMatrix(const BareCode& code);

    int n() const { return n_; }
    int m() const { return m_; }
    Syndrome column(int qubit, char pauli) const;

  private:
    int n_ = 0, m_ = 0;
    std::vector<Syndrome> cols_;  // indexed qubit * 3 + {Z,X,Y}
};

HxyzMatrix build_hxyz(const BareCode& code);

struct OrderedGate {
    int qubit;
    char pauli;
    bool operator==(const OrderedGate&) const = default;
};

// Left-to-right order of the ancilla-controlled Pauli gates measuring one
// generator; a rearrangement of exactly the generator's support.
struct StabilizerOrdering {
    int generator_index = 0;
    std::vector<OrderedGate> gates;

    static StabilizerOrdering listed_order(const BareCode& code, int generator_index);
    bool operator==(const StabilizerOrdering&) const = default;
};

struct HookEntry {
    PauliString error;    // prefix-form variant error
    Syndrome syndrome;
    int position;         // 1-based gate position i of the substitution
    char substituted;     // the Pauli placed at that position
    bool original;        // substituted == the ordering's own Pauli there
};

// originals: original stabilizer subsequences; entries: all variants (superset).
struct HookTable {
    std::vector<HookEntry> originals, entries;
};

// Zero or duplicate syndrome inside one ordering: the ordering is discarded.
class OrderingInvalidError : public std::runtime_error {
  public:
    OrderingInvalidError(std::string what, PauliString error, Syndrome syndrome)
        : std::runtime_error(std::move(what)), error(std::move(error)), syndrome(syndrome) {}
    PauliString error;
    Syndrome syndrome;
};

/*
 * Prefix-syndrome enumeration for one ordering: for i = 2..w-1 and each
 * P in {X,Y,Z}, the variant error is the original prefix of length i-1
 * times P at position i's qubit. The case i = w-1 with P original is
 * skipped (it equals a single-qubit error times the full generator, which
 * part 1 already covers); for w = 3 every original case is skipped.
 * Throws OrderingInvalidError on a zero or repeated syndrome.
 */
HookTable enumerate_prefix_syndromes(const BareCode& code, const StabilizerOrdering& ord);

bool is_valid_ordering(const BareCode& code, const StabilizerOrdering& ord);

/*
 * All (or the first `limit`, when limit > 0) valid permutations of the
 * generator's support, in lexicographic order of position sequences.
 * Backtracks on the first invalid prefix. Requires weight > 2.
 */
std::vector<StabilizerOrdering> search_orderings(const BareCode& code, int generator_index,
                                                 size_t limit = 0);

/*
 * One ordering per weight > 2 generator, chosen greedily in lexicographic
 * order under the conditions the lookup build enforces for pure hooks: no
 * original-subsequence syndrome may collide inequivalently with a
 * single-qubit syndrome or with an already chosen generator's hook. An
 * ordering that is merely valid in isolation can still strand a hook on a
 * syndrome owned by an inequivalent error, which would turn a single
 * ancilla fault into a logical error. Throws when a generator has no
 * admissible ordering left.
 */
std::vector<StabilizerOrdering> choose_orderings(const BareCode& code);

// CSV export, one row per entry: error,syndrome,set (set is mu_o or mu_a).
std::string hook_table_to_csv(const HookTable& table);

struct FaultBudget {
    int kappa = 0;               // distinct nonzero single-qubit syndromes
    int s_u = 0;                 // 2^(n-k) - 1 - kappa
    int ancilla_hook_bound = 0;  // sum over w_g > 3 of (w_g - 3)
    int gate_hook_bound = 0;     // sum over w_g >= 3 of 3 (w_g - 2)
    bool ancilla_budget_ok = false;  // s_u >= ancilla_hook_bound: lookup decoding can
    bool gate_budget_ok = false;     // absorb ancilla-only / two-qubit gate hooks
};

FaultBudget compute_budget(const BareCode& code);

}  // namespace bare
