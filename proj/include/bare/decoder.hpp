#pragma once

#include <string>
#include <vector>

#include "bare/hook_search.hpp"

namespace bare {

enum class LookupSource { single_qubit, propagated, min_weight, manual };

const char* to_string(LookupSource src);
LookupSource lookup_source_from_string(const std::string& s);

struct LookupEntry {
    Syndrome syndrome;
    PauliString correction;
    LookupSource source = LookupSource::min_weight;
    int generator = -1;  // originating generator for propagated entries
};

// Total map over all 2^m syndromes; the zero syndrome maps to identity.
class LookupTable {
  public:
    LookupTable() = default;
    LookupTable(int n, int m, std::vector<LookupEntry> entries);

    int n() const { return n_; }
    int m() const { return m_; }
    const LookupEntry& entry(const Syndrome& s) const;
    const PauliString& decode(const Syndrome& s) const { return entry(s).correction; }
    const std::vector<LookupEntry>& entries() const { return entries_; }

  private:
    int n_ = 0, m_ = 0;
    std::vector<LookupEntry> entries_;  // dense, indexed by syndrome bits
};

/*
 * Three-part construction plus overlay, precedence
 * overlay > part 1 > part 2 > part 3, first listed wins inside a part:
 *   part 1 - single-qubit syndromes from H_xyz (Z block, then X, then Y);
 *   part 2 - propagated-error syndromes from the chosen orderings, original
 *            subsequences (originals) first across all generators, then the
 *            remaining variants; stored corrections are the prefix errors;
 *   part 3 - every leftover syndrome gets a minimum-weight completion.
 * A originals hook whose syndrome is already taken by an inequivalent entry
 * would break single-ancilla-fault tolerance; that is rejected at build.
 */
LookupTable build_lookup(const BareCode& code, const std::vector<StabilizerOrdering>& orderings,
                         const std::vector<LookupEntry>& overlay = {});

// Minimal-weight Pauli with the given syndrome; ties broken by
// lexicographic order of the text form.
PauliString min_weight_completion(const BareCode& code, const Syndrome& s);

enum class ResidualClass { trivial, x_class, z_class, y_class, non_normalizer };

const char* to_string(ResidualClass c);

/*
 * non_normalizer if r anticommutes with any generator; trivial if r is in
 * the group; otherwise the logical coset keyed by
 * (sp(r, Z_l), sp(r, X_l)): (1,0) X, (0,1) Z, (1,1) Y.
 */
ResidualClass classify_residual(const BareCode& code, const PauliString& r);

struct DegeneracyRow {
    int generator = -1;        // context generator, -1 when not applicable
    PauliString error;
    Syndrome syndrome;
    PauliString correction;    // the stored table correction
    LookupSource source = LookupSource::min_weight;
    ResidualClass residual = ResidualClass::trivial;
    bool safe = false;         // residual == trivial
    bool flagged = false;      // stored entry is not this error's own row
};

/*
 * For each candidate error e: looks up decode(syndrome(e)), classifies the
 * residual e * correction, and computes the ownership flag: an entry is
 * unflagged when the stored correction is its own propagated entry (same
 * generator, equal up to multiplication by that generator) or an
 * operator-identical entry from another part.
 */
std::vector<DegeneracyRow> verify_degeneracy(const LookupTable& table, const BareCode& code,
                                             const std::vector<PauliString>& candidates);
std::vector<DegeneracyRow> verify_degeneracy(
    const LookupTable& table, const BareCode& code,
    const std::vector<std::pair<int, PauliString>>& candidates_with_generator);

// CSV round trip: header "syndrome,correction,source".
std::string lookup_to_csv(const LookupTable& table);
LookupTable lookup_from_csv(int n, int m, const std::string& csv);

}  // namespace bare
