#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bare/decoder.hpp"
#include "bare/rng.hpp"

namespace bare {

// One generator measurement: ancilla prepared in |+>, the ordered
// controlled-Pauli gates with the ancilla as control, X-basis readout.
struct MeasureBlock {
    int generator = 0;
    std::vector<OrderedGate> gates;
};

struct ExtractionCircuit {
    int n = 0;
    std::vector<MeasureBlock> blocks;  // one per generator, listed order

    int num_two_qubit_gates() const;
};

// One measurement block per generator; weight > 2 generators use the given
// orderings, the rest their listed order. Fresh ancilla per block.
ExtractionCircuit build_circuit(const BareCode& code,
                                const std::vector<StabilizerOrdering>& orderings);

enum class NoiseModel { depolarizing, anisotropic };

const char* to_string(NoiseModel m);
NoiseModel noise_model_from_string(const std::string& s);

struct NoiseConfig {
    NoiseModel model = NoiseModel::depolarizing;
    double p_s = 0, p_t = 0, p_m = 0, p_p = 0;
    bool tie_to_ps = false;           // p_t = p_m = p_p = p_s
    bool data_memory_noise = false;   // idle data noise before round 1; off by default

    NoiseConfig applied() const;      // with tie_to_ps resolved
    void validate() const;
};

enum class FaultKind { prep_flip, gate_2q, gate_1q, meas_flip };

const char* to_string(FaultKind k);

/*
 * A single injected Pauli fault. `gate` is the 0-based index of the gate the
 * fault follows (-1: between preparation and the first gate). gate_2q carries
 * an ancilla (x) data pair; gate_1q carries exactly one of the two.
 */
struct FaultEvent {
    int block = 0;
    int gate = -1;
    FaultKind kind = FaultKind::prep_flip;
    char pauli_ancilla = 'I';
    char pauli_data = 'I';
};

/*
 * Exact Pauli-frame propagation of one block. The ancilla's X component at
 * a gate applies that gate's data Pauli to the frame (suffix hooks); frame
 * components anticommuting with a gate's Pauli add Z to the ancilla; the
 * reported bit is the ancilla Z parity at measurement, xor any flip.
 */
int propagate_block(const MeasureBlock& block, PauliString& frame,
                    std::span<const FaultEvent> faults);

// Round-worth of faults for the given model, in fixed circuit order.
std::vector<FaultEvent> sample_faults(const ExtractionCircuit& circuit, const NoiseConfig& noise,
                                      Xoshiro256& rng);

enum class RepeatPolicy { if_nonzero, always, agreement };

const char* to_string(RepeatPolicy p);
RepeatPolicy repeat_policy_from_string(const std::string& s);

struct TrialOutcome {
    std::vector<Syndrome> syndromes_seen;
    std::vector<PauliString> corrections_applied;
    ResidualClass residual = ResidualClass::trivial;
};

/*
 * Trial protocol: round 1, noisy extraction of every generator; on a
 * nonzero syndrome, round 2 repeats the extraction with fresh ancillas and
 * the round-2 syndrome is decoded and the correction applied. A final
 * noise-free extract-decode-correct pass always runs.
 */
TrialOutcome run_trial(const BareCode& code, const ExtractionCircuit& circuit,
                       const LookupTable& table, const NoiseConfig& noise, Xoshiro256& rng,
                       RepeatPolicy policy = RepeatPolicy::if_nonzero);

struct RateEstimate {
    double p = 0;  // headline physical rate (p_s under tie_to_ps)
    uint64_t trials = 0;
    uint64_t count_trivial = 0, count_x = 0, count_y = 0, count_z = 0;
    double total_rate = 0;            // (X + Y + Z) / trials
    double logical_rate = 0;          // (X + Z) / trials
    double logical_rate_incl_y = 0;   // (X + Y + Z) / trials
    double stderr_total = 0, stderr_logical = 0;
};

/*
 * Aggregates run_trial over per-trial RNG streams derived from
 * (master_seed, trial_index); bit-reproducible for a fixed seed and trial
 * count regardless of the number of worker threads.
 */
RateEstimate estimate_rates(const BareCode& code, const ExtractionCircuit& circuit,
                            const LookupTable& table, const NoiseConfig& noise, uint64_t trials,
                            uint64_t master_seed, RepeatPolicy policy = RepeatPolicy::if_nonzero,
                            int threads = 1);

struct FaultCheckRow {
    FaultEvent fault;
    PauliString data_error;  // persistent frame after the faulty round
    Syndrome syndrome;
    ResidualClass residual = ResidualClass::trivial;
};

struct FaultCheckReport {
    uint64_t faults_checked = 0;
    std::vector<FaultCheckRow> rows;       // every enumerated fault
    std::vector<FaultCheckRow> failures;   // rows with a logical residual
};

/*
 * Enumerates every single fault the model permits (preparation and
 * measurement flips, and per gate: all 15 two-qubit Paulis under
 * depolarizing; the aligned Z x P plus single-qubit Paulis on either
 * participant under anisotropic), runs the otherwise-noiseless protocol,
 * and reports the faults whose residual is a logical class.
 */
FaultCheckReport exhaustive_single_fault_check(const BareCode& code,
                                               const ExtractionCircuit& circuit,
                                               const LookupTable& table, NoiseModel model,
                                               RepeatPolicy policy = RepeatPolicy::if_nonzero);

}  // namespace bare
