#include "bare/extraction_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace bare {

int ExtractionCircuit::num_two_qubit_gates() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.gates.size());
    return total;
}

ExtractionCircuit build_circuit(const BareCode& code,
                                const std::vector<StabilizerOrdering>& orderings) {
    if (code.group.num_generators() == 0) throw std::invalid_argument("empty code");
    ExtractionCircuit circuit;
    circuit.n = code.n;
    for (int gi = 0; gi < code.group.num_generators(); ++gi) {
        int weight = code.group.generator(gi).weight();
        const StabilizerOrdering* chosen = nullptr;
        for (const auto& ord : orderings)
            if (ord.generator_index == gi) { chosen = &ord; break; }
        MeasureBlock block{gi, {}};
        if (chosen != nullptr) {
            block.gates = chosen->gates;
        } else if (weight <= 2) {
            block.gates = StabilizerOrdering::listed_order(code, gi).gates;
        } else {
            throw std::invalid_argument("missing ordering for weight-" + std::to_string(weight) +
                                        " generator " + std::to_string(gi + 1));
        }
        circuit.blocks.push_back(std::move(block));
    }
    return circuit;
}

const char* to_string(NoiseModel m) {
    return m == NoiseModel::depolarizing ? "depolarizing" : "anisotropic";
}

NoiseModel noise_model_from_string(const std::string& s) {
    if (s == "depolarizing") return NoiseModel::depolarizing;
    if (s == "anisotropic") return NoiseModel::anisotropic;
    throw std::invalid_argument("bad noise model: " + s);
}

NoiseConfig NoiseConfig::applied() const {
    NoiseConfig c = *this;
    if (c.tie_to_ps) c.p_t = c.p_m = c.p_p = c.p_s;
    c.validate();
    return c;
}

void NoiseConfig::validate() const {
    for (double p : {p_s, p_t, p_m, p_p})
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0,1]");
}

const char* to_string(FaultKind k) {
    switch (k) {
        case FaultKind::prep_flip: return "prep_flip";
        case FaultKind::gate_2q: return "gate_2q";
        case FaultKind::gate_1q: return "gate_1q";
        case FaultKind::meas_flip: return "meas_flip";
    }
    return "?";
}

const char* to_string(RepeatPolicy p) {
    switch (p) {
        case RepeatPolicy::if_nonzero: return "if-nonzero";
        case RepeatPolicy::always: return "always";
        case RepeatPolicy::agreement: return "agreement";
    }
    return "?";
}

RepeatPolicy repeat_policy_from_string(const std::string& s) {
    if (s == "if-nonzero") return RepeatPolicy::if_nonzero;
    if (s == "always") return RepeatPolicy::always;
    if (s == "agreement") return RepeatPolicy::agreement;
    throw std::invalid_argument("bad repeat policy: " + s);
}

int propagate_block(const MeasureBlock& block, PauliString& frame,
                    std::span<const FaultEvent> faults) {
    bool anc_x = false, anc_z = false;
    bool meas_flip = false;
    int w = static_cast<int>(block.gates.size());

    auto apply_fault = [&](const FaultEvent& f) {
        if (f.gate < -1 || f.gate >= w) throw std::invalid_argument("fault gate index out of range");
        switch (f.kind) {
            case FaultKind::prep_flip:
                anc_z = !anc_z;
                break;
            case FaultKind::meas_flip:
                meas_flip = !meas_flip;
                break;
            case FaultKind::gate_2q:
            case FaultKind::gate_1q: {
                if (f.pauli_ancilla == 'X' || f.pauli_ancilla == 'Y') anc_x = !anc_x;
                if (f.pauli_ancilla == 'Z' || f.pauli_ancilla == 'Y') anc_z = !anc_z;
                if (f.pauli_data != 'I') {
                    int q = block.gates[static_cast<size_t>(f.gate)].qubit;
                    PauliString d = PauliString::single(frame.num_qubits(), q, f.pauli_data);
                    frame.mul_inplace(d);
                }
                break;
            }
        }
    };

    auto is_gate_fault = [](const FaultEvent& f) {
        return f.kind == FaultKind::gate_2q || f.kind == FaultKind::gate_1q;
    };
    for (const auto& f : faults)
        if (f.kind == FaultKind::prep_flip || (is_gate_fault(f) && f.gate == -1)) apply_fault(f);

    for (int i = 0; i < w; ++i) {
        auto [q, p] = block.gates[static_cast<size_t>(i)];
        // Controlled-P conjugation: pre-gate ancilla X drags P onto the data,
        // pre-gate data components anticommuting with P drag Z onto the ancilla.
        if (anticommutes_at(frame, q, p)) anc_z = !anc_z;
        if (anc_x) frame.mul_inplace(PauliString::single(frame.num_qubits(), q, p));
        for (const auto& f : faults)
            if (is_gate_fault(f) && f.gate == i) apply_fault(f);
    }
    for (const auto& f : faults)
        if (f.kind == FaultKind::meas_flip) apply_fault(f);

    return static_cast<int>(anc_z ^ meas_flip);
}

namespace {

char uniform_pauli(Xoshiro256& rng) { return "XYZ"[rng.uniform_int(3)]; }

void sample_round_into(const ExtractionCircuit& circuit, const NoiseConfig& noise,
                       Xoshiro256& rng, std::vector<FaultEvent>& out) {
    for (int b = 0; b < static_cast<int>(circuit.blocks.size()); ++b) {
        const auto& block = circuit.blocks[static_cast<size_t>(b)];
        if (rng.bernoulli(noise.p_p))
            out.push_back({b, -1, FaultKind::prep_flip, 'I', 'I'});
        for (int i = 0; i < static_cast<int>(block.gates.size()); ++i) {
            if (noise.model == NoiseModel::depolarizing) {
                if (rng.bernoulli(noise.p_t)) {
                    // one of the 15 nontrivial pairs, uniformly
                    uint32_t pick = rng.uniform_int(15) + 1;
                    const char* p4 = "IXYZ";
                    out.push_back({b, i, FaultKind::gate_2q, p4[pick / 4], p4[pick % 4]});
                }
            } else {
                if (rng.bernoulli(noise.p_t))
                    out.push_back({b, i, FaultKind::gate_2q, 'Z',
                                   block.gates[static_cast<size_t>(i)].pauli});
                if (rng.bernoulli(noise.p_s))
                    out.push_back({b, i, FaultKind::gate_1q, uniform_pauli(rng), 'I'});
                if (rng.bernoulli(noise.p_s))
                    out.push_back({b, i, FaultKind::gate_1q, 'I', uniform_pauli(rng)});
            }
        }
        if (rng.bernoulli(noise.p_m))
            out.push_back({b, static_cast<int>(block.gates.size()) - 1, FaultKind::meas_flip,
                           'I', 'I'});
    }
}

Syndrome run_round(const ExtractionCircuit& circuit, PauliString& frame,
                   std::span<const FaultEvent> faults) {
    // Faults arrive in block order, so a sliding window suffices.
    Syndrome s{0, static_cast<int>(circuit.blocks.size())};
    size_t lo = 0;
    for (int b = 0; b < static_cast<int>(circuit.blocks.size()); ++b) {
        size_t hi = lo;
        while (hi < faults.size() && faults[hi].block == b) ++hi;
        int bit = propagate_block(circuit.blocks[static_cast<size_t>(b)], frame,
                                  faults.subspan(lo, hi - lo));
        if (bit) s.bits |= uint32_t{1} << b;
        lo = hi;
    }
    return s;
}

ResidualClass run_trial_impl(const BareCode& code, const ExtractionCircuit& circuit,
                             const LookupTable& table, const NoiseConfig& noise, Xoshiro256& rng,
                             RepeatPolicy policy, std::vector<FaultEvent>& scratch,
                             TrialOutcome* outcome) {
    PauliString frame = PauliString::identity(code.n);
    if (noise.data_memory_noise) {
        for (int q = 0; q < code.n; ++q)
            if (rng.bernoulli(noise.p_s))
                frame.mul_inplace(PauliString::single(code.n, q, uniform_pauli(rng)));
    }

    scratch.clear();
    sample_round_into(circuit, noise, rng, scratch);
    Syndrome s1 = run_round(circuit, frame, scratch);
    if (outcome) outcome->syndromes_seen.push_back(s1);

    bool repeat = policy == RepeatPolicy::always || !s1.zero();
    if (repeat) {
        scratch.clear();
        sample_round_into(circuit, noise, rng, scratch);
        Syndrome s2 = run_round(circuit, frame, scratch);
        if (outcome) outcome->syndromes_seen.push_back(s2);
        bool correct = policy != RepeatPolicy::agreement || s2 == s1;
        if (correct && !s2.zero()) {
            const PauliString& corr = table.decode(s2);
            frame.mul_inplace(corr);
            if (outcome) outcome->corrections_applied.push_back(corr);
        }
    }

    // Final noise-free extract-decode-correct pass.
    Syndrome s3 = code.group.syndrome_of(frame);
    if (outcome) outcome->syndromes_seen.push_back(s3);
    if (!s3.zero()) {
        const PauliString& corr = table.decode(s3);
        frame.mul_inplace(corr);
        if (outcome) outcome->corrections_applied.push_back(corr);
    }

    ResidualClass cls = classify_residual(code, frame);
    if (cls == ResidualClass::non_normalizer)
        throw std::logic_error("residual anticommutes with a generator after final correction");
    return cls;
}

}  // namespace

std::vector<FaultEvent> sample_faults(const ExtractionCircuit& circuit, const NoiseConfig& noise,
                                      Xoshiro256& rng) {
    NoiseConfig applied = noise.applied();
    std::vector<FaultEvent> out;
    sample_round_into(circuit, applied, rng, out);
    return out;
}

TrialOutcome run_trial(const BareCode& code, const ExtractionCircuit& circuit,
                       const LookupTable& table, const NoiseConfig& noise, Xoshiro256& rng,
                       RepeatPolicy policy) {
    TrialOutcome outcome;
    std::vector<FaultEvent> scratch;
    NoiseConfig applied = noise.applied();
    outcome.residual = run_trial_impl(code, circuit, table, applied, rng, policy, scratch, &outcome);
    return outcome;
}

RateEstimate estimate_rates(const BareCode& code, const ExtractionCircuit& circuit,
                            const LookupTable& table, const NoiseConfig& noise, uint64_t trials,
                            uint64_t master_seed, RepeatPolicy policy, int threads) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    NoiseConfig applied = noise.applied();
    int workers = std::max(1, threads);

    std::vector<std::array<uint64_t, 4>> counts(static_cast<size_t>(workers), {0, 0, 0, 0});
    auto worker = [&](int wi) {
        std::vector<FaultEvent> scratch;
        auto& c = counts[static_cast<size_t>(wi)];
        for (uint64_t t = static_cast<uint64_t>(wi); t < trials; t += static_cast<uint64_t>(workers)) {
            Xoshiro256 rng(master_seed, t);
            ResidualClass cls =
                run_trial_impl(code, circuit, table, applied, rng, policy, scratch, nullptr);
            switch (cls) {
                case ResidualClass::trivial: ++c[0]; break;
                case ResidualClass::x_class: ++c[1]; break;
                case ResidualClass::y_class: ++c[2]; break;
                case ResidualClass::z_class: ++c[3]; break;
                case ResidualClass::non_normalizer: break;
            }
        }
    };
    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(worker, wi);
        for (auto& th : pool) th.join();
    }

    RateEstimate est;
    est.p = applied.p_s;
    est.trials = trials;
    for (const auto& c : counts) {
        est.count_trivial += c[0];
        est.count_x += c[1];
        est.count_y += c[2];
        est.count_z += c[3];
    }
    auto rate = [&](uint64_t k) { return static_cast<double>(k) / static_cast<double>(trials); };
    est.total_rate = rate(est.count_x + est.count_y + est.count_z);
    est.logical_rate = rate(est.count_x + est.count_z);
    est.logical_rate_incl_y = est.total_rate;
    auto se = [&](double r) { return std::sqrt(r * (1.0 - r) / static_cast<double>(trials)); };
    est.stderr_total = se(est.total_rate);
    est.stderr_logical = se(est.logical_rate);
    return est;
}

FaultCheckReport exhaustive_single_fault_check(const BareCode& code,
                                               const ExtractionCircuit& circuit,
                                               const LookupTable& table, NoiseModel model,
                                               RepeatPolicy policy) {
    std::vector<FaultEvent> cases;
    for (int b = 0; b < static_cast<int>(circuit.blocks.size()); ++b) {
        const auto& block = circuit.blocks[static_cast<size_t>(b)];
        cases.push_back({b, -1, FaultKind::prep_flip, 'I', 'I'});
        cases.push_back({b, static_cast<int>(block.gates.size()) - 1, FaultKind::meas_flip, 'I', 'I'});
        for (int i = 0; i < static_cast<int>(block.gates.size()); ++i) {
            if (model == NoiseModel::depolarizing) {
                for (char a : {'I', 'X', 'Y', 'Z'})
                    for (char d : {'I', 'X', 'Y', 'Z'}) {
                        if (a == 'I' && d == 'I') continue;
                        cases.push_back({b, i, FaultKind::gate_2q, a, d});
                    }
            } else {
                cases.push_back({b, i, FaultKind::gate_2q, 'Z',
                                 block.gates[static_cast<size_t>(i)].pauli});
                for (char a : {'X', 'Y', 'Z'}) cases.push_back({b, i, FaultKind::gate_1q, a, 'I'});
                for (char d : {'X', 'Y', 'Z'}) cases.push_back({b, i, FaultKind::gate_1q, 'I', d});
            }
        }
    }

    FaultCheckReport report;
    for (const auto& fault : cases) {
        PauliString frame = PauliString::identity(code.n);
        Syndrome s1{0, static_cast<int>(circuit.blocks.size())};
        for (int b = 0; b < static_cast<int>(circuit.blocks.size()); ++b) {
            std::vector<FaultEvent> bf;
            if (fault.block == b) bf.push_back(fault);
            int bit = propagate_block(circuit.blocks[static_cast<size_t>(b)], frame, bf);
            if (bit) s1.bits |= uint32_t{1} << b;
        }
        FaultCheckRow row{fault, frame, code.group.syndrome_of(frame), ResidualClass::trivial};

        // Remaining protocol, noise-free.
        bool repeat = policy == RepeatPolicy::always || !s1.zero();
        if (repeat) {
            Syndrome s2 = code.group.syndrome_of(frame);
            bool correct = policy != RepeatPolicy::agreement || s2 == s1;
            if (correct && !s2.zero()) frame.mul_inplace(table.decode(s2));
        }
        Syndrome s3 = code.group.syndrome_of(frame);
        if (!s3.zero()) frame.mul_inplace(table.decode(s3));
        row.residual = classify_residual(code, frame);

        ++report.faults_checked;
        if (row.residual != ResidualClass::trivial &&
            row.residual != ResidualClass::non_normalizer)
            report.failures.push_back(row);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace bare
