#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "bare/extraction_sim.hpp"
#include "bare/fixtures.hpp"

using namespace bare;

namespace {

BareCode single_generator_code() {
    return make_bare_code({PauliString::parse("X")}, PauliString(), PauliString(), {});
}

PauliString suffix_after(const MeasureBlock& block, int n, int gate_index) {
    PauliString s(n);
    for (size_t i = static_cast<size_t>(gate_index) + 1; i < block.gates.size(); ++i)
        s.set_pauli(block.gates[i].qubit, block.gates[i].pauli);
    return s;
}

}  // namespace

TEST_CASE("circuit construction") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    REQUIRE(circuit.blocks.size() == 5);
    std::vector<OrderedGate> expected{{0, 'Z'}, {1, 'X'}, {4, 'Z'}, {2, 'Z'}, {5, 'Z'}};
    CHECK(circuit.blocks[0].gates == expected);

    Fixture fx7 = load_fixture(7);
    ExtractionCircuit c7 = build_circuit(fx7.code, fx7.orderings);
    REQUIRE(c7.blocks.size() == 6);
    // Weight-2 generators are measured in listed order.
    CHECK(c7.blocks[0].gates == std::vector<OrderedGate>{{0, 'X'}, {1, 'X'}});

    // A missing ordering for a weight > 2 generator is an error.
    CHECK_THROWS_AS(build_circuit(fx.code, {}), std::invalid_argument);
}

TEST_CASE("block propagation reads the syndrome bit") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    PauliString frame = PauliString::parse("IZIIII");  // Z1 anticommutes with g1
    int bit = propagate_block(circuit.blocks[0], frame, {});
    CHECK(bit == 1);
    CHECK(frame.str() == "IZIIII");
}

TEST_CASE("ancilla X faults produce suffix hooks") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);

    // X on the ancilla after gate 2 (before gate 3) of ordered g1.
    PauliString frame = PauliString::identity(6);
    FaultEvent fault{0, 1, FaultKind::gate_1q, 'X', 'I'};
    propagate_block(circuit.blocks[0], frame, {&fault, 1});
    CHECK(frame.str() == suffix_after(circuit.blocks[0], 6, 1).str());  // Z4 Z2 Z5
    CHECK(fx.code.group.contains(frame * PauliString::parse("ZXIIII")));
    CHECK(fx.code.group.syndrome_of(frame).str() == "01011");

    // X before gate 1 applies the whole stabilizer.
    PauliString whole = PauliString::identity(6);
    FaultEvent early{0, -1, FaultKind::gate_1q, 'X', 'I'};
    propagate_block(circuit.blocks[0], whole, {&early, 1});
    CHECK(whole == fx.code.group.generator(0));
    CHECK(fx.code.group.syndrome_of(whole).zero());
}

TEST_CASE("frame exactness against the hook tables") {
    for (int n : bundled_code_sizes()) {
        Fixture fx = load_fixture(n);
        ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
        for (const auto& ord : fx.orderings) {
            const MeasureBlock& block = circuit.blocks[static_cast<size_t>(ord.generator_index)];
            HookTable hooks = enumerate_prefix_syndromes(fx.code, ord);
            for (const auto& o : hooks.originals) {
                // Ancilla X after 1-based gate t = o.position: the frame
                // becomes suffix(t+1..w) and shares the prefix syndrome.
                PauliString frame = PauliString::identity(fx.code.n);
                FaultEvent fault{ord.generator_index, o.position - 1, FaultKind::gate_1q, 'X', 'I'};
                propagate_block(block, frame, {&fault, 1});
                CHECK(frame == suffix_after(block, fx.code.n, o.position - 1));
                CHECK(fx.code.group.syndrome_of(frame) == o.syndrome);
            }
        }
    }
}

TEST_CASE("prep and measurement flips toggle the reported bit") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    PauliString frame = PauliString::identity(6);
    FaultEvent prep{0, -1, FaultKind::prep_flip, 'I', 'I'};
    CHECK(propagate_block(circuit.blocks[0], frame, {&prep, 1}) == 1);
    FaultEvent meas{0, 4, FaultKind::meas_flip, 'I', 'I'};
    CHECK(propagate_block(circuit.blocks[0], frame, {&meas, 1}) == 1);
    CHECK(frame.is_identity());
}

TEST_CASE("fault sampling") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    Xoshiro256 rng(99, 0);

    NoiseConfig quiet{NoiseModel::depolarizing, 0, 0, 0, 0, false};
    CHECK(sample_faults(circuit, quiet, rng).empty());

    // Forced two-qubit faults on a one-gate circuit: exactly one event,
    // uniform over the 15 nontrivial pairs (chi-square over 1e5 draws).
    BareCode tiny = single_generator_code();
    ExtractionCircuit tiny_circuit = build_circuit(tiny, {});
    NoiseConfig forced{NoiseModel::depolarizing, 0, 1.0, 0, 0, false};
    std::map<std::pair<char, char>, int> histogram;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        auto faults = sample_faults(tiny_circuit, forced, rng);
        REQUIRE(faults.size() == 1);
        REQUIRE(faults[0].kind == FaultKind::gate_2q);
        ++histogram[{faults[0].pauli_ancilla, faults[0].pauli_data}];
    }
    CHECK(histogram.size() == 15);
    double expected = draws / 15.0;
    double chi2 = 0;
    for (const auto& [pair, count] : histogram) {
        CHECK(!(pair.first == 'I' && pair.second == 'I'));
        chi2 += (count - expected) * (count - expected) / expected;
    }
    CHECK(chi2 < 40.0);  // 14 dof; 0.999 quantile is 36.1

    // Anisotropic forced faults align with the gate.
    NoiseConfig aligned{NoiseModel::anisotropic, 0, 1.0, 0, 0, false};
    auto faults = sample_faults(circuit, aligned, rng);
    const auto& block0 = circuit.blocks[0];
    int i = 0;
    for (const auto& f : faults) {
        if (f.block != 0) break;
        CHECK(f.kind == FaultKind::gate_2q);
        CHECK(f.pauli_ancilla == 'Z');
        CHECK(f.pauli_data == block0.gates[static_cast<size_t>(i)].pauli);
        ++i;
    }
    CHECK(i == static_cast<int>(block0.gates.size()));
}

TEST_CASE("trial protocol") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    LookupTable table = fx.build_table();

    NoiseConfig quiet{NoiseModel::depolarizing, 0, 0, 0, 0, false};
    Xoshiro256 rng(1, 0);
    TrialOutcome clean = run_trial(fx.code, circuit, table, quiet, rng);
    CHECK(clean.residual == ResidualClass::trivial);
    for (const auto& s : clean.syndromes_seen) CHECK(s.zero());
    CHECK(clean.corrections_applied.empty());

    // Round 2 triggers on roughly half of the trials when a single
    // generator's measurement flips with probability one half.
    BareCode tiny = single_generator_code();
    ExtractionCircuit tiny_circuit = build_circuit(tiny, {});
    LookupTable tiny_table = build_lookup(tiny, {});
    NoiseConfig flips{NoiseModel::depolarizing, 0, 0, 0.5, 0, false};
    int repeats = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        Xoshiro256 trial_rng(77, static_cast<uint64_t>(t));
        TrialOutcome outcome = run_trial(tiny, tiny_circuit, tiny_table, flips, trial_rng);
        // syndromes_seen: round 1 [+ round 2] + final.
        if (outcome.syndromes_seen.size() == 3) ++repeats;
        CHECK(outcome.residual == ResidualClass::trivial);
    }
    double fraction = static_cast<double>(repeats) / trials;
    CHECK(fraction > 0.47);
    CHECK(fraction < 0.53);
}

TEST_CASE("rate estimation determinism across worker counts") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    LookupTable table = fx.build_table();

    NoiseConfig quiet{NoiseModel::depolarizing, 0, 0, 0, 0, true};
    RateEstimate zero = estimate_rates(fx.code, circuit, table, quiet, 10000, 3);
    CHECK(zero.total_rate == 0.0);
    CHECK(zero.count_trivial == 10000);

    NoiseConfig noisy{NoiseModel::depolarizing, 0.02, 0, 0, 0, true};
    RateEstimate a = estimate_rates(fx.code, circuit, table, noisy, 20000, 42, RepeatPolicy::if_nonzero, 1);
    RateEstimate b = estimate_rates(fx.code, circuit, table, noisy, 20000, 42, RepeatPolicy::if_nonzero, 4);
    CHECK(a.count_x == b.count_x);
    CHECK(a.count_y == b.count_y);
    CHECK(a.count_z == b.count_z);
    CHECK(a.count_trivial == b.count_trivial);
    CHECK(a.total_rate >= a.logical_rate);
    CHECK(a.logical_rate_incl_y == a.total_rate);
    CHECK(a.count_trivial + a.count_x + a.count_y + a.count_z == 20000);
}

TEST_CASE("optional idle data noise before round one") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    LookupTable table = fx.build_table();
    NoiseConfig idle{NoiseModel::depolarizing, 0.5, 0, 0, 0, false, true};
    // Only idle noise: every error is a plain data Pauli, so the protocol
    // must correct anything up to the code distance and classify the rest.
    RateEstimate est = estimate_rates(fx.code, circuit, table, idle, 5000, 21);
    CHECK(est.count_trivial + est.count_x + est.count_y + est.count_z == 5000);
    CHECK(est.total_rate > 0.0);
    // Off by default: identical config without the flag sees no errors.
    NoiseConfig off{NoiseModel::depolarizing, 0.5, 0, 0, 0, false, false};
    CHECK(estimate_rates(fx.code, circuit, table, off, 5000, 21).total_rate == 0.0);
}

TEST_CASE("high-noise trials stay inside the normalizer") {
    Fixture fx = load_fixture(7);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    LookupTable table = fx.build_table();
    NoiseConfig rough{NoiseModel::depolarizing, 0.3, 0, 0, 0, true};
    RateEstimate est = estimate_rates(fx.code, circuit, table, rough, 2000, 5);
    CHECK(est.count_trivial + est.count_x + est.count_y + est.count_z == 2000);
}

TEST_CASE("exhaustive single-fault check, anisotropic") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    LookupTable table = fx.build_table();
    auto report = exhaustive_single_fault_check(fx.code, circuit, table, NoiseModel::anisotropic);
    CHECK(report.failures.empty());
    // prep + meas per block, plus per gate: 1 aligned + 3 + 3 events.
    int gates = circuit.num_two_qubit_gates();
    CHECK(report.faults_checked ==
          static_cast<uint64_t>(2 * static_cast<int>(circuit.blocks.size()) + 7 * gates));
}

TEST_CASE("freshly searched orderings are fault-tolerant too") {
    // Encode from the graph, take the first valid ordering per heavy
    // generator, and confirm single-ancilla fault tolerance end to end.
    Fixture fx = load_fixture(7);
    BareCode code = encode_by_measurement(build_premeasurement_check(fx.code.source_graph), 1,
                                          fx.code.source_graph);
    std::vector<StabilizerOrdering> orderings = choose_orderings(code);
    REQUIRE(orderings.size() == 2);
    ExtractionCircuit circuit = build_circuit(code, orderings);
    LookupTable table = build_lookup(code, orderings);
    auto report = exhaustive_single_fault_check(code, circuit, table, NoiseModel::anisotropic);
    CHECK(report.failures.empty());
}

TEST_CASE("exhaustive single-fault check, depolarizing, matches the red set") {
    Fixture fx = load_fixture(6);
    ExtractionCircuit circuit = build_circuit(fx.code, fx.orderings);
    LookupTable table = fx.build_table();
    auto report = exhaustive_single_fault_check(fx.code, circuit, table, NoiseModel::depolarizing);
    CHECK_FALSE(report.failures.empty());

    // Failing faults, keyed by (generator, syndrome class) of the data error.
    std::set<std::pair<int, uint32_t>> failing;
    for (const auto& row : report.failures)
        failing.insert({row.fault.block + 1, row.syndrome.bits});

    std::set<std::pair<int, uint32_t>> harmful_reds, degenerate_reds;
    for (const auto& mark : fx.hook_marks) {
        if (mark.mark != "red") continue;
        PauliString residual = mark.error * table.decode(mark.syndrome);
        if (fx.code.group.contains(residual))
            degenerate_reds.insert({mark.generator, mark.syndrome.bits});
        else
            harmful_reds.insert({mark.generator, mark.syndrome.bits});
    }
    CHECK(failing == harmful_reds);
    CHECK(degenerate_reds.size() == 5);
    for (const auto& key : degenerate_reds) CHECK_FALSE(failing.count(key));
}
