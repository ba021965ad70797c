#include "bare/decoder.hpp"

#include <sstream>

namespace bare {

const char* to_string(LookupSource src) {
    switch (src) {
        case LookupSource::single_qubit: return "single_qubit";
        case LookupSource::propagated: return "propagated";
        case LookupSource::min_weight: return "min_weight";
        case LookupSource::manual: return "manual";
    }
    return "?";
}

LookupSource lookup_source_from_string(const std::string& s) {
    if (s == "single_qubit") return LookupSource::single_qubit;
    if (s == "propagated") return LookupSource::propagated;
    if (s == "min_weight") return LookupSource::min_weight;
    if (s == "manual") return LookupSource::manual;
    throw std::invalid_argument("bad lookup source: " + s);
}

const char* to_string(ResidualClass c) {
    switch (c) {
        case ResidualClass::trivial: return "trivial";
        case ResidualClass::x_class: return "X";
        case ResidualClass::z_class: return "Z";
        case ResidualClass::y_class: return "Y";
        case ResidualClass::non_normalizer: return "non_normalizer";
    }
    return "?";
}

LookupTable::LookupTable(int n, int m, std::vector<LookupEntry> entries)
    : n_(n), m_(m), entries_(std::move(entries)) {
    if (entries_.size() != (size_t{1} << m))
        throw std::invalid_argument("lookup table must be total over 2^m syndromes");
    if (!entries_[0].correction.is_identity())
        throw std::invalid_argument("zero syndrome must map to identity");
}

const LookupEntry& LookupTable::entry(const Syndrome& s) const {
    if (s.m != m_) throw std::invalid_argument("syndrome length mismatch");
    return entries_[s.index()];
}

PauliString min_weight_completion(const BareCode& code, const Syndrome& s) {
    int n = code.n;
    if (s.zero()) return PauliString::identity(n);
    for (int w = 1; w <= n; ++w) {
        bool found = false;
        PauliString best;
        std::string best_text;
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        while (true) {
            std::vector<int> pidx(w, 0);
            while (true) {
                PauliString e(n);
                for (int i = 0; i < w; ++i) e.set_pauli(comb[i], "XYZ"[pidx[i]]);
                if (code.group.syndrome_of(e) == s) {
                    std::string t = e.str();
                    if (!found || t < best_text) {
                        found = true;
                        best = e;
                        best_text = std::move(t);
                    }
                }
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
        if (found) return best;
    }
    throw std::runtime_error("no Pauli attains syndrome " + s.str());
}

LookupTable build_lookup(const BareCode& code, const std::vector<StabilizerOrdering>& orderings,
                         const std::vector<LookupEntry>& overlay) {
    int n = code.n;
    int m = code.group.num_generators();
    if (m > 20) throw std::invalid_argument("dense lookup table limited to m <= 20");
    std::vector<LookupEntry> slots(size_t{1} << m);
    std::vector<bool> taken(size_t{1} << m, false);

    auto put = [&](const Syndrome& s, const PauliString& corr, LookupSource src, int gen) {
        if (taken[s.index()]) return false;
        slots[s.index()] = LookupEntry{s, corr, src, gen};
        taken[s.index()] = true;
        return true;
    };

    // Zero syndrome always decodes to identity.
    put(Syndrome{0, m}, PauliString::identity(n), LookupSource::min_weight, -1);

    for (const auto& e : overlay) {
        if (e.syndrome.m != m) throw std::invalid_argument("overlay syndrome length mismatch");
        if (code.group.syndrome_of(e.correction) != e.syndrome)
            throw std::invalid_argument("overlay entry inconsistent with its syndrome: " +
                                        e.syndrome.str() + " -> " + e.correction.str());
        put(e.syndrome, e.correction, e.source, e.generator);
    }

    // Part 1: single-qubit syndromes, Z block then X then Y within H_xyz.
    HxyzMatrix hxyz(code);
    for (char p : {'Z', 'X', 'Y'})
        for (int q = 0; q < n; ++q) {
            Syndrome s = hxyz.column(q, p);
            if (!s.zero())
                put(s, PauliString::single(n, q, p), LookupSource::single_qubit, -1);
        }

    // Part 2: hook tables of the chosen orderings; originals pass first.
    std::vector<std::pair<int, HookTable>> tables;
    for (const auto& ord : orderings)
        tables.emplace_back(ord.generator_index, enumerate_prefix_syndromes(code, ord));
    for (const auto& [gen, table] : tables) {
        for (const auto& entry : table.originals) {
            if (!put(entry.syndrome, entry.error, LookupSource::propagated, gen)) {
                // A pure hook losing its syndrome to an inequivalent entry
                // breaks single-ancilla fault tolerance.
                const auto& winner = slots[entry.syndrome.index()];
                if (!code.group.contains(entry.error * winner.correction))
                    throw std::runtime_error("hook syndrome " + entry.syndrome.str() +
                                             " already taken by an inequivalent entry");
            }
        }
    }
    for (const auto& [gen, table] : tables)
        for (const auto& entry : table.entries)
            put(entry.syndrome, entry.error, LookupSource::propagated, gen);

    // Part 3: minimum-weight completion of everything left.
    for (uint32_t v = 1; v < (uint32_t{1} << m); ++v) {
        if (!taken[v]) {
            Syndrome s{v, m};
            put(s, min_weight_completion(code, s), LookupSource::min_weight, -1);
        }
    }
    return LookupTable(n, m, std::move(slots));
}

ResidualClass classify_residual(const BareCode& code, const PauliString& r) {
    for (const auto& g : code.generators())
        if (symplectic_product(r, g)) return ResidualClass::non_normalizer;
    if (code.group.contains(r)) return ResidualClass::trivial;
    if (code.k == 0) throw std::logic_error("normalizer element outside group with k = 0");
    int a = symplectic_product(r, code.logical_z);
    int b = symplectic_product(r, code.logical_x);
    if (a == 1 && b == 0) return ResidualClass::x_class;
    if (a == 0 && b == 1) return ResidualClass::z_class;
    if (a == 1 && b == 1) return ResidualClass::y_class;
    throw std::logic_error("normalizer element in no logical coset");
}

namespace {
DegeneracyRow make_row(const LookupTable& table, const BareCode& code, int gen,
                       const PauliString& e) {
    Syndrome s = code.group.syndrome_of(e);
    const LookupEntry& stored = table.entry(s);
    DegeneracyRow row;
    row.generator = gen;
    row.error = e;
    row.syndrome = s;
    row.correction = stored.correction;
    row.source = stored.source;
    row.residual = classify_residual(code, e * stored.correction);
    row.safe = row.residual == ResidualClass::trivial;
    bool own = false;
    if (stored.source == LookupSource::propagated && gen >= 0 && stored.generator == gen) {
        // Prefix and suffix forms of one hook differ by the generator itself.
        PauliString diff = e * stored.correction;
        own = diff.is_identity() || diff == code.group.generator(gen);
    } else if (stored.source != LookupSource::propagated) {
        own = stored.correction == e;
    }
    row.flagged = !own;
    return row;
}
}  // namespace

std::vector<DegeneracyRow> verify_degeneracy(const LookupTable& table, const BareCode& code,
                                             const std::vector<PauliString>& candidates) {
    std::vector<DegeneracyRow> rows;
    rows.reserve(candidates.size());
    for (const auto& e : candidates) rows.push_back(make_row(table, code, -1, e));
    return rows;
}

std::vector<DegeneracyRow> verify_degeneracy(
    const LookupTable& table, const BareCode& code,
    const std::vector<std::pair<int, PauliString>>& candidates_with_generator) {
    std::vector<DegeneracyRow> rows;
    rows.reserve(candidates_with_generator.size());
    for (const auto& [gen, e] : candidates_with_generator)
        rows.push_back(make_row(table, code, gen, e));
    return rows;
}

std::string lookup_to_csv(const LookupTable& table) {
    std::ostringstream out;
    out << "syndrome,correction,source\n";
    for (const auto& e : table.entries())
        out << e.syndrome.str() << ',' << e.correction.str() << ',' << to_string(e.source) << '\n';
    return out.str();
}

LookupTable lookup_from_csv(int n, int m, const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    do {
        if (!std::getline(in, line)) throw std::invalid_argument("empty lookup CSV");
    } while (!line.empty() && line[0] == '#');
    if (line != "syndrome,correction,source")
        throw std::invalid_argument("bad lookup CSV header");
    std::vector<LookupEntry> slots(size_t{1} << m);
    std::vector<bool> seen(size_t{1} << m, false);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("bad lookup CSV row: " + line);
        Syndrome s = Syndrome::parse(line.substr(0, c1));
        if (s.m != m) throw std::invalid_argument("bad syndrome length in CSV");
        LookupEntry e{s, PauliString::parse(line.substr(c1 + 1, c2 - c1 - 1)),
                      lookup_source_from_string(line.substr(c2 + 1)), -1};
        if (e.correction.num_qubits() != n) throw std::invalid_argument("bad correction length");
        slots[s.index()] = std::move(e);
        seen[s.index()] = true;
    }
    for (bool b : seen)
        if (!b) throw std::invalid_argument("lookup CSV is not total");
    return LookupTable(n, m, std::move(slots));
}

}  // namespace bare
