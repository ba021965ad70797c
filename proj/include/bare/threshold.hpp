#pragma once

#include <optional>
#include <vector>

#include "bare/extraction_sim.hpp"

namespace bare {

struct SweepPoint {
    double p = 0;
    RateEstimate estimate;
};

/*
 * One rate estimate per physical rate, with every channel tied to p
 * (p_s = p_t = p_m = p_p = p). p_values must be strictly increasing.
 */
std::vector<SweepPoint> sweep(const BareCode& code, const ExtractionCircuit& circuit,
                              const LookupTable& table, NoiseModel model,
                              const std::vector<double>& p_values, uint64_t trials,
                              uint64_t master_seed, RepeatPolicy policy = RepeatPolicy::if_nonzero,
                              int threads = 1);

enum class CrossingKind { logical, total };
enum class NoneReason { always_below, always_above, non_monotone };

const char* to_string(CrossingKind k);
const char* to_string(NoneReason r);

struct PseudoThreshold {
    std::optional<double> value;                 // p* when a crossing exists
    CrossingKind kind = CrossingKind::logical;
    std::optional<std::pair<double, double>> bracket;  // [p_lo, p_hi]
    std::optional<NoneReason> none_reason;
    std::vector<double> skipped_zero_rate_points;      // log-undefined, excluded
};

/*
 * Finds the first adjacent pair of nonzero-rate points where rate - p
 * changes sign upward and interpolates the crossing linearly in
 * (log p, log rate) space. Error-rate curves are locally power-law, so the
 * crossing of two straight lines in log space is exact on monomial data.
 */
PseudoThreshold pseudo_threshold(const std::vector<SweepPoint>& points, CrossingKind kind);

}  // namespace bare
