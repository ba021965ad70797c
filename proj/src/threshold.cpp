#include "bare/threshold.hpp"

#include <cmath>
#include <stdexcept>

namespace bare {

std::vector<SweepPoint> sweep(const BareCode& code, const ExtractionCircuit& circuit,
                              const LookupTable& table, NoiseModel model,
                              const std::vector<double>& p_values, uint64_t trials,
                              uint64_t master_seed, RepeatPolicy policy, int threads) {
    if (p_values.empty()) throw std::invalid_argument("empty p_values");
    for (size_t i = 0; i < p_values.size(); ++i) {
        if (!(p_values[i] > 0.0 && p_values[i] < 1.0))
            throw std::invalid_argument("p values must lie in (0,1)");
        if (i > 0 && p_values[i] <= p_values[i - 1])
            throw std::invalid_argument("p values must be strictly increasing");
    }
    std::vector<SweepPoint> points;
    points.reserve(p_values.size());
    for (size_t i = 0; i < p_values.size(); ++i) {
        NoiseConfig noise{model, p_values[i], 0, 0, 0, /*tie_to_ps=*/true};
        // Each sweep point gets its own disjoint stream block keyed by index.
        uint64_t seed = master_seed ^ (0x5deece66dull * (i + 1));
        points.push_back({p_values[i],
                          estimate_rates(code, circuit, table, noise, trials, seed, policy, threads)});
    }
    return points;
}

const char* to_string(CrossingKind k) { return k == CrossingKind::logical ? "logical" : "total"; }

const char* to_string(NoneReason r) {
    switch (r) {
        case NoneReason::always_below: return "always_below";
        case NoneReason::always_above: return "always_above";
        case NoneReason::non_monotone: return "non_monotone";
    }
    return "?";
}

PseudoThreshold pseudo_threshold(const std::vector<SweepPoint>& points, CrossingKind kind) {
    PseudoThreshold result;
    result.kind = kind;

    std::vector<std::pair<double, double>> usable;  // (p, rate), rate > 0
    for (const auto& pt : points) {
        double rate = kind == CrossingKind::logical ? pt.estimate.logical_rate
                                                    : pt.estimate.total_rate;
        if (rate <= 0.0)
            result.skipped_zero_rate_points.push_back(pt.p);
        else
            usable.emplace_back(pt.p, rate);
    }
    if (usable.size() < 2) throw std::invalid_argument("need >= 2 nonzero-rate points");

    bool any_below = false, any_above = false, downward = false;
    for (size_t i = 0; i + 1 < usable.size(); ++i) {
        auto [p1, r1] = usable[i];
        auto [p2, r2] = usable[i + 1];
        int s1 = r1 < p1 ? -1 : (r1 > p1 ? 1 : 0);
        int s2 = r2 < p2 ? -1 : (r2 > p2 ? 1 : 0);
        any_below |= s1 < 0 || s2 < 0;
        any_above |= s1 > 0 || s2 > 0;
        if (s1 <= 0 && s2 > 0) {
            // Upward crossing: interpolate log(rate) = log(p) along the segment.
            double lp1 = std::log(p1), lp2 = std::log(p2);
            double lr1 = std::log(r1), lr2 = std::log(r2);
            double denom = (lr2 - lr1) - (lp2 - lp1);
            double u = (lp1 - lr1) / denom;
            result.value = std::exp(lp1 + u * (lp2 - lp1));
            result.bracket = {p1, p2};
            return result;
        }
        if (s1 > 0 && s2 < 0) downward = true;
    }
    if (downward)
        result.none_reason = NoneReason::non_monotone;
    else if (any_above && !any_below)
        result.none_reason = NoneReason::always_above;
    else
        result.none_reason = NoneReason::always_below;
    return result;
}

}  // namespace bare
