#pragma once

#include <cstdint>
#include <string>

#include "bare/threshold.hpp"

namespace bare {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// FNV-1a 64-bit, used to lock fixture files and stamp run configs.
uint64_t fnv1a64(std::string_view bytes);
std::string hex64(uint64_t value);

inline constexpr const char* kRatesCsvHeader =
    "model,p_s,p_t,p_m,p_p,trials,count_trivial,count_x,count_y,count_z,"
    "total_rate,logical_rate,logical_rate_incl_y,stderr_total,stderr_logical,seed";

std::string rates_csv_row(NoiseModel model, const NoiseConfig& applied, const RateEstimate& est,
                          uint64_t seed);

std::string format_double(double v);

}  // namespace bare
