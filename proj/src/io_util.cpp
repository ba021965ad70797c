#include "bare/io_util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bare {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string format_double(double v) {
    // Shortest round-trip representation keeps CSV output byte-stable.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double parsed = std::strtod(buf, nullptr);
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
        if (std::strtod(shorter, nullptr) == parsed) return shorter;
    }
    return buf;
}

std::string rates_csv_row(NoiseModel model, const NoiseConfig& applied, const RateEstimate& est,
                          uint64_t seed) {
    std::ostringstream out;
    out << to_string(model) << ',' << format_double(applied.p_s) << ','
        << format_double(applied.p_t) << ',' << format_double(applied.p_m) << ','
        << format_double(applied.p_p) << ',' << est.trials << ',' << est.count_trivial << ','
        << est.count_x << ',' << est.count_y << ',' << est.count_z << ','
        << format_double(est.total_rate) << ',' << format_double(est.logical_rate) << ','
        << format_double(est.logical_rate_incl_y) << ',' << format_double(est.stderr_total) << ','
        << format_double(est.stderr_logical) << ',' << seed;
    return out.str();
}

}  // namespace bare
