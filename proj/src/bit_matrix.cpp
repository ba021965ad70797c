#include "bare/bit_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace bare {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(static_cast<size_t>(rows) * wpr_, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

bool BitMatrix::get(int r, int c) const {
    return (bits_[static_cast<size_t>(r) * wpr_ + c / 64] >> (c % 64)) & 1;
}

void BitMatrix::set(int r, int c, bool v) {
    uint64_t& w = bits_[static_cast<size_t>(r) * wpr_ + c / 64];
    uint64_t mask = uint64_t{1} << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
}

std::span<const uint64_t> BitMatrix::row(int r) const {
    return {bits_.data() + static_cast<size_t>(r) * wpr_, static_cast<size_t>(wpr_)};
}

std::span<uint64_t> BitMatrix::row(int r) {
    return {bits_.data() + static_cast<size_t>(r) * wpr_, static_cast<size_t>(wpr_)};
}

void BitMatrix::xor_row_into(int src, int dst) {
    auto s = row(src);
    auto d = row(dst);
    for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    for (int w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
}

int BitMatrix::row_reduce() {
    pivot_cols_.clear();
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (get(r, c)) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        swap_rows(rank, pivot);
        for (int r = 0; r < rows_; ++r) {
            if (r != rank && get(r, c)) xor_row_into(rank, r);
        }
        pivot_cols_.push_back(c);
        ++rank;
    }
    return rank;
}

bool BitMatrix::in_row_space(std::span<const uint64_t> vec) const {
    if (static_cast<int>(vec.size()) != wpr_) throw std::invalid_argument("vector width mismatch");
    std::vector<uint64_t> v(vec.begin(), vec.end());
    for (size_t i = 0; i < pivot_cols_.size(); ++i) {
        int c = pivot_cols_[i];
        if ((v[c / 64] >> (c % 64)) & 1) {
            auto r = row(static_cast<int>(i));
            for (int w = 0; w < wpr_; ++w) v[w] ^= r[w];
        }
    }
    for (uint64_t w : v)
        if (w) return false;
    return true;
}

}  // namespace bare
