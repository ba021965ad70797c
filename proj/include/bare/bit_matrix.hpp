#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bare {

// Dense GF(2) matrix, rows word-packed.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    std::span<const uint64_t> row(int r) const;
    std::span<uint64_t> row(int r);

    void xor_row_into(int src, int dst);
    void swap_rows(int a, int b);

    // Gaussian elimination to reduced row-echelon form; returns rank.
    // Idempotent: reducing a reduced matrix leaves it unchanged.
    int row_reduce();

    // Requires this matrix reduced. True iff vec lies in the row space.
    bool in_row_space(std::span<const uint64_t> vec) const;

    bool operator==(const BitMatrix&) const = default;

  private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<int> pivot_cols_;  // filled by row_reduce
};

}  // namespace bare
