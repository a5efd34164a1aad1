#pragma once

#include <cstdint>
#include <vector>

namespace cbl {

// Dense bit-packed GF(2) matrix with row-reduction rank. Matrices at desk
// scale are tiny; exactness matters, speed does not.
class Gf2Matrix {
public:
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(static_cast<size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c) { bits_[static_cast<size_t>(r) * words_ + c / 64] |= 1ULL << (c % 64); }

    bool get(int r, int c) const {
        return (bits_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1ULL;
    }

    // Rank by Gaussian elimination; the matrix itself is left untouched.
    int rank() const {
        std::vector<uint64_t> work = bits_;
        auto row = [&](int r) { return work.data() + static_cast<size_t>(r) * words_; };
        int rk = 0;
        for (int c = 0; c < cols_ && rk < rows_; ++c) {
            int pivot = -1;
            for (int r = rk; r < rows_; ++r) {
                if ((row(r)[c / 64] >> (c % 64)) & 1ULL) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) continue;
            if (pivot != rk) {
                for (int w = 0; w < words_; ++w) std::swap(row(pivot)[w], row(rk)[w]);
            }
            for (int r = 0; r < rows_; ++r) {
                if (r != rk && ((row(r)[c / 64] >> (c % 64)) & 1ULL)) {
                    for (int w = 0; w < words_; ++w) row(r)[w] ^= row(rk)[w];
                }
            }
            ++rk;
        }
        return rk;
    }

private:
    int rows_;
    int cols_;
    int words_;
    std::vector<uint64_t> bits_;
};

}  // namespace cbl
