#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cosmetic {

// Dense matrix over the two-element field, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t r, std::size_t c, bool v = true) {
        check(r, c);
        auto& w = bits_[r * words_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) {
        check(r, c);
        bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }

    // Gaussian elimination on a copy.
    std::size_t rank() const {
        std::vector<std::uint64_t> m = bits_;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            const std::size_t w = c / 64;
            const std::uint64_t mask = std::uint64_t{1} << (c % 64);
            std::size_t pivot = rank;
            while (pivot < rows_ && !(m[pivot * words_ + w] & mask)) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t k = 0; k < words_; ++k) std::swap(m[pivot * words_ + k], m[rank * words_ + k]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank || !(m[r * words_ + w] & mask)) continue;
                for (std::size_t k = w; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
            }
            ++rank;
        }
        return rank;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix index out of range");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace cosmetic
