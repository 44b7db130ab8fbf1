#pragma once
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cfikit::gf2 {

// Bit vector over GF(2), packed 64 bits per word.
struct BitVec {
    std::size_t n = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(std::size_t n_) : n(n_), w((n_ + 63) / 64, 0) {}

    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w[i >> 6] |= m; else w[i >> 6] &= ~m;
    }
    void operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    bool zero() const {
        for (uint64_t x : w) if (x) return false;
        return true;
    }
    std::size_t popcount() const;
    std::vector<uint32_t> support() const;  // ascending indices of set bits
    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
};

class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          bits_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t m = uint64_t(1) << (c & 63);
        uint64_t& word = bits_[r * words_ + (c >> 6)];
        if (v) word |= m; else word &= ~m;
    }

    BitVec row(std::size_t r) const;
    void xor_rows(std::size_t dst, std::size_t src);  // row dst ^= row src

    std::size_t rank() const;

    // Basis of { x : x^T M = 0 }; each vector indexes rows of M.
    std::vector<BitVec> left_null_space_basis() const;

    // Is v (length cols) a GF(2) combination of the rows?
    bool in_row_span(const BitVec& v) const;

    // Text format: "rows cols" on the first line, then one 0/1 string per row.
    static GF2Matrix parse(std::istream& in);
    void print(std::ostream& out) const;

    bool operator==(const GF2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> bits_;
};

// Smallest-support zero-sum set of rows (support of a left-null vector),
// |S| <= max_size, searching null-basis vectors and their XORs up to
// combination depth `depth` (default 2). Ties break toward the
// lexicographically least support. Returns nullopt when nothing admissible
// is found within the searched combinations.
std::optional<std::vector<uint32_t>> find_zero_sum_set(
    const GF2Matrix& m, std::size_t max_size, unsigned depth = 2);

}  // namespace cfikit::gf2
