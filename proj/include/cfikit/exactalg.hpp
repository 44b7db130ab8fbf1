#pragma once
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cfikit/bigint.hpp"

namespace cfikit::exact {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<BigInt> a;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    // Text format: "rows cols" then whitespace-separated integer entries.
    static IntMatrix parse(std::istream& in);
    void print(std::ostream& out) const;

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

// Fraction-free Bareiss elimination; exact for arbitrary integer entries.
BigInt det(const IntMatrix& m);

// Determinant mod a prime p (primality checked; p < 2^31).
uint64_t det_mod(const IntMatrix& m, uint64_t p);

// Ryser's formula with Gray-code updates. Throws when n exceeds `cap`.
BigInt permanent_ryser(const IntMatrix& m, std::size_t cap = 30);

// Sign of a permutation given as an image table.
int permutation_sign(const std::vector<uint32_t>& images);

// Sign of a perfect matching mu (mu[left] = right) relative to the row order
// eta (row i holds left vertex row_order[i]) and column order eta'
// (column j holds right vertex col_order[j]): sgn(eta' . mu . eta^{-1}).
int matching_sign(const std::vector<uint32_t>& mu,
                  const std::vector<uint32_t>& row_order,
                  const std::vector<uint32_t>& col_order);

}  // namespace cfikit::exact
