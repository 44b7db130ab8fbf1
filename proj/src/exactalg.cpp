#include "cfikit/exactalg.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace cfikit::exact {

IntMatrix IntMatrix::parse(std::istream& in) {
    std::size_t rows, cols;
    if (!(in >> rows >> cols)) throw std::runtime_error("intmatrix parse: bad header");
    IntMatrix m(rows, cols);
    for (auto& x : m.a)
        if (!(in >> x)) throw std::runtime_error("intmatrix parse: missing entry");
    return m;
}

void IntMatrix::print(std::ostream& out) const {
    out << rows << ' ' << cols << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            out << at(r, c) << (c + 1 == cols ? '\n' : ' ');
    }
}

BigInt det(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = k; c < n; ++c) std::swap(w.at(k, c), w.at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                // division is exact in Bareiss elimination
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

uint64_t to_mod(const BigInt& v, uint64_t p) {
    BigInt r = v % BigInt(p);
    if (r < 0) r += p;
    return r.convert_to<uint64_t>();
}

}  // namespace

uint64_t det_mod(const IntMatrix& m, uint64_t p) {
    if (m.rows != m.cols) throw std::invalid_argument("det_mod: matrix not square");
    if (p >= (uint64_t(1) << 31) || !is_prime(p))
        throw std::invalid_argument("det_mod: modulus must be a prime < 2^31");
    std::size_t n = m.rows;
    std::vector<uint64_t> w(n * n);
    for (std::size_t i = 0; i < n * n; ++i) w[i] = to_mod(m.a[i], p);
    uint64_t det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t c = k; c < n; ++c) std::swap(w[k * n + c], w[piv * n + c]);
            det = (p - det) % p;
        }
        uint64_t pv = w[k * n + k];
        det = det * pv % p;
        uint64_t inv = pow_mod(pv, p - 2, p);
        for (std::size_t i = k + 1; i < n; ++i) {
            uint64_t f = w[i * n + k] * inv % p;
            if (!f) continue;
            for (std::size_t c = k; c < n; ++c)
                w[i * n + c] = (w[i * n + c] + (p - f) * w[k * n + c]) % p;
        }
    }
    return det;
}

BigInt permanent_ryser(const IntMatrix& m, std::size_t cap) {
    if (m.rows != m.cols) throw std::invalid_argument("permanent: matrix not square");
    std::size_t n = m.rows;
    if (n > cap) throw std::invalid_argument("permanent: size exceeds cap");
    if (n == 0) return 1;

    // Fast path when every entry fits in int64 and products of absolute row
    // sums stay below 2^62 (the Gray-code accumulator then fits __int128).
    bool small = true;
    double log2bound = 0.0;
    std::vector<long long> small_entries(n * n);
    for (std::size_t i = 0; i < n * n && small; ++i) {
        const BigInt& v = m.a[i];
        if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
            small = false;
        else
            small_entries[i] = v.convert_to<long long>();
    }
    if (small) {
        for (std::size_t r = 0; r < n; ++r) {
            double rowsum = 1.0;  // at least 1 so log is safe
            for (std::size_t c = 0; c < n; ++c)
                rowsum += std::abs(double(small_entries[r * n + c]));
            log2bound += std::log2(rowsum);
        }
        if (log2bound > 62.0) small = false;
    }

    int outer_sign = (n % 2 == 0) ? 1 : -1;
    uint64_t full = uint64_t(1) << n;

    if (small) {
        std::vector<long long> rowsum(n, 0);
        __int128 total = 0;
        uint64_t gray = 0;
        for (uint64_t s = 1; s < full; ++s) {
            uint64_t next_gray = s ^ (s >> 1);
            uint64_t diff = gray ^ next_gray;
            std::size_t j = std::countr_zero(diff);
            bool added = next_gray & diff;
            for (std::size_t i = 0; i < n; ++i) {
                long long e = small_entries[i * n + j];
                rowsum[i] += added ? e : -e;
            }
            gray = next_gray;
            __int128 prod = 1;
            for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
            int sgn = (std::popcount(gray) % 2 == 0) ? 1 : -1;
            total += sgn > 0 ? prod : -prod;
        }
        bool neg = total < 0;
        unsigned __int128 mag = neg ? -(unsigned __int128)total : (unsigned __int128)total;
        BigInt result = BigInt(uint64_t(mag >> 64)) << 64 | BigInt(uint64_t(mag));
        if (neg) result = -result;
        return outer_sign > 0 ? result : -result;
    }

    std::vector<BigInt> rowsum(n, 0);
    BigInt total = 0;
    uint64_t gray = 0;
    for (uint64_t s = 1; s < full; ++s) {
        uint64_t next_gray = s ^ (s >> 1);
        uint64_t diff = gray ^ next_gray;
        std::size_t j = std::countr_zero(diff);
        bool added = next_gray & diff;
        for (std::size_t i = 0; i < n; ++i) {
            if (added) rowsum[i] += m.at(i, j);
            else rowsum[i] -= m.at(i, j);
        }
        gray = next_gray;
        BigInt prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
        if (std::popcount(gray) % 2 == 0) total += prod;
        else total -= prod;
    }
    return outer_sign > 0 ? total : -total;
}

int permutation_sign(const std::vector<uint32_t>& images) {
    std::size_t n = images.size();
    std::vector<bool> seen(n, false);
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = images[j];
            if (j >= n) throw std::invalid_argument("permutation_sign: image out of range");
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

int matching_sign(const std::vector<uint32_t>& mu,
                  const std::vector<uint32_t>& row_order,
                  const std::vector<uint32_t>& col_order) {
    std::size_t n = mu.size();
    if (row_order.size() != n || col_order.size() != n)
        throw std::invalid_argument("matching_sign: order size mismatch");
    std::vector<uint32_t> col_pos(n);
    for (std::size_t j = 0; j < n; ++j) col_pos[col_order[j]] = uint32_t(j);
    std::vector<uint32_t> pi(n);
    for (std::size_t i = 0; i < n; ++i) pi[i] = col_pos[mu[row_order[i]]];
    return permutation_sign(pi);
}

}  // namespace cfikit::exact
