#include "cfikit/gf2.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cfikit::gf2 {

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
}

std::vector<uint32_t> BitVec::support() const {
    std::vector<uint32_t> s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        uint64_t x = w[k];
        while (x) {
            s.push_back(uint32_t(k * 64 + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return s;
}

BitVec GF2Matrix::row(std::size_t r) const {
    BitVec v(cols_);
    for (std::size_t k = 0; k < words_; ++k) v.w[k] = bits_[r * words_ + k];
    return v;
}

void GF2Matrix::xor_rows(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < words_; ++k)
        bits_[dst * words_ + k] ^= bits_[src * words_ + k];
}

namespace {

// Forward elimination over a copy; when track is non-null, the same row ops
// are applied to an identity companion so zero rows expose left-null vectors.
std::size_t eliminate(const GF2Matrix& m, std::vector<BitVec>* comp_out,
                      std::vector<BitVec>* reduced_out,
                      std::vector<std::size_t>* pivot_cols_out) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<BitVec> a(rows);
    std::vector<BitVec> comp;
    for (std::size_t r = 0; r < rows; ++r) a[r] = m.row(r);
    if (comp_out) {
        comp.assign(rows, BitVec(rows));
        for (std::size_t r = 0; r < rows; ++r) comp[r].set(r, true);
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && !a[p].get(c)) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        if (comp_out) std::swap(comp[rank], comp[p]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && a[r].get(c)) {
                a[r] ^= a[rank];
                if (comp_out) comp[r] ^= comp[rank];
            }
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    if (comp_out) *comp_out = std::move(comp);
    if (reduced_out) *reduced_out = std::move(a);
    if (pivot_cols_out) *pivot_cols_out = std::move(pivot_cols);
    return rank;
}

}  // namespace

std::size_t GF2Matrix::rank() const {
    return eliminate(*this, nullptr, nullptr, nullptr);
}

std::vector<BitVec> GF2Matrix::left_null_space_basis() const {
    std::vector<BitVec> comp, reduced;
    std::size_t r = eliminate(*this, &comp, &reduced, nullptr);
    std::vector<BitVec> basis;
    for (std::size_t i = r; i < rows_; ++i) basis.push_back(comp[i]);
    return basis;
}

bool GF2Matrix::in_row_span(const BitVec& v) const {
    if (v.n != cols_) throw std::invalid_argument("in_row_span: length mismatch");
    std::vector<BitVec> reduced;
    std::vector<std::size_t> pivots;
    eliminate(*this, nullptr, &reduced, &pivots);
    BitVec x = v;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (x.get(pivots[i])) x ^= reduced[i];
    return x.zero();
}

GF2Matrix GF2Matrix::parse(std::istream& in) {
    std::size_t rows, cols;
    if (!(in >> rows >> cols)) throw std::runtime_error("gf2 parse: bad header");
    GF2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        if (!(in >> line) || line.size() != cols)
            throw std::runtime_error("gf2 parse: bad row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) {
            if (line[c] != '0' && line[c] != '1')
                throw std::runtime_error("gf2 parse: non-binary digit");
            m.set(r, c, line[c] == '1');
        }
    }
    return m;
}

void GF2Matrix::print(std::ostream& out) const {
    out << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        std::string line(cols_, '0');
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) line[c] = '1';
        out << line << '\n';
    }
}

std::optional<std::vector<uint32_t>> find_zero_sum_set(
    const GF2Matrix& m, std::size_t max_size, unsigned depth) {
    auto basis = m.left_null_space_basis();
    std::optional<std::vector<uint32_t>> best;
    auto consider = [&](const BitVec& v) {
        std::size_t pc = v.popcount();
        if (pc == 0 || pc > max_size) return;
        auto s = v.support();
        if (!best || s.size() < best->size() ||
            (s.size() == best->size() && s < *best))
            best = std::move(s);
    };
    if (depth >= 1)
        for (const auto& b : basis) consider(b);
    if (depth >= 2) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                BitVec v = basis[i];
                v ^= basis[j];
                consider(v);
            }
    }
    return best;
}

}  // namespace cfikit::gf2
