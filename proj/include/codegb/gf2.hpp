#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codegb/errors.hpp"

namespace codegb {

// Fixed-length vector over GF(2), packed into 64-bit words.
// Coordinate 0 is the first coordinate of the printed tuple; unused high
// bits of the last word are kept zero so equality and weight stay cheap.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                v.set(i, true);
            else if (bits[i] != '0')
                throw ParseError("bit string may contain only '0' and '1'");
        }
        return v;
    }

    // Little-endian: bit i of `value` becomes coordinate i.
    static BitVector from_uint(std::size_t len, std::uint64_t value) {
        BitVector v(len);
        for (std::size_t i = 0; i < len && i < 64; ++i)
            if ((value >> i) & 1u) v.set(i, true);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    void set(std::size_t i, bool b) {
        const std::uint64_t mask = std::uint64_t(1) << (i % 64);
        if (b)
            words_[i / 64] |= mask;
        else
            words_[i / 64] &= ~mask;
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t word : words_) w += std::size_t(std::popcount(word));
        return w;
    }

    bool is_zero() const {
        for (std::uint64_t word : words_)
            if (word != 0) return false;
        return true;
    }

    BitVector& operator+=(const BitVector& other) {
        if (other.len_ != len_) throw DimensionError("BitVector length mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend BitVector operator+(BitVector a, const BitVector& b) { return a += b; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::uint64_t to_uint() const {
        if (len_ > 64) throw DimensionError("BitVector too long for to_uint");
        return words_.empty() ? 0 : words_[0];
    }

    // "111010": coordinate 0 first.
    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    // "(1,1,1,0,1,0)"
    std::string to_tuple_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < len_; ++i) {
            if (i) s += ',';
            s += get(i) ? '1' : '0';
        }
        s += ')';
        return s;
    }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Rectangular matrix over GF(2), stored as bit-packed rows.
// Immutable after construction.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols, std::vector<BitVector> row_data)
        : rows_(rows), cols_(cols), row_(std::move(row_data)) {
        if (row_.size() != rows_) throw DimensionError("BitMatrix: wrong number of rows");
        for (const BitVector& r : row_)
            if (r.size() != cols_) throw DimensionError("BitMatrix: ragged row");
    }

    explicit BitMatrix(std::vector<BitVector> row_data)
        : BitMatrix(row_data.size(), row_data.empty() ? 0 : row_data.front().size(),
                    std::move(row_data)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const BitVector& row(std::size_t i) const { return row_[i]; }
    bool at(std::size_t i, std::size_t j) const { return row_[i].get(j); }

    BitMatrix transposed() const {
        std::vector<BitVector> t(cols_, BitVector(rows_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j)) t[j].set(i, true);
        return BitMatrix(cols_, rows_, std::move(t));
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BitVector> row_;
};

inline BitVector vec_add(const BitVector& a, const BitVector& b) { return a + b; }

inline std::size_t weight(const BitVector& v) { return v.weight(); }

// y.M over GF(2): XOR of the rows of M selected by the support of y.
inline BitVector vec_mat_mul(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.rows()) throw DimensionError("vec_mat_mul: length != row count");
    BitVector acc(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (v.get(i)) acc += m.row(i);
    return acc;
}

// Gaussian elimination on a copy of the rows.
inline std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    std::size_t rk = 0;
    for (std::size_t col = 0; col < m.cols() && rk < rows.size(); ++col) {
        std::size_t pivot = rk;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rk], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rk && rows[i].get(col)) rows[i] += rows[rk];
        ++rk;
    }
    return rk;
}

}  // namespace codegb
