#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "codegb/errors.hpp"
#include "codegb/gf2.hpp"
#include "codegb/monomial.hpp"

namespace codegb {

// Syndrome of a vector or word: y.H, a length-r bit vector.
struct Syndrome {
    BitVector bits;

    std::size_t size() const { return bits.size(); }
    std::uint64_t to_uint() const { return bits.to_uint(); }
    std::string to_string() const { return bits.to_string(); }
    bool is_zero() const { return bits.is_zero(); }

    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

// Binary [n, k] linear code given by an n x r parity-check matrix H with
// r = n - k and syndrome map y -> y.H. H must have full column rank r so
// that the syndrome space is all of GF(2)^r.
class BinaryCode {
public:
    explicit BinaryCode(BitMatrix h) : h_(std::move(h)) {
        if (h_.cols() < 1 || h_.cols() > h_.rows())
            throw ValidationError("parity-check matrix needs 1 <= r <= n");
        if (rank(h_) != h_.cols())
            throw ValidationError("parity-check matrix is rank-deficient");
    }

    std::size_t n() const { return h_.rows(); }
    std::size_t r() const { return h_.cols(); }
    std::size_t k() const { return n() - r(); }
    const BitMatrix& h() const { return h_; }
    const BitVector& row(std::size_t i) const { return h_.row(i); }

    Syndrome syndrome(const BitVector& y) const {
        if (y.size() != n()) throw DimensionError("received vector has wrong length");
        return Syndrome{vec_mat_mul(y, h_)};
    }

    Syndrome syndrome(const Monomial& w) const {
        if (w.vars() != n()) throw DimensionError("word has wrong variable count");
        return Syndrome{vec_mat_mul(psi(w), h_)};
    }

    // Basis of the null space {y : y.H = 0}; k vectors of length n.
    std::vector<BitVector> kernel_basis() const {
        // RREF of H^T (r x n); one basis vector per free column.
        std::vector<BitVector> rows;
        rows.reserve(r());
        const BitMatrix ht = h_.transposed();
        for (std::size_t i = 0; i < r(); ++i) rows.push_back(ht.row(i));

        std::vector<std::size_t> pivot_col;
        std::size_t rk = 0;
        for (std::size_t col = 0; col < n() && rk < rows.size(); ++col) {
            std::size_t pivot = rk;
            while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[rk], rows[pivot]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != rk && rows[i].get(col)) rows[i] += rows[rk];
            pivot_col.push_back(col);
            ++rk;
        }

        std::vector<bool> is_pivot(n(), false);
        for (std::size_t c : pivot_col) is_pivot[c] = true;

        std::vector<BitVector> basis;
        basis.reserve(k());
        for (std::size_t free = 0; free < n(); ++free) {
            if (is_pivot[free]) continue;
            BitVector v(n());
            v.set(free, true);
            for (std::size_t i = 0; i < pivot_col.size(); ++i)
                if (rows[i].get(free)) v.set(pivot_col[i], true);
            basis.push_back(v);
        }
        return basis;
    }

    // All 2^k codewords, in binary-counter order over the kernel basis.
    std::vector<BitVector> codewords() const {
        if (k() > 24) throw GuardError("codeword enumeration limited to k <= 24");
        const std::vector<BitVector> basis = kernel_basis();
        std::vector<BitVector> words;
        words.reserve(std::size_t(1) << k());
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k()); ++mask) {
            BitVector c(n());
            for (std::size_t i = 0; i < basis.size(); ++i)
                if ((mask >> i) & 1u) c += basis[i];
            words.push_back(std::move(c));
        }
        return words;
    }

    // Minimum weight over the nonzero codewords, by brute force.
    unsigned min_distance() const {
        if (k() == 0) throw ValidationError("trivial code {0} has no minimum distance");
        if (k() > 24) throw GuardError("minimum distance search limited to k <= 24");
        const std::vector<BitVector> basis = kernel_basis();
        // Gray-code walk over the 2^k combinations, one basis XOR per step.
        BitVector c(n());
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::uint64_t step = 1; step < (std::uint64_t(1) << k()); ++step) {
            c += basis[std::size_t(std::countr_zero(step))];
            best = std::min(best, c.weight());
        }
        return unsigned(best);
    }

    unsigned error_capability() const { return (min_distance() - 1) / 2; }

private:
    BitMatrix h_;
};

inline Syndrome syndrome_vec(const BinaryCode& code, const BitVector& y) {
    return code.syndrome(y);
}

inline Syndrome syndrome_word(const BinaryCode& code, const Monomial& w) {
    return code.syndrome(w);
}

inline std::vector<BitVector> enumerate_codewords(const BinaryCode& code) {
    return code.codewords();
}

inline unsigned min_distance(const BinaryCode& code) { return code.min_distance(); }

inline unsigned error_capability(const BinaryCode& code) { return code.error_capability(); }

namespace detail {

inline std::vector<std::string> read_nonblank_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

// One matrix row: either `width` space-separated 0/1 tokens or a single
// contiguous 0/1 string of length `width`.
inline BitVector parse_matrix_row(const std::string& line, std::size_t width,
                                  std::size_t line_no) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    const std::string where = "line " + std::to_string(line_no);

    if (tokens.size() == 1 && tokens[0].size() == width && width > 1) {
        for (char c : tokens[0])
            if (c != '0' && c != '1')
                throw ParseError("non-binary entry on " + where);
        return BitVector::from_string(tokens[0]);
    }
    if (tokens.size() != width)
        throw ParseError("expected " + std::to_string(width) + " entries on " + where);
    BitVector row(width);
    for (std::size_t j = 0; j < width; ++j) {
        if (tokens[j] == "1")
            row.set(j, true);
        else if (tokens[j] != "0")
            throw ParseError("non-binary entry on " + where);
    }
    return row;
}

}  // namespace detail

// Code file: first non-blank line `n r`, then the parity-check matrix, one
// row per line. By default the matrix block is H itself (n lines of r bits);
// with `transposed` it is H^T in the common (n-k) x n convention (r lines of
// n bits). Rows may be space-separated or contiguous bit strings.
inline BinaryCode parse_code(std::istream& in, bool transposed = false) {
    const std::vector<std::string> lines = detail::read_nonblank_lines(in);
    if (lines.empty()) throw ParseError("empty code file");

    std::istringstream header(lines[0]);
    unsigned long long n = 0, r = 0;
    std::string extra;
    if (!(header >> n >> r) || (header >> extra))
        throw ParseError("malformed header: expected `n r`");
    if (n == 0 || r == 0 || n > 4096 || r > 4096)
        throw ParseError("malformed header: n and r must be in 1..4096");

    const std::size_t matrix_rows = transposed ? r : n;
    const std::size_t matrix_cols = transposed ? n : r;
    if (lines.size() - 1 != matrix_rows)
        throw ParseError("expected " + std::to_string(matrix_rows) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));

    std::vector<BitVector> rows;
    rows.reserve(matrix_rows);
    for (std::size_t i = 0; i < matrix_rows; ++i)
        rows.push_back(detail::parse_matrix_row(lines[i + 1], matrix_cols, i + 2));

    BitMatrix h(matrix_rows, matrix_cols, std::move(rows));
    if (transposed) h = h.transposed();
    if (h.rows() != n || h.cols() != r) throw ParseError("matrix shape does not match header");
    return BinaryCode(std::move(h));
}

inline BinaryCode parse_code(std::string_view text, bool transposed = false) {
    std::istringstream in{std::string(text)};
    return parse_code(in, transposed);
}

}  // namespace codegb
