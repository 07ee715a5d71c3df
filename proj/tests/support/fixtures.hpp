#pragma once

#include <random>
#include <string>
#include <vector>

#include <codegb/codegb.hpp>

namespace fixtures {

// [6,3] code used throughout: H rows 111/101/011/100/010/001.
inline constexpr const char* kCodeText =
    "6 3\n"
    "1 1 1\n"
    "1 0 1\n"
    "0 1 1\n"
    "1 0 0\n"
    "0 1 0\n"
    "0 0 1\n";

inline codegb::BinaryCode golden_code() { return codegb::parse_code(kCodeText); }

// Reduced basis of the golden code under degrevlex, as printed lines in
// increasing lead order.
inline const std::vector<std::string>& golden_gb_lines() {
    static const std::vector<std::string> lines = {
        "x1^2 - 1",      "x1*x2 - x5", "x1*x3 - x4", "x1*x4 - x3", "x1*x5 - x2",
        "x2^2 - 1",      "x2*x3 - x1*x6", "x2*x4 - x6", "x2*x5 - x1", "x2*x6 - x4",
        "x3^2 - 1",      "x3*x4 - x1", "x3*x5 - x6", "x3*x6 - x5",
        "x4^2 - 1",      "x4*x5 - x1*x6", "x4*x6 - x2",
        "x5^2 - 1",      "x5*x6 - x3",
        "x6^2 - 1",
    };
    return lines;
}

inline const std::vector<std::string>& golden_normal_set_lines() {
    static const std::vector<std::string> lines = {"1",  "x1", "x2", "x3",
                                                   "x4", "x5", "x6", "x1*x6"};
    return lines;
}

// The 8 codewords of the golden code.
inline const std::vector<std::string>& golden_codewords() {
    static const std::vector<std::string> words = {
        "000000", "101100", "111001", "110010", "010101", "011110", "001011", "100111",
    };
    return words;
}

inline codegb::BitMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::bernoulli_distribution bit(0.5);
    std::vector<codegb::BitVector> data(rows, codegb::BitVector(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (bit(rng)) data[i].set(j, true);
    return codegb::BitMatrix(rows, cols, std::move(data));
}

// Random n x r parity-check matrix of full column rank.
inline codegb::BinaryCode random_full_rank_code(std::mt19937& rng, std::size_t n, std::size_t r) {
    for (;;) {
        codegb::BitMatrix h = random_matrix(rng, n, r);
        if (codegb::rank(h) == r) return codegb::BinaryCode(std::move(h));
    }
}

inline codegb::BitVector random_vector(std::mt19937& rng, std::size_t len) {
    std::bernoulli_distribution bit(0.5);
    codegb::BitVector v(len);
    for (std::size_t i = 0; i < len; ++i)
        if (bit(rng)) v.set(i, true);
    return v;
}

inline codegb::Monomial random_monomial(std::mt19937& rng, std::size_t vars,
                                        unsigned max_exponent = 3) {
    std::uniform_int_distribution<unsigned> exp(0, max_exponent);
    codegb::Monomial m = codegb::Monomial::one(vars);
    for (std::size_t i = 0; i < vars; ++i) {
        const unsigned e = exp(rng);
        for (unsigned j = 0; j < e; ++j) m = m.times_var(i);
    }
    return m;
}

}  // namespace fixtures
