#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codegb/errors.hpp"
#include "codegb/gf2.hpp"

namespace codegb {

// Element of the free commutative monoid on n variables x1..xn, stored as an
// exponent vector. Exponents are 8-bit; going past 255 is a hard error (the
// algorithms here never push degrees anywhere near that).
class Monomial {
public:
    explicit Monomial(std::size_t vars) : exp_(vars, 0) {}

    static Monomial one(std::size_t vars) { return Monomial(vars); }

    // x_{index+1}, 0-based index.
    static Monomial variable(std::size_t vars, std::size_t index) {
        Monomial m(vars);
        m.exp_[index] = 1;
        return m;
    }

    std::size_t vars() const { return exp_.size(); }

    unsigned exponent(std::size_t i) const { return exp_[i]; }

    unsigned degree() const {
        unsigned d = 0;
        for (std::uint8_t e : exp_) d += e;
        return d;
    }

    bool is_one() const { return degree() == 0; }

    std::size_t support_size() const {
        std::size_t s = 0;
        for (std::uint8_t e : exp_)
            if (e) ++s;
        return s;
    }

    bool is_squarefree() const {
        for (std::uint8_t e : exp_)
            if (e > 1) return false;
        return true;
    }

    // this * x_{i+1}
    Monomial times_var(std::size_t i) const {
        Monomial m = *this;
        if (m.exp_[i] == 255) throw std::overflow_error("monomial exponent overflow");
        ++m.exp_[i];
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.vars() != b.vars()) throw DimensionError("monomial variable count mismatch");
        Monomial m = a;
        for (std::size_t i = 0; i < m.exp_.size(); ++i) {
            unsigned e = unsigned(m.exp_[i]) + unsigned(b.exp_[i]);
            if (e > 255) throw std::overflow_error("monomial exponent overflow");
            m.exp_[i] = std::uint8_t(e);
        }
        return m;
    }

    // this / b, defined only when b divides this.
    Monomial divide_exact(const Monomial& b) const {
        if (b.vars() != vars()) throw DimensionError("monomial variable count mismatch");
        Monomial m = *this;
        for (std::size_t i = 0; i < m.exp_.size(); ++i) {
            if (b.exp_[i] > m.exp_[i]) throw std::invalid_argument("divide_exact: not divisible");
            m.exp_[i] = std::uint8_t(m.exp_[i] - b.exp_[i]);
        }
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Canonical form: "1", "x3", "x1*x2", "x1^2*x6".
    std::string to_string() const {
        if (is_one()) return "1";
        std::string s;
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            if (!exp_[i]) continue;
            if (!s.empty()) s += '*';
            s += 'x';
            s += std::to_string(i + 1);
            if (exp_[i] > 1) {
                s += '^';
                s += std::to_string(unsigned(exp_[i]));
            }
        }
        return s;
    }

private:
    std::vector<std::uint8_t> exp_;
};

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.vars() != b.vars()) throw DimensionError("monomial variable count mismatch");
    for (std::size_t i = 0; i < a.vars(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

inline Monomial multiply(const Monomial& w, std::size_t var_index) {
    return w.times_var(var_index);
}

inline unsigned degree(const Monomial& w) { return w.degree(); }

inline std::size_t support_size(const Monomial& w) { return w.support_size(); }

inline bool is_squarefree(const Monomial& w) { return w.is_squarefree(); }

// w/x_i for every variable x_i in the support of w; empty for w = 1.
inline std::vector<Monomial> predecessors(const Monomial& w) {
    std::vector<Monomial> pred;
    pred.reserve(w.support_size());
    for (std::size_t i = 0; i < w.vars(); ++i)
        if (w.exponent(i)) pred.push_back(w.divide_exact(Monomial::variable(w.vars(), i)));
    return pred;
}

// Exponents mod 2.
inline BitVector psi(const Monomial& m) {
    BitVector v(m.vars());
    for (std::size_t i = 0; i < m.vars(); ++i)
        if (m.exponent(i) & 1u) v.set(i, true);
    return v;
}

inline Monomial parse_monomial(std::string_view text, std::size_t vars) {
    if (text == "1") return Monomial::one(vars);
    Monomial m = Monomial::one(vars);
    std::size_t pos = 0;
    auto read_number = [&]() -> unsigned long {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw ParseError("monomial: expected a number");
        return std::stoul(std::string(text.substr(start, pos - start)));
    };
    while (true) {
        if (pos >= text.size() || text[pos] != 'x')
            throw ParseError("monomial: expected a factor like x3 or x1^2");
        ++pos;
        unsigned long index = read_number();
        if (index < 1 || index > vars) throw ParseError("monomial: variable index out of range");
        unsigned long exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = read_number();
            if (exp == 0) throw ParseError("monomial: exponent must be positive");
        }
        for (unsigned long i = 0; i < exp; ++i) m = m.times_var(index - 1);
        if (pos == text.size()) break;
        if (text[pos] != '*') throw ParseError("monomial: expected '*' between factors");
        ++pos;
    }
    return m;
}

enum class OrderKind : std::uint8_t { degrevlex, deglex, lex };

// Admissible orderings on monomials. The variable precedence is fixed as
// x_n > x_{n-1} > ... > x_1.
//
// degrevlex ties (equal total degree) are broken at the *least* variable with
// a differing exponent: the monomial with the smaller exponent there is the
// larger one. deglex/lex scan from the most significant variable x_n down and
// the larger exponent wins. lex ignores total degree and is therefore not
// degree compatible.
class TermOrdering {
public:
    constexpr explicit TermOrdering(OrderKind kind = OrderKind::degrevlex) : kind_(kind) {}

    OrderKind kind() const { return kind_; }

    bool degree_compatible() const { return kind_ != OrderKind::lex; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.vars() != b.vars()) throw DimensionError("monomial variable count mismatch");
        const std::size_t n = a.vars();
        if (kind_ != OrderKind::lex) {
            unsigned da = a.degree(), db = b.degree();
            if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (kind_ == OrderKind::degrevlex) {
            for (std::size_t i = 0; i < n; ++i) {
                if (a.exponent(i) != b.exponent(i))
                    return a.exponent(i) > b.exponent(i) ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        }
        for (std::size_t i = n; i-- > 0;) {
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) < b.exponent(i) ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string_view name() const {
        switch (kind_) {
            case OrderKind::degrevlex: return "degrevlex";
            case OrderKind::deglex: return "deglex";
            case OrderKind::lex: return "lex";
        }
        return "?";
    }

    static std::optional<TermOrdering> from_name(std::string_view name) {
        if (name == "degrevlex") return TermOrdering(OrderKind::degrevlex);
        if (name == "deglex") return TermOrdering(OrderKind::deglex);
        if (name == "lex") return TermOrdering(OrderKind::lex);
        return std::nullopt;
    }

    friend bool operator==(const TermOrdering&, const TermOrdering&) = default;

private:
    OrderKind kind_;
};

inline std::strong_ordering compare(const TermOrdering& ord, const Monomial& a, const Monomial& b) {
    return ord.compare(a, b);
}

// For ordered containers keyed by Monomial.
struct MonomialLess {
    TermOrdering ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord.less(a, b); }
};

}  // namespace codegb
