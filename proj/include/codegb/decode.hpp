#pragma once

#include <optional>
#include <string>

#include "codegb/errors.hpp"
#include "codegb/fglm.hpp"
#include "codegb/gf2.hpp"
#include "codegb/monomial.hpp"

namespace codegb {

/*
 * Complete decoding up to the error-correcting capability t.
 *
 * A received vector y maps to the squarefree word w with psi(w) = y. The
 * canonical form of w modulo the code ideal, taken under a degree-compatible
 * ordering, is the smallest word in y's coset; if its weight is at most t it
 * is exactly the error pattern, otherwise y holds more than t errors.
 */

enum class DecodeOutcome { decoded, too_many_errors };

struct DecodeResult {
    DecodeOutcome outcome;
    unsigned canonical_weight;
    std::optional<BitVector> error;     // set when decoded
    std::optional<BitVector> codeword;  // set when decoded

    bool decoded() const { return outcome == DecodeOutcome::decoded; }
};

// Squarefree word with support equal to the support of y.
inline Monomial vector_to_monomial(const BitVector& y) {
    Monomial m = Monomial::one(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y.get(i)) m = m.times_var(i);
    return m;
}

// Rewrite w with binomials of a reduced basis until no lead divides it.
// Every step strictly decreases the word, so this terminates; the cap is a
// defense against a corrupted basis.
inline Monomial canonical_form_gb(const Monomial& w, const GroebnerBasis& gb) {
    Monomial m = w;
    for (std::size_t steps = 0; steps < 1u << 20; ++steps) {
        bool rewritten = false;
        for (const Binomial& b : gb) {
            if (divides(b.lead, m)) {
                m = m.divide_exact(b.lead) * b.tail;
                rewritten = true;
                break;
            }
        }
        if (!rewritten) return m;
    }
    throw std::logic_error("canonical_form_gb: rewriting did not terminate");
}

// Walk the matphi tables from the class of 1, one application per variable
// with odd exponent (the tables are involutions, so even exponents cancel).
inline Monomial canonical_form_matphi(const Monomial& w, const NormalSet& nset,
                                      const MatphiSet& phi) {
    if (nset.empty() || !nset.word(0).is_one())
        throw std::logic_error("canonical_form_matphi: normal set does not start at 1");
    std::uint32_t idx = 0;
    for (std::size_t k = 0; k < w.vars(); ++k)
        if (w.exponent(k) & 1u) idx = phi.apply(k, idx);
    return nset.word(idx);
}

inline DecodeResult decode(const BitVector& y, const FglmResult& result,
                           std::optional<unsigned> t_override = std::nullopt) {
    if (!result.ordering.degree_compatible())
        throw ValidationError("decoding requires a degree-compatible ordering");
    if (y.size() != result.code.n()) throw DimensionError("received vector has wrong length");

    unsigned t;
    if (t_override)
        t = *t_override;
    else if (result.t_detected)
        t = *result.t_detected;
    else if (result.t_degenerate)
        t = unsigned(result.code.n());  // every coset is a singleton
    else
        throw ValidationError("error-correcting capability unknown; run with t detection");

    const Monomial w = vector_to_monomial(y);
    const Monomial can = result.matphi ? canonical_form_matphi(w, result.normal_set, *result.matphi)
                                       : canonical_form_gb(w, result.gb);
    BitVector e = psi(can);
    const unsigned canonical_weight = unsigned(e.weight());
    if (canonical_weight > t)
        return DecodeResult{DecodeOutcome::too_many_errors, canonical_weight, std::nullopt,
                            std::nullopt};
    BitVector codeword = y + e;
    return DecodeResult{DecodeOutcome::decoded, canonical_weight, std::move(e),
                        std::move(codeword)};
}

// CLI text form: syndrome, error (or detection notice), codeword.
inline std::string format_decode(const Syndrome& syndrome, const DecodeResult& res) {
    std::string out = "syndrome=" + syndrome.to_string() + '\n';
    if (res.decoded()) {
        out += "error=" + res.error->to_string() + '\n';
        out += "codeword=" + res.codeword->to_string() + '\n';
    } else {
        out += "error=TOO_MANY_ERRORS(w=" + std::to_string(res.canonical_weight) + ")\n";
    }
    return out;
}

}  // namespace codegb
