#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "codegb/code.hpp"
#include "codegb/decode.hpp"
#include "codegb/errors.hpp"
#include "codegb/fglm.hpp"
#include "codegb/gf2.hpp"
#include "codegb/monomial.hpp"

namespace codegb {

/*
 * Brute-force ground truth, deliberately independent of the engine: the
 * coset table is built from nothing but H and a full scan of GF(2)^n, and
 * the verifiers recompute every claimed relation from raw bit arithmetic.
 */

struct CosetEntry {
    unsigned min_weight = std::numeric_limits<unsigned>::max();
    BitVector leader;             // minimum-weight member, smallest integer on ties
    std::uint64_t min_count = 0;  // members achieving min_weight
    std::uint64_t size = 0;
};

class CosetTable {
public:
    CosetTable(std::size_t n, std::size_t r, std::vector<CosetEntry> entries)
        : n_(n), r_(r), entries_(std::move(entries)) {}

    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    std::size_t size() const { return entries_.size(); }
    const CosetEntry& at(const Syndrome& s) const { return entries_[s.to_uint()]; }
    const CosetEntry& at_index(std::size_t i) const { return entries_[i]; }

private:
    std::size_t n_;
    std::size_t r_;
    std::vector<CosetEntry> entries_;
};

// Exhaustive scan of all 2^n vectors grouped by syndrome. Ascending integer
// order plus strict-improvement updates make the leader the smallest
// little-endian integer among the minimum-weight coset members.
inline CosetTable build_coset_table(const BinaryCode& code) {
    if (code.n() > 16) throw GuardError("coset table limited to n <= 16");
    const std::size_t n = code.n();
    std::vector<CosetEntry> entries(std::size_t(1) << code.r());
    for (std::uint64_t value = 0; value < (std::uint64_t(1) << n); ++value) {
        const BitVector y = BitVector::from_uint(n, value);
        const std::uint64_t s = vec_mat_mul(y, code.h()).to_uint();
        CosetEntry& e = entries[s];
        const unsigned w = unsigned(y.weight());
        ++e.size;
        if (w < e.min_weight) {
            e.min_weight = w;
            e.leader = y;
            e.min_count = 1;
        } else if (w == e.min_weight) {
            ++e.min_count;
        }
    }
    return CosetTable(n, code.r(), std::move(entries));
}

using Report = std::vector<std::string>;

// Structural audit of a finished run: binomial soundness, reducedness,
// normal-set shape, matphi laws, border containment. Empty report = pass.
inline Report verify_gb(const FglmResult& result) {
    Report report;
    const BinaryCode& code = result.code;
    const TermOrdering ord = result.ordering;
    const NormalSet& nset = result.normal_set;
    auto fail = [&report](std::string line) { report.push_back(std::move(line)); };

    const std::size_t s_expected = std::size_t(1) << code.r();
    if (nset.size() != s_expected)
        fail("normal set has " + std::to_string(nset.size()) + " words, expected " +
             std::to_string(s_expected));
    if (nset.empty() || !nset.word(0).is_one()) fail("normal set does not start with 1");

    for (std::size_t i = 0; i < nset.size(); ++i) {
        const Monomial& w = nset.word(i);
        if (!(code.syndrome(w) == nset.syndrome(i)))
            fail("stored syndrome of " + w.to_string() + " is wrong");
        if (!w.is_squarefree()) fail("normal word " + w.to_string() + " is not squarefree");
        if (i > 0 && !(ord.compare(nset.word(i - 1), w) < 0))
            fail("normal set is not strictly increasing at " + w.to_string());
        for (const Monomial& p : predecessors(w))
            if (!nset.contains(p))
                fail("normal set is not an order ideal: " + p.to_string() + " missing below " +
                     w.to_string());
    }

    for (std::size_t i = 0; i < result.gb.size(); ++i) {
        const Binomial& b = result.gb[i];
        if (!(code.syndrome(b.lead) == code.syndrome(b.tail)))
            fail("unsound binomial " + format_binomial(b));
        if (!(ord.compare(b.tail, b.lead) < 0))
            fail("tail not smaller than lead in " + format_binomial(b));
        if (!nset.contains(b.tail))
            fail("tail outside the normal set in " + format_binomial(b));
        if (nset.contains(b.lead)) fail("lead inside the normal set in " + format_binomial(b));
        for (const Monomial& p : predecessors(b.lead))
            if (!nset.contains(p))
                fail("lead " + b.lead.to_string() + " is not a minimal generator");
        if (i > 0 && !(ord.compare(result.gb[i - 1].lead, b.lead) < 0))
            fail("basis leads not strictly increasing at " + format_binomial(b));
        for (std::size_t j = 0; j < result.gb.size(); ++j)
            if (j != i && divides(result.gb[j].lead, b.lead))
                fail("lead " + result.gb[j].lead.to_string() + " divides lead " +
                     b.lead.to_string());
    }

    // Completeness: every product of a normal word is normal or reducible.
    for (std::size_t i = 0; i < nset.size(); ++i) {
        for (std::size_t k = 0; k < code.n(); ++k) {
            const Monomial m = nset.word(i).times_var(k);
            if (nset.contains(m)) continue;
            bool reducible = false;
            for (const Binomial& b : result.gb)
                if (divides(b.lead, m)) {
                    reducible = true;
                    break;
                }
            if (!reducible)
                fail("monomial " + m.to_string() + " is neither normal nor reducible");
        }
    }

    if (result.matphi) {
        const MatphiSet& phi = *result.matphi;
        if (phi.vars() != code.n() || phi.size() != nset.size())
            fail("matphi tables have the wrong shape");
        for (std::size_t k = 0; k < phi.vars() && phi.size() == nset.size(); ++k) {
            std::vector<bool> hit(phi.size(), false);
            for (std::uint32_t i = 0; i < phi.size(); ++i) {
                const std::uint32_t j = phi.apply(k, i);
                if (j >= phi.size()) {
                    fail("matphi image out of range");
                    continue;
                }
                hit[j] = true;
                if (phi.apply(k, j) != i)
                    fail("phi(" + std::to_string(k + 1) + ") is not an involution at row " +
                         std::to_string(i + 1));
                const Syndrome expect{nset.syndrome(i).bits + code.row(k)};
                if (!(nset.syndrome(j) == expect))
                    fail("phi(" + std::to_string(k + 1) + ") disagrees with the syndrome map");
            }
            for (std::size_t j = 0; j < hit.size(); ++j)
                if (!hit[j]) {
                    fail("phi(" + std::to_string(k + 1) + ") is not a permutation");
                    break;
                }
            for (std::size_t k2 = k + 1; k2 < phi.vars(); ++k2)
                for (std::uint32_t i = 0; i < phi.size(); ++i)
                    if (phi.apply(k, phi.apply(k2, i)) != phi.apply(k2, phi.apply(k, i))) {
                        fail("phi(" + std::to_string(k + 1) + ") and phi(" +
                             std::to_string(k2 + 1) + ") do not commute");
                        break;
                    }
        }
    }

    if (result.border) {
        for (const Binomial& b : result.gb) {
            bool found = false;
            for (const Binomial& bb : *result.border)
                if (bb == b) {
                    found = true;
                    break;
                }
            if (!found)
                fail("border basis does not contain reduced-basis element " + format_binomial(b));
        }
        for (const Binomial& bb : *result.border) {
            if (!(code.syndrome(bb.lead) == code.syndrome(bb.tail)))
                fail("unsound border binomial " + format_binomial(bb));
            if (nset.contains(bb.lead))
                fail("border lead inside the normal set: " + bb.lead.to_string());
            if (!nset.contains(bb.tail))
                fail("border tail outside the normal set: " + bb.tail.to_string());
        }
    }

    return report;
}

// Exhaustive decoding audit against the coset table: for every vector of
// GF(2)^n the canonical form must sit at the coset minimum weight, decode up
// to t must return the unique leader, and past t must report detection.
inline Report verify_decoding(const BinaryCode& code, const FglmResult& result) {
    if (code.n() > 12) throw GuardError("decoding audit limited to n <= 12");
    Report report;
    auto fail = [&report](std::string line) { report.push_back(std::move(line)); };

    if (!result.ordering.degree_compatible()) {
        fail("ordering is not degree-compatible; the decoding guarantee does not apply");
        return report;
    }

    const CosetTable table = build_coset_table(code);

    unsigned t;
    if (code.k() == 0) {
        if (!result.t_degenerate) fail("trivial code should report degenerate t detection");
        t = unsigned(code.n());
    } else {
        t = code.error_capability();
        if (!result.t_detected)
            fail("t was not detected");
        else if (*result.t_detected != t)
            fail("detected t = " + std::to_string(*result.t_detected) +
                 ", brute force gives " + std::to_string(t));
    }

    for (std::size_t i = 0; i < table.size(); ++i) {
        const CosetEntry& entry = table.at_index(i);
        if (entry.min_weight <= t && entry.min_count != 1)
            fail("coset " + std::to_string(i) + " has " + std::to_string(entry.min_count) +
                 " minimum-weight members within t");
    }

    for (std::uint64_t value = 0; value < (std::uint64_t(1) << code.n()); ++value) {
        const BitVector y = BitVector::from_uint(code.n(), value);
        const CosetEntry& entry = table.at(code.syndrome(y));
        const DecodeResult res = decode(y, result);
        if (res.canonical_weight != entry.min_weight) {
            fail("canonical weight " + std::to_string(res.canonical_weight) + " != coset minimum " +
                 std::to_string(entry.min_weight) + " for y=" + y.to_string());
            continue;
        }
        if (entry.min_weight <= t) {
            if (!res.decoded()) {
                fail("y=" + y.to_string() + " should decode");
            } else {
                if (!(*res.error == entry.leader))
                    fail("y=" + y.to_string() + " decoded error " + res.error->to_string() +
                         " != coset leader " + entry.leader.to_string());
                if (!code.syndrome(*res.codeword).is_zero())
                    fail("y=" + y.to_string() + " decoded to a non-codeword");
            }
        } else if (res.decoded()) {
            fail("y=" + y.to_string() + " decoded despite weight beyond t");
        }
    }
    return report;
}

}  // namespace codegb
