#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codegb/code.hpp"
#include "codegb/errors.hpp"
#include "codegb/gf2.hpp"
#include "codegb/monomial.hpp"

namespace codegb {

/*
 * FGLM-style computation of Groebner structures for the binomial ideal of a
 * binary code.
 *
 * The ideal is generated by all differences w - u of words with equal
 * syndrome. Its quotient algebra has one basis monomial per syndrome, so a
 * single linear-algebra pass discovers everything: walk candidate monomials
 * in increasing order; a candidate whose syndrome is fresh joins the normal
 * set N, a candidate whose syndrome was already seen at w_j yields the
 * reduced-basis binomial w - w_j. Linear dependency degenerates to an exact
 * syndrome table lookup, and each new syndrome is one row-XOR away from a
 * predecessor's, so no polynomial arithmetic happens anywhere.
 *
 * Candidates are managed by a term queue keyed by monomial. When w enters N
 * every product w*x_i is inserted with a multiplicity counter; a popped
 * monomial has all predecessors inside N exactly when its counter equals its
 * support size, which replaces the usual divide-by-current-leads test.
 */

// lead - tail with tail strictly smaller and both sides sharing a syndrome.
struct Binomial {
    Monomial lead;
    Monomial tail;

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

using GroebnerBasis = std::vector<Binomial>;

// The normal set N: monomials in admission order (strictly increasing under
// the run's ordering) with their syndromes, plus an exact syndrome -> index
// table sized 2^r.
class NormalSet {
public:
    static constexpr std::uint32_t npos = 0xFFFFFFFFu;

    NormalSet(TermOrdering ord, std::size_t syndrome_len)
        : ord_(ord), syndrome_len_(syndrome_len) {
        if (syndrome_len > 24) throw GuardError("syndrome table limited to r <= 24");
        index_by_syndrome_.assign(std::size_t(1) << syndrome_len, npos);
    }

    TermOrdering ordering() const { return ord_; }
    std::size_t syndrome_len() const { return syndrome_len_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const Monomial& word(std::size_t i) const { return words_[i]; }
    const Syndrome& syndrome(std::size_t i) const { return syndromes_[i]; }
    const std::vector<Monomial>& words() const { return words_; }

    std::optional<std::uint32_t> find_syndrome(const Syndrome& v) const {
        if (v.size() != syndrome_len_) throw DimensionError("syndrome length mismatch");
        const std::uint32_t idx = index_by_syndrome_[v.to_uint()];
        if (idx == npos) return std::nullopt;
        return idx;
    }

    std::optional<std::uint32_t> find_word(const Monomial& m) const {
        auto it = std::lower_bound(words_.begin(), words_.end(), m,
                                   [this](const Monomial& a, const Monomial& b) {
                                       return ord_.less(a, b);
                                   });
        if (it == words_.end() || !(*it == m)) return std::nullopt;
        return std::uint32_t(it - words_.begin());
    }

    bool contains(const Monomial& m) const { return find_word(m).has_value(); }

    void push(Monomial w, Syndrome v) {
        if (v.size() != syndrome_len_) throw DimensionError("syndrome length mismatch");
        if (!words_.empty() && !ord_.less(words_.back(), w))
            throw std::logic_error("normal set admissions must be strictly increasing");
        if (index_by_syndrome_[v.to_uint()] != npos)
            throw std::logic_error("normal set syndromes must be pairwise distinct");
        index_by_syndrome_[v.to_uint()] = std::uint32_t(words_.size());
        words_.push_back(std::move(w));
        syndromes_.push_back(std::move(v));
    }

private:
    TermOrdering ord_;
    std::size_t syndrome_len_;
    std::vector<Monomial> words_;
    std::vector<Syndrome> syndromes_;
    std::vector<std::uint32_t> index_by_syndrome_;
};

inline std::optional<std::uint32_t> member(const Syndrome& v, const NormalSet& nset) {
    return nset.find_syndrome(v);
}

// Multiplication tables of the quotient algebra on the basis N: one row map
// per variable, phi(k)[i] = index of the canonical form of N_i * x_k. Over a
// binary code ideal these are involutory, pairwise commuting permutations.
class MatphiSet {
public:
    explicit MatphiSet(std::vector<std::vector<std::uint32_t>> tables)
        : tables_(std::move(tables)) {}

    std::size_t vars() const { return tables_.size(); }
    std::size_t size() const { return tables_.empty() ? 0 : tables_[0].size(); }
    std::uint32_t apply(std::size_t var, std::uint32_t i) const { return tables_[var][i]; }
    const std::vector<std::uint32_t>& table(std::size_t var) const { return tables_[var]; }

private:
    std::vector<std::vector<std::uint32_t>> tables_;
};

// Pending candidates keyed by monomial in increasing order, each with the
// number of times it has been inserted. Iteration and removal always see the
// smallest key first.
class TermQueue {
public:
    struct Entry {
        Monomial word;
        unsigned count;
    };

    explicit TermQueue(TermOrdering ord) : entries_(MonomialLess{ord}) {}

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Initial member (the empty word). Seeds with count = support size so the
    // step-4 multiplicity test holds for it uniformly.
    void seed(const Monomial& m) { entries_[m] = unsigned(m.support_size()); }

    // Called when w has just been admitted to N: every product w*x_i gains
    // one insertion.
    void insert_nexts(const Monomial& w) {
        for (std::size_t i = 0; i < w.vars(); ++i) ++entries_[w.times_var(i)];
    }

    Entry next_term() {
        if (entries_.empty()) throw std::logic_error("next_term on an empty queue");
        auto node = entries_.extract(entries_.begin());
        return Entry{std::move(node.key()), node.mapped()};
    }

    std::vector<Entry> contents() const {
        std::vector<Entry> out;
        out.reserve(entries_.size());
        for (const auto& [w, c] : entries_) out.push_back(Entry{w, c});
        return out;
    }

private:
    std::map<Monomial, unsigned, MonomialLess> entries_;
};

// True iff every predecessor of w is in N, i.e. w is either a new normal
// word or a minimal generator of the leading-term ideal; false marks a
// proper multiple of an existing lead.
inline bool step4_passes(const Monomial& w, unsigned count) {
    return count == w.support_size();
}

// xi(w) from a predecessor already in N: xi(u) + row_i(H) where u*x_i = w.
inline Syndrome incremental_syndrome(const Monomial& w, const NormalSet& nset,
                                     const BinaryCode& code) {
    for (std::size_t i = 0; i < w.vars(); ++i) {
        if (!w.exponent(i)) continue;
        const Monomial u = w.divide_exact(Monomial::variable(w.vars(), i));
        if (auto idx = nset.find_word(u))
            return Syndrome{nset.syndrome(*idx).bits + code.row(i)};
    }
    throw std::logic_error("incremental_syndrome: no predecessor of " + w.to_string() +
                           " is in the normal set");
}

inline MatphiSet compute_matphi(const NormalSet& nset, const BinaryCode& code) {
    const std::size_t s = nset.size();
    if (s != std::size_t(1) << code.r())
        throw std::logic_error("compute_matphi: normal set incomplete");
    std::vector<std::vector<std::uint32_t>> tables(code.n(), std::vector<std::uint32_t>(s));
    for (std::size_t i = 0; i < s; ++i) {
        const Syndrome& vi = nset.syndrome(i);
        for (std::size_t k = 0; k < code.n(); ++k) {
            const Syndrome target{vi.bits + code.row(k)};
            const auto j = nset.find_syndrome(target);
            if (!j) throw std::logic_error("compute_matphi: missing syndrome");
            tables[k][i] = *j;
        }
    }
    return MatphiSet(std::move(tables));
}

// Border terms: products u*x_k (u in N) outside N whose predecessors all lie
// in N, paired with the canonical form read off the matphi tables. The
// reduced Groebner basis is contained in the result.
inline std::vector<Binomial> compute_border_basis(const NormalSet& nset, const MatphiSet& phi) {
    std::map<Monomial, Binomial, MonomialLess> by_lead{MonomialLess{nset.ordering()}};
    for (std::size_t i = 0; i < nset.size(); ++i) {
        const Monomial& u = nset.word(i);
        for (std::size_t k = 0; k < u.vars(); ++k) {
            Monomial m = u.times_var(k);
            if (nset.contains(m) || by_lead.count(m)) continue;
            bool preds_inside = true;
            for (const Monomial& p : predecessors(m)) {
                if (!nset.contains(p)) {
                    preds_inside = false;
                    break;
                }
            }
            if (!preds_inside) continue;
            by_lead.emplace(m, Binomial{m, nset.word(phi.apply(k, std::uint32_t(i)))});
        }
    }
    std::vector<Binomial> border;
    border.reserve(by_lead.size());
    for (auto& [lead, b] : by_lead) border.push_back(std::move(b));
    return border;
}

enum class Route { admitted, emitted, skipped };

struct FglmOptions {
    bool want_matphi = true;
    bool want_border = false;
    bool want_t = true;
#ifdef NDEBUG
    bool cross_check_step4 = false;
#else
    bool cross_check_step4 = true;
#endif
    // Called once per popped term after routing; for tracing and tests.
    std::function<void(const Monomial& w, unsigned count, Route route)> observer;
};

struct FglmStats {
    std::uint64_t iterations = 0;
    std::uint64_t skipped = 0;
    std::uint64_t step4_checks = 0;
};

struct FglmResult {
    BinaryCode code;
    TermOrdering ordering;
    GroebnerBasis gb;           // emission order = increasing leads
    NormalSet normal_set;       // |N| = 2^r on completion
    std::optional<MatphiSet> matphi;
    std::optional<std::vector<Binomial>> border;
    std::optional<unsigned> t_detected;  // degree of first squarefree collision, minus one
    bool t_degenerate = false;           // no squarefree collision: t >= n
    FglmStats stats;
};

inline FglmResult run_fglm(const BinaryCode& code, TermOrdering ord = TermOrdering{},
                           FglmOptions options = {}) {
    if (code.r() > 24) throw GuardError("run_fglm limited to r <= 24 (|N| = 2^r)");
    const std::size_t s_expected = std::size_t(1) << code.r();
    // t detection reads degrees off the trace; meaningless without degree
    // compatibility.
    const bool detect_t = options.want_t && ord.degree_compatible();

    FglmResult res{code,        ord,          {},    NormalSet(ord, code.r()),
                   std::nullopt, std::nullopt, std::nullopt, false, {}};
    TermQueue queue(ord);
    queue.seed(Monomial::one(code.n()));
    std::optional<Monomial> last_popped;

    while (!queue.empty()) {
        auto [w, count] = queue.next_term();
        ++res.stats.iterations;
        if (last_popped && !ord.less(*last_popped, w))
            throw std::logic_error("term queue pops are not strictly increasing");
        last_popped = w;

        const bool pass = step4_passes(w, count);
        if (options.cross_check_step4) {
            bool divisible = false;
            for (const Binomial& g : res.gb) {
                if (divides(g.lead, w)) {
                    divisible = true;
                    break;
                }
            }
            if (pass == divisible)
                throw std::logic_error("step-4 multiplicity test disagrees with divisibility at " +
                                       w.to_string());
            ++res.stats.step4_checks;
        }
        if (!pass) {
            ++res.stats.skipped;
            if (options.observer) options.observer(w, count, Route::skipped);
            continue;
        }

        const Syndrome v = w.is_one() ? Syndrome{BitVector(code.r())}
                                      : incremental_syndrome(w, res.normal_set, code);
        if (auto j = res.normal_set.find_syndrome(v)) {
            res.gb.push_back(Binomial{w, res.normal_set.word(*j)});
            if (detect_t && !res.t_detected && w.is_squarefree())
                res.t_detected = w.degree() - 1;
            if (options.observer) options.observer(w, count, Route::emitted);
        } else {
            res.normal_set.push(w, v);
            queue.insert_nexts(w);
            if (options.observer) options.observer(w, count, Route::admitted);
        }
    }

    if (res.normal_set.size() != s_expected)
        throw std::logic_error("normal set size is not 2^r; parity-check matrix not full rank?");
    if (detect_t && !res.t_detected) res.t_degenerate = true;

    if (options.want_matphi || options.want_border) {
        MatphiSet phi = compute_matphi(res.normal_set, code);
        if (options.want_border) res.border = compute_border_basis(res.normal_set, phi);
        res.matphi = std::move(phi);
    }
    return res;
}

inline std::string format_binomial(const Binomial& b) {
    return b.lead.to_string() + " - " + b.tail.to_string();
}

inline std::string format_gb(const GroebnerBasis& gb) {
    std::string out;
    for (const Binomial& b : gb) {
        out += format_binomial(b);
        out += '\n';
    }
    return out;
}

inline std::string format_normal_set(const NormalSet& nset) {
    std::string out;
    for (std::size_t i = 0; i < nset.size(); ++i) {
        out += nset.word(i).to_string();
        out += '\n';
    }
    return out;
}

// One line per variable: s row-image indices, 1-based.
inline std::string format_matphi(const MatphiSet& phi) {
    std::string out;
    for (std::size_t k = 0; k < phi.vars(); ++k) {
        for (std::size_t i = 0; i < phi.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(phi.apply(k, std::uint32_t(i)) + 1);
        }
        out += '\n';
    }
    return out;
}

}  // namespace codegb
