#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "slnq/gfq.hpp"
#include "slnq/partitions.hpp"

namespace slnq {

// Shared parameters for the symbol calculus over (q, ell).
struct SymbolCtx {
    TowerContext tower;
    EllPrime ell;

    SymbolCtx(std::uint64_t q, std::uint64_t ell_value)
        : tower(PrimePowerQ::of(q)), ell(EllPrime::of(ell_value, PrimePowerQ::of(q))) {}

    std::uint64_t q() const { return tower.q().q; }
};

// One component ([sigma], lambda) of a symbol; weight = deg * |lambda|.
struct SymbolPair {
    FrobClass cls;
    Partition part;

    friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
    friend auto operator<=>(const SymbolPair& a, const SymbolPair& b) {
        if (auto c = a.cls <=> b.cls; c != 0) return c;
        return a.part <=> b.part;
    }
};

namespace detail {

inline void canonicalize_pairs(std::vector<SymbolPair>& pairs) {
    std::sort(pairs.begin(), pairs.end());
}

inline int validate_pairs(const TowerContext& ctx, const std::vector<SymbolPair>& pairs) {
    int n = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].part.empty())
            throw std::invalid_argument("symbol: partitions must be nonempty");
        auto rep = class_rep_elt(pairs[i].cls);
        if (frob_class(ctx, rep) != pairs[i].cls)
            throw std::invalid_argument("symbol: class exponent not canonical");
        if (i > 0 && pairs[i].cls == pairs[i - 1].cls)
            throw std::invalid_argument("symbol: classes must be pairwise distinct");
        n += static_cast<int>(pairs[i].cls.level) * pairs[i].part.size();
    }
    return n;
}

} // namespace detail

// n-admissible symbol with all class representatives ell'-elements.
class ModSymbol {
public:
    static ModSymbol make(const SymbolCtx& ctx, std::vector<SymbolPair> pairs) {
        detail::canonicalize_pairs(pairs);
        int n = detail::validate_pairs(ctx.tower, pairs);
        for (const auto& pr : pairs)
            if (!is_ell_prime_element(ctx.tower, class_rep_elt(pr.cls), ctx.ell))
                throw std::invalid_argument("ModSymbol: class representatives must be ell'-elements");
        ModSymbol s;
        s.pairs_ = std::move(pairs);
        s.n_ = n;
        return s;
    }

    const std::vector<SymbolPair>& pairs() const { return pairs_; }
    int n() const { return n_; }

    friend bool operator==(const ModSymbol&, const ModSymbol&) = default;
    friend auto operator<=>(const ModSymbol& a, const ModSymbol& b) {
        return a.pairs_ <=> b.pairs_;
    }

private:
    std::vector<SymbolPair> pairs_;
    int n_ = 0;
};

// n-admissible symbol with arbitrary nonzero class representatives
// (pairwise distinct classes); labels the complex irreducibles.
class CxSymbol {
public:
    static CxSymbol make(const SymbolCtx& ctx, std::vector<SymbolPair> pairs) {
        detail::canonicalize_pairs(pairs);
        int n = detail::validate_pairs(ctx.tower, pairs);
        CxSymbol s;
        s.pairs_ = std::move(pairs);
        s.n_ = n;
        return s;
    }

    const std::vector<SymbolPair>& pairs() const { return pairs_; }
    int n() const { return n_; }

    friend bool operator==(const CxSymbol&, const CxSymbol&) = default;
    friend auto operator<=>(const CxSymbol& a, const CxSymbol& b) {
        return a.pairs_ <=> b.pairs_;
    }

private:
    std::vector<SymbolPair> pairs_;
    int n_ = 0;
};

inline CxSymbol as_cx(const SymbolCtx& ctx, const ModSymbol& s) {
    return CxSymbol::make(ctx, s.pairs());
}

// sigma_i = s_i * u_i with d_i = deg(s_i) and k_i = deg(sigma_i)/deg(s_i).
struct PairDecomposition {
    FrobClass s_class;
    FieldElt u;
    unsigned d = 1;
    unsigned k = 1;
};

inline PairDecomposition decompose(const SymbolCtx& ctx, const SymbolPair& pr) {
    auto p = parts(ctx.tower, class_rep_elt(pr.cls), ctx.ell);
    PairDecomposition out;
    out.s_class = frob_class(ctx.tower, p.s);
    out.u = p.u;
    out.d = p.s.level;
    out.k = pr.cls.level / out.d;
    return out;
}

namespace detail {

inline std::vector<SymbolPair> twist_pairs(const SymbolCtx& ctx, const FieldElt& tau,
                                           const std::vector<SymbolPair>& pairs) {
    std::vector<SymbolPair> out;
    out.reserve(pairs.size());
    for (const auto& pr : pairs)
        out.push_back(SymbolPair{frob_class(ctx.tower, mul(ctx.tower, class_rep_elt(pr.cls), tau)),
                                 pr.part});
    return out;
}

} // namespace detail

// Scalar twist tau . s = [([tau sigma_1], lambda^(1)), ...].
inline ModSymbol act(const SymbolCtx& ctx, const FieldElt& tau, const ModSymbol& s) {
    if (tau.level != 1)
        throw std::invalid_argument("act: tau must be a scalar");
    if (!is_ell_prime_element(ctx.tower, tau, ctx.ell))
        throw std::invalid_argument("act: tau must be an ell'-element to act on a ModSymbol");
    return ModSymbol::make(ctx, detail::twist_pairs(ctx, tau, s.pairs()));
}

inline CxSymbol act(const SymbolCtx& ctx, const FieldElt& tau, const CxSymbol& s) {
    if (tau.level != 1)
        throw std::invalid_argument("act: tau must be a scalar");
    return CxSymbol::make(ctx, detail::twist_pairs(ctx, tau, s.pairs()));
}

// Order of the stabilizer in O_{ell'}(F_q^x) under the scalar twist.
template <class Symbol>
std::uint64_t kappa_ell_prime(const SymbolCtx& ctx, const Symbol& s) {
    std::uint64_t count = 0;
    for (const auto& tau : ell_prime_subgroup_level1(ctx.tower, ctx.ell))
        if (act(ctx, tau, s) == s) ++count;
    return count;
}

// ell-part of gcd(q-1, Delta(transposed multipartition)).
inline std::uint64_t kappa_ell(const SymbolCtx& ctx, const ModSymbol& s) {
    Multipartition tr;
    tr.reserve(s.pairs().size());
    for (const auto& pr : s.pairs()) tr.push_back(transpose(pr.part));
    std::uint64_t g = std::gcd(ctx.tower.unit_order(1), static_cast<std::uint64_t>(delta(tr)));
    return ell_part(g, ctx.ell);
}

// Order of the stabilizer in O_ell(F_q^x), by brute force.
inline std::uint64_t kappa_ell_cx(const SymbolCtx& ctx, const CxSymbol& s) {
    std::uint64_t count = 0;
    for (const auto& tau : ell_subgroup_level1(ctx.tower, ctx.ell))
        if (act(ctx, tau, s) == s) ++count;
    return count;
}

inline std::uint64_t num_constituents(const SymbolCtx& ctx, const ModSymbol& s) {
    return kappa_ell_prime(ctx, s) * kappa_ell(ctx, s);
}

// Group the pairs along the classes of the ell'-parts s_i and form
// delta^(j) = (sum_i k_i (lambda^(i))')' per group.
inline ModSymbol star(const SymbolCtx& ctx, const CxSymbol& s) {
    std::map<FrobClass, Partition> groups;
    for (const auto& pr : s.pairs()) {
        auto dec = decompose(ctx, pr);
        Partition contrib = scale(static_cast<int>(dec.k), transpose(pr.part));
        auto [it, fresh] = groups.emplace(dec.s_class, contrib);
        if (!fresh) it->second = add(it->second, contrib);
    }
    std::vector<SymbolPair> pairs;
    pairs.reserve(groups.size());
    for (const auto& [cls, col] : groups)
        pairs.push_back(SymbolPair{cls, transpose(col)});
    return ModSymbol::make(ctx, std::move(pairs));
}

// The configuration in which the irreducibility criterion picks up its
// extra condition: ell = 2, q = 3 (mod 4), every k_i > 1, and some pair
// has k_j = 2, d_j odd, |u_j| >= 8.
inline bool is_critical(const SymbolCtx& ctx, const CxSymbol& s) {
    if (ctx.ell.ell != 2 || ctx.q() % 4 != 3) return false;
    bool witness = false;
    for (const auto& pr : s.pairs()) {
        auto dec = decompose(ctx, pr);
        if (dec.k == 1) return false;
        if (dec.k == 2 && dec.d % 2 == 1 && order(ctx.tower, dec.u) >= 8)
            witness = true;
    }
    return witness;
}

// Irreducibility of the reduction of the complex module labelled by s:
// distinct ell'-part classes in equal degree, and the column hook-length
// condition for each partition at Q = q^{deg(sigma_i)}.
inline bool jm_irreducible(const SymbolCtx& ctx, const CxSymbol& s) {
    const auto& pairs = s.pairs();
    std::vector<PairDecomposition> dec;
    dec.reserve(pairs.size());
    for (const auto& pr : pairs) dec.push_back(decompose(ctx, pr));
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].cls.level == pairs[j].cls.level && dec[i].s_class == dec[j].s_class)
                return false;
    for (const auto& pr : pairs)
        if (!is_jm(pr.part, ctx.tower.q_pow(pr.cls.level), ctx.ell.ell))
            return false;
    return true;
}

struct Main2Decision {
    bool jm = false;
    bool kappa_match = false;
    bool critical = false;
    bool constituent_reduction_irreducible = false;
};

inline Main2Decision main2_decision(const SymbolCtx& ctx, const CxSymbol& s) {
    Main2Decision d;
    d.jm = jm_irreducible(ctx, s);
    d.kappa_match = kappa_ell_prime(ctx, s) == kappa_ell_prime(ctx, star(ctx, s));
    d.critical = is_critical(ctx, s);
    d.constituent_reduction_irreducible = d.jm && d.kappa_match && !d.critical;
    return d;
}

// Lift a ModSymbol s with kappa_ell(s) = ell^c to the complex symbol whose
// star is s: divide every column by ell^c and twist each class by u(c, d_i).
inline CxSymbol theta(const SymbolCtx& ctx, const ModSymbol& s) {
    std::uint64_t kappa = kappa_ell(ctx, s);
    unsigned c = ctx.ell.char_zero() ? 0 : ell_val(kappa, ctx.ell.ell);
    std::vector<SymbolPair> pairs;
    pairs.reserve(s.pairs().size());
    for (const auto& pr : s.pairs()) {
        Partition cols = transpose(pr.part);
        std::vector<int> reduced(cols.parts());
        for (int& v : reduced) {
            if (v % static_cast<int>(kappa) != 0)
                throw std::logic_error("theta: kappa_ell must divide every column");
            v /= static_cast<int>(kappa);
        }
        FieldElt u = u_of(ctx.tower, c, pr.cls.level, ctx.ell);
        FieldElt tau = mul(ctx.tower, class_rep_elt(pr.cls), u);
        pairs.push_back(SymbolPair{frob_class(ctx.tower, tau), transpose(Partition(reduced))});
    }
    return CxSymbol::make(ctx, std::move(pairs));
}

// s >= t in the symbol order: equal pair count, and some ell'-scalar nu
// matches the classes of s (twisted by nu) to those of t with
// componentwise dominance. Classes within a symbol are distinct, so each
// nu forces at most one candidate pairing.
inline bool symbol_leq(const SymbolCtx& ctx, const ModSymbol& s, const ModSymbol& t) {
    if (s.n() != t.n())
        throw std::invalid_argument("symbol_leq: symbols must share n");
    if (s.pairs().size() != t.pairs().size()) return false;

    std::map<FrobClass, const SymbolPair*> index;
    for (const auto& pr : t.pairs()) index[pr.cls] = &pr;

    for (const auto& nu : ell_prime_subgroup_level1(ctx.tower, ctx.ell)) {
        bool ok = true;
        for (const auto& pr : s.pairs()) {
            auto twisted = frob_class(ctx.tower, mul(ctx.tower, class_rep_elt(pr.cls), nu));
            auto it = index.find(twisted);
            if (it == index.end() || it->second->part.size() != pr.part.size() ||
                !dominates(pr.part, it->second->part)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

namespace detail {

// All canonical symbols of total weight n over the given class list
// (classes sorted ascending), via backtracking with weight pruning.
template <class Emit>
void enumerate_over_classes(const std::vector<FrobClass>& classes, int n, Emit&& emit) {
    std::vector<SymbolPair> current;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (remaining == 0) { emit(current); return; }
        if (idx == classes.size()) return;
        if (static_cast<int>(classes[idx].level) > remaining) return;
        self(self, idx + 1, remaining); // skip this class
        int d = static_cast<int>(classes[idx].level);
        for (int m = 1; m * d <= remaining; ++m) {
            for (const auto& lam : partitions_of(m)) {
                current.push_back(SymbolPair{classes[idx], lam});
                self(self, idx + 1, remaining - m * d);
                current.pop_back();
            }
        }
    };
    rec(rec, 0, n);
}

inline std::vector<FrobClass> all_classes_up_to(const SymbolCtx& ctx, int n, bool ell_prime_only) {
    if (n < 1) throw std::invalid_argument("symbol enumeration: n must be >= 1");
    if (static_cast<unsigned>(n) > ctx.tower.max_level())
        throw capacity_error("symbol enumeration: q^n exceeds 2^20 cap");
    std::vector<FrobClass> classes;
    for (unsigned d = 1; d <= static_cast<unsigned>(n); ++d) {
        auto cls = ell_prime_only ? frob_classes_of_degree(ctx.tower, d, &ctx.ell)
                                  : frob_classes_of_degree(ctx.tower, d);
        classes.insert(classes.end(), cls.begin(), cls.end());
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

} // namespace detail

inline std::vector<ModSymbol> enumerate_mod_symbols(const SymbolCtx& ctx, int n) {
    auto classes = detail::all_classes_up_to(ctx, n, true);
    std::vector<ModSymbol> out;
    detail::enumerate_over_classes(classes, n, [&](const std::vector<SymbolPair>& pairs) {
        out.push_back(ModSymbol::make(ctx, pairs));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<CxSymbol> enumerate_cx_symbols(const SymbolCtx& ctx, int n) {
    auto classes = detail::all_classes_up_to(ctx, n, false);
    std::vector<CxSymbol> out;
    detail::enumerate_over_classes(classes, n, [&](const std::vector<SymbolPair>& pairs) {
        out.push_back(CxSymbol::make(ctx, pairs));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Minimal canonical form in each O_{ell'}(F_q^x)-orbit, sorted.
inline std::vector<ModSymbol> orbit_reps(const SymbolCtx& ctx, const std::vector<ModSymbol>& symbols) {
    auto scalars = ell_prime_subgroup_level1(ctx.tower, ctx.ell);
    std::vector<ModSymbol> reps;
    for (const auto& s : symbols) {
        bool minimal = true;
        for (const auto& tau : scalars) {
            if (act(ctx, tau, s) < s) { minimal = false; break; }
        }
        if (minimal) reps.push_back(s);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

inline std::uint64_t ibr_sl_count(const SymbolCtx& ctx, int n) {
    std::uint64_t total = 0;
    for (const auto& rep : orbit_reps(ctx, enumerate_mod_symbols(ctx, n)))
        total += num_constituents(ctx, rep);
    return total;
}

// One irreducible summand label L(s)_j, with s an orbit representative and
// 1 <= j <= kappa_{ell'}(s) * kappa_ell(s).
struct SummandLabel {
    ModSymbol symbol;
    std::uint64_t index = 1;
};

inline std::vector<SummandLabel> ibr_labels(const SymbolCtx& ctx, int n) {
    std::vector<SummandLabel> out;
    for (const auto& rep : orbit_reps(ctx, enumerate_mod_symbols(ctx, n))) {
        std::uint64_t count = num_constituents(ctx, rep);
        for (std::uint64_t j = 1; j <= count; ++j) out.push_back(SummandLabel{rep, j});
    }
    return out;
}

} // namespace slnq
