#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "slnq/numth.hpp"

namespace slnq {

// Multiplicative model of the tower F_q < F_{q^2} < ... < F_{q^D}.
//
// Level-d elements are discrete-log exponents of a generator eps_d of
// F_{q^d}^x, and the generators are compatible by definition:
// eps_d = eps_D^{(q^D-1)/(q^d-1)} whenever d | D. Everything in scope
// (orders, degrees, Frobenius orbits, norms) is determined by this
// multiplicative structure together with the Frobenius action e -> e*q,
// so no additive arithmetic is needed here.
class TowerContext {
public:
    static constexpr std::uint64_t kMaxFieldSize = 1u << 20;

    explicit TowerContext(PrimePowerQ q) : q_(q) {
        std::uint64_t pw = 1;
        pow_q_.push_back(1);
        while (pw <= kMaxFieldSize / q_.q) {
            pw *= q_.q;
            pow_q_.push_back(pw);
        }
    }

    const PrimePowerQ& q() const { return q_; }
    unsigned max_level() const { return static_cast<unsigned>(pow_q_.size()) - 1; }

    std::uint64_t q_pow(unsigned d) const {
        if (d > max_level())
            throw capacity_error("TowerContext: level exceeds q^D <= 2^20 cap");
        return pow_q_[d];
    }

    // |F_{q^d}^x|
    std::uint64_t unit_order(unsigned d) const { return q_pow(d) - 1; }

private:
    PrimePowerQ q_;
    std::vector<std::uint64_t> pow_q_;
};

// eps_level^exp, stored at minimal level (degree == level after
// normalization). The zero field element is not representable.
struct FieldElt {
    unsigned level = 1;
    std::uint64_t exp = 0;

    friend bool operator==(const FieldElt&, const FieldElt&) = default;
    friend auto operator<=>(const FieldElt&, const FieldElt&) = default;
};

// Minimal t | d with e*q^t = e (mod q^d - 1).
inline unsigned degree_at(const TowerContext& ctx, unsigned d, std::uint64_t e) {
    std::uint64_t m = ctx.unit_order(d);
    for (unsigned t = 1; t < d; ++t) {
        if (d % t != 0) continue;
        if ((e * (ctx.q_pow(t) % m)) % m == e % m) return t;
    }
    return d;
}

inline FieldElt normalized(const TowerContext& ctx, unsigned level, std::uint64_t exp) {
    if (level < 1) throw std::invalid_argument("FieldElt: level must be >= 1");
    std::uint64_t m = ctx.unit_order(level);
    exp %= m;
    unsigned t = degree_at(ctx, level, exp);
    if (t == level) return FieldElt{level, exp};
    // e*q^t = e (mod q^level - 1) forces (q^level-1)/(q^t-1) | e
    return FieldElt{t, exp / (m / ctx.unit_order(t))};
}

inline FieldElt identity_elt() { return FieldElt{1, 0}; }

inline unsigned degree(const TowerContext& ctx, const FieldElt& x) {
    return degree_at(ctx, x.level, x.exp);
}

inline std::uint64_t order(const TowerContext& ctx, const FieldElt& x) {
    std::uint64_t m = ctx.unit_order(x.level);
    return m / std::gcd(x.exp, m);
}

// Exponent multiplication into level D; the result is intentionally not
// renormalized.
inline FieldElt embed(const TowerContext& ctx, const FieldElt& x, unsigned D) {
    if (D % x.level != 0)
        throw std::invalid_argument("embed: target level must be a multiple of source level");
    std::uint64_t mD = ctx.unit_order(D);
    return FieldElt{D, (x.exp * (mD / ctx.unit_order(x.level))) % mD};
}

inline FieldElt mul(const TowerContext& ctx, const FieldElt& x, const FieldElt& y) {
    unsigned L = static_cast<unsigned>(std::lcm(x.level, y.level));
    std::uint64_t m = ctx.unit_order(L);
    std::uint64_t e = (embed(ctx, x, L).exp + embed(ctx, y, L).exp) % m;
    return normalized(ctx, L, e);
}

inline FieldElt inverse(const TowerContext& ctx, const FieldElt& x) {
    std::uint64_t m = ctx.unit_order(x.level);
    return FieldElt{x.level, (m - x.exp % m) % m};
}

inline FieldElt power(const TowerContext& ctx, const FieldElt& x, std::uint64_t k) {
    std::uint64_t m = ctx.unit_order(x.level);
    return normalized(ctx, x.level, (x.exp % m) * (k % m) % m);
}

inline bool is_ell_element(const TowerContext& ctx, const FieldElt& x, const EllPrime& ell) {
    std::uint64_t o = order(ctx, x);
    return ell.char_zero() ? o == 1 : ell_part(o, ell.ell) == o;
}

inline bool is_ell_prime_element(const TowerContext& ctx, const FieldElt& x, const EllPrime& ell) {
    return ell.char_zero() || order(ctx, x) % ell.ell != 0;
}

// x = s*u with s of ell'-order and u of ell-power order, both powers of x
// (complementary idempotent exponents in the cyclic group <x>).
struct EllParts {
    FieldElt s;
    FieldElt u;
};

inline EllParts parts(const TowerContext& ctx, const FieldElt& x, const EllPrime& ell) {
    if (ell.char_zero()) return EllParts{x, identity_elt()};
    std::uint64_t n = order(ctx, x);
    std::uint64_t a = ell_part(n, ell.ell);
    std::uint64_t b = n / a;
    // find i with i = 0 (mod a), i = 1 (mod b); then s = x^i, u = x^{1-i mod n}
    std::uint64_t i = 0;
    while (i % b != 1 % b) i += a;
    return EllParts{power(ctx, x, i), power(ctx, x, (n + 1 - i) % n)};
}

// Norm to F_q sends eps_d^e to eps^e by generator compatibility.
inline FieldElt norm_to_base(const TowerContext& ctx, const FieldElt& x) {
    return normalized(ctx, 1, x.exp % ctx.unit_order(1));
}

// Frobenius orbit [x], keyed by its minimal exponent at the minimal level.
struct FrobClass {
    unsigned level = 1;
    std::uint64_t exp = 0;

    friend bool operator==(const FrobClass&, const FrobClass&) = default;
    friend auto operator<=>(const FrobClass&, const FrobClass&) = default;
};

inline FrobClass frob_class(const TowerContext& ctx, const FieldElt& x0) {
    FieldElt x = normalized(ctx, x0.level, x0.exp);
    std::uint64_t m = ctx.unit_order(x.level);
    std::uint64_t best = x.exp, e = x.exp;
    for (unsigned i = 1; i < x.level; ++i) {
        e = (e * (ctx.q().q % m)) % m;
        best = std::min(best, e);
    }
    return FrobClass{x.level, best};
}

inline FieldElt class_rep_elt(const FrobClass& c) { return FieldElt{c.level, c.exp}; }

// Scalar subgroups of F_q^x as level-1 elements.
inline std::vector<FieldElt> ell_subgroup_level1(const TowerContext& ctx, const EllPrime& ell) {
    std::uint64_t m = ctx.unit_order(1);
    std::uint64_t sz = ell.char_zero() ? 1 : ell_part(m, ell.ell);
    std::vector<FieldElt> out;
    out.reserve(sz);
    for (std::uint64_t j = 0; j < sz; ++j) out.push_back(FieldElt{1, j * (m / sz)});
    return out;
}

inline std::vector<FieldElt> ell_prime_subgroup_level1(const TowerContext& ctx, const EllPrime& ell) {
    std::uint64_t m = ctx.unit_order(1);
    std::uint64_t sz = ell.char_zero() ? m : ell_prime_part(m, ell.ell);
    std::vector<FieldElt> out;
    out.reserve(sz);
    for (std::uint64_t j = 0; j < sz; ++j) out.push_back(FieldElt{1, j * (m / sz)});
    return out;
}

// The ell-element u(a,d): identity for a = 0; otherwise a generator of the
// ell-Sylow of F_{q^{d*ell^a}}^x, except that for ell = 2 with q^d = 3
// (mod 4) it is the order-4 element with the smaller exponent (both
// order-4 choices work; the exhaustive stabilizer suite pins this one).
inline FieldElt u_of(const TowerContext& ctx, unsigned a, unsigned d, const EllPrime& ell) {
    if (ell.char_zero()) {
        if (a != 0) throw std::invalid_argument("u_of: a must be 0 in characteristic zero");
        return identity_elt();
    }
    if (a == 0) return identity_elt();
    std::uint64_t la = ipow(ell.ell, a);
    if (ctx.unit_order(1) % la != 0)
        throw std::invalid_argument("u_of: ell^a must divide q-1");
    if (d < 1) throw std::invalid_argument("u_of: d must be >= 1");
    std::uint64_t lvl64 = la * d;
    if (lvl64 > ctx.max_level())
        throw capacity_error("u_of: level d*ell^a exceeds tower cap");
    unsigned D = static_cast<unsigned>(lvl64);

    bool case2 = ell.ell == 2 && ctx.q_pow(d) % 4 == 3;
    std::uint64_t m = ctx.unit_order(D);
    std::uint64_t e = case2 ? m / 4 : m / ell_part(m, ell.ell);
    return normalized(ctx, D, e);
}

enum class StabilizerKind { EllPart, EllPrimePart };

// Brute-force order of {t in O(F_q^x) : [x t] = [x]} for the ell- or
// ell'-scalar subgroup.
inline std::uint64_t stabilizer_order(const TowerContext& ctx, const FieldElt& x,
                                      const EllPrime& ell, StabilizerKind kind) {
    auto subgroup = kind == StabilizerKind::EllPart ? ell_subgroup_level1(ctx, ell)
                                                    : ell_prime_subgroup_level1(ctx, ell);
    FrobClass target = frob_class(ctx, x);
    std::uint64_t count = 0;
    for (const auto& t : subgroup)
        if (frob_class(ctx, mul(ctx, x, t)) == target) ++count;
    return count;
}

// Frobenius-orbit representatives of degree exactly d, in increasing
// exponent order; optionally restricted to classes of ell'-elements.
inline std::vector<FrobClass> frob_classes_of_degree(const TowerContext& ctx, unsigned d,
                                                     const EllPrime* ell_prime_only = nullptr) {
    std::uint64_t m = ctx.unit_order(d);
    std::uint64_t qq = ctx.q().q % m;
    std::vector<FrobClass> out;
    for (std::uint64_t e = 0; e < m; ++e) {
        if (degree_at(ctx, d, e) != d) continue;
        bool minimal = true;
        std::uint64_t f = e;
        for (unsigned i = 1; i < d && minimal; ++i) {
            f = f * qq % m;
            if (f < e) minimal = false;
        }
        if (!minimal) continue;
        if (ell_prime_only && !ell_prime_only->char_zero() &&
            (m / std::gcd(e, m)) % ell_prime_only->ell == 0)
            continue;
        out.push_back(FrobClass{d, e});
    }
    return out;
}

} // namespace slnq
