#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace slnq {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when a request exceeds the documented size caps (field towers,
// stored group enumeration, ...). Distinct from invalid_argument so the
// CLI can map it to its own exit code.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// base^e with overflow check; all in-range uses stay far below 2^63.
inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw std::overflow_error("ipow: overflow");
        r *= base;
    }
    return r;
}

// q = p^f with p prime, f >= 1; checked at construction.
struct PrimePowerQ {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    unsigned f = 0;

    static PrimePowerQ of(std::uint64_t q) {
        if (q < 2) throw std::invalid_argument("PrimePowerQ: q must be >= 2");
        std::uint64_t p = q;
        for (std::uint64_t d = 2; d * d <= q; ++d) {
            if (q % d == 0) { p = d; break; }
        }
        unsigned f = 0;
        std::uint64_t m = q;
        while (m % p == 0) { m /= p; ++f; }
        if (m != 1)
            throw std::invalid_argument("PrimePowerQ: q is not a prime power");
        return PrimePowerQ{q, p, f};
    }
};

// A prime ell with ell not dividing q. ell == 0 is the characteristic-zero
// sentinel: every element counts as an ell'-element and ell-parts are 1.
struct EllPrime {
    std::uint64_t ell = 0;

    bool char_zero() const { return ell == 0; }

    static EllPrime of(std::uint64_t ell, const PrimePowerQ& q) {
        if (!is_prime(ell))
            throw std::invalid_argument("EllPrime: ell must be prime");
        if (ell == q.p)
            throw std::invalid_argument("EllPrime: ell must not divide q");
        return EllPrime{ell};
    }

    static EllPrime characteristic_zero() { return EllPrime{0}; }
};

// Largest e with ell^e | m.
inline unsigned ell_val(std::uint64_t m, std::uint64_t ell) {
    if (m == 0) throw std::invalid_argument("ell_val: m must be positive");
    unsigned e = 0;
    while (m % ell == 0) { m /= ell; ++e; }
    return e;
}

inline std::uint64_t ell_part(std::uint64_t m, std::uint64_t ell) {
    if (m == 0) throw std::invalid_argument("ell_part: m must be positive");
    std::uint64_t r = 1;
    while (m % ell == 0) { m /= ell; r *= ell; }
    return r;
}

inline std::uint64_t ell_prime_part(std::uint64_t m, std::uint64_t ell) {
    return m / ell_part(m, ell);
}

inline std::uint64_t ell_part(std::uint64_t m, const EllPrime& ell) {
    if (m == 0) throw std::invalid_argument("ell_part: m must be positive");
    return ell.char_zero() ? 1 : ell_part(m, ell.ell);
}

inline std::uint64_t ell_prime_part(std::uint64_t m, const EllPrime& ell) {
    return m / ell_part(m, ell);
}

inline unsigned big_ell_val(BigInt m, std::uint64_t ell) {
    if (m <= 0) throw std::invalid_argument("big_ell_val: m must be positive");
    unsigned e = 0;
    while (m % ell == 0) { m /= ell; ++e; }
    return e;
}

// Exact ell-part of (r^{ell^d}-1)/(r-1), together with the closed-form
// prediction ell^d. The prediction fails only in the exceptional family
// c = 1, ell = 2, r = 3 (mod 4), where c is the 2-adic valuation of r-1;
// `exceptional` flags that family and no prediction is made there.
struct LntResult {
    BigInt actual;
    BigInt predicted;
    bool exceptional = false;
};

inline LntResult lnt_check(std::uint64_t r, std::uint64_t ell, unsigned d) {
    if (r < 2) throw std::invalid_argument("lnt_check: r must be >= 2");
    if (!is_prime(ell)) throw std::invalid_argument("lnt_check: ell must be prime");
    if ((r - 1) % ell != 0)
        throw std::invalid_argument("lnt_check: ell must divide r-1");
    std::uint64_t ld = ipow(ell, d);
    if (ld > 64) throw capacity_error("lnt_check: ell^d capped at 64");

    BigInt pw = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(ld));
    BigInt quotient = (pw - 1) / (BigInt(r) - 1);

    LntResult res;
    res.actual = boost::multiprecision::pow(BigInt(ell), big_ell_val(quotient, ell));
    res.predicted = BigInt(ld);
    unsigned c = ell_val(r - 1, ell);
    res.exceptional = (c == 1 && ell == 2 && r % 4 == 3);
    return res;
}

} // namespace slnq
