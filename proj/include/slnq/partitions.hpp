#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "slnq/numth.hpp"

namespace slnq {

// Weakly decreasing list of positive parts; the empty list is the empty
// partition. Parts are validated at construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t rows() const { return parts_.size(); }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return std::lexicographical_compare_three_way(
            a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

using Multipartition = std::vector<Partition>;

inline Partition transpose(const Partition& lam) {
    std::vector<int> cols;
    if (!lam.empty()) {
        cols.assign(lam.parts()[0], 0);
        for (int part : lam.parts())
            for (int j = 0; j < part; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

// gcd of the parts; 0 for the empty partition.
inline int delta(const Partition& lam) {
    int g = 0;
    for (int part : lam.parts()) g = std::gcd(g, part);
    return g;
}

inline int delta(const Multipartition& mp) {
    int g = 0;
    for (const auto& lam : mp) g = std::gcd(g, delta(lam));
    return g;
}

// Componentwise sum, shorter partition padded with zeros.
inline Partition add(const Partition& a, const Partition& b) {
    std::vector<int> out(std::max(a.rows(), b.rows()), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] += a.parts()[i];
    for (std::size_t i = 0; i < b.rows(); ++i) out[i] += b.parts()[i];
    return Partition(std::move(out));
}

inline Partition scale(int k, const Partition& lam) {
    if (k <= 0) throw std::invalid_argument("scale: k must be positive");
    std::vector<int> out(lam.parts());
    for (int& part : out) part *= k;
    return Partition(std::move(out));
}

// Dominance order on partitions of a common size; comparing different
// sizes is a hard error rather than false.
inline bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("dominates: partitions must have equal size");
    long sl = 0, sm = 0;
    for (std::size_t j = 0; j < std::max(lam.rows(), mu.rows()); ++j) {
        sl += j < lam.rows() ? lam.parts()[j] : 0;
        sm += j < mu.rows() ? mu.parts()[j] : 0;
        if (sl < sm) return false;
    }
    return true;
}

// hooks(lam)[a][c] = lam_a - (c+1) + lam'_c - (a+1) + 1 with 0-based a, c.
inline std::vector<std::vector<int>> hooks(const Partition& lam) {
    Partition tr = transpose(lam);
    std::vector<std::vector<int>> table(lam.rows());
    for (std::size_t a = 0; a < lam.rows(); ++a) {
        table[a].resize(lam.parts()[a]);
        for (int c = 0; c < lam.parts()[a]; ++c)
            table[a][c] = lam.parts()[a] - (c + 1) + tr.parts()[c] - static_cast<int>(a);
    }
    return table;
}

// Column hook-length condition: within every column, the ell-part of
// (Q^h - 1)/(Q - 1) must not depend on the node. Exact big-integer
// arithmetic; independent of any closed form for these ell-parts.
inline bool is_jm(const Partition& lam, std::uint64_t Q, std::uint64_t ell) {
    if (Q < 2) throw std::invalid_argument("is_jm: Q must be >= 2");
    if (!is_prime(ell)) throw std::invalid_argument("is_jm: ell must be prime");
    if (lam.empty()) return true;
    if (lam.size() > 64) throw capacity_error("is_jm: |lambda| capped at 64");

    auto table = hooks(lam);
    Partition tr = transpose(lam);
    for (int c = 0; c < lam.parts()[0]; ++c) {
        bool have = false;
        unsigned col_val = 0;
        for (int a = 0; a < tr.parts()[c]; ++a) {
            BigInt num = boost::multiprecision::pow(BigInt(Q), unsigned(table[a][c])) - 1;
            unsigned v = big_ell_val(num / (BigInt(Q) - 1), ell);
            if (!have) { col_val = v; have = true; }
            else if (v != col_val) return false;
        }
    }
    return true;
}

// All partitions of k in lexicographically decreasing generation order.
inline const std::vector<Partition>& partitions_of(int k) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) { out.emplace_back(cur); return; }
        for (int part = std::min(remaining, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    if (k < 0) throw std::invalid_argument("partitions_of: negative k");
    rec(rec, k, k == 0 ? 1 : k);
    return cache.emplace(k, std::move(out)).first->second;
}

} // namespace slnq
