#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "slnq/partitions.hpp"
#include "slnq/symbols.hpp"

namespace slnq {

inline std::uint64_t gl_order(int n, std::uint64_t Q) {
    std::uint64_t qn = ipow(Q, static_cast<unsigned>(n));
    std::uint64_t out = 1;
    std::uint64_t qj = 1;
    for (int j = 0; j < n; ++j) {
        std::uint64_t factor = qn - qj;
        if (out > UINT64_MAX / factor) throw capacity_error("gl_order: overflow");
        out *= factor;
        qj *= Q;
    }
    return out;
}

// Semisimple class label: distinct Frobenius classes with multiplicities,
// n = sum deg * k_i.
struct SemisimpleLabel {
    struct Block {
        FrobClass cls;
        int mult = 1;

        friend bool operator==(const Block&, const Block&) = default;
        friend auto operator<=>(const Block&, const Block&) = default;
    };
    std::vector<Block> blocks;

    friend bool operator==(const SemisimpleLabel&, const SemisimpleLabel&) = default;
    friend auto operator<=>(const SemisimpleLabel&, const SemisimpleLabel&) = default;
};

// Conjugacy class label (s, mu): Jordan type mu^(i) |- k_i per block.
struct ClassLabel {
    SemisimpleLabel ss;
    Multipartition mp;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

inline bool is_ell_regular(const SymbolCtx& ctx, const ClassLabel& c) {
    for (const auto& b : c.ss.blocks)
        if (!is_ell_prime_element(ctx.tower, class_rep_elt(b.cls), ctx.ell)) return false;
    return true;
}

// |C_{GL_k(Q)}(J(lambda))| = Q^N prod_i |GL_{r_i}(Q)| with
// N = sum_j (lambda'_j)^2 - sum_i r_i^2 for lambda = (1^{r_1} 2^{r_2} ...).
inline std::uint64_t unipotent_centralizer_order(const Partition& lam, std::uint64_t Q) {
    if (Q < 2) throw std::invalid_argument("unipotent_centralizer_order: Q must be >= 2");
    Partition tr = transpose(lam);
    long N = 0;
    for (int col : tr.parts()) N += static_cast<long>(col) * col;
    std::vector<int> mult(lam.empty() ? 0 : lam.parts()[0] + 1, 0);
    for (int part : lam.parts()) ++mult[part];
    std::uint64_t out = 1;
    for (std::size_t i = 1; i < mult.size(); ++i) {
        if (mult[i] == 0) continue;
        N -= static_cast<long>(mult[i]) * mult[i];
        out *= gl_order(mult[i], Q);
    }
    return out * ipow(Q, static_cast<unsigned>(N));
}

inline std::uint64_t centralizer_order(const SymbolCtx& ctx, const ClassLabel& c) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < c.ss.blocks.size(); ++i)
        out *= unipotent_centralizer_order(c.mp[i], ctx.tower.q_pow(c.ss.blocks[i].cls.level));
    return out;
}

inline int label_n(const ClassLabel& c) {
    int n = 0;
    for (const auto& b : c.ss.blocks) n += static_cast<int>(b.cls.level) * b.mult;
    return n;
}

inline std::uint64_t class_size(const SymbolCtx& ctx, const ClassLabel& c) {
    return gl_order(label_n(c), ctx.q()) / centralizer_order(ctx, c);
}

// Number of R_n-classes an ell-regular GL_n-class splits into:
// gcd((q-1)_ell, Delta(mu)).
inline std::uint64_t splitting_in_R(const SymbolCtx& ctx, const ClassLabel& c) {
    if (!is_ell_regular(ctx, c))
        throw std::invalid_argument("splitting_in_R: label must be ell-regular");
    return std::gcd(ell_part(ctx.tower.unit_order(1), ctx.ell),
                    static_cast<std::uint64_t>(delta(c.mp)));
}

enum class ClassFilter { All, EllRegular };
enum class GroupKind { GL, SL, R };

template <class Visit>
void for_each_class_label(const SymbolCtx& ctx, int n, ClassFilter filter, Visit&& visit) {
    if (n < 1) throw std::invalid_argument("class labels: n must be >= 1");
    if (static_cast<unsigned>(n) > ctx.tower.max_level())
        throw capacity_error("class labels: q^n exceeds 2^20 cap");

    std::vector<FrobClass> classes;
    for (unsigned d = 1; d <= static_cast<unsigned>(n); ++d) {
        const EllPrime* restrict_ell = filter == ClassFilter::EllRegular ? &ctx.ell : nullptr;
        auto cls = frob_classes_of_degree(ctx.tower, d, restrict_ell);
        classes.insert(classes.end(), cls.begin(), cls.end());
    }
    std::sort(classes.begin(), classes.end());

    SemisimpleLabel ss;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (remaining == 0) {
            // attach every multipartition of the multiplicity vector
            Multipartition mp(ss.blocks.size());
            auto fill = [&](auto&& fill_self, std::size_t block) -> void {
                if (block == ss.blocks.size()) {
                    visit(ClassLabel{ss, mp});
                    return;
                }
                for (const auto& lam : partitions_of(ss.blocks[block].mult)) {
                    mp[block] = lam;
                    fill_self(fill_self, block + 1);
                }
            };
            fill(fill, 0);
            return;
        }
        if (idx == classes.size()) return;
        if (static_cast<int>(classes[idx].level) > remaining) return;
        self(self, idx + 1, remaining);
        int d = static_cast<int>(classes[idx].level);
        for (int k = 1; k * d <= remaining; ++k) {
            ss.blocks.push_back(SemisimpleLabel::Block{classes[idx], k});
            self(self, idx + 1, remaining - k * d);
            ss.blocks.pop_back();
        }
    };
    rec(rec, 0, n);
}

inline std::vector<ClassLabel> enumerate_class_labels(const SymbolCtx& ctx, int n,
                                                      ClassFilter filter) {
    std::vector<ClassLabel> out;
    for_each_class_label(ctx, n, filter, [&](const ClassLabel& c) { out.push_back(c); });
    return out;
}

// Parametric class counts. The R-group count is defined only for the
// ell-regular filter; it sums the splitting numbers over the ell-regular
// GL-labels.
inline std::uint64_t count_classes(const SymbolCtx& ctx, int n, ClassFilter filter,
                                   GroupKind group) {
    if (group == GroupKind::SL)
        throw std::invalid_argument("count_classes: no parametric SL count; use the oracle");
    if (group == GroupKind::R && filter != ClassFilter::EllRegular)
        throw std::invalid_argument("count_classes: R-count defined only for ell-regular classes");
    std::uint64_t total = 0;
    for_each_class_label(ctx, n, filter, [&](const ClassLabel& c) {
        total += group == GroupKind::R ? splitting_in_R(ctx, c) : 1;
    });
    return total;
}

} // namespace slnq
