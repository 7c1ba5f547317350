#include <catch2/catch_amalgamated.hpp>

#include "slnq/symbols.hpp"

using namespace slnq;

namespace {

SymbolPair pair_of(const SymbolCtx& ctx, unsigned level, std::uint64_t exp, Partition lam) {
    return SymbolPair{frob_class(ctx.tower, normalized(ctx.tower, level, exp)), std::move(lam)};
}

} // namespace

TEST_CASE("symbol construction and canonical form") {
    SymbolCtx ctx(3, 2);
    auto s = ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1, 1}))});
    CHECK(s.n() == 2);
    CHECK_THROWS_AS(ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition{})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1})),
                                          pair_of(ctx, 1, 0, Partition({1}))}),
                    std::invalid_argument);
    // order-8 representative is not an ell'-element
    CHECK_THROWS_AS(ModSymbol::make(ctx, {pair_of(ctx, 2, 1, Partition({1}))}),
                    std::invalid_argument);
    CHECK_NOTHROW(CxSymbol::make(ctx, {pair_of(ctx, 2, 1, Partition({1}))}));

    SymbolCtx ctx7(7, 3);
    auto a = ModSymbol::make(ctx7, {pair_of(ctx7, 1, 3, Partition({1})),
                                    pair_of(ctx7, 1, 0, Partition({1}))});
    auto b = ModSymbol::make(ctx7, {pair_of(ctx7, 1, 0, Partition({1})),
                                    pair_of(ctx7, 1, 3, Partition({1}))});
    CHECK(a == b);
}

TEST_CASE("scalar action") {
    SymbolCtx ctx(7, 3);
    auto s = CxSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1})),
                                  pair_of(ctx, 1, 3, Partition({1}))});
    CHECK(act(ctx, identity_elt(), s) == s);

    auto minus1 = normalized(ctx.tower, 1, 3);
    CHECK(act(ctx, minus1, s) == s); // swaps the two pairs

    // group action, checked on every enumerated symbol of small weight
    for (int n = 1; n <= 3; ++n) {
        for (const auto& m : enumerate_mod_symbols(ctx, n)) {
            for (const auto& tau : ell_prime_subgroup_level1(ctx.tower, ctx.ell)) {
                auto back = act(ctx, inverse(ctx.tower, tau), act(ctx, tau, m));
                REQUIRE(back == m);
            }
        }
    }

    SymbolCtx ctx3(3, 2);
    auto mod = ModSymbol::make(ctx3, {pair_of(ctx3, 1, 0, Partition({2}))});
    CHECK_THROWS_AS(act(ctx3, normalized(ctx3.tower, 1, 1), mod), std::invalid_argument);
}

TEST_CASE("ell-prime branching number") {
    SymbolCtx ctx(7, 3);
    auto unip = ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({3}))});
    CHECK(kappa_ell_prime(ctx, unip) == 1);

    // [([-1],(1)), ([t],(1))] with t of order 3: kappa = 1
    auto s1 = CxSymbol::make(ctx, {pair_of(ctx, 1, 3, Partition({1})),
                                   pair_of(ctx, 1, 2, Partition({1}))});
    REQUIRE(order(ctx.tower, normalized(ctx.tower, 1, 2)) == 3);
    CHECK(kappa_ell_prime(ctx, s1) == 1);

    // [([-1],(1)), ([1],(1))]: kappa = 2
    auto s2 = ModSymbol::make(ctx, {pair_of(ctx, 1, 3, Partition({1})),
                                    pair_of(ctx, 1, 0, Partition({1}))});
    CHECK(kappa_ell_prime(ctx, s2) == 2);
}

TEST_CASE("ell branching number") {
    SymbolCtx ctx(3, 2);
    CHECK(kappa_ell(ctx, ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({2}))})) == 1);
    CHECK(kappa_ell(ctx, ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1, 1}))})) == 2);
    SymbolCtx ctx4(3, 2);
    CHECK(kappa_ell(ctx4, ModSymbol::make(ctx4, {pair_of(ctx4, 1, 0, Partition({2, 2}))})) == 2);
}

TEST_CASE("ell stabilizer of complex symbols") {
    SymbolCtx ctx3(3, 2);
    CHECK(kappa_ell_cx(ctx3, CxSymbol::make(ctx3, {pair_of(ctx3, 1, 0, Partition({2}))})) == 1);

    auto crit = CxSymbol::make(ctx3, {pair_of(ctx3, 2, 1, Partition({1}))});
    REQUIRE(order(ctx3.tower, class_rep_elt(crit.pairs()[0].cls)) == 8);
    CHECK(kappa_ell_cx(ctx3, crit) == 1);

    SymbolCtx ctx5(5, 2);
    auto s8 = CxSymbol::make(ctx5, {pair_of(ctx5, 2, 3, Partition({1}))});
    REQUIRE(order(ctx5.tower, class_rep_elt(s8.pairs()[0].cls)) == 8);
    CHECK(kappa_ell_cx(ctx5, s8) == 2);
}

TEST_CASE("constituent counts") {
    SymbolCtx ctx(3, 2);
    CHECK(num_constituents(ctx, ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({2}))})) == 1);
    CHECK(num_constituents(ctx, ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1, 1}))})) == 2);
}

TEST_CASE("star map") {
    SymbolCtx ctx(3, 2);
    auto mod = ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({2}))});
    CHECK(star(ctx, as_cx(ctx, mod)) == mod);

    // order-8 class over F_9: s = 1, k = 2, delta = (2 * (1)')' = (1,1)
    auto crit = CxSymbol::make(ctx, {pair_of(ctx, 2, 1, Partition({1}))});
    CHECK(star(ctx, crit) == ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1, 1}))}));

    SymbolCtx ctx7(7, 3);
    auto e1b = CxSymbol::make(ctx7, {pair_of(ctx7, 1, 3, Partition({1})),
                                     pair_of(ctx7, 1, 2, Partition({1}))});
    auto expected = ModSymbol::make(ctx7, {pair_of(ctx7, 1, 3, Partition({1})),
                                           pair_of(ctx7, 1, 0, Partition({1}))});
    CHECK(star(ctx7, e1b) == expected);
}

TEST_CASE("critical symbols") {
    SymbolCtx ctx3(3, 2);
    auto mod = ModSymbol::make(ctx3, {pair_of(ctx3, 1, 0, Partition({1, 1}))});
    CHECK_FALSE(is_critical(ctx3, as_cx(ctx3, mod)));

    auto crit = CxSymbol::make(ctx3, {pair_of(ctx3, 2, 1, Partition({1}))});
    CHECK(is_critical(ctx3, crit));

    // order-4 class has |u| < 8
    auto small = CxSymbol::make(ctx3, {pair_of(ctx3, 2, 2, Partition({1}))});
    REQUIRE(order(ctx3.tower, class_rep_elt(small.pairs()[0].cls)) == 4);
    CHECK_FALSE(is_critical(ctx3, small));

    SymbolCtx ctx5(5, 2);
    for (const auto& s : enumerate_cx_symbols(ctx5, 2))
        REQUIRE_FALSE(is_critical(ctx5, s)); // 5 = 1 (mod 4)
}

TEST_CASE("reduction irreducibility criterion") {
    SymbolCtx ctx(7, 3);
    auto distinct = CxSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1})),
                                         pair_of(ctx, 2, 1, Partition({1}))});
    CHECK(jm_irreducible(ctx, distinct));

    auto e1b = CxSymbol::make(ctx, {pair_of(ctx, 1, 3, Partition({1})),
                                    pair_of(ctx, 1, 2, Partition({1}))});
    CHECK(jm_irreducible(ctx, e1b));

    auto hook = CxSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({2, 1}))});
    CHECK_FALSE(jm_irreducible(ctx, hook));

    // equal degree with equal ell'-part classes
    auto clash = CxSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1})),
                                      pair_of(ctx, 1, 2, Partition({1}))});
    CHECK_FALSE(jm_irreducible(ctx, clash));
}

TEST_CASE("irreducible-reduction decision") {
    SymbolCtx ctx3(3, 2);
    auto crit = CxSymbol::make(ctx3, {pair_of(ctx3, 2, 1, Partition({1}))});
    auto d1 = main2_decision(ctx3, crit);
    CHECK(d1.jm);
    CHECK(d1.kappa_match);
    CHECK(d1.critical);
    CHECK_FALSE(d1.constituent_reduction_irreducible);

    SymbolCtx ctx7(7, 3);
    auto e1b = CxSymbol::make(ctx7, {pair_of(ctx7, 1, 3, Partition({1})),
                                     pair_of(ctx7, 1, 2, Partition({1}))});
    auto d2 = main2_decision(ctx7, e1b);
    CHECK(d2.jm);
    CHECK_FALSE(d2.kappa_match);
    CHECK_FALSE(d2.critical);
    CHECK_FALSE(d2.constituent_reduction_irreducible);

    // all ell'-regular: decision reduces to the hook-length condition
    for (const auto& m : enumerate_mod_symbols(ctx7, 2)) {
        auto d = main2_decision(ctx7, as_cx(ctx7, m));
        REQUIRE(d.kappa_match);
        REQUIRE_FALSE(d.critical);
        REQUIRE(d.constituent_reduction_irreducible == d.jm);
    }
}

TEST_CASE("theta lift") {
    SymbolCtx ctx(3, 2);
    auto plain = ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({2}))});
    CHECK(theta(ctx, plain) == as_cx(ctx, plain));

    auto split = ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1, 1}))});
    auto lifted = theta(ctx, split);
    REQUIRE(lifted.pairs().size() == 1);
    CHECK(lifted.pairs()[0].part == Partition({1}));
    CHECK(order(ctx.tower, class_rep_elt(lifted.pairs()[0].cls)) == 4);
    CHECK(star(ctx, lifted) == split);
    CHECK(kappa_ell_cx(ctx, lifted) == kappa_ell(ctx, split));
    CHECK(kappa_ell_prime(ctx, lifted) == kappa_ell_prime(ctx, split));
}

TEST_CASE("symbol order") {
    SymbolCtx ctx(3, 2);
    auto row = ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({2}))});
    auto col = ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1, 1}))});
    CHECK(symbol_leq(ctx, row, row));
    CHECK(symbol_leq(ctx, row, col));
    CHECK_FALSE(symbol_leq(ctx, col, row));

    SymbolCtx ctx7(7, 2);
    auto a = ModSymbol::make(ctx7, {pair_of(ctx7, 1, 2, Partition({2}))});
    auto b = ModSymbol::make(ctx7, {pair_of(ctx7, 1, 4, Partition({1, 1}))});
    CHECK(symbol_leq(ctx7, a, b)); // nu moves [eps^2] to [eps^4]
    CHECK_THROWS_AS(symbol_leq(ctx, row, ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1}))})),
                    std::invalid_argument);
}

TEST_CASE("enumeration") {
    SymbolCtx ctx(3, 2);
    auto mods = enumerate_mod_symbols(ctx, 2);
    REQUIRE(mods.size() == 2);
    CHECK(mods[0] == ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({1, 1}))}));
    CHECK(mods[1] == ModSymbol::make(ctx, {pair_of(ctx, 1, 0, Partition({2}))}));
    CHECK(ibr_sl_count(ctx, 2) == 3);

    CHECK(enumerate_cx_symbols(ctx, 1).size() == 2);
    CHECK(enumerate_cx_symbols(ctx, 2).size() == 8); // class count of GL_2(3)

    SymbolCtx ctx5(5, 2);
    CHECK(enumerate_mod_symbols(ctx5, 1).size() == 1); // (q-1)_{2'} = 1

    SymbolCtx ctx13(13, 3);
    CHECK(enumerate_mod_symbols(ctx13, 1).size() == 4); // (q-1)_{3'} = 4

    // restricting the complex enumeration to ell-regular classes recovers
    // the modular one
    std::vector<CxSymbol> restricted;
    for (const auto& s : enumerate_cx_symbols(ctx, 2)) {
        bool ok = true;
        for (const auto& pr : s.pairs())
            if (!is_ell_prime_element(ctx.tower, class_rep_elt(pr.cls), ctx.ell)) ok = false;
        if (ok) restricted.push_back(s);
    }
    REQUIRE(restricted.size() == mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i)
        CHECK(restricted[i] == as_cx(ctx, mods[i]));
}

TEST_CASE("orbit representatives and summand labels") {
    SymbolCtx ctx(7, 3);
    auto all = enumerate_mod_symbols(ctx, 2);
    auto reps = orbit_reps(ctx, all);
    CHECK(reps.size() <= all.size());

    // every symbol reachable from exactly one representative
    std::size_t covered = 0;
    for (const auto& rep : reps)
        for (const auto& tau : ell_prime_subgroup_level1(ctx.tower, ctx.ell))
            if (std::binary_search(all.begin(), all.end(), act(ctx, tau, rep))) ++covered;

    auto labels = ibr_labels(ctx, 2);
    CHECK(labels.size() == ibr_sl_count(ctx, 2));
    for (const auto& lab : labels)
        CHECK(lab.index >= 1);
}
