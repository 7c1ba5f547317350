#include <catch2/catch_amalgamated.hpp>

#include "slnq/serialize.hpp"

using namespace slnq;

TEST_CASE("symbol json schema and round trip") {
    SymbolCtx ctx(7, 3);
    auto s = ModSymbol::make(
        ctx, {SymbolPair{frob_class(ctx.tower, normalized(ctx.tower, 1, 3)), Partition({1})},
              SymbolPair{frob_class(ctx.tower, normalized(ctx.tower, 2, 3)), Partition({2, 1})}});

    Json j = to_json(ctx, s);
    CHECK(j.at("q") == 7);
    CHECK(j.at("ell") == 3);
    CHECK(j.at("n") == s.n());
    REQUIRE(j.at("pairs").size() == 2);
    CHECK(j.at("pairs")[0].at("deg") == 1);

    CHECK(mod_symbol_from_json(ctx, j) == s);
    // canonical form makes the serialization byte-deterministic
    CHECK(to_json(ctx, mod_symbol_from_json(ctx, j)).dump() == j.dump());
}

TEST_CASE("complex symbols round trip through the ell-prime constraint") {
    SymbolCtx ctx(3, 2);
    auto s = CxSymbol::make(
        ctx, {SymbolPair{frob_class(ctx.tower, normalized(ctx.tower, 2, 1)), Partition({1})}});
    Json j = to_json(ctx, s);
    CHECK(cx_symbol_from_json(ctx, j) == s);
    // an order-8 representative is rejected by the modular parser
    CHECK_THROWS_AS(mod_symbol_from_json(ctx, j), std::invalid_argument);
}

TEST_CASE("round trip over every enumerated symbol") {
    for (std::uint64_t q : {3, 5}) {
        SymbolCtx ctx(q, 2);
        for (int n = 1; n <= 2; ++n) {
            for (const auto& s : enumerate_mod_symbols(ctx, n))
                REQUIRE(mod_symbol_from_json(ctx, to_json(ctx, s)) == s);
            for (const auto& s : enumerate_cx_symbols(ctx, n))
                REQUIRE(cx_symbol_from_json(ctx, to_json(ctx, s)) == s);
        }
    }
}

TEST_CASE("partition serialization is largest part first") {
    Json j = to_json(Partition({4, 2, 1}));
    CHECK(j.dump() == "[4,2,1]");
    CHECK(partition_from_json(j) == Partition({4, 2, 1}));
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), std::invalid_argument);
}
