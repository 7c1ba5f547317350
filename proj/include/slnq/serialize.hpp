#pragma once

#include <json.hpp>

#include "slnq/classcount.hpp"
#include "slnq/symbols.hpp"

namespace slnq {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& lam) { return Json(lam.parts()); }

inline Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline Json to_json(const FieldElt& x) { return Json{{"level", x.level}, {"exp", x.exp}}; }

inline Json to_json(const FrobClass& c) { return Json{{"level", c.level}, {"canon_exp", c.exp}}; }

namespace detail {

inline Json pairs_to_json(const std::vector<SymbolPair>& pairs) {
    Json arr = Json::array();
    for (const auto& pr : pairs)
        arr.push_back(Json{{"deg", pr.cls.level}, {"exp", pr.cls.exp}, {"partition", to_json(pr.part)}});
    return arr;
}

inline std::vector<SymbolPair> pairs_from_json(const SymbolCtx& ctx, const Json& arr) {
    std::vector<SymbolPair> pairs;
    for (const auto& item : arr) {
        unsigned deg = item.at("deg").get<unsigned>();
        std::uint64_t exp = item.at("exp").get<std::uint64_t>();
        pairs.push_back(SymbolPair{frob_class(ctx.tower, normalized(ctx.tower, deg, exp)),
                                   partition_from_json(item.at("partition"))});
    }
    return pairs;
}

template <class Symbol>
Json symbol_to_json(const SymbolCtx& ctx, const Symbol& s) {
    return Json{{"q", ctx.q()},
                {"ell", ctx.ell.ell},
                {"n", s.n()},
                {"pairs", pairs_to_json(s.pairs())}};
}

} // namespace detail

inline Json to_json(const SymbolCtx& ctx, const ModSymbol& s) {
    return detail::symbol_to_json(ctx, s);
}

inline Json to_json(const SymbolCtx& ctx, const CxSymbol& s) {
    return detail::symbol_to_json(ctx, s);
}

inline ModSymbol mod_symbol_from_json(const SymbolCtx& ctx, const Json& j) {
    return ModSymbol::make(ctx, detail::pairs_from_json(ctx, j.at("pairs")));
}

inline CxSymbol cx_symbol_from_json(const SymbolCtx& ctx, const Json& j) {
    return CxSymbol::make(ctx, detail::pairs_from_json(ctx, j.at("pairs")));
}

inline Json to_json(const SymbolCtx& ctx, const ClassLabel& label) {
    Json blocks = Json::array();
    for (const auto& b : label.ss.blocks)
        blocks.push_back(Json{{"deg", b.cls.level}, {"exp", b.cls.exp}, {"mult", b.mult}});
    Json mp = Json::array();
    for (const auto& lam : label.mp) mp.push_back(to_json(lam));
    return Json{{"q", ctx.q()}, {"ss", blocks}, {"mp", mp}};
}

} // namespace slnq
