#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "slnq/oracle.hpp"
#include "slnq/serialize.hpp"

namespace slnq {

struct GridPoint {
    int n = 1;
    std::uint64_t q = 2;
    std::uint64_t ell = 3;
};

inline std::vector<GridPoint> default_grid() {
    std::vector<GridPoint> grid;
    for (int n : {1, 2, 3})
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
            for (std::uint64_t ell : {2, 3, 5, 7})
                if (ell != PrimePowerQ::of(q).p) grid.push_back(GridPoint{n, q, ell});
    return grid;
}

inline std::vector<GridPoint> grid_from_json(const Json& j) {
    std::vector<GridPoint> grid;
    for (const auto& item : j)
        grid.push_back(GridPoint{item.at("n").get<int>(), item.at("q").get<std::uint64_t>(),
                                 item.at("ell").get<std::uint64_t>()});
    return grid;
}

inline Json to_json(const std::vector<GridPoint>& grid) {
    Json arr = Json::array();
    for (const auto& pt : grid)
        arr.push_back(Json{{"n", pt.n}, {"q", pt.q}, {"ell", pt.ell}});
    return arr;
}

enum class CaseStatus { Pass, Fail, Skip };

struct CaseResult {
    std::string name;
    CaseStatus status = CaseStatus::Pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    int count(CaseStatus s) const {
        int c = 0;
        for (const auto& r : cases)
            if (r.status == s) ++c;
        return c;
    }
    bool all_passed() const { return count(CaseStatus::Fail) == 0; }
};

inline Json to_json(const SuiteReport& report) {
    Json cases = Json::array();
    for (const auto& c : report.cases) {
        const char* status = c.status == CaseStatus::Pass   ? "PASS"
                             : c.status == CaseStatus::Fail ? "FAIL"
                                                            : "SKIP";
        cases.push_back(Json{{"name", c.name}, {"status", status}, {"detail", c.detail}});
    }
    return Json{{"suite", report.suite},
                {"passed", report.count(CaseStatus::Pass)},
                {"failed", report.count(CaseStatus::Fail)},
                {"skipped", report.count(CaseStatus::Skip)},
                {"cases", cases}};
}

// Memoized oracle class data; a null entry records a capacity miss.
class OracleCache {
public:
    const ClassData* classes(const GroupSpec& spec) {
        auto it = cache_.find(spec);
        if (it == cache_.end()) {
            std::optional<ClassData> data;
            try {
                data = conj_classes(spec);
            } catch (const capacity_error&) {
            }
            it = cache_.emplace(spec, std::move(data)).first;
        }
        return it->second ? &*it->second : nullptr;
    }

private:
    std::map<GroupSpec, std::optional<ClassData>> cache_;
};

namespace verify_detail {

inline std::string point_name(const GridPoint& pt) {
    std::ostringstream os;
    os << "n=" << pt.n << " q=" << pt.q << " ell=" << pt.ell;
    return os.str();
}

inline GroupSpec normalized_r(int n, std::uint64_t q, const EllPrime& ell) {
    auto spec = GroupSpec::r(n, q, ell);
    if (spec.t == 1) return GroupSpec::gl(n, q);
    if (spec.t == q - 1) return GroupSpec::sl(n, q);
    return spec;
}

// ---------------------------------------------------------------- lnt --

inline SuiteReport suite_lnt(const std::vector<GridPoint>&, OracleCache&) {
    SuiteReport report{"lnt", {}};
    for (std::uint64_t ell : {2, 3, 5, 7, 11, 13}) {
        std::uint64_t checked = 0, exceptional = 0;
        std::string fail;
        for (std::uint64_t r = 2; r <= 200 && fail.empty(); ++r) {
            if ((r - 1) % ell != 0) continue;
            for (unsigned d = 1; ipow(ell, d) <= 64; ++d) {
                auto res = lnt_check(r, ell, d);
                ++checked;
                if (res.exceptional) {
                    ++exceptional;
                    continue;
                }
                if (res.actual != res.predicted) {
                    std::ostringstream os;
                    os << "r=" << r << " d=" << d << " actual=" << res.actual;
                    fail = os.str();
                    break;
                }
            }
        }
        std::ostringstream os;
        os << checked << " cases, " << exceptional << " exceptional flagged";
        report.cases.push_back(CaseResult{"ell=" + std::to_string(ell),
                                          fail.empty() ? CaseStatus::Pass : CaseStatus::Fail,
                                          fail.empty() ? os.str() : fail});
    }
    return report;
}

// ----------------------------------------------------------- k2 / k2c --

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> stabilizer_grid() {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13})
        for (std::uint64_t ell : {2, 3, 5})
            if (ell != PrimePowerQ::of(q).p) out.emplace_back(q, ell);
    return out;
}

inline SuiteReport suite_k2(const std::vector<GridPoint>&, OracleCache&) {
    SuiteReport report{"k2", {}};
    for (auto [q, ellv] : stabilizer_grid()) {
        TowerContext ctx{PrimePowerQ::of(q)};
        EllPrime ell = EllPrime::of(ellv, ctx.q());
        std::uint64_t checked = 0, exceptional = 0;
        std::string fail;
        for (unsigned deg = 1; deg <= ctx.max_level() && ctx.q_pow(deg) <= (1u << 16); ++deg) {
            for (const auto& cls : frob_classes_of_degree(ctx, deg)) {
                FieldElt sigma = class_rep_elt(cls);
                auto pr = parts(ctx, sigma, ell);
                unsigned k = deg / pr.s.level;
                std::uint64_t bound = ell_part(std::gcd<std::uint64_t>(k, q - 1), ell);
                bool exc = ellv == 2 && ctx.q_pow(pr.s.level) % 4 == 3 && k == 2 &&
                           order(ctx, pr.u) >= 8;
                std::uint64_t expected = exc ? 1 : bound;
                std::uint64_t actual = stabilizer_order(ctx, sigma, ell, StabilizerKind::EllPart);
                ++checked;
                if (exc) ++exceptional;
                if (actual != expected || bound % actual != 0) {
                    std::ostringstream os;
                    os << "deg=" << deg << " exp=" << cls.exp << " actual=" << actual
                       << " expected=" << expected;
                    fail = os.str();
                    break;
                }
            }
            if (!fail.empty()) break;
        }
        std::ostringstream name;
        name << "q=" << q << " ell=" << ellv;
        std::ostringstream os;
        os << checked << " classes, " << exceptional << " exceptional";
        report.cases.push_back(CaseResult{name.str(),
                                          fail.empty() ? CaseStatus::Pass : CaseStatus::Fail,
                                          fail.empty() ? os.str() : fail});
    }
    return report;
}

inline SuiteReport suite_k2c(const std::vector<GridPoint>&, OracleCache&) {
    SuiteReport report{"k2c", {}};
    for (auto [q, ellv] : stabilizer_grid()) {
        TowerContext ctx{PrimePowerQ::of(q)};
        EllPrime ell = EllPrime::of(ellv, ctx.q());
        std::uint64_t checked = 0;
        std::string fail;
        for (unsigned a = 0; ipow(ellv, a) <= q - 1 && fail.empty(); ++a) {
            std::uint64_t la = ipow(ellv, a);
            if ((q - 1) % la != 0) break;
            for (unsigned d = 1; d * la <= ctx.max_level() &&
                                 ctx.q_pow(static_cast<unsigned>(d * la)) <= (1u << 16);
                 ++d) {
                FieldElt u = u_of(ctx, a, d, ell);
                std::uint64_t m = ctx.unit_order(d);
                for (std::uint64_t e = 0; e < m; ++e) {
                    FieldElt s = normalized(ctx, d, e);
                    if (s.level != d || !is_ell_prime_element(ctx, s, ell)) continue;
                    FieldElt su = mul(ctx, s, u);
                    ++checked;
                    if (degree(ctx, su) != la * d ||
                        stabilizer_order(ctx, su, ell, StabilizerKind::EllPart) != la) {
                        std::ostringstream os;
                        os << "a=" << a << " d=" << d << " s-exp=" << e;
                        fail = os.str();
                        break;
                    }
                }
                if (!fail.empty()) break;
            }
        }
        std::ostringstream name;
        name << "q=" << q << " ell=" << ellv;
        report.cases.push_back(CaseResult{name.str(),
                                          fail.empty() ? CaseStatus::Pass : CaseStatus::Fail,
                                          fail.empty() ? std::to_string(checked) + " elements" : fail});
    }
    return report;
}

// ---------------------------------------------------------------- jmp --

inline std::vector<std::uint64_t> jm_q_values(std::uint64_t ell) {
    std::set<std::uint64_t> qs{ell + 1, 2 * ell + 1};
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
        if ((q - 1) % ell == 0) qs.insert(q);
    return {qs.begin(), qs.end()};
}

inline std::vector<int> padded_transpose_mod(const Partition& lam, std::uint64_t ell, int width) {
    Partition tr = transpose(lam);
    std::vector<int> out(width, 0);
    for (std::size_t i = 0; i < tr.parts().size(); ++i)
        out[i] = tr.parts()[i] % static_cast<int>(ell);
    return out;
}

inline SuiteReport suite_jmp(const std::vector<GridPoint>&, OracleCache&) {
    SuiteReport report{"jmp", {}};

    for (std::uint64_t ell : {2, 3, 5}) {
        for (std::uint64_t Q : jm_q_values(ell)) {
            std::vector<Partition> jm;
            for (int k = 0; k <= 12; ++k)
                for (const auto& lam : partitions_of(k))
                    if (is_jm(lam, Q, ell)) jm.push_back(lam);

            // (i) congruent transposed columns force equality
            std::string fail_i;
            for (const auto& lam : jm) {
                for (const auto& mu : jm) {
                    int width = std::max(lam.empty() ? 0 : lam.parts()[0],
                                         mu.empty() ? 0 : mu.parts()[0]);
                    if (padded_transpose_mod(lam, ell, width) !=
                        padded_transpose_mod(mu, ell, width))
                        continue;
                    if (!(lam == mu)) {
                        fail_i = "distinct congruent pair found";
                        break;
                    }
                }
                if (!fail_i.empty()) break;
            }

            // (ii) all columns divisible by ell only for the empty partition
            std::string fail_ii;
            for (const auto& lam : jm) {
                if (lam.empty()) continue;
                bool divisible = true;
                Partition tr = transpose(lam);
                for (int col : tr.parts())
                    if (col % static_cast<int>(ell) != 0) divisible = false;
                if (divisible) {
                    fail_ii = "nonempty column-divisible witness";
                    break;
                }
            }

            // (iii) uniqueness of sums of ell^{a_i}-scaled transposes
            std::string fail_iii;
            {
                std::vector<Partition> small;
                for (int k = 1; k <= 8; ++k)
                    for (const auto& lam : partitions_of(k))
                        if (is_jm(lam, Q, ell)) small.push_back(lam);
                std::map<std::vector<int>, std::string> seen;
                auto record = [&](const Partition& total, const std::string& desc) {
                    auto [it, fresh] = seen.emplace(total.parts(), desc);
                    if (!fresh && it->second != desc) fail_iii = "colliding decompositions";
                };
                auto describe = [](std::initializer_list<std::pair<int, const Partition*>> terms) {
                    std::ostringstream os;
                    for (auto [a, lam] : terms) {
                        os << a << ":";
                        for (int part : lam->parts()) os << part << ",";
                        os << ";";
                    }
                    return os.str();
                };
                for (int a1 = 0; a1 <= 3; ++a1) {
                    for (const auto& l1 : small) {
                        Partition t1 = scale(static_cast<int>(ipow(ell, a1)), transpose(l1));
                        record(t1, describe({{a1, &l1}}));
                        for (int a2 = a1 + 1; a2 <= 3; ++a2)
                            for (const auto& l2 : small) {
                                Partition t2 =
                                    scale(static_cast<int>(ipow(ell, a2)), transpose(l2));
                                record(add(t1, t2), describe({{a1, &l1}, {a2, &l2}}));
                            }
                    }
                }
            }

            std::ostringstream name;
            name << "ell=" << ell << " Q=" << Q;
            std::string fail = !fail_i.empty() ? fail_i : !fail_ii.empty() ? fail_ii : fail_iii;
            report.cases.push_back(CaseResult{name.str(),
                                              fail.empty() ? CaseStatus::Pass : CaseStatus::Fail,
                                              fail.empty() ? std::to_string(jm.size()) + " JM partitions"
                                                           : fail});
        }
    }

    // dominance is preserved by sums, and equal sums force equal parts
    {
        std::string fail;
        auto dominated_pairs = [](int k) {
            std::vector<std::pair<const Partition*, const Partition*>> out;
            for (const auto& a : partitions_of(k))
                for (const auto& b : partitions_of(k))
                    if (dominates(a, b)) out.emplace_back(&a, &b);
            return out;
        };
        for (int k1 = 1; k1 <= 8 && fail.empty(); ++k1) {
            auto p1 = dominated_pairs(k1);
            for (int k2 = 1; k2 <= 8 && fail.empty(); ++k2) {
                auto p2 = dominated_pairs(k2);
                for (const auto& [a1, b1] : p1) {
                    for (const auto& [a2, b2] : p2) {
                        Partition sa = add(*a1, *a2), sb = add(*b1, *b2);
                        if (!dominates(sa, sb)) { fail = "sum not dominating"; break; }
                        if (sa == sb && !(*a1 == *b1 && *a2 == *b2)) {
                            fail = "equal sums with unequal parts";
                            break;
                        }
                    }
                    if (!fail.empty()) break;
                }
            }
        }
        // three components, all sizes up to 8; partial sums hoisted
        if (fail.empty()) {
            std::vector<std::pair<const Partition*, const Partition*>> all;
            for (int k = 1; k <= 8; ++k) {
                auto pk = dominated_pairs(k);
                all.insert(all.end(), pk.begin(), pk.end());
            }
            for (std::size_t i = 0; i < all.size() && fail.empty(); ++i)
                for (std::size_t j = 0; j < all.size() && fail.empty(); ++j) {
                    Partition sa12 = add(*all[i].first, *all[j].first);
                    Partition sb12 = add(*all[i].second, *all[j].second);
                    for (const auto& [a3, b3] : all) {
                        Partition sa = add(sa12, *a3);
                        Partition sb = add(sb12, *b3);
                        if (!dominates(sa, sb)) {
                            fail = "triple sum not dominating";
                            break;
                        }
                        if (sa == sb && !(*all[i].first == *all[i].second &&
                                          *all[j].first == *all[j].second && *a3 == *b3)) {
                            fail = "equal triple sums, unequal parts";
                            break;
                        }
                    }
                }
        }
        report.cases.push_back(CaseResult{"dominance-sums",
                                          fail.empty() ? CaseStatus::Pass : CaseStatus::Fail, fail});
    }
    return report;
}

// ------------------------------------------------------------ counting --

inline SuiteReport suite_counting(const std::vector<GridPoint>& grid, OracleCache& oracle) {
    SuiteReport report{"counting", {}};
    for (const auto& pt : grid) {
        SymbolCtx ctx(pt.q, pt.ell);
        std::string base = point_name(pt);

        auto mods = enumerate_mod_symbols(ctx, pt.n);
        auto reps = orbit_reps(ctx, mods);
        std::uint64_t ibr = 0;
        for (const auto& rep : reps) ibr += num_constituents(ctx, rep);
        std::uint64_t kappa_sum = 0;
        for (const auto& s : mods) kappa_sum += kappa_ell(ctx, s);

        std::uint64_t gl_reg = count_classes(ctx, pt.n, ClassFilter::EllRegular, GroupKind::GL);
        std::uint64_t gl_all = count_classes(ctx, pt.n, ClassFilter::All, GroupKind::GL);
        std::uint64_t r_reg = count_classes(ctx, pt.n, ClassFilter::EllRegular, GroupKind::R);
        std::uint64_t cx_count = enumerate_cx_symbols(ctx, pt.n).size();
        std::uint64_t mass = 0;
        for_each_class_label(ctx, pt.n, ClassFilter::All,
                             [&](const ClassLabel& c) { mass += class_size(ctx, c); });

        {
            bool ok = mods.size() == gl_reg && cx_count == gl_all && kappa_sum == r_reg &&
                      mass == gl_order(pt.n, pt.q);
            std::ostringstream os;
            os << "#symbols=" << mods.size() << " #cx=" << cx_count << " sum-kappa=" << kappa_sum
               << " ibr=" << ibr;
            report.cases.push_back(CaseResult{base + " parametric",
                                              ok ? CaseStatus::Pass : CaseStatus::Fail, os.str()});
        }

        EllPrime ell = ctx.ell;
        if (const auto* sl = oracle.classes(GroupSpec::sl(pt.n, pt.q))) {
            std::uint64_t sl_reg = ell_regular_count(*sl, ell);
            std::ostringstream os;
            os << "oracle=" << sl_reg << " ibr=" << ibr;
            report.cases.push_back(CaseResult{
                base + " sl-oracle", sl_reg == ibr ? CaseStatus::Pass : CaseStatus::Fail, os.str()});
        } else {
            report.cases.push_back(
                CaseResult{base + " sl-oracle", CaseStatus::Skip, "capacity"});
        }

        if (const auto* r = oracle.classes(normalized_r(pt.n, pt.q, ell))) {
            std::uint64_t oracle_r = ell_regular_count(*r, ell);
            std::ostringstream os;
            os << "oracle=" << oracle_r << " parametric=" << r_reg;
            report.cases.push_back(CaseResult{base + " r-oracle",
                                              oracle_r == r_reg && r_reg == kappa_sum
                                                  ? CaseStatus::Pass
                                                  : CaseStatus::Fail,
                                              os.str()});
        } else {
            report.cases.push_back(CaseResult{base + " r-oracle", CaseStatus::Skip, "capacity"});
        }

        if (const auto* gl = oracle.classes(GroupSpec::gl(pt.n, pt.q))) {
            std::uint64_t oracle_all = gl->classes.size();
            std::uint64_t oracle_reg = ell_regular_count(*gl, ell);
            bool ok = oracle_all == gl_all && oracle_reg == gl_reg && oracle_all == cx_count &&
                      oracle_reg == mods.size();
            std::ostringstream os;
            os << "oracle all=" << oracle_all << " regular=" << oracle_reg;
            report.cases.push_back(
                CaseResult{base + " gl-oracle", ok ? CaseStatus::Pass : CaseStatus::Fail, os.str()});
        } else {
            report.cases.push_back(CaseResult{base + " gl-oracle", CaseStatus::Skip, "capacity"});
        }
    }
    return report;
}

// -------------------------------------------------------------- pindex --

inline bool orbit_feasible(int n, std::uint64_t q) {
    if (n > kMaxMatDim) return false;
    std::uint64_t space = 1;
    for (int i = 0; i < n * n; ++i) {
        space *= q;
        if (space > kMaxKeySpace) return false;
    }
    return gl_order(n, q) <= 2000000;
}

inline SuiteReport suite_pindex(const std::vector<GridPoint>& grid, OracleCache&) {
    SuiteReport report{"pindex", {}};
    for (const auto& pt : grid) {
        std::string base = point_name(pt);
        if (!orbit_feasible(pt.n, pt.q)) {
            report.cases.push_back(CaseResult{base, CaseStatus::Skip, "capacity"});
            continue;
        }
        SymbolCtx ctx(pt.q, pt.ell);
        auto gl = GroupSpec::gl(pt.n, pt.q);
        auto r = normalized_r(pt.n, pt.q, ctx.ell);
        std::uint64_t checked = 0;
        std::string fail;
        for (const auto& label : enumerate_class_labels(ctx, pt.n, ClassFilter::EllRegular)) {
            Mat rep = class_rep(ctx, label);
            std::uint64_t expected = splitting_in_R(ctx, label);
            std::uint64_t predicted = std::gcd(ell_part(pt.q - 1, ctx.ell),
                                               static_cast<std::uint64_t>(delta(label.mp)));
            std::uint64_t ratio = class_splitting(rep, gl, r);
            ++checked;
            if (ratio != expected || expected != predicted) {
                std::ostringstream os;
                os << "label " << to_json(ctx, label).dump() << " ratio=" << ratio
                   << " predicted=" << predicted;
                fail = os.str();
                break;
            }
        }
        report.cases.push_back(CaseResult{base, fail.empty() ? CaseStatus::Pass : CaseStatus::Fail,
                                          fail.empty() ? std::to_string(checked) + " classes" : fail});
    }
    return report;
}

// ---------------------------------------------------------------- ldet --

inline SuiteReport suite_ldet(const std::vector<GridPoint>&, OracleCache&) {
    SuiteReport report{"ldet", {}};
    for (std::uint64_t q : {2, 3, 5}) {
        for (int n = 1; n <= 3; ++n) {
            std::string fail;
            for (const auto& lam : partitions_of(n)) {
                // both sides are divisors of q-1, so subgroup equality is
                // equality of the generator exponents
                std::uint64_t expected =
                    std::gcd(static_cast<std::uint64_t>(delta(lam)), q - 1);
                std::uint64_t actual = det_image_of_centralizer(lam, q);
                if (actual != expected) {
                    std::ostringstream os;
                    os << "lambda " << to_json(lam).dump() << " image-exp=" << actual
                       << " expected=" << expected;
                    fail = os.str();
                    break;
                }
            }
            std::ostringstream name;
            name << "q=" << q << " n=" << n;
            report.cases.push_back(
                CaseResult{name.str(), fail.empty() ? CaseStatus::Pass : CaseStatus::Fail, fail});
        }
    }
    return report;
}

// --------------------------------------------------------------- kmain --

inline SuiteReport suite_kmain(const std::vector<GridPoint>& grid, OracleCache&) {
    SuiteReport report{"kmain", {}};
    for (const auto& pt : grid) {
        std::string base = point_name(pt);
        if (ipow(pt.q, static_cast<unsigned>(pt.n)) > (1u << 16)) {
            report.cases.push_back(CaseResult{base, CaseStatus::Skip, "capacity"});
            continue;
        }
        SymbolCtx ctx(pt.q, pt.ell);
        std::uint64_t checked = 0;
        std::string fail;
        for (const auto& s : enumerate_cx_symbols(ctx, pt.n)) {
            auto st = star(ctx, s);
            std::uint64_t kp_cx = kappa_ell_prime(ctx, s);
            std::uint64_t kp_star = kappa_ell_prime(ctx, st);
            std::uint64_t kl_cx = kappa_ell_cx(ctx, s);
            std::uint64_t kl_star = kappa_ell(ctx, st);
            ++checked;

            bool ok = kp_star % kp_cx == 0 && kl_star % kl_cx == 0;
            if (ok && jm_irreducible(ctx, s)) {
                if (is_critical(ctx, s))
                    ok = kl_cx == 1 && kl_star == 2;
                else
                    ok = kl_cx == kl_star;
                std::uint64_t g = pt.q - 1;
                for (const auto& pr : s.pairs()) g = std::gcd<std::uint64_t>(g, decompose(ctx, pr).k);
                ok = ok && kl_star == ell_part(g, ctx.ell);
            }
            if (!ok) {
                fail = "symbol " + to_json(ctx, s).dump();
                break;
            }
        }
        report.cases.push_back(CaseResult{base, fail.empty() ? CaseStatus::Pass : CaseStatus::Fail,
                                          fail.empty() ? std::to_string(checked) + " symbols" : fail});
    }
    return report;
}

// --------------------------------------------------------------- theta --

inline SuiteReport suite_theta(const std::vector<GridPoint>& grid, OracleCache&) {
    SuiteReport report{"theta", {}};
    for (const auto& pt : grid) {
        SymbolCtx ctx(pt.q, pt.ell);
        std::uint64_t checked = 0;
        std::string fail;
        for (const auto& s : enumerate_mod_symbols(ctx, pt.n)) {
            auto lifted = theta(ctx, s);
            ++checked;
            if (!(star(ctx, lifted) == s) || kappa_ell_cx(ctx, lifted) != kappa_ell(ctx, s) ||
                kappa_ell_prime(ctx, lifted) != kappa_ell_prime(ctx, s)) {
                fail = "symbol " + to_json(ctx, s).dump();
                break;
            }
        }
        report.cases.push_back(CaseResult{point_name(pt),
                                          fail.empty() ? CaseStatus::Pass : CaseStatus::Fail,
                                          fail.empty() ? std::to_string(checked) + " symbols" : fail});
    }
    return report;
}

// --------------------------------------------------------------- order --

inline SuiteReport suite_order(const std::vector<GridPoint>& grid, OracleCache&) {
    SuiteReport report{"order", {}};
    for (const auto& pt : grid) {
        SymbolCtx ctx(pt.q, pt.ell);
        auto reps = orbit_reps(ctx, enumerate_mod_symbols(ctx, pt.n));
        std::size_t count = reps.size();
        std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j)
                leq[i][j] = symbol_leq(ctx, reps[i], reps[j]);

        std::string fail;
        for (std::size_t i = 0; i < count && fail.empty(); ++i) {
            if (!leq[i][i]) fail = "not reflexive";
            for (std::size_t j = 0; j < count && fail.empty(); ++j) {
                if (i != j && leq[i][j] && leq[j][i]) fail = "not antisymmetric";
                if (!leq[i][j]) continue;
                for (std::size_t k = 0; k < count; ++k)
                    if (leq[j][k] && !leq[i][k]) { fail = "not transitive"; break; }
            }
        }
        report.cases.push_back(CaseResult{point_name(pt),
                                          fail.empty() ? CaseStatus::Pass : CaseStatus::Fail,
                                          fail.empty() ? std::to_string(count) + " orbit reps" : fail});
    }
    return report;
}

} // namespace verify_detail

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"counting", "pindex", "ldet", "k2", "k2c",
                                                "lnt",      "jmp",    "kmain", "theta", "order"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const std::vector<GridPoint>& grid,
                             OracleCache& oracle) {
    using namespace verify_detail;
    if (name == "counting") return suite_counting(grid, oracle);
    if (name == "pindex") return suite_pindex(grid, oracle);
    if (name == "ldet") return suite_ldet(grid, oracle);
    if (name == "k2") return suite_k2(grid, oracle);
    if (name == "k2c") return suite_k2c(grid, oracle);
    if (name == "lnt") return suite_lnt(grid, oracle);
    if (name == "jmp") return suite_jmp(grid, oracle);
    if (name == "kmain") return suite_kmain(grid, oracle);
    if (name == "theta") return suite_theta(grid, oracle);
    if (name == "order") return suite_order(grid, oracle);
    throw std::invalid_argument("unknown verification suite: " + name);
}

} // namespace slnq
