#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slnq/verify.hpp"

namespace {

using namespace slnq;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct SymbolsOptions {
    int n = 1;
    std::uint64_t q = 2;
    std::uint64_t ell = 3;
    bool orbits = false;
    bool kappa = false;
    bool star_col = false;
    bool jm = false;
    bool main2 = false;
    bool theta_col = false;
    std::string format = "json";
};

void emit_table(const Json& rows, const std::string& format) {
    if (format == "json") {
        std::cout << rows.dump(2) << "\n";
        return;
    }
    // csv: flatten each row, nested values as compact json strings
    std::vector<std::string> columns;
    if (!rows.empty())
        for (const auto& [key, value] : rows[0].items()) {
            (void)value;
            columns.push_back(key);
        }
    for (std::size_t i = 0; i < columns.size(); ++i)
        std::cout << (i ? "," : "") << columns[i];
    std::cout << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const auto& v = row.at(columns[i]);
            std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
            std::string quoted = "\"";
            for (char c : cell) {
                if (c == '"') quoted += "\"\"";
                else quoted += c;
            }
            quoted += "\"";
            std::cout << (i ? "," : "") << quoted;
        }
        std::cout << "\n";
    }
}

int run_symbols(const SymbolsOptions& opt) {
    bool cx_mode = opt.star_col || opt.jm || opt.main2;
    if (cx_mode && (opt.orbits || opt.theta_col)) {
        std::cerr << "error: --star/--jm/--main2 operate on the complex labeling and cannot be "
                     "combined with --orbits/--theta\n";
        return kExitUsage;
    }
    SymbolCtx ctx(opt.q, opt.ell);
    Json rows = Json::array();

    if (cx_mode) {
        for (const auto& s : enumerate_cx_symbols(ctx, opt.n)) {
            Json row{{"symbol", to_json(ctx, s)}};
            if (opt.kappa) {
                row["kappa_ell_prime"] = kappa_ell_prime(ctx, s);
                row["kappa_ell_cx"] = kappa_ell_cx(ctx, s);
            }
            if (opt.star_col) row["star"] = to_json(ctx, star(ctx, s));
            if (opt.jm) row["jm"] = jm_irreducible(ctx, s);
            if (opt.main2) {
                auto d = main2_decision(ctx, s);
                row["main2"] = Json{{"jm", d.jm},
                                    {"kappa_match", d.kappa_match},
                                    {"critical", d.critical},
                                    {"irreducible", d.constituent_reduction_irreducible}};
            }
            rows.push_back(std::move(row));
        }
    } else {
        auto symbols = enumerate_mod_symbols(ctx, opt.n);
        if (opt.orbits) symbols = orbit_reps(ctx, symbols);
        for (const auto& s : symbols) {
            Json row{{"symbol", to_json(ctx, s)}};
            if (opt.kappa) {
                row["kappa_ell_prime"] = kappa_ell_prime(ctx, s);
                row["kappa_ell"] = kappa_ell(ctx, s);
                row["constituents"] = num_constituents(ctx, s);
            }
            if (opt.theta_col) row["theta"] = to_json(ctx, theta(ctx, s));
            rows.push_back(std::move(row));
        }
    }
    emit_table(rows, opt.format);
    return kExitOk;
}

int run_count(int n, std::uint64_t q, std::uint64_t ell, const std::string& group,
              const std::string& mode) {
    SymbolCtx ctx(q, ell);
    bool want_parametric = mode != "oracle";
    bool want_oracle = mode != "parametric";
    Json out;
    OracleCache cache;

    if (group == "gl") {
        std::uint64_t par_all = 0, par_reg = 0;
        if (want_parametric) {
            par_all = count_classes(ctx, n, ClassFilter::All, GroupKind::GL);
            par_reg = count_classes(ctx, n, ClassFilter::EllRegular, GroupKind::GL);
            out["parametric_all"] = par_all;
            out["parametric_ell_regular"] = par_reg;
        }
        if (want_oracle) {
            const auto* data = cache.classes(GroupSpec::gl(n, q));
            if (!data) throw capacity_error("oracle: GL enumeration over capacity");
            out["oracle_all"] = data->classes.size();
            out["oracle_ell_regular"] = ell_regular_count(*data, ctx.ell);
            if (want_parametric)
                out["agree"] = par_all == data->classes.size() &&
                               par_reg == ell_regular_count(*data, ctx.ell);
        }
    } else if (group == "sl") {
        std::uint64_t ibr = 0;
        if (want_parametric) {
            ibr = ibr_sl_count(ctx, n);
            out["parametric_ibr"] = ibr;
        }
        if (want_oracle) {
            const auto* data = cache.classes(GroupSpec::sl(n, q));
            if (!data) throw capacity_error("oracle: SL enumeration over capacity");
            std::uint64_t reg = ell_regular_count(*data, ctx.ell);
            out["oracle_classes"] = reg;
            if (want_parametric) out["agree"] = ibr == reg;
        }
    } else if (group == "r") {
        std::uint64_t par = 0;
        if (want_parametric) {
            par = count_classes(ctx, n, ClassFilter::EllRegular, GroupKind::R);
            out["parametric"] = par;
        }
        if (want_oracle) {
            const auto* data = cache.classes(verify_detail::normalized_r(n, q, ctx.ell));
            if (!data) throw capacity_error("oracle: R enumeration over capacity");
            std::uint64_t reg = ell_regular_count(*data, ctx.ell);
            out["oracle"] = reg;
            if (want_parametric) out["agree"] = par == reg;
        }
    } else {
        std::cerr << "error: group must be one of gl, sl, r\n";
        return kExitUsage;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_classes(int n, std::uint64_t q, std::uint64_t ell, const std::string& format) {
    SymbolCtx ctx(q, ell);
    Json rows = Json::array();
    for (const auto& label : enumerate_class_labels(ctx, n, ClassFilter::All)) {
        Json row{{"label", to_json(ctx, label)},
                 {"centralizer", centralizer_order(ctx, label)},
                 {"class_size", class_size(ctx, label)},
                 {"ell_regular", is_ell_regular(ctx, label)}};
        row["splitting"] =
            is_ell_regular(ctx, label) ? Json(splitting_in_R(ctx, label)) : Json(nullptr);
        rows.push_back(std::move(row));
    }
    emit_table(rows, format);
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& grid_file) {
    std::vector<GridPoint> grid;
    if (grid_file.empty()) {
        grid = default_grid();
    } else {
        std::ifstream in(grid_file);
        if (!in) {
            std::cerr << "error: cannot open grid file " << grid_file << "\n";
            return kExitUsage;
        }
        grid = grid_from_json(Json::parse(in));
    }
    OracleCache cache;
    SuiteReport report = run_suite(suite, grid, cache);
    std::cout << to_json(report).dump(2) << "\n";
    return report.all_passed() ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification data for irreducible modular representations of SL_n(q)"};
    app.require_subcommand(1);

    SymbolsOptions sym;
    auto* sym_cmd = app.add_subcommand("symbols", "enumerate admissible symbols");
    sym_cmd->add_option("n", sym.n, "total weight")->required();
    sym_cmd->add_option("q", sym.q, "prime power")->required();
    sym_cmd->add_option("ell", sym.ell, "prime different from char(F_q)")->required();
    sym_cmd->add_flag("--orbits", sym.orbits, "scalar-orbit representatives only");
    sym_cmd->add_flag("--kappa", sym.kappa, "branching numbers");
    sym_cmd->add_flag("--star", sym.star_col, "star of each complex symbol");
    sym_cmd->add_flag("--jm", sym.jm, "irreducible-reduction test per complex symbol");
    sym_cmd->add_flag("--main2", sym.main2, "full irreducibility decision per complex symbol");
    sym_cmd->add_flag("--theta", sym.theta_col, "theta lift of each symbol");
    sym_cmd->add_option("--format", sym.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    int cnt_n = 1;
    std::uint64_t cnt_q = 2, cnt_ell = 3;
    std::string cnt_group, cnt_mode = "both";
    auto* cnt_cmd = app.add_subcommand("count", "class and constituent counts");
    cnt_cmd->add_option("n", cnt_n)->required();
    cnt_cmd->add_option("q", cnt_q)->required();
    cnt_cmd->add_option("ell", cnt_ell)->required();
    cnt_cmd->add_option("group", cnt_group, "gl, sl or r")->required();
    cnt_cmd->add_flag_callback("--oracle", [&] { cnt_mode = "oracle"; });
    cnt_cmd->add_flag_callback("--parametric", [&] { cnt_mode = "parametric"; });
    cnt_cmd->add_flag_callback("--both", [&] { cnt_mode = "both"; });

    int cls_n = 1;
    std::uint64_t cls_q = 2, cls_ell = 3;
    std::string cls_format = "json";
    auto* cls_cmd = app.add_subcommand("classes", "conjugacy class table");
    cls_cmd->add_option("n", cls_n)->required();
    cls_cmd->add_option("q", cls_q)->required();
    cls_cmd->add_option("ell", cls_ell)->required();
    cls_cmd->add_option("--format", cls_format)->check(CLI::IsMember({"json", "csv"}));

    std::string ver_suite, ver_grid;
    auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
    ver_cmd->add_option("suite", ver_suite, "suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    ver_cmd->add_option("--grid", ver_grid, "grid file (json list of {n,q,ell})");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sym_cmd) return run_symbols(sym);
        if (*cnt_cmd) return run_count(cnt_n, cnt_q, cnt_ell, cnt_group, cnt_mode);
        if (*cls_cmd) return run_classes(cls_n, cls_q, cls_ell, cls_format);
        if (*ver_cmd) return run_verify(ver_suite, ver_grid);
    } catch (const slnq::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
