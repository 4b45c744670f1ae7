#include "vcauchy/cli.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "vcauchy/half_plane.hpp"
#include "vcauchy/partition.hpp"
#include "vcauchy/poly.hpp"
#include "vcauchy/qseries.hpp"
#include "vcauchy/schur.hpp"
#include "vcauchy/verify.hpp"

namespace vcauchy {

namespace {

struct Config {
    unsigned threads = 1;
    std::size_t display_cap = 12;
    bool json = false;
    bool perturb = false;
    bool signed_mode = false;
    int rows = 0;
    int cols = 0;
    int degree = 0;
    int max_weight = 0;
    int vars = 0;
    int steps = 0;
    std::optional<int> weight_cap;
    std::string partition;
    std::string series_kind;
};

CLI::Option* add_count(CLI::App* app, const std::string& name, int& target, const std::string& help)
{
    return app->add_option(name, target, help)->required()->check(CLI::NonNegativeNumber);
}

void add_output_flags(CLI::App* app, Config& cfg)
{
    app->add_flag("--json", cfg.json, "Emit JSON instead of text");
}

void add_verify_flags(CLI::App* app, Config& cfg)
{
    add_output_flags(app, cfg);
    app->add_flag("--perturb", cfg.perturb,
                  "Self-test: negate one right-hand-side term before comparing");
}

int emit_reports(const std::vector<Report>& reports, const Config& cfg, std::ostream& out)
{
    bool all = true;
    if (cfg.json) {
        if (reports.size() == 1) {
            out << to_json(reports.front()).dump(2) << '\n';
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& r : reports)
                arr.push_back(to_json(r));
            out << arr.dump(2) << '\n';
        }
    } else {
        for (const auto& r : reports)
            out << render_text(r, cfg.display_cap);
    }
    for (const auto& r : reports)
        all = all && r.holds;
    return all ? kExitOk : kExitFailed;
}

nlohmann::json chain_json(const Chain& c)
{
    auto slices = nlohmann::json::array();
    for (const auto& s : c.slices())
        slices.push_back(to_string(s));
    return {{"slices", slices}, {"weight", c.weight()}};
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Exact checks of Cauchy-type identities via half vertex operators", "vcauchy"};
    app.require_subcommand(1);
    app.add_option("--threads", cfg.threads, "Worker threads for partition sums")
        ->check(CLI::PositiveNumber);
    app.add_option("--display-cap", cfg.display_cap, "Terms shown per side in text mode (0 = all)");

    auto* verify = app.add_subcommand("verify", "Check an identity exactly");
    verify->require_subcommand(1);

    auto* dual = verify->add_subcommand("dual-cauchy", "prod (1 - x_i y_j) against the Schur sum");
    add_count(dual, "--rows", cfg.rows, "K, number of x variables");
    add_count(dual, "--cols", cfg.cols, "N, number of y variables");
    add_verify_flags(dual, cfg);

    auto* cauchy = verify->add_subcommand("cauchy", "Classical Cauchy identity, truncated");
    add_count(cauchy, "--rows", cfg.rows, "K");
    add_count(cauchy, "--cols", cfg.cols, "N");
    add_count(cauchy, "--degree", cfg.degree, "Truncation: x-degree <= D");
    cauchy->add_flag("--signed", cfg.signed_mode, "Check the signed conjugate pairing instead");
    add_verify_flags(cauchy, cfg);

    auto* corr = verify->add_subcommand("correlation", "Vacuum correlation, Fock contraction vs normal ordering");
    add_count(corr, "--rows", cfg.rows, "K, number of phi- operators");
    add_count(corr, "--cols", cfg.cols, "N, number of phi+ operators");
    add_verify_flags(corr, cfg);

    auto* qbox = verify->add_subcommand("q-box", "prod (1 - q^{i+j}) against the chain sum");
    add_count(qbox, "--rows", cfg.rows, "K");
    add_count(qbox, "--cols", cfg.cols, "N");
    add_verify_flags(qbox, cfg);

    auto* limit = verify->add_subcommand("limit", "prod (1 - q^i)^{i-1} against half plane partitions");
    add_count(limit, "--degree", cfg.degree, "Series order");
    add_verify_flags(limit, cfg);

    auto* macmahon = verify->add_subcommand("macmahon", "Plane partitions against prod 1/(1 - q^i)^i");
    add_count(macmahon, "--degree", cfg.degree, "Series order");
    add_verify_flags(macmahon, cfg);

    auto* fock = verify->add_subcommand("fock", "Fock-space invariant suite");
    add_count(fock, "--max-weight", cfg.max_weight, "Bound on partition weights and indices");
    add_output_flags(fock, cfg);

    auto* expand = app.add_subcommand("expand", "Print an expansion");
    expand->require_subcommand(1);

    auto* schur = expand->add_subcommand("schur", "Monomial expansion of a Schur polynomial");
    schur->add_option("--partition", cfg.partition, "Partition such as 2,1 (- for empty)")->required();
    add_count(schur, "--vars", cfg.vars, "Number of variables");
    add_output_flags(schur, cfg);

    auto* series = expand->add_subcommand("series", "Truncated product expansion");
    series->add_option("kind", cfg.series_kind, "limit | macmahon | q-box")
        ->required()
        ->check(CLI::IsMember({"limit", "macmahon", "q-box"}));
    add_count(series, "--degree", cfg.degree, "Series order");
    auto* series_rows = series->add_option("--rows", cfg.rows, "K (q-box only)")->check(CLI::NonNegativeNumber);
    auto* series_cols = series->add_option("--cols", cfg.cols, "N (q-box only)")->check(CLI::NonNegativeNumber);
    add_output_flags(series, cfg);

    auto* enumerate = app.add_subcommand("enumerate", "List chains and half plane partitions");
    enumerate->require_subcommand(1);

    auto* chains = enumerate->add_subcommand("chains", "Interlacing chains from a partition to the empty one");
    chains->add_option("--from", cfg.partition, "Top partition")->required();
    add_count(chains, "--steps", cfg.steps, "Number of steps n");
    chains->add_option("--weight-cap", cfg.weight_cap, "Bound on total weight")->check(CLI::NonNegativeNumber);
    add_output_flags(chains, cfg);

    auto* stats = enumerate->add_subcommand("hpp-stats", "Weight and height of each half plane partition");
    stats->add_option("--from", cfg.partition, "Top slice")->required();
    add_count(stats, "--steps", cfg.steps, "Number of steps n");
    add_output_flags(stats, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const VerifyOptions opts{cfg.threads, cfg.perturb};
        if (*dual)
            return emit_reports({verify_dual_cauchy(cfg.rows, cfg.cols, opts)}, cfg, out);
        if (*cauchy)
            return emit_reports({verify_cauchy_truncated(cfg.rows, cfg.cols, cfg.degree,
                                                         cfg.signed_mode ? CauchyMode::signed_conjugate
                                                                         : CauchyMode::classical,
                                                         opts)},
                                cfg, out);
        if (*corr)
            return emit_reports({verify_correlation(cfg.rows, cfg.cols, opts)}, cfg, out);
        if (*qbox)
            return emit_reports({verify_q_box(cfg.rows, cfg.cols, opts)}, cfg, out);
        if (*limit)
            return emit_reports({verify_limit_series(cfg.degree, opts)}, cfg, out);
        if (*macmahon)
            return emit_reports({verify_macmahon(cfg.degree, opts)}, cfg, out);
        if (*fock)
            return emit_reports(verify_fock_suite(cfg.max_weight), cfg, out);

        if (*schur) {
            const Partition lambda = Partition::parse(cfg.partition);
            const SchurContext ctx(static_cast<std::size_t>(cfg.vars));
            const MultiPoly s = ctx.schur(lambda);
            if (cfg.json)
                out << nlohmann::json{{"partition", to_string(lambda)}, {"vars", cfg.vars}, {"polynomial", s}}.dump(2)
                    << '\n';
            else
                out << fmt::format("s_({})(x1..x{}) = {}\n", to_string(lambda), cfg.vars, to_string(s));
            return kExitOk;
        }
        if (*series) {
            std::optional<QSeries> s;
            if (cfg.series_kind == "limit") {
                s = limit_series_product(cfg.degree);
            } else if (cfg.series_kind == "macmahon") {
                s = macmahon_product(cfg.degree);
            } else {
                if (!*series_rows || !*series_cols) {
                    err << "expand series q-box requires --rows and --cols\n";
                    return kExitUsage;
                }
                std::vector<Factor> factors;
                for (int i = 1; i <= cfg.rows; ++i)
                    for (int j = 1; j <= cfg.cols; ++j)
                        factors.push_back({i + j, 1});
                s = expand_factor_product(factors, cfg.degree);
            }
            if (cfg.json)
                out << nlohmann::json(*s).dump(2) << '\n';
            else
                out << to_string(*s) << '\n';
            return kExitOk;
        }
        if (*chains) {
            const Partition lambda = Partition::parse(cfg.partition);
            const auto found = enumerate_chains(lambda, cfg.steps, cfg.weight_cap);
            if (cfg.json) {
                auto arr = nlohmann::json::array();
                for (const auto& c : found)
                    arr.push_back(chain_json(c));
                out << arr.dump(2) << '\n';
            } else {
                for (const auto& c : found)
                    out << fmt::format("{}  weight {}\n", to_string(c), c.weight());
                out << fmt::format("{} chains\n", found.size());
            }
            return kExitOk;
        }
        if (*stats) {
            const Partition lambda = Partition::parse(cfg.partition);
            const auto found = enumerate_chains(lambda, cfg.steps);
            auto arr = nlohmann::json::array();
            for (const auto& c : found) {
                const HalfPlanePartition pi = from_chain(c);
                const HppStats st = hpp_stats(pi);
                if (cfg.json) {
                    nlohmann::json item = chain_json(slices(pi));
                    item["hpp"] = pi;
                    item["height"] = st.height;
                    arr.push_back(std::move(item));
                } else {
                    out << fmt::format("{}  weight {} height {}\n{}\n", to_string(slices(pi)), st.weight,
                                       st.height, render_tableau(pi));
                }
            }
            if (cfg.json)
                out << arr.dump(2) << '\n';
            else
                out << fmt::format("{} half plane partitions\n", found.size());
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace vcauchy
