#include "zeck/cli.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeck/analysis.hpp"
#include "zeck/fib.hpp"
#include "zeck/game.hpp"
#include "zeck/stats.hpp"
#include "zeck/strategy.hpp"

namespace zeck {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

const CLI::Range& positive_int() {
    static const CLI::Range r(std::int64_t{1}, std::numeric_limits<std::int64_t>::max());
    return r;
}

const CLI::Range& non_negative_int() {
    static const CLI::Range r(std::int64_t{0}, std::numeric_limits<std::int64_t>::max());
    return r;
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json identity_json(const IdentityCheck& c) {
    return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}};
}

json report_json(const VerificationReport& r) {
    return {{"index_budget", identity_json(r.index_budget)},
            {"combine_count", identity_json(r.combine_count)},
            {"ones_flow", identity_json(r.ones_flow)},
            {"bounds",
             {{"lower", r.bounds.lower},
              {"upper", r.bounds.upper},
              {"total", r.total_moves},
              {"ok", r.bounds_ok}}},
            {"all_pass", r.all_pass()}};
}

json summary_json(const BatchSummary& s) {
    json hist = json::array();
    for (const HistogramBin& b : s.histogram)
        hist.push_back({{"bin_left", b.bin_left}, {"count", b.count}});
    return {{"n", s.n},
            {"games", s.games},
            {"splits_mean", s.splits_mean},
            {"splits_variance", s.splits_variance},
            {"skewness", s.skewness},
            {"excess_kurtosis", s.excess_kurtosis},
            {"standardized", s.standardized},
            {"histogram", std::move(hist)}};
}

std::vector<StrategyKind> parse_strategy_list(const std::string& text) {
    std::vector<StrategyKind> kinds;
    if (text == "all") {
        kinds.assign(std::begin(kDeterministicStrategies), std::end(kDeterministicStrategies));
        kinds.push_back(StrategyKind::Greedy);
        return kinds;
    }
    std::stringstream ss(text);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const StrategyKind kind = strategy_from_name(name);
        if (kind == StrategyKind::Random)
            throw std::invalid_argument("verify drives random games via --seeds, not --strategies");
        kinds.push_back(kind);
    }
    if (kinds.empty()) throw std::invalid_argument("empty strategy list");
    return kinds;
}

// ---- subcommands ----------------------------------------------------------

struct CmdDecompose {
    std::int64_t n = 0;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("decompose", "Zeckendorf decomposition of N");
        cmd->add_option("n", n, "positive integer to decompose")
            ->required()
            ->check(positive_int());
    }

    int run(std::ostream& out) const {
        const FibTable table(n);
        const ZeckDecomposition d = zeckendorf(table, n);
        json values = json::array();
        for (int idx : d.indices) values.push_back(table.value(idx));
        const json j = {{"schema", kSchemaVersion}, {"command", "decompose"}, {"n", d.n},
                        {"indices", d.indices},     {"values", values},       {"z", d.z},
                        {"iz", d.iz},               {"delta1", d.delta1}};
        out << dump(j);
        return 0;
    }
};

struct CmdSimulate {
    std::int64_t n = 0;
    std::string strategy;
    std::uint64_t seed = 0;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("simulate", "play one game under a strategy");
        cmd->add_option("--n", n, "game size")->required()->check(positive_int());
        cmd->add_option("--strategy", strategy, "strategy name")
            ->required()
            ->check(CLI::IsMember({"combine-largest", "split-largest", "combine-smallest",
                                   "split-smallest", "ones-first-split-smallest", "greedy",
                                   "random"}));
        cmd->add_option("--seed", seed, "seed for the random strategy (default 0)");
    }

    int run(std::ostream& out) const {
        const GameRecord rec = play_out({strategy_from_name(strategy), seed}, n);
        json mc = json::array(), ms = json::array();
        for (std::size_t k = 1; k < rec.tally.mc.size(); ++k) mc.push_back(rec.tally.mc[k]);
        for (std::size_t k = 2; k < rec.tally.ms.size(); ++k) ms.push_back(rec.tally.ms[k]);
        const json j = {{"schema", kSchemaVersion},
                        {"command", "simulate"},
                        {"n", rec.n},
                        {"strategy", rec.strategy},
                        {"seed", rec.seed},
                        {"total_moves", rec.total_moves},
                        {"mc", std::move(mc)},
                        {"ms", std::move(ms)},
                        {"final_state", rec.final_state},
                        {"identities", report_json(rec.report)}};
        out << dump(j);
        return 0;
    }
};

struct CmdBatch {
    std::int64_t n = 0;
    std::int64_t games = 0;
    std::uint64_t seed = 0;
    int bins = 0;  // 0 = unit-width bins over the observed range
    int threads = 1;
    bool standardized = false;
    std::string format = "json";
    std::string out_path;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("batch", "random play-out batch with split statistics");
        cmd->add_option("--n", n, "game size")->required()->check(positive_int());
        cmd->add_option("--games", games, "number of games (>= 2)")->required();
        cmd->add_option("--seed", seed, "master seed; game i uses seed + i (default 0)");
        cmd->add_option("--bins", bins, "histogram bin count (default: unit-width bins)")
            ->check(non_negative_int());
        cmd->add_option("--threads", threads, "worker threads (default 1)")
            ->check(positive_int());
        cmd->add_flag("--standardized", standardized,
                      "histogram of (x-mean)/stddev at width 0.25 over [-5,5]");
        cmd->add_option("--format", format, "json (summary) or csv (per-game rows)")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write to file instead of stdout");
    }

    int run(std::ostream& out) const {
        const std::vector<BatchGame> rows = play_batch(n, games, seed, threads);
        if (format == "csv") {
            std::string text = "game_index,seed,total_moves,splits\n";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                text += std::to_string(i);
                text += ',';
                text += std::to_string(rows[i].seed);
                text += ',';
                text += std::to_string(rows[i].total_moves);
                text += ',';
                text += std::to_string(rows[i].splits);
                text += '\n';
            }
            write_output(text, out_path, out);
            return 0;
        }

        int effective_bins = bins;
        if (effective_bins == 0) {
            std::int64_t lo = rows[0].splits, hi = rows[0].splits;
            for (const BatchGame& r : rows) {
                lo = std::min(lo, r.splits);
                hi = std::max(hi, r.splits);
            }
            effective_bins = static_cast<int>(hi - lo + 1);
        }
        BatchSummary summary = summarize(n, rows, effective_bins);
        if (standardized) summary = standardize(summary);

        json j = {{"schema", kSchemaVersion}, {"command", "batch"}, {"seed", seed}};
        j.update(summary_json(summary));
        try {
            const NormalityReport nr = normality_report(summary);
            j["normality"] = {{"skewness", nr.skewness},
                              {"excess_kurtosis", nr.excess_kurtosis},
                              {"ks_statistic", nr.ks_statistic},
                              {"ks_critical_1pct", nr.ks_critical_1pct}};
        } catch (const std::invalid_argument&) {
            j["normality"] = nullptr;  // fewer than 1000 games or zero variance
        }
        write_output(dump(j), out_path, out);
        return 0;
    }
};

struct CmdEnumerate {
    std::int64_t n = 0;
    std::int64_t cap = kDefaultStateCap;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("enumerate", "exact game-length extremes by DP");
        cmd->add_option("--n", n, "game size")->required()->check(positive_int());
        cmd->add_option("--cap", cap, "state cap (default 1e7)")->check(positive_int());
    }

    int run(std::ostream& out) const {
        const GameGraphStats s = enumerate_games(n, cap);
        const json j = {{"schema", kSchemaVersion},
                        {"command", "enumerate"},
                        {"n", s.n},
                        {"longest", s.longest_game},
                        {"shortest", s.shortest_game},
                        {"reachable_states", s.reachable_states},
                        {"distinct_games", s.distinct_games},
                        {"distinct_games_saturated", s.distinct_games_saturated}};
        out << dump(j);
        return 0;
    }
};

struct CmdSolve {
    std::int64_t n = 0;
    std::int64_t cap = kDefaultStateCap;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("solve", "winner under optimal play by minimax");
        cmd->add_option("--n", n, "game size")->required()->check(positive_int());
        cmd->add_option("--cap", cap, "state cap (default 1e7)")->check(positive_int());
    }

    int run(std::ostream& out) const {
        const SolveResult r = solve_winner(n, cap);
        const json j = {{"schema", kSchemaVersion},
                        {"command", "solve"},
                        {"n", r.n},
                        {"winner", winner_name(r.winner)},
                        {"solved_states", r.solved_states}};
        out << dump(j);
        return 0;
    }
};

struct CmdGrowth {
    std::string strategy;
    std::int64_t start = 0;
    std::int64_t count = 0;
    double constant = 0.0;
    std::string format = "json";
    std::string out_path;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("growth", "move totals and residuals against c*n");
        cmd->add_option("--strategy", strategy, "deterministic strategy name")
            ->required()
            ->check(CLI::IsMember({"combine-largest", "split-largest", "combine-smallest",
                                   "split-smallest", "ones-first-split-smallest", "greedy"}));
        cmd->add_option("--start", start, "first n")->required()->check(positive_int());
        cmd->add_option("--count", count, "how many consecutive n")
            ->required()
            ->check(positive_int());
        cmd->add_option("--constant", constant, "growth constant c")->required();
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write to file instead of stdout");
    }

    int run(std::ostream& out) const {
        const GrowthSeries series = growth_scan({strategy_from_name(strategy), 0}, start, count,
                                                constant);
        if (format == "csv") {
            std::string text = "n,total_moves,residual\n";
            char buf[64];
            for (const GrowthRow& r : series.rows) {
                std::snprintf(buf, sizeof buf, "%lld,%lld,%.10g\n",
                              static_cast<long long>(r.n), static_cast<long long>(r.total_moves),
                              r.residual);
                text += buf;
            }
            write_output(text, out_path, out);
            return 0;
        }
        json rows = json::array();
        for (const GrowthRow& r : series.rows)
            rows.push_back({{"n", r.n}, {"total_moves", r.total_moves}, {"residual", r.residual}});
        const json j = {{"schema", kSchemaVersion}, {"command", "growth"},
                        {"strategy", series.strategy}, {"constant", series.constant},
                        {"start", start},              {"count", count},
                        {"rows", std::move(rows)}};
        write_output(dump(j), out_path, out);
        return 0;
    }
};

struct CmdVerify {
    std::int64_t from = 3;
    std::int64_t to = 500;
    std::string strategies = "all";
    std::int64_t seeds = 10;
    std::uint64_t seed = 0;

    void attach(CLI::App& app) {
        auto* cmd = app.add_subcommand("verify", "check the move-tally identities over a range");
        cmd->add_option("--from", from, "first n (default 3)")->check(positive_int());
        cmd->add_option("--to", to, "last n (default 500)")->check(positive_int());
        cmd->add_option("--strategies", strategies,
                        "'all' or comma-separated deterministic strategy names");
        cmd->add_option("--seeds", seeds, "random games per n (default 10)")
            ->check(non_negative_int());
        cmd->add_option("--seed", seed, "master seed for the random games (default 0)");
    }

    int run(std::ostream& out, std::ostream& err) const {
        if (from > to) throw std::invalid_argument("verify: --from must not exceed --to");
        const std::vector<StrategyKind> kinds = parse_strategy_list(strategies);

        std::int64_t games_checked = 0;
        std::int64_t failures = 0;
        json names = json::array();
        for (StrategyKind k : kinds) names.push_back(std::string(strategy_name(k)));

        for (std::int64_t n = from; n <= to; ++n) {
            const FibTable table(n);
            auto check = [&](Strategy s) {
                const GameRecord rec = play_out(s, table);
                ++games_checked;
                if (!rec.report.all_pass()) {
                    ++failures;
                    err << "identity failure: n=" << n << " strategy=" << rec.strategy
                        << " seed=" << rec.seed << "\n"
                        << dump(report_json(rec.report));
                }
            };
            for (StrategyKind k : kinds) check({k, 0});
            for (std::int64_t i = 0; i < seeds; ++i)
                check({StrategyKind::Random,
                       seed + static_cast<std::uint64_t>((n - from) * seeds + i)});
        }

        const json j = {{"schema", kSchemaVersion}, {"command", "verify"},
                        {"from", from},             {"to", to},
                        {"strategies", names},      {"random_seeds", seeds},
                        {"seed", seed},             {"games_checked", games_checked},
                        {"failures", failures}};
        out << dump(j);
        return failures == 0 ? 0 : 1;
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zeckendorf game simulator and analyzer"};
    app.require_subcommand(1);

    CmdDecompose decompose;
    CmdSimulate simulate;
    CmdBatch batch;
    CmdEnumerate enumerate;
    CmdSolve solve;
    CmdGrowth growth;
    CmdVerify verify;

    decompose.attach(app);
    simulate.attach(app);
    batch.attach(app);
    enumerate.attach(app);
    solve.attach(app);
    growth.attach(app);
    verify.attach(app);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("zeckgame");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("decompose")) return decompose.run(out);
        if (app.got_subcommand("simulate")) return simulate.run(out);
        if (app.got_subcommand("batch")) return batch.run(out);
        if (app.got_subcommand("enumerate")) return enumerate.run(out);
        if (app.got_subcommand("solve")) return solve.run(out);
        if (app.got_subcommand("growth")) return growth.run(out);
        if (app.got_subcommand("verify")) return verify.run(out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace zeck
