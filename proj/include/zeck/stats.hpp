#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeck/strategy.hpp"

namespace zeck {

// One random play-out inside a batch.
struct BatchGame {
    std::uint64_t seed = 0;
    std::int64_t total_moves = 0;
    std::int64_t splits = 0;
};

struct HistogramBin {
    double bin_left = 0.0;
    std::int64_t count = 0;
};

// Distribution summary of per-game splitting-move counts. samples holds the
// raw per-game values in game order (splits, or arbitrary reals when built
// from summarize_samples); the histogram is over the raw values unless
// standardized is set, in which case it bins (x - mean)/stddev at width 0.25
// over [-5, 5].
struct BatchSummary {
    std::int64_t n = 0;
    std::int64_t games = 0;
    double splits_mean = 0.0;
    double splits_variance = 0.0;  // sample variance, games-1 divisor
    double skewness = 0.0;         // m3 / m2^(3/2)
    double excess_kurtosis = 0.0;  // m4 / m2^2 - 3
    std::vector<HistogramBin> histogram;
    bool standardized = false;
    std::vector<double> samples;
};

// Plays `games` independent random play-outs with per-game seeds
// master_seed + game_index. The result is identical for every thread count.
std::vector<BatchGame> play_batch(std::int64_t n, std::int64_t games, std::uint64_t master_seed,
                                  int threads = 1);

// Moments and an equal-width histogram with `bins` bins spanning
// [min, max + 1); bin counts always sum to the sample size.
BatchSummary summarize_samples(std::int64_t n, std::vector<double> samples, int bins);
BatchSummary summarize(std::int64_t n, const std::vector<BatchGame>& rows, int bins);
BatchSummary standardize(const BatchSummary& summary);

BatchSummary run_batch(std::int64_t n, std::int64_t games, std::uint64_t master_seed, int bins,
                       int threads = 1);

struct GrowthRow {
    std::int64_t n = 0;
    std::int64_t total_moves = 0;
    double residual = 0.0;  // total_moves - constant * n
};

struct GrowthSeries {
    std::string strategy;
    double constant = 0.0;
    std::vector<GrowthRow> rows;  // ascending n
};

// One deterministic play-out per n in [n_start, n_start + n_count); rejects
// Random, whose totals have no meaning without seed bookkeeping.
GrowthSeries growth_scan(Strategy strategy, std::int64_t n_start, std::int64_t n_count,
                         double constant);

// Kolmogorov-Smirnov comparison of the standardized sample against the
// standard normal. The normal CDF is Phi(x) = (1 + erf(x/sqrt 2))/2 with
// std::erf, which is accurate to well under 1e-7 absolute error.
struct NormalityReport {
    double skewness = 0.0;
    double excess_kurtosis = 0.0;
    double ks_statistic = 0.0;
    double ks_critical_1pct = 0.0;  // 1.63 / sqrt(games)
};

NormalityReport normality_report(const BatchSummary& summary);

double std_normal_cdf(double x);

}  // namespace zeck
