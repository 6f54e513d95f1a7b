#include "zeck/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace zeck {

std::vector<BatchGame> play_batch(std::int64_t n, std::int64_t games, std::uint64_t master_seed,
                                  int threads) {
    if (n < 1) throw std::invalid_argument("batch: n must be a positive integer");
    if (games < 2) throw std::invalid_argument("batch: need at least 2 games");
    if (threads < 1) throw std::invalid_argument("batch: thread count must be positive");

    const FibTable table(n);
    const std::int64_t combines = n - zeckendorf(table, n).z;
    std::vector<BatchGame> rows(static_cast<std::size_t>(games));
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (;;) {
                const std::int64_t i = next.fetch_add(1);
                if (i >= games) return;
                const std::uint64_t seed = master_seed + static_cast<std::uint64_t>(i);
                const GameRecord rec = play_out({StrategyKind::Random, seed}, table);
                const std::int64_t splits = rec.total_moves - combines;
                if (splits != rec.tally.splits())
                    throw std::logic_error("batch: split count disagrees with the tally");
                rows[static_cast<std::size_t>(i)] = {seed, rec.total_moves, splits};
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(games);  // drain remaining work
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

BatchSummary summarize_samples(std::int64_t n, std::vector<double> samples, int bins) {
    const auto games = static_cast<std::int64_t>(samples.size());
    if (games < 2) throw std::invalid_argument("summary: need at least 2 samples");
    if (bins < 1) throw std::invalid_argument("summary: need at least 1 histogram bin");
    if (bins > 1000000) throw std::invalid_argument("summary: more than 1e6 histogram bins");

    BatchSummary s;
    s.n = n;
    s.games = games;

    // two-pass moments; one pass loses digits once values reach ~n
    long double sum = 0.0L;
    for (double x : samples) sum += x;
    const double mean = static_cast<double>(sum / static_cast<long double>(games));
    long double c2 = 0.0L, c3 = 0.0L, c4 = 0.0L;
    for (double x : samples) {
        const long double d = x - mean;
        c2 += d * d;
        c3 += d * d * d;
        c4 += d * d * d * d;
    }
    const double m2 = static_cast<double>(c2 / static_cast<long double>(games));
    s.splits_mean = mean;
    s.splits_variance = static_cast<double>(c2 / static_cast<long double>(games - 1));
    if (m2 > 0.0) {
        s.skewness = static_cast<double>(c3 / static_cast<long double>(games)) / std::pow(m2, 1.5);
        s.excess_kurtosis =
            static_cast<double>(c4 / static_cast<long double>(games)) / (m2 * m2) - 3.0;
    }

    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *lo_it;
    const double width = (*hi_it + 1.0 - lo) / bins;
    s.histogram.assign(static_cast<std::size_t>(bins), {});
    for (int b = 0; b < bins; ++b)
        s.histogram[static_cast<std::size_t>(b)].bin_left = lo + b * width;
    for (double x : samples) {
        auto b = static_cast<std::int64_t>((x - lo) / width);
        b = std::clamp<std::int64_t>(b, 0, bins - 1);
        s.histogram[static_cast<std::size_t>(b)].count += 1;
    }
    s.samples = std::move(samples);
    return s;
}

BatchSummary summarize(std::int64_t n, const std::vector<BatchGame>& rows, int bins) {
    std::vector<double> samples;
    samples.reserve(rows.size());
    for (const BatchGame& r : rows) samples.push_back(static_cast<double>(r.splits));
    return summarize_samples(n, std::move(samples), bins);
}

BatchSummary standardize(const BatchSummary& summary) {
    if (summary.splits_variance <= 0.0)
        throw std::invalid_argument("standardize: sample variance is zero");
    // samples and moments stay raw; only the histogram switches to z-scores
    BatchSummary s = summary;
    const double sd = std::sqrt(summary.splits_variance);
    constexpr double kLeft = -5.0, kWidth = 0.25;
    constexpr int kBins = 40;  // covers [-5, 5]
    s.histogram.assign(kBins, {});
    for (int b = 0; b < kBins; ++b)
        s.histogram[static_cast<std::size_t>(b)].bin_left = kLeft + b * kWidth;
    for (double x : s.samples) {
        const double z = (x - summary.splits_mean) / sd;
        auto b = static_cast<std::int64_t>(std::floor((z - kLeft) / kWidth));
        b = std::clamp<std::int64_t>(b, 0, kBins - 1);  // outliers land in the edge bins
        s.histogram[static_cast<std::size_t>(b)].count += 1;
    }
    s.standardized = true;
    return s;
}

BatchSummary run_batch(std::int64_t n, std::int64_t games, std::uint64_t master_seed, int bins,
                       int threads) {
    return summarize(n, play_batch(n, games, master_seed, threads), bins);
}

GrowthSeries growth_scan(Strategy strategy, std::int64_t n_start, std::int64_t n_count,
                         double constant) {
    if (strategy.kind == StrategyKind::Random)
        throw std::invalid_argument("growth scan needs a deterministic strategy");
    if (n_start < 1) throw std::invalid_argument("growth scan: start must be a positive integer");
    if (n_count < 1) throw std::invalid_argument("growth scan: need at least 1 value of n");

    GrowthSeries series;
    series.strategy = std::string(strategy_name(strategy.kind));
    series.constant = constant;
    series.rows.reserve(static_cast<std::size_t>(n_count));
    for (std::int64_t n = n_start; n < n_start + n_count; ++n) {
        const GameRecord rec = play_out(strategy, n);
        series.rows.push_back(
            {n, rec.total_moves, static_cast<double>(rec.total_moves) - constant * static_cast<double>(n)});
    }
    return series;
}

double std_normal_cdf(double x) { return 0.5 * (1.0 + std::erf(x / std::sqrt(2.0))); }

NormalityReport normality_report(const BatchSummary& summary) {
    if (summary.games < 1000)
        throw std::invalid_argument("normality report: need at least 1000 games");
    if (summary.splits_variance <= 0.0)
        throw std::invalid_argument("normality report: sample variance is zero");

    const double sd = std::sqrt(summary.splits_variance);
    std::vector<double> z;
    z.reserve(summary.samples.size());
    for (double x : summary.samples) z.push_back((x - summary.splits_mean) / sd);
    std::sort(z.begin(), z.end());

    const auto games = static_cast<double>(summary.games);
    double d = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double cdf = std_normal_cdf(z[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / games - cdf);
        d = std::max(d, cdf - static_cast<double>(i) / games);
    }

    NormalityReport report;
    report.skewness = summary.skewness;
    report.excess_kurtosis = summary.excess_kurtosis;
    report.ks_statistic = d;
    report.ks_critical_1pct = 1.63 / std::sqrt(games);
    return report;
}

}  // namespace zeck
