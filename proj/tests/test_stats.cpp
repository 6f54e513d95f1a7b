#include <doctest.h>

#include <cmath>

#include "zeck/rng.hpp"
#include "zeck/stats.hpp"

using namespace zeck;

namespace {

// standard-normal draws from the documented generator via Box-Muller
std::vector<double> gaussian_sample(std::uint64_t seed, std::size_t count) {
    SplitMix64 rng(seed);
    std::vector<double> out;
    out.reserve(count);
    while (out.size() < count) {
        double u1 = rng.next_unit();
        const double u2 = rng.next_unit();
        if (u1 < 1e-12) u1 = 1e-12;
        const double r = std::sqrt(-2.0 * std::log(u1));
        out.push_back(r * std::cos(2.0 * M_PI * u2));
        if (out.size() < count) out.push_back(r * std::sin(2.0 * M_PI * u2));
    }
    return out;
}

}  // namespace

TEST_CASE("normal cdf accuracy") {
    // reference values from standard tables
    CHECK(std_normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std_normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-9));
    CHECK(std_normal_cdf(1.96) == doctest::Approx(0.9750021048517795).epsilon(1e-9));
    CHECK(std_normal_cdf(-1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-9));
}

TEST_CASE("forced games have zero splits and zero variance") {
    const BatchSummary s = run_batch(3, 100, 0, 1);
    CHECK(s.games == 100);
    CHECK(s.splits_mean == 0.0);
    CHECK(s.splits_variance == 0.0);
    CHECK(s.skewness == 0.0);
    CHECK(s.excess_kurtosis == 0.0);
    REQUIRE(s.histogram.size() == 1);
    CHECK(s.histogram[0].count == 100);
}

TEST_CASE("n=4 splits are a fair coin flip") {
    // the one branching state has two legal moves, one of which splits
    const std::int64_t games = 20000;
    const BatchSummary s = run_batch(4, games, 0, 2);
    for (double x : s.samples) CHECK((x == 0.0 || x == 1.0));
    const double tol = 3.0 * std::sqrt(0.25 / static_cast<double>(games));
    CHECK(std::abs(s.splits_mean - 0.5) <= tol);
    std::int64_t total = 0;
    for (const HistogramBin& b : s.histogram) total += b.count;
    CHECK(total == games);
}

TEST_CASE("batch is identical across thread counts") {
    const std::vector<BatchGame> a = play_batch(200, 400, 7, 1);
    const std::vector<BatchGame> b = play_batch(200, 400, 7, 8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].total_moves == b[i].total_moves);
        CHECK(a[i].splits == b[i].splits);
    }
    CHECK(a[0].seed == 7);
    CHECK(a[1].seed == 8);
}

TEST_CASE("batch rejects bad parameters") {
    CHECK_THROWS_AS(run_batch(0, 100, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_batch(10, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_batch(10, 100, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(play_batch(10, 100, 0, 0), std::invalid_argument);
}

TEST_CASE("moments of a known small sample") {
    // mean 2, sample variance 2.5, symmetric so skewness 0
    BatchSummary s = summarize_samples(0, {0.0, 1.0, 2.0, 3.0, 4.0}, 5);
    CHECK(s.splits_mean == doctest::Approx(2.0));
    CHECK(s.splits_variance == doctest::Approx(2.5));
    CHECK(s.skewness == doctest::Approx(0.0));
    CHECK(s.excess_kurtosis == doctest::Approx(-1.3));  // discrete uniform on 5 points
    REQUIRE(s.histogram.size() == 5);
    for (const HistogramBin& b : s.histogram) CHECK(b.count == 1);
}

TEST_CASE("standardized histogram keeps raw moments and bins z-scores") {
    const BatchSummary raw = run_batch(100, 2000, 1, 5);
    const BatchSummary std_s = standardize(raw);
    CHECK(std_s.standardized);
    CHECK(std_s.splits_mean == raw.splits_mean);
    CHECK(std_s.histogram.size() == 40);
    CHECK(std_s.histogram.front().bin_left == doctest::Approx(-5.0));
    std::int64_t total = 0;
    for (const HistogramBin& b : std_s.histogram) total += b.count;
    CHECK(total == raw.games);
}

TEST_CASE("normality report accepts a true gaussian sample") {
    BatchSummary s = summarize_samples(0, gaussian_sample(99, 10000), 50);
    const NormalityReport r = normality_report(s);
    CHECK(r.ks_critical_1pct == doctest::Approx(1.63 / 100.0));
    CHECK(r.ks_statistic < r.ks_critical_1pct);
    CHECK(std::abs(r.skewness) < 0.1);
    CHECK(std::abs(r.excess_kurtosis) < 0.2);
}

TEST_CASE("normality report rejects degenerate input") {
    BatchSummary constant = summarize_samples(0, std::vector<double>(2000, 3.0), 1);
    CHECK_THROWS_AS(normality_report(constant), std::invalid_argument);

    const BatchSummary few = run_batch(10, 500, 0, 3);
    CHECK_THROWS_AS(normality_report(few), std::invalid_argument);
}

TEST_CASE("growth scan against the exact lower-bound strategy") {
    const GrowthSeries g = growth_scan({StrategyKind::CombineLargest, 0}, 100, 50, 1.0);
    CHECK(g.strategy == "combine-largest");
    REQUIRE(g.rows.size() == 50);
    for (const GrowthRow& r : g.rows) {
        const std::int64_t z = zeckendorf(r.n).z;
        CHECK(r.total_moves == r.n - z);
        CHECK(r.residual == doctest::Approx(static_cast<double>(-z)));
    }
    CHECK(g.rows.front().n == 100);
    CHECK(g.rows.back().n == 149);
}

TEST_CASE("growth scan rejects the random strategy") {
    CHECK_THROWS_AS(growth_scan({StrategyKind::Random, 0}, 10, 5, 1.0), std::invalid_argument);
}

TEST_CASE("growth residuals at n = 1,600,000 stay within 1% of n") {
    const double phi2 = std::pow((1.0 + std::sqrt(5.0)) / 2.0, 2.0);
    const GrowthSeries ss = growth_scan({StrategyKind::SplitSmallest, 0}, 1600000, 5, phi2);
    for (const GrowthRow& r : ss.rows)
        CHECK(std::abs(r.residual) / static_cast<double>(r.n) <= 0.01);
    const GrowthSeries cs = growth_scan({StrategyKind::CombineSmallest, 0}, 1600000, 5, 1.20647);
    for (const GrowthRow& r : cs.rows)
        CHECK(std::abs(r.residual) / static_cast<double>(r.n) <= 0.01);
}

TEST_CASE("per-game split counts match the tally cross-check") {
    // play_batch recomputes splits two ways and throws on mismatch; a clean
    // run plus bounds on the values is the observable contract here
    const std::vector<BatchGame> rows = play_batch(50, 300, 3, 2);
    const FibTable t(50);
    const MoveBounds b = move_bounds(t, 50);
    for (const BatchGame& r : rows) {
        CHECK(r.splits >= 0);
        CHECK(r.total_moves >= b.lower);
        CHECK(r.total_moves <= b.upper);
    }
}
