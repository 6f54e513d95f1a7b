#include <doctest.h>

#include <cmath>
#include <vector>

#include "zeck/fib.hpp"

using namespace zeck;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

double log_phi(double x) { return std::log(x) / std::log(kPhi); }

// every subset of indices 1..i_max with no two adjacent, as bitmasks
std::vector<std::vector<int>> non_adjacent_subsets_summing_to(const FibTable& t, std::int64_t n) {
    std::vector<std::vector<int>> found;
    const int m = t.i_max();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (mask & (mask << 1)) continue;  // adjacent pair
        std::int64_t sum = 0;
        for (int k = 1; k <= m; ++k)
            if (mask & (1u << (k - 1))) sum += t.value(k);
        if (sum != n) continue;
        std::vector<int> indices;
        for (int k = 1; k <= m; ++k)
            if (mask & (1u << (k - 1))) indices.push_back(k);
        found.push_back(indices);
    }
    return found;
}

}  // namespace

TEST_CASE("fib table values and i_max") {
    const FibTable t1(1);
    CHECK(t1.i_max() == 1);
    CHECK(t1.value(1) == 1);
    CHECK(t1.value(2) == 2);

    const FibTable t100(100);
    CHECK(t100.i_max() == 10);
    CHECK(t100.value(10) == 89);
    CHECK(t100.value(11) == 144);

    const FibTable t2020(2020);
    CHECK(t2020.i_max() == 16);
    CHECK(t2020.value(16) == 1597);
    CHECK(t2020.value(17) == 2584);

    CHECK_THROWS_AS(FibTable(0), std::invalid_argument);
    CHECK_THROWS_AS(FibTable(-5), std::invalid_argument);
}

TEST_CASE("fib table recurrence and limit bracket up to 1e4") {
    for (std::int64_t n : {std::int64_t{1}, std::int64_t{2}, std::int64_t{17},
                           std::int64_t{10000}, std::int64_t{1600000}}) {
        const FibTable t(n);
        CHECK(t.value(1) == 1);
        CHECK(t.value(2) == 2);
        for (int k = 3; k <= t.i_max() + 1; ++k)
            CHECK(t.value(k) == t.value(k - 1) + t.value(k - 2));
        CHECK(t.value(t.i_max()) <= n);
        CHECK(t.value(t.i_max() + 1) > n);
        CHECK(static_cast<double>(t.i_max()) <= log_phi(static_cast<double>(n) * std::sqrt(5.0)));
    }
}

TEST_CASE("zeckendorf known decompositions") {
    const ZeckDecomposition d2020 = zeckendorf(2020);
    CHECK(d2020.indices == std::vector<int>{1, 3, 5, 8, 13, 16});
    CHECK(d2020.z == 6);
    CHECK(d2020.iz == 46);
    CHECK(d2020.delta1 == 1);

    const ZeckDecomposition d1 = zeckendorf(1);
    CHECK(d1.indices == std::vector<int>{1});
    CHECK(d1.z == 1);
    CHECK(d1.iz == 1);
    CHECK(d1.delta1 == 1);

    const ZeckDecomposition d10 = zeckendorf(10);
    CHECK(d10.indices == std::vector<int>{2, 5});
    CHECK(d10.z == 2);
    CHECK(d10.iz == 7);
    CHECK(d10.delta1 == 0);

    CHECK_THROWS_AS(zeckendorf(0), std::invalid_argument);
    CHECK_THROWS_AS(zeckendorf(-1), std::invalid_argument);
}

TEST_CASE("zeckendorf validity and index-sum bound over 1..1e4") {
    const FibTable t(10000);
    for (std::int64_t n = 1; n <= 10000; ++n) {
        const ZeckDecomposition d = zeckendorf(t, n);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < d.indices.size(); ++i) {
            sum += t.value(d.indices[i]);
            if (i > 0) CHECK(d.indices[i] - d.indices[i - 1] >= 2);
        }
        CHECK(sum == n);
        CHECK(d.z == static_cast<std::int64_t>(d.indices.size()));
        const double bound = std::pow(log_phi(static_cast<double>(n) * std::sqrt(5.0)) + 3.0, 2) / 2.0;
        CHECK(static_cast<double>(d.iz) <= bound);
        // the greedy first pick is the largest F_m <= n, i.e. i_max(n)
        CHECK(static_cast<double>(d.indices.back()) <=
              log_phi(static_cast<double>(n) * std::sqrt(5.0)));
    }
}

TEST_CASE("uniqueness against exhaustive subset enumeration up to 200") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        const FibTable t(n);
        const auto all = non_adjacent_subsets_summing_to(t, n);
        REQUIRE(all.size() == 1);
        CHECK(all[0] == zeckendorf(t, n).indices);
    }
}

TEST_CASE("move bounds") {
    const MoveBounds b4 = move_bounds(4);
    CHECK(b4.lower == 2);
    CHECK(b4.upper == 3);

    const MoveBounds b1 = move_bounds(1);
    CHECK(b1.lower == 0);
    CHECK(b1.upper == 0);

    const MoveBounds b2020 = move_bounds(2020);
    CHECK(b2020.lower == 2014);
    CHECK(b2020.upper == 5997);

    CHECK_THROWS_AS(move_bounds(0), std::invalid_argument);

    const FibTable t(10000);
    for (std::int64_t n = 1; n <= 10000; ++n) {
        const MoveBounds b = move_bounds(t, n);
        CHECK(b.lower <= b.upper);
        CHECK(b.lower >= 0);
    }
}
