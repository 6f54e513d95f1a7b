#include "zeck/fib.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace zeck {

FibTable::FibTable(std::int64_t limit) : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("fib table: limit must be a positive integer");
    values_ = {0, 1, 2};
    while (values_.back() <= limit) {
        const std::int64_t a = values_[values_.size() - 2];
        const std::int64_t b = values_.back();
        if (a > std::numeric_limits<std::int64_t>::max() - b)
            throw std::overflow_error("fib table: values exceed 64-bit range");
        values_.push_back(a + b);
    }
    // loop exits with exactly one value above the limit
    i_max_ = static_cast<int>(values_.size()) - 2;
}

FibTable build_fib_table(std::int64_t n) { return FibTable(n); }

ZeckDecomposition zeckendorf(const FibTable& table, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("zeckendorf: n must be a positive integer");
    if (n > table.limit()) throw std::invalid_argument("zeckendorf: n exceeds the table limit");
    ZeckDecomposition d;
    d.n = n;
    std::int64_t rest = n;
    int k = table.i_max();
    while (rest > 0) {
        while (table.value(k) > rest) --k;
        d.indices.push_back(k);
        rest -= table.value(k);
        --k;  // greedy never picks adjacent indices
    }
    std::reverse(d.indices.begin(), d.indices.end());
    d.z = static_cast<std::int64_t>(d.indices.size());
    d.iz = std::accumulate(d.indices.begin(), d.indices.end(), std::int64_t{0});
    d.delta1 = (!d.indices.empty() && d.indices.front() == 1) ? 1 : 0;
    return d;
}

ZeckDecomposition zeckendorf(std::int64_t n) { return zeckendorf(FibTable(n < 1 ? 1 : n), n); }

MoveBounds move_bounds(const FibTable& table, std::int64_t n) {
    const ZeckDecomposition d = zeckendorf(table, n);
    return {n - d.z, 3 * n - 3 * d.z - d.iz + 1};
}

MoveBounds move_bounds(std::int64_t n) { return move_bounds(FibTable(n < 1 ? 1 : n), n); }

}  // namespace zeck
