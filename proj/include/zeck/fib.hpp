#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zeck {

// Fibonacci values under the normalization F1 = 1, F2 = 2, the one for which
// every positive integer is a unique sum of non-adjacent terms.
//
// The table is built for a fixed limit and stores one index past i_max so
// that moves at i_max itself are expressible; the engine guarantees a term
// F_{i_max+1} never actually materializes.
class FibTable {
public:
    explicit FibTable(std::int64_t limit);

    std::int64_t limit() const { return limit_; }

    // Largest index m with F_m <= limit.
    int i_max() const { return i_max_; }

    // F_k for 1 <= k <= i_max() + 1.
    std::int64_t value(int k) const { return values_[static_cast<std::size_t>(k)]; }

private:
    std::vector<std::int64_t> values_;  // values_[0] unused
    std::int64_t limit_ = 0;
    int i_max_ = 0;
};

FibTable build_fib_table(std::int64_t n);

// The unique non-adjacent decomposition of n.
struct ZeckDecomposition {
    std::int64_t n = 0;
    std::vector<int> indices;  // strictly increasing, consecutive gaps >= 2
    std::int64_t z = 0;        // number of summands
    std::int64_t iz = 0;       // sum of indices
    int delta1 = 0;            // 1 iff index 1 occurs
};

ZeckDecomposition zeckendorf(const FibTable& table, std::int64_t n);
ZeckDecomposition zeckendorf(std::int64_t n);

// Move-count bounds for a complete game on n: every game has exactly
// n - Z(n) combining moves, and no game exceeds 3n - 3Z(n) - IZ(n) + 1 moves.
struct MoveBounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

MoveBounds move_bounds(const FibTable& table, std::int64_t n);
MoveBounds move_bounds(std::int64_t n);

}  // namespace zeck
