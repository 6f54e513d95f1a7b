#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "zeck/fib.hpp"
#include "zeck/game.hpp"
#include "zeck/rng.hpp"

namespace zeck {

// Move-selection policies. The deterministic kinds fix a priority order over
// the three move classes (AddOnes, combines, splits) and a scan direction
// within a class; Random draws uniformly from the legal moves.
enum class StrategyKind {
    CombineLargest,          // combine desc, add-ones, split desc
    SplitLargest,            // split desc, combine desc, add-ones
    CombineSmallest,         // add-ones, combine asc, split asc
    SplitSmallest,           // split asc, add-ones, combine asc
    OnesFirstSplitSmallest,  // add-ones, split asc, combine asc
    Greedy,                  // highest touched index; combine before split
    Random,
};

struct Strategy {
    StrategyKind kind = StrategyKind::Random;
    std::uint64_t seed = 0;  // used by Random only
};

// CLI-facing names: combine-largest, split-largest, combine-smallest,
// split-smallest, ones-first-split-smallest, greedy, random.
std::string_view strategy_name(StrategyKind kind);
StrategyKind strategy_from_name(std::string_view name);

constexpr StrategyKind kDeterministicStrategies[] = {
    StrategyKind::CombineLargest,   StrategyKind::SplitLargest,
    StrategyKind::CombineSmallest,  StrategyKind::SplitSmallest,
    StrategyKind::OnesFirstSplitSmallest,
};

// First legal move under the strategy's order; throws on a terminal state.
// The deterministic overload rejects Random.
Move select_move(StrategyKind kind, const GameState& state);
Move select_move(StrategyKind kind, const GameState& state, SplitMix64& rng);

struct GameRecord {
    std::string strategy;
    std::uint64_t seed = 0;
    std::int64_t n = 0;
    std::int64_t total_moves = 0;
    MoveTally tally;
    VerificationReport report;
    std::string final_state;
};

// Plays a full game from {F_1^n} to the Zeckendorf decomposition and checks
// the tally identities; the final state is verified against zeckendorf(n).
GameRecord play_out(Strategy strategy, const FibTable& table);
GameRecord play_out(Strategy strategy, std::int64_t n);

}  // namespace zeck
