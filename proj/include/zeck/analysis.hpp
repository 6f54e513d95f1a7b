#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "zeck/fib.hpp"
#include "zeck/game.hpp"

namespace zeck {

inline constexpr std::int64_t kDefaultStateCap = 10'000'000;

struct CapExceededError : std::runtime_error {
    explicit CapExceededError(std::int64_t visited, std::int64_t cap)
        : std::runtime_error("state cap exceeded: visited " + std::to_string(visited) +
                             " states (cap " + std::to_string(cap) + ")"),
          states_visited(visited) {}
    std::int64_t states_visited;
};

// Exact longest/shortest game lengths and the number of distinct complete
// move sequences, by dynamic programming over the (acyclic) game graph.
// distinct_games saturates at 2^64-1; the flag says whether it did.
struct GameGraphStats {
    std::int64_t n = 0;
    std::int64_t reachable_states = 0;
    std::int64_t longest_game = 0;
    std::int64_t shortest_game = 0;
    std::uint64_t distinct_games = 0;
    bool distinct_games_saturated = false;
};

GameGraphStats enumerate_games(std::int64_t n, std::int64_t state_cap = kDefaultStateCap);

enum class Winner { None, PlayerOne, PlayerTwo };

std::string_view winner_name(Winner w);

// Winner under optimal play by memoized minimax on "does the player to move
// win?". A terminal state is a loss for the player to move (the previous
// mover finished the decomposition). n = 1 has no moves at all, so no winner.
struct SolveResult {
    std::int64_t n = 0;
    Winner winner = Winner::None;
    std::int64_t solved_states = 0;
};

SolveResult solve_winner(std::int64_t n, std::int64_t state_cap = kDefaultStateCap);

}  // namespace zeck
