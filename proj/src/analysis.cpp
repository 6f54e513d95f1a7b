#include "zeck/analysis.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <vector>

namespace zeck {

namespace {

// Reachable game graph, discovered breadth-first from {F_1^n}. Successor
// order follows the canonical legal-move order, so the graph and everything
// derived from it is deterministic. Every edge goes through apply_move,
// which asserts the strictly decreasing progress measure; that is what makes
// the graph acyclic and the bottom-up pass below well-founded.
struct GameGraph {
    std::vector<GameState> states;          // [0] is the initial state
    std::vector<std::vector<std::int32_t>> successors;
};

GameGraph explore(const FibTable& table, std::int64_t state_cap) {
    GameGraph g;
    std::unordered_map<std::string, std::int32_t> index_of;
    std::vector<Move> moves;

    g.states.push_back(initial_state(table));
    index_of.emplace(encode_state(g.states[0]), 0);

    for (std::size_t head = 0; head < g.states.size(); ++head) {
        moves.clear();
        legal_moves(g.states[head], moves);
        std::vector<std::int32_t> succ;
        succ.reserve(moves.size());
        for (const Move m : moves) {
            GameState next = g.states[head];
            apply_move(next, m);
            std::string key = encode_state(next);
            auto [it, inserted] = index_of.try_emplace(std::move(key), static_cast<std::int32_t>(g.states.size()));
            if (inserted) {
                if (static_cast<std::int64_t>(g.states.size()) + 1 > state_cap)
                    throw CapExceededError(static_cast<std::int64_t>(g.states.size()) + 1, state_cap);
                g.states.push_back(std::move(next));
            }
            succ.push_back(it->second);
        }
        g.successors.push_back(std::move(succ));
    }
    return g;
}

// States ordered so that every successor comes before its predecessors:
// ascending in the progress triple (index_sum, terms, count of F_2), which
// strictly decreases along every edge.
std::vector<std::int32_t> bottom_up_order(const GameGraph& g) {
    std::vector<std::int32_t> order(g.states.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int32_t>(i);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        const GameState& x = g.states[static_cast<std::size_t>(a)];
        const GameState& y = g.states[static_cast<std::size_t>(b)];
        if (x.index_sum != y.index_sum) return x.index_sum < y.index_sum;
        if (x.terms != y.terms) return x.terms < y.terms;
        return x.count(2) < y.count(2);
    });
    return order;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, bool& saturated) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        saturated = true;
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a + b;
}

}  // namespace

std::string_view winner_name(Winner w) {
    switch (w) {
        case Winner::None: return "none";
        case Winner::PlayerOne: return "one";
        case Winner::PlayerTwo: return "two";
    }
    return "?";
}

GameGraphStats enumerate_games(std::int64_t n, std::int64_t state_cap) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be a positive integer");
    if (state_cap < 1) throw std::invalid_argument("enumerate: state cap must be positive");
    const FibTable table(n);
    const GameGraph g = explore(table, state_cap);

    std::vector<std::int64_t> longest(g.states.size(), 0);
    std::vector<std::int64_t> shortest(g.states.size(), 0);
    std::vector<std::uint64_t> games(g.states.size(), 0);
    bool saturated = false;

    for (const std::int32_t idx : bottom_up_order(g)) {
        const auto& succ = g.successors[static_cast<std::size_t>(idx)];
        if (succ.empty()) {
            games[static_cast<std::size_t>(idx)] = 1;  // the empty move sequence
            continue;
        }
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = 0;
        std::uint64_t paths = 0;
        for (const std::int32_t s : succ) {
            lo = std::min(lo, shortest[static_cast<std::size_t>(s)]);
            hi = std::max(hi, longest[static_cast<std::size_t>(s)]);
            paths = saturating_add(paths, games[static_cast<std::size_t>(s)], saturated);
        }
        longest[static_cast<std::size_t>(idx)] = hi + 1;
        shortest[static_cast<std::size_t>(idx)] = lo + 1;
        games[static_cast<std::size_t>(idx)] = paths;
    }

    GameGraphStats stats;
    stats.n = n;
    stats.reachable_states = static_cast<std::int64_t>(g.states.size());
    stats.longest_game = longest[0];
    stats.shortest_game = shortest[0];
    stats.distinct_games = games[0];
    stats.distinct_games_saturated = saturated;
    return stats;
}

SolveResult solve_winner(std::int64_t n, std::int64_t state_cap) {
    if (n < 1) throw std::invalid_argument("solve: n must be a positive integer");
    if (state_cap < 1) throw std::invalid_argument("solve: state cap must be positive");
    const FibTable table(n);
    const GameGraph g = explore(table, state_cap);

    SolveResult result;
    result.n = n;
    result.solved_states = static_cast<std::int64_t>(g.states.size());
    if (g.successors[0].empty()) {
        result.winner = Winner::None;  // no move is ever made
        return result;
    }

    // win[s]: the player to move from s wins with optimal play
    std::vector<char> win(g.states.size(), 0);
    for (const std::int32_t idx : bottom_up_order(g)) {
        const auto& succ = g.successors[static_cast<std::size_t>(idx)];
        char w = 0;
        for (const std::int32_t s : succ)
            if (!win[static_cast<std::size_t>(s)]) { w = 1; break; }
        win[static_cast<std::size_t>(idx)] = w;
    }
    result.winner = win[0] ? Winner::PlayerOne : Winner::PlayerTwo;
    return result;
}

}  // namespace zeck
