#include "zeck/strategy.hpp"

#include <optional>

namespace zeck {

namespace {

std::optional<Move> add_ones(const GameState& s) {
    if (s.count(1) >= 2) return Move{MoveKind::AddOnes, 1};
    return std::nullopt;
}

std::optional<Move> combine_desc(const GameState& s) {
    for (int k = s.i_max(); k >= 2; --k)
        if (s.count(k - 1) >= 1 && s.count(k) >= 1) return Move{MoveKind::Combine, k};
    return std::nullopt;
}

std::optional<Move> combine_asc(const GameState& s) {
    for (int k = 2; k <= s.i_max(); ++k)
        if (s.count(k - 1) >= 1 && s.count(k) >= 1) return Move{MoveKind::Combine, k};
    return std::nullopt;
}

Move split_at(int k) {
    return k == 2 ? Move{MoveKind::SplitTwos, 2} : Move{MoveKind::Split, k};
}

std::optional<Move> split_desc(const GameState& s) {
    for (int k = s.i_max(); k >= 2; --k)
        if (s.count(k) >= 2) return split_at(k);
    return std::nullopt;
}

std::optional<Move> split_asc(const GameState& s) {
    for (int k = 2; k <= s.i_max(); ++k)
        if (s.count(k) >= 2) return split_at(k);
    return std::nullopt;
}

// Largest index any legal move touches wins; at the same index a combine
// beats a split, and add-ones (index 1) comes last.
std::optional<Move> greedy(const GameState& s) {
    for (int k = s.i_max(); k >= 2; --k) {
        if (s.count(k - 1) >= 1 && s.count(k) >= 1) return Move{MoveKind::Combine, k};
        if (s.count(k) >= 2) return split_at(k);
    }
    return add_ones(s);
}

std::optional<Move> deterministic_choice(StrategyKind kind, const GameState& s) {
    switch (kind) {
        case StrategyKind::CombineLargest:
            if (auto m = combine_desc(s)) return m;
            if (auto m = add_ones(s)) return m;
            return split_desc(s);
        case StrategyKind::SplitLargest:
            if (auto m = split_desc(s)) return m;
            if (auto m = combine_desc(s)) return m;
            return add_ones(s);
        case StrategyKind::CombineSmallest:
            if (auto m = add_ones(s)) return m;
            if (auto m = combine_asc(s)) return m;
            return split_asc(s);
        case StrategyKind::SplitSmallest:
            if (auto m = split_asc(s)) return m;
            if (auto m = add_ones(s)) return m;
            return combine_asc(s);
        case StrategyKind::OnesFirstSplitSmallest:
            if (auto m = add_ones(s)) return m;
            if (auto m = split_asc(s)) return m;
            return combine_asc(s);
        case StrategyKind::Greedy:
            return greedy(s);
        case StrategyKind::Random:
            break;
    }
    throw std::invalid_argument("select_move: Random needs a generator");
}

}  // namespace

std::string_view strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::CombineLargest: return "combine-largest";
        case StrategyKind::SplitLargest: return "split-largest";
        case StrategyKind::CombineSmallest: return "combine-smallest";
        case StrategyKind::SplitSmallest: return "split-smallest";
        case StrategyKind::OnesFirstSplitSmallest: return "ones-first-split-smallest";
        case StrategyKind::Greedy: return "greedy";
        case StrategyKind::Random: return "random";
    }
    return "?";
}

StrategyKind strategy_from_name(std::string_view name) {
    for (StrategyKind k :
         {StrategyKind::CombineLargest, StrategyKind::SplitLargest, StrategyKind::CombineSmallest,
          StrategyKind::SplitSmallest, StrategyKind::OnesFirstSplitSmallest, StrategyKind::Greedy,
          StrategyKind::Random}) {
        if (strategy_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

Move select_move(StrategyKind kind, const GameState& state) {
    if (auto m = deterministic_choice(kind, state)) return *m;
    throw std::invalid_argument("select_move on a terminal state");
}

Move select_move(StrategyKind kind, const GameState& state, SplitMix64& rng) {
    if (kind != StrategyKind::Random) return select_move(kind, state);
    const std::vector<Move> moves = legal_moves(state);
    if (moves.empty()) throw std::invalid_argument("select_move on a terminal state");
    return moves[rng.next_below(moves.size())];
}

GameRecord play_out(Strategy strategy, const FibTable& table) {
    GameState state = initial_state(table);
    MoveTally tally(table.i_max());
    SplitMix64 rng(strategy.seed);
    std::vector<Move> moves;

    if (strategy.kind == StrategyKind::Random) {
        for (;;) {
            moves.clear();
            legal_moves(state, moves);
            if (moves.empty()) break;
            apply_move(state, moves[rng.next_below(moves.size())], tally);
        }
    } else {
        // every deterministic order covers all three move classes, so an
        // empty choice means the state is terminal
        while (auto m = deterministic_choice(strategy.kind, state)) apply_move(state, *m, tally);
    }

    const ZeckDecomposition d = zeckendorf(table, table.limit());
    GameState expected = parse_state("", table);
    for (int idx : d.indices) expected.counts[static_cast<std::size_t>(idx)] = 1;
    if (state.counts != expected.counts)
        throw std::logic_error("play_out ended in a non-Zeckendorf state " + encode_state(state));

    GameRecord rec;
    rec.strategy = std::string(strategy_name(strategy.kind));
    rec.seed = strategy.kind == StrategyKind::Random ? strategy.seed : 0;
    rec.n = table.limit();
    rec.total_moves = tally.total_moves;
    rec.report = verify_tally(table, rec.n, tally);
    rec.final_state = encode_state(state);
    rec.tally = std::move(tally);
    return rec;
}

GameRecord play_out(Strategy strategy, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("play_out: n must be a positive integer");
    return play_out(strategy, FibTable(n));
}

}  // namespace zeck
