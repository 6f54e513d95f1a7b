#include "zeck/game.hpp"

#include <charconv>
#include <numeric>

namespace zeck {

namespace {

std::int64_t tally_at(const std::vector<std::int64_t>& v, int k) {
    return k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : 0;
}

}  // namespace

std::int64_t MoveTally::combines() const {
    return std::accumulate(mc.begin(), mc.end(), std::int64_t{0});
}

std::int64_t MoveTally::splits() const {
    return std::accumulate(ms.begin(), ms.end(), std::int64_t{0});
}

std::string to_string(Move move) {
    switch (move.kind) {
        case MoveKind::AddOnes: return "add-ones";
        case MoveKind::Combine: return "combine(" + std::to_string(move.index) + ")";
        case MoveKind::SplitTwos: return "split-twos";
        case MoveKind::Split: return "split(" + std::to_string(move.index) + ")";
    }
    return "?";
}

GameState initial_state(const FibTable& table) {
    GameState s;
    s.counts.assign(static_cast<std::size_t>(table.i_max()) + 2, 0);
    s.n = table.limit();
    s.counts[1] = s.n;
    s.terms = s.n;
    s.index_sum = s.n;
    return s;
}

bool is_legal(const GameState& state, Move move) {
    const int k = move.index;
    const int i_max = state.i_max();
    switch (move.kind) {
        case MoveKind::AddOnes:
            return k == 1 && state.count(1) >= 2;
        case MoveKind::Combine:
            return k >= 2 && k <= i_max && state.count(k - 1) >= 1 && state.count(k) >= 1;
        case MoveKind::SplitTwos:
            return k == 2 && i_max >= 2 && state.count(2) >= 2;
        case MoveKind::Split:
            return k >= 3 && k <= i_max && state.count(k) >= 2;
    }
    return false;
}

void legal_moves(const GameState& state, std::vector<Move>& out) {
    const int i_max = state.i_max();
    if (state.count(1) >= 2) out.push_back({MoveKind::AddOnes, 1});
    for (int k = 2; k <= i_max; ++k)
        if (state.count(k - 1) >= 1 && state.count(k) >= 1) out.push_back({MoveKind::Combine, k});
    if (i_max >= 2 && state.count(2) >= 2) out.push_back({MoveKind::SplitTwos, 2});
    for (int k = 3; k <= i_max; ++k)
        if (state.count(k) >= 2) out.push_back({MoveKind::Split, k});
}

std::vector<Move> legal_moves(const GameState& state) {
    std::vector<Move> out;
    legal_moves(state, out);
    return out;
}

bool is_terminal(const GameState& state) {
    const int i_max = state.i_max();
    for (int k = 1; k <= i_max; ++k) {
        if (state.count(k) >= 2) return false;
        if (k >= 2 && state.count(k - 1) == 1 && state.count(k) == 1) return false;
    }
    return true;
}

void apply_move(GameState& state, Move move, MoveTally& tally) {
    apply_move(state, move);
    auto& counter = move.is_combine_family() ? tally.mc : tally.ms;
    counter[static_cast<std::size_t>(move.index)] += 1;
    tally.total_moves += 1;
}

void apply_move(GameState& state, Move move) {
    if (!is_legal(state, move))
        throw IllegalMoveError("illegal move " + to_string(move) + " in state " + encode_state(state));

    const std::int64_t old_terms = state.terms;
    const std::int64_t old_index_sum = state.index_sum;
    const std::int64_t old_twos = state.count(2);

    // (index, delta) pairs per move kind
    const int k = move.index;
    struct Delta { int index; std::int64_t d; };
    Delta deltas[3];
    int n_deltas = 0;
    switch (move.kind) {
        case MoveKind::AddOnes:
            deltas[n_deltas++] = {1, -2};
            deltas[n_deltas++] = {2, +1};
            break;
        case MoveKind::Combine:
            deltas[n_deltas++] = {k - 1, -1};
            deltas[n_deltas++] = {k, -1};
            deltas[n_deltas++] = {k + 1, +1};
            break;
        case MoveKind::SplitTwos:
            deltas[n_deltas++] = {2, -2};
            deltas[n_deltas++] = {1, +1};
            deltas[n_deltas++] = {3, +1};
            break;
        case MoveKind::Split:
            deltas[n_deltas++] = {k, -2};
            deltas[n_deltas++] = {k - 2, +1};
            deltas[n_deltas++] = {k + 1, +1};
            break;
    }
    for (int i = 0; i < n_deltas; ++i) {
        state.counts[static_cast<std::size_t>(deltas[i].index)] += deltas[i].d;
        state.terms += deltas[i].d;
        state.index_sum += deltas[i].index * deltas[i].d;
    }

    if (state.counts[state.counts.size() - 1] != 0)
        throw std::logic_error("engine invariant broken: term above i_max materialized by " +
                               to_string(move));
    // termination witness: (index_sum, terms, count of F_2) drops on every move
    const bool progressed =
        state.index_sum < old_index_sum ||
        (state.index_sum == old_index_sum &&
         (state.terms < old_terms ||
          (state.terms == old_terms && state.count(2) < old_twos)));
    if (!progressed)
        throw std::logic_error("engine invariant broken: no progress from " + to_string(move));
}

std::string encode_state(const GameState& state) {
    std::string out;
    for (int k = 1; k <= state.i_max() + 1; ++k) {
        if (state.count(k) == 0) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(k);
        out += '^';
        out += std::to_string(state.count(k));
    }
    return out;
}

GameState parse_state(std::string_view text, const FibTable& table) {
    GameState s;
    s.counts.assign(static_cast<std::size_t>(table.i_max()) + 2, 0);
    int prev_index = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string_view pair = text.substr(pos, end - pos);
        const std::size_t caret = pair.find('^');
        if (caret == std::string_view::npos)
            throw std::invalid_argument("state encoding: expected index^count, got '" + std::string(pair) + "'");
        int index = 0;
        std::int64_t count = 0;
        const auto r1 = std::from_chars(pair.data(), pair.data() + caret, index);
        const auto r2 = std::from_chars(pair.data() + caret + 1, pair.data() + pair.size(), count);
        if (r1.ec != std::errc{} || r1.ptr != pair.data() + caret ||
            r2.ec != std::errc{} || r2.ptr != pair.data() + pair.size())
            throw std::invalid_argument("state encoding: bad pair '" + std::string(pair) + "'");
        if (index <= prev_index)
            throw std::invalid_argument("state encoding: indices must be strictly ascending");
        if (index > table.i_max())
            throw std::invalid_argument("state encoding: index above i_max");
        if (count < 1)
            throw std::invalid_argument("state encoding: counts must be positive");
        s.counts[static_cast<std::size_t>(index)] = count;
        s.terms += count;
        s.index_sum += static_cast<std::int64_t>(index) * count;
        if (count > table.limit() / table.value(index))
            throw std::invalid_argument("state encoding: value exceeds table limit");
        s.n += table.value(index) * count;
        if (s.n > table.limit())
            throw std::invalid_argument("state encoding: value exceeds table limit");
        prev_index = index;
        pos = end + (end < text.size() ? 1 : 0);
    }
    return s;
}

VerificationReport verify_tally(const FibTable& table, std::int64_t n, const MoveTally& tally) {
    const ZeckDecomposition d = zeckendorf(table, n);
    VerificationReport r;

    std::int64_t weighted = 0;
    for (int k = 3; k < static_cast<int>(tally.mc.size()); ++k)
        weighted += (k - 2) * tally.mc[static_cast<std::size_t>(k)];
    for (int k = 3; k < static_cast<int>(tally.ms.size()); ++k)
        weighted += tally.ms[static_cast<std::size_t>(k)];
    r.index_budget = {weighted, n - d.iz, weighted == n - d.iz};

    const std::int64_t combines = tally.combines();
    r.combine_count = {combines, n - d.z, combines == n - d.z};

    const std::int64_t ones_lhs = tally_at(tally.ms, 2) + tally_at(tally.ms, 3);
    const std::int64_t ones_rhs = 2 * tally_at(tally.mc, 1) + tally_at(tally.mc, 2) - n + d.delta1;
    r.ones_flow = {ones_lhs, ones_rhs, ones_lhs == ones_rhs};

    r.total_moves = tally.total_moves;
    r.bounds = {n - d.z, 3 * n - 3 * d.z - d.iz + 1};
    r.bounds_ok = r.bounds.lower <= r.total_moves && r.total_moves <= r.bounds.upper;
    return r;
}

VerificationReport verify_tally(std::int64_t n, const MoveTally& tally) {
    return verify_tally(FibTable(n < 1 ? 1 : n), n, tally);
}

}  // namespace zeck
