#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zeck/fib.hpp"

namespace zeck {

// The four move kinds. Combine merges F_{k-1} and F_k into F_{k+1} and is
// keyed by the larger index k >= 2; AddOnes merges two F_1 into F_2 and
// counts as the combining move at index 1. Split turns two copies of F_k
// into F_{k-2} and F_{k+1} for k >= 3; SplitTwos turns two F_2 into F_1
// and F_3 and counts as the splitting move at index 2.
enum class MoveKind { AddOnes, Combine, SplitTwos, Split };

struct Move {
    MoveKind kind = MoveKind::AddOnes;
    int index = 1;  // 1 for AddOnes, 2 for SplitTwos, k otherwise

    bool is_combine_family() const {
        return kind == MoveKind::AddOnes || kind == MoveKind::Combine;
    }
    friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(Move move);

// Multiset of Fibonacci indices currently decomposing n, stored dense over
// 1..i_max+1. counts[i_max+1] is a guard slot that must stay zero: a term
// F_{i_max+1} > n would break value conservation, and apply_move raises if
// one ever appears. terms and index_sum are the two monovariants, kept
// incrementally and checked on every move.
struct GameState {
    std::vector<std::int64_t> counts;  // size i_max+2, [0] unused
    std::int64_t n = 0;
    std::int64_t terms = 0;
    std::int64_t index_sum = 0;

    int i_max() const { return static_cast<int>(counts.size()) - 2; }
    std::int64_t count(int k) const { return counts[static_cast<std::size_t>(k)]; }
};

// Per-index move counters for a completed game. mc[1] counts AddOnes,
// mc[k] combines at k; ms[2] counts SplitTwos, ms[k] splits at k.
struct MoveTally {
    std::vector<std::int64_t> mc;  // [0] unused
    std::vector<std::int64_t> ms;  // [0], [1] unused
    std::int64_t total_moves = 0;

    MoveTally() = default;
    explicit MoveTally(int i_max)
        : mc(static_cast<std::size_t>(i_max) + 1, 0),
          ms(static_cast<std::size_t>(i_max) + 1, 0) {}

    std::int64_t combines() const;
    std::int64_t splits() const;
};

struct IllegalMoveError : std::logic_error {
    using std::logic_error::logic_error;
};

GameState initial_state(const FibTable& table);

// Appends the legal moves in canonical order:
// AddOnes, Combine(2..i_max), SplitTwos, Split(3..i_max).
void legal_moves(const GameState& state, std::vector<Move>& out);
std::vector<Move> legal_moves(const GameState& state);

bool is_legal(const GameState& state, Move move);

// True iff no count exceeds 1 and no two adjacent indices are both present;
// equivalently, legal_moves is empty.
bool is_terminal(const GameState& state);

// Applies a legal move in place and bumps its tally counter. Raises
// IllegalMoveError when the precondition fails (a strategy bug) and
// logic_error when the move breaks an engine invariant: nonzero guard slot,
// or the progress triple (index_sum, terms, counts[2]) failing to decrease.
void apply_move(GameState& state, Move move, MoveTally& tally);
void apply_move(GameState& state, Move move);

// Canonical text encoding for logs and solver cache keys: ascending
// "index^count" pairs joined by ',', zero counts omitted (e.g. "1^2,2^1").
std::string encode_state(const GameState& state);
GameState parse_state(std::string_view text, const FibTable& table);

// One exact identity over a completed game's tally.
struct IdentityCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool ok = false;
};

// Pass/fail for each identity every completed game must satisfy:
//   index_budget:  sum_{k>=3} (k-2)*mc[k] + sum_{k>=3} ms[k] = n - IZ(n)
//   combine_count: sum_k mc[k] = n - Z(n)
//   ones_flow:     ms[2] + ms[3] = 2*mc[1] + mc[2] - n + delta1
//   bounds:        n - Z(n) <= total_moves <= 3n - 3Z(n) - IZ(n) + 1
// ones_flow balances the F_1 count: the game starts with n of them and ends
// with delta1; AddOnes removes two, Combine(2) removes one, SplitTwos and
// Split(3) each add one back.
struct VerificationReport {
    IdentityCheck index_budget;
    IdentityCheck combine_count;
    IdentityCheck ones_flow;
    std::int64_t total_moves = 0;
    MoveBounds bounds;
    bool bounds_ok = false;

    bool all_pass() const {
        return index_budget.ok && combine_count.ok && ones_flow.ok && bounds_ok;
    }
};

VerificationReport verify_tally(const FibTable& table, std::int64_t n, const MoveTally& tally);
VerificationReport verify_tally(std::int64_t n, const MoveTally& tally);

}  // namespace zeck
