#pragma once

#include <optional>
#include <vector>

#include "beauty/game.hpp"

namespace beauty {

// A concrete violation of payoff additivity: swapping position `position`
// between the two profiles changes the payoff difference.
struct AdditivityWitness {
  int realization;
  int position;
  std::vector<int> profile_a;
  std::vector<int> profile_b;
};

// Exhaustive additivity check: for every realization, position, and pair of
// profiles, the payoff difference from swapping that position must match in
// both contexts. Returns the first witness in scan order (realization,
// position, profile a, profile b), or nullopt when the game is additive.
std::optional<AdditivityWitness> check_additive(const ValidatedGame& game);

// Pruned scan: compares every profile against the all-first-actions context
// only. One varied coordinate implies the general condition by telescoping;
// witnesses are still genuine violations of the full condition. Kept as a
// cross-check against the exhaustive scan.
std::optional<AdditivityWitness> check_additive_pruned(const ValidatedGame& game);

// Returns true iff `witness` really violates the additivity condition on
// `game` (used to certify reported witnesses).
bool witness_violates(const ValidatedGame& game, const AdditivityWitness& witness);

// Per-event payoff functions and per-realization constants reconstructing
// an additive game's table: payoff(r, a_1..a_n) = constant[r] + sum of
// event_payoff[v(r,i)][a_i]. The construction zeroes each event's default
// action.
struct Decomposition {
  std::vector<std::vector<Rational>> event_payoff;  // [event][action]
  std::vector<Rational> constant;                   // [realization]
  std::vector<int> defaults;                        // [event] action index
};

// Builds the decomposition from pairwise payoff differences against the
// default profile. `defaults` assigns one action index per event; omitted
// events use their set's first declared action. Throws NOT_ADDITIVE when
// the game fails check_additive.
Decomposition decompose(const ValidatedGame& game,
                        const std::optional<std::vector<int>>& defaults = std::nullopt);

// Rebuilds the flat payoff table of each realization from a decomposition
// (mixed-radix profile order, matching ValidatedGame's internal layout).
std::vector<std::vector<Rational>> reconstruct(const ValidatedGame& game,
                                               const Decomposition& decomposition);

// True iff reconstruct(game, decomposition) matches game's own table
// entry-for-entry.
bool reconstructs_exactly(const ValidatedGame& game, const Decomposition& decomposition);

}  // namespace beauty
