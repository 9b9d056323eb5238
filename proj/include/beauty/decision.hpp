#pragma once

#include <vector>

#include "beauty/credence.hpp"
#include "beauty/game.hpp"

namespace beauty {

enum class Theory { Cdt, Edt };

Theory theory_from_name(const std::string& name);
std::string theory_name(Theory theory);

// Expected payout at `infoset` of deviating to `action` at the current
// awakening only, with every other awakening event (including siblings in
// the same set) playing the conjectured policy. This is the
// consistency-in-other-rounds evaluation of a causal decision theorist.
Rational cdt_value(const ValidatedGame& game, const CredenceProfile& credence,
                   const Policy& conjecture, int infoset, int action);

// Evidential evaluation: the act counts as evidence that every awakening in
// the current set's symmetry class plays the same action; events outside
// the class follow the conjecture. Every set in the class must offer the
// action (SCOPE_ACTION_MISMATCH otherwise).
Rational edt_value(const ValidatedGame& game, const CredenceProfile& credence,
                   const Policy& conjecture, int infoset, int action);

Rational action_value(const ValidatedGame& game, const CredenceProfile& credence,
                      Theory theory, const Policy& conjecture, int infoset, int action);

// All maximizing actions at `infoset`, in declared action order.
std::vector<int> best_response(const ValidatedGame& game, const CredenceProfile& credence,
                               Theory theory, const Policy& conjecture, int infoset);

// Every uniform pure policy that is a best response to itself at every
// information set. May be empty (no stable policy).
std::vector<Policy> stable_policies(const ValidatedGame& game,
                                    const CredenceProfile& credence, Theory theory);

}  // namespace beauty
