#pragma once

#include <map>
#include <string>

#include "beauty/game.hpp"

namespace beauty {

// Canonical game file format (JSON): top-level keys `realizations`,
// `infosets`, `payoffs`. Every rational is a string "p/q" or "n";
// floating-point literals and unknown keys are rejected.
GameSpec load_game(const std::string& document);
std::string serialize_game(const GameSpec& spec);

// Custom credence weights: a JSON map from event keys "realization-id/i"
// (1-based index) to rational strings.
std::map<std::string, Rational> load_weights(const std::string& document);

}  // namespace beauty
