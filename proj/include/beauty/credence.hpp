#pragma once

#include <map>
#include <string>
#include <vector>

#include "beauty/game.hpp"

namespace beauty {

// Per information set: credence over realizations P(r|I) (indexed by
// realization) and over awakening events P(v|I) (indexed by the event's
// position within the set). Both rows sum to 1 for every set, and
// P(r|I) = sum of P(v|I) over the set's events of realization r.
struct CredenceProfile {
  std::string rule;  // "thirder", "halfer" or "custom"
  std::vector<std::vector<Rational>> realization_credence;
  std::vector<std::vector<Rational>> event_credence;
};

// nu(I,r): how many awakening events of realization r lie in information
// set I.
int nu(const ValidatedGame& game, const std::string& infoset, const std::string& realization);

// Thirder rule: P(r|I) proportional to P(r) * nu(I,r); each of the nu(I,r)
// events of r in I gets P(r) / sum_r' P(r') * nu(I,r').
CredenceProfile thirder(const ValidatedGame& game);

// Halfer rule: P(r|I) proportional to P(r) over realizations compatible
// with I, split evenly across each realization's events in I.
CredenceProfile halfer(const ValidatedGame& game);

// Arbitrary nonnegative event weights, normalized within each information
// set; realization credences follow by consistency. Keys are internal
// event ids.
CredenceProfile custom(const ValidatedGame& game, const std::map<int, Rational>& weights);

// Same, with "realization-id/i" event keys as used in weight files.
CredenceProfile custom_from_labels(const ValidatedGame& game,
                                   const std::map<std::string, Rational>& weights);

}  // namespace beauty
