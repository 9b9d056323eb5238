#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beauty/error.hpp"
#include "beauty/rational.hpp"

namespace beauty {

// One outcome of the single initial chance move. `awakenings` lists, in
// order, the information set of each awakening event it produces.
struct Realization {
  std::string id;
  Rational probability;
  std::vector<std::string> awakenings;

  bool operator==(const Realization&) const = default;
};

// A set of awakening events the agent cannot distinguish. The action list
// lives here, so every event in the set draws from the same actions.
// `symmetry_class` scopes evidential reasoning (defaults to the label
// itself); `decline_action`, when present, marks the walk-away action used
// by the Dutch-book machinery.
struct InformationSet {
  std::string label;
  std::vector<std::string> actions;
  std::string symmetry_class;  // empty means: the set's own label
  std::optional<std::string> decline_action;

  bool operator==(const InformationSet&) const = default;
};

struct PayoffEntry {
  std::vector<std::string> profile;  // one action label per awakening, in order
  Rational value;

  bool operator==(const PayoffEntry&) const = default;
};

// A candidate game as declared: realizations, information sets, and a total
// payoff table per realization. Validate with validate() before use.
struct GameSpec {
  std::vector<Realization> realizations;
  std::vector<InformationSet> infosets;
  std::map<std::string, std::vector<PayoffEntry>> payoffs;

  bool operator==(const GameSpec&) const = default;
};

// Event v(r,i): the i-th awakening of realization r (i is 0-based here;
// labels render it 1-based as "r/i+1").
struct AwakeningEvent {
  int realization;
  int index;
  int infoset;
};

// One action per information set, stored as action indices in spec order of
// the information sets.
using Policy = std::vector<int>;

// A GameSpec that passed every invariant, plus the derived indexes the rest
// of the library works with. Immutable after construction.
class ValidatedGame {
public:
  const GameSpec& spec() const { return spec_; }

  int realization_count() const { return static_cast<int>(spec_.realizations.size()); }
  int infoset_count() const { return static_cast<int>(spec_.infosets.size()); }
  int event_count() const { return static_cast<int>(events_.size()); }

  const Realization& realization(int r) const { return spec_.realizations[r]; }
  const InformationSet& infoset(int i) const { return spec_.infosets[i]; }
  const AwakeningEvent& event(int v) const { return events_[v]; }

  // All awakening events, grouped per information set / per realization.
  const std::vector<AwakeningEvent>& events() const { return events_; }
  const std::vector<int>& infoset_events(int i) const { return infoset_events_[i]; }
  const std::vector<int>& realization_events(int r) const { return realization_events_[r]; }

  int realization_index(const std::string& id) const;
  int infoset_index(const std::string& label) const;
  int action_index(int infoset, const std::string& action) const;

  // Payoff for realization r under `profile` (one action index per
  // awakening position).
  const Rational& payoff(int r, const std::vector<int>& profile) const;

  // The profile realization r plays when every set follows `policy`.
  std::vector<int> induced_profile(int r, const Policy& policy) const;

  // Event label "realization-id/i" with a 1-based index.
  std::string event_label(int v) const;

  // Number of awakening events of realization r inside information set i.
  int nu(int infoset, int realization) const;

private:
  friend ValidatedGame validate(const GameSpec& spec);

  GameSpec spec_;
  std::vector<AwakeningEvent> events_;
  std::vector<std::vector<int>> infoset_events_;
  std::vector<std::vector<int>> realization_events_;
  std::map<std::string, int> realization_by_id_;
  std::map<std::string, int> infoset_by_label_;
  std::vector<std::map<std::string, int>> action_by_label_;
  // Flat payoff tables, one per realization, indexed mixed-radix over the
  // awakening positions (last position fastest).
  std::vector<std::vector<Rational>> tables_;

  int profile_offset(int r, const std::vector<int>& profile) const;
};

// Checks every GameSpec invariant and returns all violations found (empty
// means valid).
std::vector<ValidationError> check(const GameSpec& spec);

// check() + index construction; throws ValidationFailure on any violation.
ValidatedGame validate(const GameSpec& spec);

// All uniform pure policies, each exactly once, in lexicographic order of
// (information-set label, action position).
std::vector<Policy> enumerate_policies(const ValidatedGame& game);

// Policy helpers shared by tests and the CLI.
Policy uniform_policy(const ValidatedGame& game, const std::string& action);
Policy policy_from_map(const ValidatedGame& game,
                       const std::map<std::string, std::string>& assignment);
std::map<std::string, std::string> policy_to_map(const ValidatedGame& game,
                                                 const Policy& policy);

// The games analysed in this library, keyed by name:
//   standard, shaw, three-awakenings, three-awakenings-coin,
//   halfer-counterexample, three-sided-edt, three-sided-edt-i3,
//   thirder-edt-counterexample.
GameSpec builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace beauty
