#include "beauty/game.hpp"

#include <algorithm>
#include <set>

namespace beauty {

namespace {

// Number of admissible profiles of realization r, given per-position radixes.
long long profile_count(const std::vector<int>& radixes) {
  long long count = 1;
  for (int radix : radixes) count *= radix;
  return count;
}

}  // namespace

int ValidatedGame::realization_index(const std::string& id) const {
  auto it = realization_by_id_.find(id);
  if (it == realization_by_id_.end())
    throw Error("UNKNOWN_LABEL", "unknown realization '" + id + "'");
  return it->second;
}

int ValidatedGame::infoset_index(const std::string& label) const {
  auto it = infoset_by_label_.find(label);
  if (it == infoset_by_label_.end())
    throw Error("UNKNOWN_LABEL", "unknown information set '" + label + "'");
  return it->second;
}

int ValidatedGame::action_index(int infoset, const std::string& action) const {
  const auto& by_label = action_by_label_[infoset];
  auto it = by_label.find(action);
  if (it == by_label.end())
    throw Error("BAD_ACTION", "information set '" + spec_.infosets[infoset].label +
                                  "' has no action '" + action + "'");
  return it->second;
}

int ValidatedGame::profile_offset(int r, const std::vector<int>& profile) const {
  const auto& events = realization_events_[r];
  int offset = 0;
  for (size_t i = 0; i < events.size(); ++i) {
    int radix = static_cast<int>(spec_.infosets[events_[events[i]].infoset].actions.size());
    offset = offset * radix + profile[i];
  }
  return offset;
}

const Rational& ValidatedGame::payoff(int r, const std::vector<int>& profile) const {
  return tables_[r][profile_offset(r, profile)];
}

std::vector<int> ValidatedGame::induced_profile(int r, const Policy& policy) const {
  const auto& events = realization_events_[r];
  std::vector<int> profile(events.size());
  for (size_t i = 0; i < events.size(); ++i)
    profile[i] = policy[events_[events[i]].infoset];
  return profile;
}

std::string ValidatedGame::event_label(int v) const {
  const auto& ev = events_[v];
  return spec_.realizations[ev.realization].id + "/" + std::to_string(ev.index + 1);
}

int ValidatedGame::nu(int infoset, int realization) const {
  int count = 0;
  for (int v : infoset_events_[infoset])
    if (events_[v].realization == realization) ++count;
  return count;
}

std::vector<ValidationError> check(const GameSpec& spec) {
  std::vector<ValidationError> errors;
  auto add = [&](const std::string& code, const std::string& detail) {
    errors.push_back({code, detail});
  };

  std::set<std::string> infoset_labels;
  std::map<std::string, const InformationSet*> infoset_by_label;
  for (const auto& iset : spec.infosets) {
    if (!infoset_labels.insert(iset.label).second)
      add("DUPLICATE_LABEL", "information set '" + iset.label + "' declared twice");
    else
      infoset_by_label[iset.label] = &iset;
    if (iset.actions.empty())
      add("EMPTY_ACTIONS", "information set '" + iset.label + "' has no actions");
    std::set<std::string> action_labels;
    for (const auto& a : iset.actions)
      if (!action_labels.insert(a).second)
        add("DUPLICATE_LABEL",
            "action '" + a + "' declared twice in information set '" + iset.label + "'");
    if (iset.decline_action &&
        std::find(iset.actions.begin(), iset.actions.end(), *iset.decline_action) ==
            iset.actions.end())
      add("BAD_DECLINE", "decline action '" + *iset.decline_action +
                             "' is not an action of information set '" + iset.label + "'");
  }

  std::set<std::string> realization_ids;
  Rational total(0);
  for (const auto& r : spec.realizations) {
    if (!realization_ids.insert(r.id).second)
      add("DUPLICATE_LABEL", "realization '" + r.id + "' declared twice");
    if (r.probability.is_negative() || r.probability > Rational(1))
      add("PROBABILITY_SUM",
          "realization '" + r.id + "' has probability " + r.probability.str() +
              " outside [0,1]");
    total += r.probability;
    if (r.awakenings.empty())
      add("EMPTY_AWAKENINGS", "realization '" + r.id + "' has no awakenings");
    for (const auto& label : r.awakenings)
      if (!infoset_by_label.count(label))
        add("UNKNOWN_LABEL", "realization '" + r.id +
                                 "' awakens in unknown information set '" + label + "'");
  }
  if (!spec.realizations.empty() && total != Rational(1))
    add("PROBABILITY_SUM", "realization probabilities sum to " + total.str());
  if (spec.realizations.empty())
    add("EMPTY_AWAKENINGS", "game has no realizations");

  // Payoff table: keyed by known realizations, total over admissible profiles.
  for (const auto& [id, entries] : spec.payoffs)
    if (!realization_ids.count(id))
      add("UNKNOWN_LABEL", "payoffs given for unknown realization '" + id + "'");
  for (const auto& r : spec.realizations) {
    if (!realization_ids.count(r.id)) continue;
    bool structure_ok = true;
    std::vector<const InformationSet*> position_sets;
    for (const auto& label : r.awakenings) {
      auto it = infoset_by_label.find(label);
      if (it == infoset_by_label.end() || it->second->actions.empty()) {
        structure_ok = false;
        break;
      }
      position_sets.push_back(it->second);
    }
    if (!structure_ok) continue;

    auto it = spec.payoffs.find(r.id);
    std::set<std::vector<std::string>> seen;
    long long expected = 1;
    for (const auto* iset : position_sets)
      expected *= static_cast<long long>(iset->actions.size());
    if (it != spec.payoffs.end()) {
      for (const auto& entry : it->second) {
        if (entry.profile.size() != position_sets.size()) {
          add("UNKNOWN_LABEL", "payoff profile of wrong length for realization '" + r.id + "'");
          continue;
        }
        bool actions_ok = true;
        for (size_t i = 0; i < entry.profile.size(); ++i) {
          const auto& actions = position_sets[i]->actions;
          if (std::find(actions.begin(), actions.end(), entry.profile[i]) == actions.end()) {
            add("UNKNOWN_LABEL", "payoff profile for realization '" + r.id +
                                     "' uses unknown action '" + entry.profile[i] + "'");
            actions_ok = false;
          }
        }
        if (!actions_ok) continue;
        if (!seen.insert(entry.profile).second)
          add("DUPLICATE_LABEL",
              "duplicate payoff profile entry for realization '" + r.id + "'");
      }
    }
    if (static_cast<long long>(seen.size()) != expected)
      add("INCOMPLETE_PAYOFFS",
          "realization '" + r.id + "' has " + std::to_string(seen.size()) + " of " +
              std::to_string(expected) + " payoff entries");
  }

  return errors;
}

ValidatedGame validate(const GameSpec& spec) {
  auto errors = check(spec);
  if (!errors.empty()) throw ValidationFailure(std::move(errors));

  ValidatedGame game;
  game.spec_ = spec;
  for (size_t i = 0; i < spec.infosets.size(); ++i) {
    game.infoset_by_label_[spec.infosets[i].label] = static_cast<int>(i);
    std::map<std::string, int> actions;
    for (size_t a = 0; a < spec.infosets[i].actions.size(); ++a)
      actions[spec.infosets[i].actions[a]] = static_cast<int>(a);
    game.action_by_label_.push_back(std::move(actions));
  }
  game.infoset_events_.resize(spec.infosets.size());
  game.realization_events_.resize(spec.realizations.size());
  for (size_t r = 0; r < spec.realizations.size(); ++r) {
    game.realization_by_id_[spec.realizations[r].id] = static_cast<int>(r);
    const auto& awakenings = spec.realizations[r].awakenings;
    for (size_t i = 0; i < awakenings.size(); ++i) {
      int iset = game.infoset_by_label_.at(awakenings[i]);
      int v = static_cast<int>(game.events_.size());
      game.events_.push_back({static_cast<int>(r), static_cast<int>(i), iset});
      game.infoset_events_[iset].push_back(v);
      game.realization_events_[r].push_back(v);
    }
  }

  // Flatten the payoff tables into mixed-radix order.
  game.tables_.resize(spec.realizations.size());
  for (size_t r = 0; r < spec.realizations.size(); ++r) {
    std::vector<int> radixes;
    for (const auto& label : spec.realizations[r].awakenings)
      radixes.push_back(static_cast<int>(
          spec.infosets[game.infoset_by_label_.at(label)].actions.size()));
    game.tables_[r].assign(profile_count(radixes), Rational(0));
    for (const auto& entry : spec.payoffs.at(spec.realizations[r].id)) {
      std::vector<int> profile(entry.profile.size());
      for (size_t i = 0; i < entry.profile.size(); ++i) {
        int iset = game.infoset_by_label_.at(spec.realizations[r].awakenings[i]);
        profile[i] = game.action_by_label_[iset].at(entry.profile[i]);
      }
      game.tables_[r][game.profile_offset(static_cast<int>(r), profile)] = entry.value;
    }
  }
  return game;
}

std::vector<Policy> enumerate_policies(const ValidatedGame& game) {
  // Odometer over information sets sorted by label, last label fastest.
  std::vector<int> order(game.infoset_count());
  for (int i = 0; i < game.infoset_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return game.infoset(a).label < game.infoset(b).label;
  });

  std::vector<Policy> policies;
  Policy current(game.infoset_count(), 0);
  while (true) {
    policies.push_back(current);
    int pos = static_cast<int>(order.size()) - 1;
    while (pos >= 0) {
      int iset = order[pos];
      if (++current[iset] < static_cast<int>(game.infoset(iset).actions.size())) break;
      current[iset] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return policies;
}

Policy uniform_policy(const ValidatedGame& game, const std::string& action) {
  Policy policy(game.infoset_count());
  for (int i = 0; i < game.infoset_count(); ++i)
    policy[i] = game.action_index(i, action);
  return policy;
}

Policy policy_from_map(const ValidatedGame& game,
                       const std::map<std::string, std::string>& assignment) {
  if (assignment.size() != static_cast<size_t>(game.infoset_count()))
    throw Error("UNKNOWN_LABEL", "policy must assign every information set exactly once");
  Policy policy(game.infoset_count());
  for (const auto& [label, action] : assignment) {
    int iset = game.infoset_index(label);
    policy[iset] = game.action_index(iset, action);
  }
  return policy;
}

std::map<std::string, std::string> policy_to_map(const ValidatedGame& game,
                                                 const Policy& policy) {
  std::map<std::string, std::string> out;
  for (int i = 0; i < game.infoset_count(); ++i)
    out[game.infoset(i).label] = game.infoset(i).actions[policy[i]];
  return out;
}

}  // namespace beauty
