#include "beauty/decision.hpp"

#include <algorithm>
#include <functional>

namespace beauty {

Theory theory_from_name(const std::string& name) {
  if (name == "cdt") return Theory::Cdt;
  if (name == "edt") return Theory::Edt;
  throw Error("UNKNOWN_LABEL", "unknown decision theory '" + name + "'");
}

std::string theory_name(Theory theory) {
  return theory == Theory::Cdt ? "cdt" : "edt";
}

namespace {

std::string class_of(const ValidatedGame& game, int infoset) {
  const auto& iset = game.infoset(infoset);
  return iset.symmetry_class.empty() ? iset.label : iset.symmetry_class;
}

// Weighted payoff over the events of `infoset`, where `deviated` gives the
// action played at each position of an event's realization.
Rational expected_over_events(
    const ValidatedGame& game, const CredenceProfile& credence, int infoset,
    const std::function<std::vector<int>(int /*event*/)>& profile_for) {
  const auto& events = game.infoset_events(infoset);
  Rational total(0);
  for (size_t k = 0; k < events.size(); ++k) {
    int v = events[k];
    total += credence.event_credence[infoset][k] *
             game.payoff(game.event(v).realization, profile_for(v));
  }
  return total;
}

}  // namespace

Rational cdt_value(const ValidatedGame& game, const CredenceProfile& credence,
                   const Policy& conjecture, int infoset, int action) {
  if (action < 0 || action >= static_cast<int>(game.infoset(infoset).actions.size()))
    throw Error("BAD_ACTION", "action index out of range");
  return expected_over_events(game, credence, infoset, [&](int v) {
    int r = game.event(v).realization;
    std::vector<int> profile = game.induced_profile(r, conjecture);
    profile[game.event(v).index] = action;
    return profile;
  });
}

Rational edt_value(const ValidatedGame& game, const CredenceProfile& credence,
                   const Policy& conjecture, int infoset, int action) {
  const auto& actions = game.infoset(infoset).actions;
  if (action < 0 || action >= static_cast<int>(actions.size()))
    throw Error("BAD_ACTION", "action index out of range");
  const std::string& label = actions[action];
  const std::string scope = class_of(game, infoset);

  // Per information set: the action index to force, or -1 if outside the
  // evidence scope.
  std::vector<int> forced(game.infoset_count(), -1);
  for (int i = 0; i < game.infoset_count(); ++i) {
    if (class_of(game, i) != scope) continue;
    const auto& other = game.infoset(i).actions;
    auto it = std::find(other.begin(), other.end(), label);
    if (it == other.end())
      throw Error("SCOPE_ACTION_MISMATCH",
                  "action '" + label + "' is unavailable in information set '" +
                      game.infoset(i).label + "' of the same symmetry class");
    forced[i] = static_cast<int>(it - other.begin());
  }

  return expected_over_events(game, credence, infoset, [&](int v) {
    int r = game.event(v).realization;
    const auto& events = game.realization_events(r);
    std::vector<int> profile(events.size());
    for (size_t i = 0; i < events.size(); ++i) {
      int iset = game.event(events[i]).infoset;
      profile[i] = forced[iset] >= 0 ? forced[iset] : conjecture[iset];
    }
    return profile;
  });
}

Rational action_value(const ValidatedGame& game, const CredenceProfile& credence,
                      Theory theory, const Policy& conjecture, int infoset, int action) {
  return theory == Theory::Cdt
             ? cdt_value(game, credence, conjecture, infoset, action)
             : edt_value(game, credence, conjecture, infoset, action);
}

std::vector<int> best_response(const ValidatedGame& game, const CredenceProfile& credence,
                               Theory theory, const Policy& conjecture, int infoset) {
  std::vector<int> best;
  Rational best_value(0);
  int action_count = static_cast<int>(game.infoset(infoset).actions.size());
  for (int a = 0; a < action_count; ++a) {
    Rational value = action_value(game, credence, theory, conjecture, infoset, a);
    if (best.empty() || best_value < value) {
      best = {a};
      best_value = value;
    } else if (value == best_value) {
      best.push_back(a);
    }
  }
  return best;
}

std::vector<Policy> stable_policies(const ValidatedGame& game,
                                    const CredenceProfile& credence, Theory theory) {
  std::vector<Policy> stable;
  for (const Policy& policy : enumerate_policies(game)) {
    bool ok = true;
    for (int i = 0; i < game.infoset_count() && ok; ++i) {
      auto best = best_response(game, credence, theory, policy, i);
      ok = std::find(best.begin(), best.end(), policy[i]) != best.end();
    }
    if (ok) stable.push_back(policy);
  }
  return stable;
}

}  // namespace beauty
