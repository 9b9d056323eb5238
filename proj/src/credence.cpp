#include "beauty/credence.hpp"

namespace beauty {

namespace {

CredenceProfile empty_profile(const ValidatedGame& game, std::string rule) {
  CredenceProfile profile;
  profile.rule = std::move(rule);
  profile.realization_credence.assign(
      game.infoset_count(), std::vector<Rational>(game.realization_count(), Rational(0)));
  profile.event_credence.resize(game.infoset_count());
  for (int i = 0; i < game.infoset_count(); ++i)
    profile.event_credence[i].assign(game.infoset_events(i).size(), Rational(0));
  return profile;
}

void require_mass(const ValidatedGame& game, int iset, const Rational& mass) {
  if (game.infoset_events(iset).empty() || mass.is_zero())
    throw Error("EMPTY_INFOSET", "information set '" + game.infoset(iset).label +
                                     "' carries no probability mass");
}

}  // namespace

int nu(const ValidatedGame& game, const std::string& infoset, const std::string& realization) {
  return game.nu(game.infoset_index(infoset), game.realization_index(realization));
}

CredenceProfile thirder(const ValidatedGame& game) {
  CredenceProfile profile = empty_profile(game, "thirder");
  for (int i = 0; i < game.infoset_count(); ++i) {
    Rational denom(0);
    for (int r = 0; r < game.realization_count(); ++r)
      denom += game.realization(r).probability * Rational(game.nu(i, r));
    require_mass(game, i, denom);
    for (int r = 0; r < game.realization_count(); ++r)
      profile.realization_credence[i][r] =
          game.realization(r).probability * Rational(game.nu(i, r)) / denom;
    const auto& events = game.infoset_events(i);
    for (size_t k = 0; k < events.size(); ++k)
      profile.event_credence[i][k] =
          game.realization(game.event(events[k]).realization).probability / denom;
  }
  return profile;
}

CredenceProfile halfer(const ValidatedGame& game) {
  CredenceProfile profile = empty_profile(game, "halfer");
  for (int i = 0; i < game.infoset_count(); ++i) {
    Rational compatible(0);
    for (int r = 0; r < game.realization_count(); ++r)
      if (game.nu(i, r) > 0) compatible += game.realization(r).probability;
    require_mass(game, i, compatible);
    for (int r = 0; r < game.realization_count(); ++r)
      if (game.nu(i, r) > 0)
        profile.realization_credence[i][r] = game.realization(r).probability / compatible;
    const auto& events = game.infoset_events(i);
    for (size_t k = 0; k < events.size(); ++k) {
      int r = game.event(events[k]).realization;
      profile.event_credence[i][k] =
          profile.realization_credence[i][r] / Rational(game.nu(i, r));
    }
  }
  return profile;
}

CredenceProfile custom(const ValidatedGame& game, const std::map<int, Rational>& weights) {
  auto weight_of = [&](int v) {
    auto it = weights.find(v);
    Rational w = it == weights.end() ? Rational(0) : it->second;
    if (w.is_negative())
      throw Error("NEGATIVE_WEIGHT",
                  "weight for event '" + game.event_label(v) + "' is negative");
    return w;
  };

  CredenceProfile profile = empty_profile(game, "custom");
  for (int i = 0; i < game.infoset_count(); ++i) {
    const auto& events = game.infoset_events(i);
    Rational total(0);
    for (int v : events) total += weight_of(v);
    if (total.is_zero())
      throw Error("ZERO_MASS", "all weights are zero in information set '" +
                                   game.infoset(i).label + "'");
    for (size_t k = 0; k < events.size(); ++k) {
      Rational credence = weight_of(events[k]) / total;
      profile.event_credence[i][k] = credence;
      profile.realization_credence[i][game.event(events[k]).realization] += credence;
    }
  }
  return profile;
}

CredenceProfile custom_from_labels(const ValidatedGame& game,
                                   const std::map<std::string, Rational>& weights) {
  std::map<std::string, int> event_by_label;
  for (int v = 0; v < game.event_count(); ++v) event_by_label[game.event_label(v)] = v;
  std::map<int, Rational> by_id;
  for (const auto& [label, weight] : weights) {
    auto it = event_by_label.find(label);
    if (it == event_by_label.end())
      throw Error("UNKNOWN_LABEL", "unknown event '" + label + "' in weights");
    by_id[it->second] = weight;
  }
  return custom(game, by_id);
}

}  // namespace beauty
