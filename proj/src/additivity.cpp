#include "beauty/additivity.hpp"

namespace beauty {

namespace {

std::vector<int> radixes_of(const ValidatedGame& game, int r) {
  const auto& events = game.realization_events(r);
  std::vector<int> radixes(events.size());
  for (size_t i = 0; i < events.size(); ++i)
    radixes[i] =
        static_cast<int>(game.infoset(game.event(events[i]).infoset).actions.size());
  return radixes;
}

bool next_profile(std::vector<int>& profile, const std::vector<int>& radixes) {
  for (int i = static_cast<int>(profile.size()) - 1; i >= 0; --i) {
    if (++profile[i] < radixes[i]) return true;
    profile[i] = 0;
  }
  return false;
}

// The displayed additivity condition instantiated at (r, i, a, b):
// pi(r,a) - pi(r, a with b_i at i) == pi(r, b with a_i at i) - pi(r,b).
bool condition_holds(const ValidatedGame& game, int r, int i,
                     const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> a_swapped = a;
  a_swapped[i] = b[i];
  std::vector<int> b_swapped = b;
  b_swapped[i] = a[i];
  return game.payoff(r, a) - game.payoff(r, a_swapped) ==
         game.payoff(r, b_swapped) - game.payoff(r, b);
}

}  // namespace

bool witness_violates(const ValidatedGame& game, const AdditivityWitness& witness) {
  return !condition_holds(game, witness.realization, witness.position,
                          witness.profile_a, witness.profile_b);
}

std::optional<AdditivityWitness> check_additive(const ValidatedGame& game) {
  for (int r = 0; r < game.realization_count(); ++r) {
    const auto radixes = radixes_of(game, r);
    int positions = static_cast<int>(radixes.size());
    for (int i = 0; i < positions; ++i) {
      std::vector<int> a(positions, 0);
      do {
        std::vector<int> b(positions, 0);
        do {
          if (!condition_holds(game, r, i, a, b)) return AdditivityWitness{r, i, a, b};
        } while (next_profile(b, radixes));
      } while (next_profile(a, radixes));
    }
  }
  return std::nullopt;
}

std::optional<AdditivityWitness> check_additive_pruned(const ValidatedGame& game) {
  for (int r = 0; r < game.realization_count(); ++r) {
    const auto radixes = radixes_of(game, r);
    int positions = static_cast<int>(radixes.size());
    std::vector<int> a(positions, 0);
    do {
      for (int i = 0; i < positions; ++i) {
        for (int x = 0; x < radixes[i]; ++x) {
          std::vector<int> b(positions, 0);  // all-first-actions context
          b[i] = x;
          if (!condition_holds(game, r, i, a, b)) return AdditivityWitness{r, i, a, b};
        }
      }
    } while (next_profile(a, radixes));
  }
  return std::nullopt;
}

Decomposition decompose(const ValidatedGame& game,
                        const std::optional<std::vector<int>>& defaults) {
  if (auto witness = check_additive(game)) {
    const auto& w = *witness;
    throw Error("NOT_ADDITIVE",
                "game is not additive: realization '" +
                    game.realization(w.realization).id + "', position " +
                    std::to_string(w.position + 1));
  }

  Decomposition decomposition;
  if (defaults) {
    if (static_cast<int>(defaults->size()) != game.event_count())
      throw Error("BAD_ACTION", "defaults must assign one action per event");
    decomposition.defaults = *defaults;
    for (int v = 0; v < game.event_count(); ++v) {
      int radix = static_cast<int>(game.infoset(game.event(v).infoset).actions.size());
      if ((*defaults)[v] < 0 || (*defaults)[v] >= radix)
        throw Error("BAD_ACTION",
                    "default action out of range for event '" + game.event_label(v) + "'");
    }
  } else {
    decomposition.defaults.assign(game.event_count(), 0);
  }

  decomposition.constant.resize(game.realization_count());
  decomposition.event_payoff.resize(game.event_count());
  for (int r = 0; r < game.realization_count(); ++r) {
    const auto& events = game.realization_events(r);
    std::vector<int> default_profile(events.size());
    for (size_t i = 0; i < events.size(); ++i)
      default_profile[i] = decomposition.defaults[events[i]];
    decomposition.constant[r] = game.payoff(r, default_profile);
    for (size_t i = 0; i < events.size(); ++i) {
      int v = events[i];
      int radix = static_cast<int>(game.infoset(game.event(v).infoset).actions.size());
      decomposition.event_payoff[v].resize(radix);
      for (int a = 0; a < radix; ++a) {
        std::vector<int> deviated = default_profile;
        deviated[i] = a;
        decomposition.event_payoff[v][a] =
            game.payoff(r, deviated) - decomposition.constant[r];
      }
    }
  }
  return decomposition;
}

std::vector<std::vector<Rational>> reconstruct(const ValidatedGame& game,
                                               const Decomposition& decomposition) {
  std::vector<std::vector<Rational>> tables(game.realization_count());
  for (int r = 0; r < game.realization_count(); ++r) {
    const auto radixes = radixes_of(game, r);
    const auto& events = game.realization_events(r);
    std::vector<int> profile(radixes.size(), 0);
    do {
      Rational value = decomposition.constant[r];
      for (size_t i = 0; i < events.size(); ++i)
        value += decomposition.event_payoff[events[i]][profile[i]];
      tables[r].push_back(value);
    } while (next_profile(profile, radixes));
  }
  return tables;
}

bool reconstructs_exactly(const ValidatedGame& game, const Decomposition& decomposition) {
  auto rebuilt = reconstruct(game, decomposition);
  for (int r = 0; r < game.realization_count(); ++r) {
    const auto radixes = radixes_of(game, r);
    std::vector<int> profile(radixes.size(), 0);
    size_t offset = 0;
    do {
      if (rebuilt[r][offset++] != game.payoff(r, profile)) return false;
    } while (next_profile(profile, radixes));
  }
  return true;
}

}  // namespace beauty
