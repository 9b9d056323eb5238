#include "beauty/analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "beauty/additivity.hpp"

namespace beauty {

Rational ex_ante(const ValidatedGame& game, const Policy& policy) {
  Rational total(0);
  for (int r = 0; r < game.realization_count(); ++r)
    total += game.realization(r).probability *
             game.payoff(r, game.induced_profile(r, policy));
  return total;
}

std::pair<Rational, std::vector<Policy>> brute_force_optimum(const ValidatedGame& game) {
  Rational best(0);
  std::vector<Policy> argmax;
  for (const Policy& policy : enumerate_policies(game)) {
    Rational value = ex_ante(game, policy);
    if (argmax.empty() || best < value) {
      best = value;
      argmax = {policy};
    } else if (value == best) {
      argmax.push_back(policy);
    }
  }
  return {best, argmax};
}

Policy constructive_stable_policy(const ValidatedGame& game,
                                  const CredenceProfile& credence) {
  Decomposition decomposition = decompose(game);
  Policy policy(game.infoset_count(), 0);
  for (int i = 0; i < game.infoset_count(); ++i) {
    const auto& events = game.infoset_events(i);
    int action_count = static_cast<int>(game.infoset(i).actions.size());
    int best_action = 0;
    Rational best_value(0);
    for (int a = 0; a < action_count; ++a) {
      Rational value(0);
      for (size_t k = 0; k < events.size(); ++k)
        value += credence.event_credence[i][k] * decomposition.event_payoff[events[k]][a];
      if (a == 0 || best_value < value) {
        best_value = value;
        best_action = a;
      }
    }
    policy[i] = best_action;
  }
  return policy;
}

std::string verdict_name(PropositionVerdict verdict) {
  switch (verdict) {
    case PropositionVerdict::Confirms: return "CONFIRMS";
    case PropositionVerdict::Violates: return "VIOLATES";
    case PropositionVerdict::NotApplicable: return "NOT_APPLICABLE";
    default: return "NO_STABLE_POLICY";
  }
}

std::string verdict_name(DutchBookVerdict verdict) {
  switch (verdict) {
    case DutchBookVerdict::Invulnerable: return "INVULNERABLE";
    case DutchBookVerdict::Vulnerable: return "VULNERABLE";
    default: return "NOT_APPLICABLE";
  }
}

PropositionResult check_proposition(const ValidatedGame& game,
                                    const CredenceProfile& credence, Theory theory) {
  PropositionResult result;
  result.optimum = Rational(0);
  if (check_additive(game)) {
    result.verdict = PropositionVerdict::NotApplicable;
    return result;
  }
  result.stable = stable_policies(game, credence, theory);
  if (result.stable.empty()) {
    result.verdict = PropositionVerdict::NoStablePolicy;
    return result;
  }
  result.optimum = brute_force_optimum(game).first;
  for (const Policy& policy : result.stable) {
    if (ex_ante(game, policy) != result.optimum) {
      result.verdict = PropositionVerdict::Violates;
      result.witness = policy;
      return result;
    }
  }
  result.verdict = PropositionVerdict::Confirms;
  return result;
}

SureLossResult sure_loss(const ValidatedGame& game, const Policy& policy) {
  SureLossResult result{true, Rational(0), std::nullopt};
  for (int r = 0; r < game.realization_count(); ++r) {
    Rational payoff = game.payoff(r, game.induced_profile(r, policy));
    if (r == 0 || payoff < result.min_payoff) result.min_payoff = payoff;
    if (!payoff.is_negative() && !result.nonneg_realization) {
      result.sure_loss = false;
      result.nonneg_realization = r;
    }
  }
  return result;
}

DutchBookResult dutch_book_verdict(const ValidatedGame& game,
                                   const CredenceProfile& credence, Theory theory) {
  DutchBookResult result;
  Policy decline(game.infoset_count());
  for (int i = 0; i < game.infoset_count(); ++i) {
    const auto& iset = game.infoset(i);
    if (!iset.decline_action) {
      result.verdict = DutchBookVerdict::NotApplicable;
      return result;
    }
    decline[i] = game.action_index(i, *iset.decline_action);
  }
  for (int r = 0; r < game.realization_count(); ++r) {
    Rational payoff = game.payoff(r, game.induced_profile(r, decline));
    if (!payoff.is_zero())
      throw Error("BAD_NULL", "declining everything pays " + payoff.str() +
                                  " in realization '" + game.realization(r).id + "'");
  }

  for (const Policy& policy : stable_policies(game, credence, theory)) {
    SureLossResult loss = sure_loss(game, policy);
    if (loss.sure_loss) {
      // Guaranteed loss: the best the policy can do across realizations.
      Rational worst(0);
      for (int r = 0; r < game.realization_count(); ++r) {
        Rational payoff = game.payoff(r, game.induced_profile(r, policy));
        if (r == 0 || worst < payoff) worst = payoff;
      }
      result.verdict = DutchBookVerdict::Vulnerable;
      result.policy = policy;
      result.guaranteed_loss = worst;
      return result;
    }
  }
  result.verdict = DutchBookVerdict::Invulnerable;
  return result;
}

namespace {

// Uniform integer in [0, bound) from an mt19937_64 stream via rejection,
// so results do not depend on the standard library's distribution
// implementation.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

long long lcm_ll(long long a, long long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

Rational FrequencyTable::fraction(int infoset, int position) const {
  if (totals[infoset] == 0) return Rational(0);
  return Rational(static_cast<long long>(counts[infoset][position]),
                  static_cast<long long>(totals[infoset]));
}

FrequencyTable monte_carlo(const ValidatedGame& game, std::uint64_t trials,
                           std::uint64_t seed) {
  // Sample realizations by comparing one bounded draw per trial against the
  // cumulative probabilities scaled to a common denominator.
  long long denom = 1;
  for (int r = 0; r < game.realization_count(); ++r)
    denom = lcm_ll(denom, game.realization(r).probability.den());
  std::vector<std::uint64_t> cumulative;
  std::uint64_t running = 0;
  for (int r = 0; r < game.realization_count(); ++r) {
    const Rational& p = game.realization(r).probability;
    running += static_cast<std::uint64_t>(p.num() * (denom / p.den()));
    cumulative.push_back(running);
  }

  FrequencyTable table;
  table.trials = trials;
  table.counts.resize(game.infoset_count());
  for (int i = 0; i < game.infoset_count(); ++i)
    table.counts[i].assign(game.infoset_events(i).size(), 0);
  table.totals.assign(game.infoset_count(), 0);

  std::vector<std::pair<int, int>> event_slot(game.event_count());  // (infoset, position)
  for (int i = 0; i < game.infoset_count(); ++i)
    for (size_t k = 0; k < game.infoset_events(i).size(); ++k)
      event_slot[game.infoset_events(i)[k]] = {i, static_cast<int>(k)};

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t draw = bounded_draw(rng, static_cast<std::uint64_t>(denom));
    int realization = 0;
    while (draw >= cumulative[realization]) ++realization;
    for (int v : game.realization_events(realization)) {
      auto [infoset, position] = event_slot[v];
      ++table.counts[infoset][position];
      ++table.totals[infoset];
    }
  }
  return table;
}

GameSpec random_game(const GeneratorParams& params) {
  std::mt19937_64 rng(params.seed);
  auto draw = [&](int lo, int hi) {  // inclusive
    return lo + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
  };

  std::vector<Rational> grid = params.grid;
  if (grid.empty())
    for (long long v = -3; v <= 5; ++v) grid.push_back(Rational(v));
  auto draw_payoff = [&] { return grid[draw(0, static_cast<int>(grid.size()) - 1)]; };

  int infoset_count = draw(1, params.max_infosets);
  std::vector<InformationSet> infosets;
  for (int i = 0; i < infoset_count; ++i) {
    InformationSet iset;
    iset.label = "I" + std::to_string(i + 1);
    int actions = draw(1, params.max_actions);
    for (int a = 0; a < actions; ++a) iset.actions.push_back("a" + std::to_string(a + 1));
    infosets.push_back(std::move(iset));
  }

  int realization_count = draw(1, params.max_realizations);
  std::vector<Realization> realizations;
  std::vector<long long> weights;
  long long weight_total = 0;
  for (int r = 0; r < realization_count; ++r) {
    Realization real;
    real.id = "r" + std::to_string(r + 1);
    int awakenings = draw(1, params.max_awakenings);
    for (int i = 0; i < awakenings; ++i)
      real.awakenings.push_back(infosets[draw(0, infoset_count - 1)].label);
    long long w = draw(1, 9);
    weights.push_back(w);
    weight_total += w;
    realizations.push_back(std::move(real));
  }
  for (int r = 0; r < realization_count; ++r)
    realizations[r].probability = Rational(weights[r], weight_total);

  // Drop information sets no realization awakens in.
  std::vector<InformationSet> used;
  for (const auto& iset : infosets) {
    bool hit = false;
    for (const auto& real : realizations)
      for (const auto& label : real.awakenings)
        if (label == iset.label) hit = true;
    if (hit) used.push_back(iset);
  }

  GameSpec spec;
  spec.infosets = std::move(used);
  spec.realizations = std::move(realizations);

  auto actions_of = [&](const std::string& label) -> const std::vector<std::string>& {
    for (const auto& iset : spec.infosets)
      if (iset.label == label) return iset.actions;
    throw Error("UNKNOWN_LABEL", label);
  };

  for (const auto& real : spec.realizations) {
    std::vector<const std::vector<std::string>*> position_actions;
    for (const auto& label : real.awakenings) position_actions.push_back(&actions_of(label));

    // Per-event terms for the additive construction.
    std::vector<std::vector<Rational>> terms;
    Rational constant(0);
    if (params.additive) {
      constant = draw_payoff();
      for (const auto* actions : position_actions) {
        std::vector<Rational> term;
        for (size_t a = 0; a < actions->size(); ++a) term.push_back(draw_payoff());
        terms.push_back(std::move(term));
      }
    }

    std::vector<size_t> profile(real.awakenings.size(), 0);
    while (true) {
      PayoffEntry entry;
      for (size_t i = 0; i < profile.size(); ++i)
        entry.profile.push_back((*position_actions[i])[profile[i]]);
      if (params.additive) {
        entry.value = constant;
        for (size_t i = 0; i < profile.size(); ++i) entry.value += terms[i][profile[i]];
      } else {
        entry.value = draw_payoff();
      }
      spec.payoffs[real.id].push_back(std::move(entry));

      int pos = static_cast<int>(profile.size()) - 1;
      while (pos >= 0) {
        if (++profile[pos] < position_actions[pos]->size()) break;
        profile[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return spec;
}

AnalysisReport analyze(const ValidatedGame& game, const std::string& game_id,
                       const CredenceProfile& credence, Theory theory) {
  AnalysisReport report;
  report.game_id = game_id;
  report.credence_rule = credence.rule;
  report.theory = theory_name(theory);
  for (const Policy& policy : stable_policies(game, credence, theory))
    report.stable.emplace_back(policy, ex_ante(game, policy));
  auto [optimum, optimal] = brute_force_optimum(game);
  report.optimum = optimum;
  report.optimal = std::move(optimal);
  report.additive = !check_additive(game).has_value();
  report.proposition = check_proposition(game, credence, theory);
  if (std::all_of(game.spec().infosets.begin(), game.spec().infosets.end(),
                  [](const InformationSet& iset) { return iset.decline_action.has_value(); }))
    report.dutch_book = dutch_book_verdict(game, credence, theory);
  return report;
}

}  // namespace beauty
