#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beauty/credence.hpp"
#include "beauty/decision.hpp"
#include "beauty/game.hpp"

namespace beauty {

// Expected total payout before the experiment: sum over realizations of
// P(r) times the payoff of the profile the policy induces.
Rational ex_ante(const ValidatedGame& game, const Policy& policy);

// Maximum ex ante value over every uniform pure policy, with all maximizers.
std::pair<Rational, std::vector<Policy>> brute_force_optimum(const ValidatedGame& game);

// Stable policy built per information set from the decomposition argmax
// (conjecture-free in additive games). Throws NOT_ADDITIVE otherwise.
Policy constructive_stable_policy(const ValidatedGame& game, const CredenceProfile& credence);

enum class PropositionVerdict { Confirms, Violates, NotApplicable, NoStablePolicy };

std::string verdict_name(PropositionVerdict verdict);

struct PropositionResult {
  PropositionVerdict verdict;
  std::vector<Policy> stable;        // all stable policies
  std::optional<Policy> witness;     // a stable policy below the optimum
  Rational optimum;                  // meaningless for NotApplicable
};

// Does every stable policy under (credence, theory) reach the brute-force
// optimum? NotApplicable on non-additive games.
PropositionResult check_proposition(const ValidatedGame& game,
                                    const CredenceProfile& credence, Theory theory);

struct SureLossResult {
  bool sure_loss;                          // payoff < 0 in every realization
  Rational min_payoff;                     // over realizations
  std::optional<int> nonneg_realization;   // a realization with payoff >= 0
};

SureLossResult sure_loss(const ValidatedGame& game, const Policy& policy);

enum class DutchBookVerdict { Invulnerable, Vulnerable, NotApplicable };

std::string verdict_name(DutchBookVerdict verdict);

struct DutchBookResult {
  DutchBookVerdict verdict;
  std::optional<Policy> policy;            // the sure-losing stable policy
  std::optional<Rational> guaranteed_loss; // its worst (= best) payoff, < 0
};

// NotApplicable unless every information set declares a decline action;
// BAD_NULL unless the all-decline profile pays exactly 0 in every
// realization. Vulnerable iff some stable policy is a sure loss.
DutchBookResult dutch_book_verdict(const ValidatedGame& game,
                                   const CredenceProfile& credence, Theory theory);

// Empirical awakening frequencies: per information set, per event, the
// count of that event's occurrences over the set's total awakenings across
// `trials` simulated realizations. Exact count ratios; deterministic given
// the seed (mt19937_64, one bounded draw per trial).
struct FrequencyTable {
  std::uint64_t trials;
  std::vector<std::vector<std::uint64_t>> counts;  // [infoset][event position]
  std::vector<std::uint64_t> totals;               // [infoset]
  Rational fraction(int infoset, int position) const;
};

FrequencyTable monte_carlo(const ValidatedGame& game, std::uint64_t trials,
                           std::uint64_t seed);

// Bounds for random_game. Payoffs are drawn from `grid`; with `additive`
// set, tables are built as sums of per-event terms plus per-realization
// constants and are additive by construction.
struct GeneratorParams {
  int max_realizations = 4;
  int max_awakenings = 3;
  int max_infosets = 3;
  int max_actions = 3;
  std::vector<Rational> grid;  // empty -> integers -3..5
  bool additive = false;
  std::uint64_t seed = 0;
};

// Deterministic random game: same params and seed give the identical spec.
// The result always passes validate().
GameSpec random_game(const GeneratorParams& params);

// Everything the report-style CLI commands print, bundled.
struct AnalysisReport {
  std::string game_id;
  std::string credence_rule;
  std::string theory;
  std::vector<std::pair<Policy, Rational>> stable;  // with ex ante values
  Rational optimum;
  std::vector<Policy> optimal;
  bool additive = false;
  std::optional<PropositionResult> proposition;
  std::optional<DutchBookResult> dutch_book;
};

AnalysisReport analyze(const ValidatedGame& game, const std::string& game_id,
                       const CredenceProfile& credence, Theory theory);

}  // namespace beauty
