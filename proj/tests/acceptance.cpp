// Acceptance suite: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. The CLI checks use the binary named by $BEAUTY_CLI.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "beauty/additivity.hpp"
#include "beauty/analysis.hpp"
#include "beauty/credence.hpp"
#include "beauty/decision.hpp"
#include "beauty/game.hpp"
#include "beauty/io.hpp"

using namespace beauty;
using nlohmann::json;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (!ok) ++failures;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name
            << " (" << elapsed << " ms)" << note << "\n";
}

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const char* cli = std::getenv("BEAUTY_CLI");
  if (!cli) throw std::runtime_error("BEAUTY_CLI not set");
  std::string command = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string output;
  std::array<char, 4096> buffer;
  while (size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
    output.append(buffer.data(), n);
  int status = pclose(pipe);
  int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

bool expect(bool condition, const std::string& what) {
  if (!condition) std::cout << "  failed: " << what << "\n";
  return condition;
}

GameSpec make_bet_game(const GameSpec& additive_spec) {
  auto game = validate(additive_spec);
  auto decomposition = decompose(game);
  for (auto& constant : decomposition.constant) constant = Rational(0);
  auto tables = reconstruct(game, decomposition);
  GameSpec bet = additive_spec;
  for (auto& iset : bet.infosets) iset.decline_action = iset.actions.front();
  for (int r = 0; r < game.realization_count(); ++r) {
    auto& entries = bet.payoffs[bet.realizations[r].id];
    for (size_t k = 0; k < entries.size(); ++k) entries[k].value = tables[r][k];
  }
  return bet;
}

// The halfer counterexample's bets, shifted with a Sunday round so that the
// halfer-CDT stable policy nets exactly -1 on every realization while
// declining everything pays 0.
GameSpec shifted_counterexample_bet_game() {
  GameSpec spec;
  spec.infosets = {{"I0", {"Accept", "Decline"}, "", std::string("Decline")},
                   {"I", {"Accept", "Decline"}, "", std::string("Decline")}};
  spec.realizations = {{"Heads", Rational(1, 2), {"I0", "I"}},
                       {"Tails", Rational(1, 2), {"I0", "I", "I"}}};
  spec.payoffs["Heads"] = {
      {{"Accept", "Accept"}, Rational(-1)},
      {{"Accept", "Decline"}, Rational(-4)},
      {{"Decline", "Accept"}, Rational(3)},
      {{"Decline", "Decline"}, Rational(0)},
  };
  for (int mask = 0; mask < 8; ++mask) {
    bool a0 = mask & 4, a1 = mask & 2, a2 = mask & 1;
    Rational value(0);
    if (a0) value += Rational(9, 2);
    if (a1) value += Rational(-11, 4);
    if (a2) value += Rational(-11, 4);
    spec.payoffs["Tails"].push_back(
        {{a0 ? "Accept" : "Decline", a1 ? "Accept" : "Decline", a2 ? "Accept" : "Decline"},
         value});
  }
  return spec;
}

}  // namespace

int main() {
  criterion(1, "Shaw CDT table, stable policy and optimum", [] {
    auto game = validate(builtin("shaw"));
    auto credence = thirder(game);
    int left = game.action_index(0, "Left");
    int right = game.action_index(0, "Right");
    Policy all_left = uniform_policy(game, "Left");
    Policy all_right = uniform_policy(game, "Right");
    bool ok = true;
    ok &= expect(cdt_value(game, credence, all_left, 0, left) == Rational(160), "EV 160");
    ok &= expect(cdt_value(game, credence, all_left, 0, right) == Rational(180), "EV 180");
    ok &= expect(cdt_value(game, credence, all_right, 0, left) == Rational(180), "EV 180'");
    ok &= expect(cdt_value(game, credence, all_right, 0, right) == Rational(200), "EV 200");
    auto stable = stable_policies(game, credence, Theory::Cdt);
    ok &= expect(stable.size() == 1 && stable[0] == all_right, "stable all-Right");
    ok &= expect(ex_ante(game, all_right) == Rational(200), "ex ante 200");
    auto [optimum, argmax] = brute_force_optimum(game);
    ok &= expect(optimum == Rational(250), "optimum 250");
    ok &= expect(argmax.size() == 1 && argmax[0] == all_left, "optimum at all-Left");
    return ok;
  });

  criterion(2, "Three Awakenings: stable all-Right, optimum all-Left, not additive", [] {
    auto game = validate(builtin("three-awakenings"));
    Policy all_left = uniform_policy(game, "Left");
    Policy all_right = uniform_policy(game, "Right");
    bool ok = true;
    for (const auto& credence : {thirder(game), halfer(game)}) {
      auto stable = stable_policies(game, credence, Theory::Cdt);
      ok &= expect(stable.size() == 1 && stable[0] == all_right, "unique stable all-Right");
    }
    ok &= expect(ex_ante(game, all_right) == Rational(100), "ex ante 100");
    auto [optimum, argmax] = brute_force_optimum(game);
    ok &= expect(optimum == Rational(200), "optimum 200");
    ok &= expect(argmax.size() == 1 && argmax[0] == all_left, "optimum at all-Left");
    auto witness = check_additive(game);
    ok &= expect(witness.has_value(), "not additive");
    ok &= expect(witness && witness_violates(game, *witness), "witness verifies");
    return ok;
  });

  criterion(3, "Coin-toss variant: credences, stable policies, inverted credence", [] {
    auto game = validate(builtin("three-awakenings-coin"));
    int heads = game.realization_index("Heads");
    bool ok = true;
    ok &= expect(thirder(game).realization_credence[0][heads] == Rational(99, 100),
                 "thirder 99/100");
    ok &= expect(halfer(game).realization_credence[0][heads] == Rational(99, 100),
                 "halfer 99/100");
    auto stable = stable_policies(game, thirder(game), Theory::Cdt);
    Policy all_right = uniform_policy(game, "Right");
    Policy all_left = uniform_policy(game, "Left");
    ok &= expect(stable.size() == 1 && stable[0] == all_right, "CDT stable all-Right");

    std::map<int, Rational> inverted;
    for (int v = 0; v < game.event_count(); ++v)
      inverted[v] =
          game.event(v).realization == heads ? Rational(1, 100) : Rational(99, 100);
    auto inverted_stable = stable_policies(game, custom(game, inverted), Theory::Cdt);
    ok &= expect(inverted_stable.size() == 1 && inverted_stable[0] == all_left,
                 "inverted stable all-Left");
    ok &= expect(ex_ante(game, all_left) == Rational(201), "ex ante 201");
    ok &= expect(ex_ante(game, all_right) == Rational(99), "ex ante 99");
    ok &= expect(brute_force_optimum(game).first == Rational(201), "optimum 201");
    return ok;
  });

  criterion(4, "Halfer-CDT stable policy is ex ante suboptimal; thirder-CDT confirms", [] {
    auto game = validate(builtin("halfer-counterexample"));
    auto credence = halfer(game);
    bool ok = true;
    ok &= expect(credence.event_credence[0] ==
                     std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)},
                 "halfer event credences (1/2, 1/4, 1/4)");
    Policy all_left = uniform_policy(game, "Left");
    int left = game.action_index(0, "Left");
    int right = game.action_index(0, "Right");
    ok &= expect(cdt_value(game, credence, all_left, 0, left) == Rational(3, 2), "Left 3/2");
    ok &= expect(cdt_value(game, credence, all_left, 0, right) == Rational(1), "Right 1");
    auto halfer_result = check_proposition(game, credence, Theory::Cdt);
    ok &= expect(halfer_result.verdict == PropositionVerdict::Violates, "VIOLATES");
    ok &= expect(halfer_result.stable.size() == 1 && halfer_result.stable[0] == all_left,
                 "stable all-Left");
    ok &= expect(ex_ante(game, all_left) == Rational(3, 2), "ex ante 3/2");
    ok &= expect(halfer_result.optimum == Rational(2), "optimum 2");
    auto thirder_result = check_proposition(game, thirder(game), Theory::Cdt);
    ok &= expect(thirder_result.verdict == PropositionVerdict::Confirms, "CONFIRMS");
    return ok;
  });

  criterion(5, "Evidential decision values and their optimality verdicts", [] {
    bool ok = true;
    auto sides = validate(builtin("three-sided-edt"));
    auto credence = halfer(sides);
    int i1 = sides.infoset_index("I1");
    Policy conjecture = uniform_policy(sides, "Left");
    ok &= expect(edt_value(sides, credence, conjecture, i1,
                           sides.action_index(i1, "Left")) == Rational(3, 2),
                 "I1 Left 3/2");
    ok &= expect(edt_value(sides, credence, conjecture, i1,
                           sides.action_index(i1, "Right")) == Rational(2),
                 "I1 Right 2");
    auto result = check_proposition(sides, credence, Theory::Edt);
    Policy all_right = uniform_policy(sides, "Right");
    ok &= expect(result.verdict == PropositionVerdict::Violates, "three-sided VIOLATES");
    ok &= expect(result.stable.size() == 1 && result.stable[0] == all_right,
                 "stable all-Right");
    ok &= expect(ex_ante(sides, all_right) == Rational(4, 3), "ex ante 4/3");
    ok &= expect(result.optimum == Rational(2), "optimum 2");

    auto modified = validate(builtin("three-sided-edt-i3"));
    auto modified_credence = halfer(modified);
    int m1 = modified.infoset_index("I1");
    ok &= expect(modified_credence.realization_credence[m1]
                                                       [modified.realization_index("Heads")] ==
                     Rational(1, 2),
                 "I3 variant: Heads 1/2 at I1");
    ok &= expect(modified_credence.realization_credence[m1]
                                                       [modified.realization_index("Edge")] ==
                     Rational(1, 2),
                 "I3 variant: Edge 1/2 at I1");

    auto counter = validate(builtin("thirder-edt-counterexample"));
    auto thirder_credence = thirder(counter);
    Policy counter_conjecture = uniform_policy(counter, "Left");
    ok &= expect(edt_value(counter, thirder_credence, counter_conjecture, 0,
                           counter.action_index(0, "Left")) == Rational(5, 3),
                 "Left 5/3");
    ok &= expect(edt_value(counter, thirder_credence, counter_conjecture, 0,
                           counter.action_index(0, "Right")) == Rational(8, 3),
                 "Right 8/3");
    auto counter_result = check_proposition(counter, thirder_credence, Theory::Edt);
    Policy counter_right = uniform_policy(counter, "Right");
    ok &= expect(counter_result.verdict == PropositionVerdict::Violates,
                 "thirder-EDT VIOLATES");
    ok &= expect(counter_result.stable.size() == 1 && counter_result.stable[0] == counter_right,
                 "stable all-Right");
    ok &= expect(ex_ante(counter, counter_right) == Rational(2), "ex ante 2");
    ok &= expect(counter_result.optimum == Rational(5, 2), "optimum 5/2");
    return ok;
  });

  criterion(6, "Ex ante optimality of stable policies over 1000 generated additive games", [] {
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      GeneratorParams params;
      params.seed = seed;
      params.additive = true;
      auto game = validate(random_game(params));
      auto credence = thirder(game);
      auto result = check_proposition(game, credence, Theory::Cdt);
      if (!expect(result.verdict == PropositionVerdict::Confirms,
                  "CONFIRMS at seed " + std::to_string(seed)))
        return false;
      Policy constructed = constructive_stable_policy(game, credence);
      bool member = false;
      for (const Policy& policy : result.stable) member |= (policy == constructed);
      if (!expect(member, "constructive policy stable at seed " + std::to_string(seed)))
        return false;

      auto decomposition = decompose(game);
      for (const Policy& policy : enumerate_policies(game)) {
        Rational by_realization(0);
        for (int r = 0; r < game.realization_count(); ++r) {
          Rational inner = decomposition.constant[r];
          for (int v : game.realization_events(r))
            inner += decomposition.event_payoff[v][policy[game.event(v).infoset]];
          by_realization += game.realization(r).probability * inner;
        }
        Rational by_infoset(0);
        for (int r = 0; r < game.realization_count(); ++r)
          by_infoset += game.realization(r).probability * decomposition.constant[r];
        for (int i = 0; i < game.infoset_count(); ++i)
          for (int v : game.infoset_events(i))
            by_infoset += game.realization(game.event(v).realization).probability *
                          decomposition.event_payoff[v][policy[i]];
        if (!expect(by_realization == by_infoset && by_realization == ex_ante(game, policy),
                    "rearrangement identity at seed " + std::to_string(seed)))
          return false;
      }
    }
    return true;
  });

  criterion(7, "Decomposition round-trip over the generated additive family", [] {
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      GeneratorParams params;
      params.seed = seed;
      params.additive = true;
      auto game = validate(random_game(params));
      auto first = decompose(game);
      std::vector<int> last_defaults(game.event_count());
      for (int v = 0; v < game.event_count(); ++v)
        last_defaults[v] =
            static_cast<int>(game.infoset(game.event(v).infoset).actions.size()) - 1;
      auto second = decompose(game, last_defaults);
      if (!expect(reconstructs_exactly(game, first) && reconstructs_exactly(game, second),
                  "round trip at seed " + std::to_string(seed)))
        return false;
      for (int v = 0; v < game.event_count(); ++v) {
        int radix = static_cast<int>(game.infoset(game.event(v).infoset).actions.size());
        for (int a = 0; a < radix; ++a)
          for (int b = 0; b < radix; ++b)
            if (!expect(first.event_payoff[v][a] - first.event_payoff[v][b] ==
                            second.event_payoff[v][a] - second.event_payoff[v][b],
                        "difference invariance at seed " + std::to_string(seed)))
              return false;
      }
    }
    return true;
  });

  criterion(8, "Dutch book: thirder-CDT invulnerable on bet games, shifted book traps halfer", [] {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      GeneratorParams params;
      params.seed = seed;
      params.additive = true;
      auto game = validate(make_bet_game(random_game(params)));
      auto result = dutch_book_verdict(game, thirder(game), Theory::Cdt);
      if (!expect(result.verdict == DutchBookVerdict::Invulnerable,
                  "INVULNERABLE at seed " + std::to_string(seed)))
        return false;
    }
    auto trap = validate(shifted_counterexample_bet_game());
    auto result = dutch_book_verdict(trap, halfer(trap), Theory::Cdt);
    bool ok = expect(result.verdict == DutchBookVerdict::Vulnerable, "VULNERABLE");
    if (result.policy) {
      auto loss = sure_loss(trap, *result.policy);
      ok &= expect(loss.sure_loss && loss.min_payoff == Rational(-1), "sure loss -1");
    } else {
      ok = false;
    }
    return ok;
  });

  criterion(9, "Monte Carlo frequencies: standard near 1/3, shaw Heads/Monday near 1/5", [] {
    auto standard = validate(builtin("standard"));
    auto table = monte_carlo(standard, 100000, 7);
    // Heads/1 is the first event of the single information set.
    Rational heads_err = (table.fraction(0, 0) - Rational(1, 3)).abs();
    bool ok = expect(heads_err <= Rational(1, 100), "standard within 0.01 of 1/3");

    auto shaw = validate(builtin("shaw"));
    table = monte_carlo(shaw, 100000, 7);
    Rational monday_err = (table.fraction(0, 0) - Rational(1, 5)).abs();
    ok &= expect(monday_err <= Rational(1, 100), "shaw within 0.01 of 1/5");
    return ok;
  });

  criterion(10, "CLI contract: exit codes, values, machine-format self-consistency", [] {
    bool ok = true;

    auto proposition =
        run_cli("proposition --builtin halfer-counterexample --credence halfer --dt cdt "
                "--format machine");
    ok &= expect(proposition.exit_code == 2, "proposition exit 2");
    json report = json::parse(proposition.output);
    ok &= expect(report["verdict"] == "VIOLATES", "VIOLATES reported");
    ok &= expect(report["optimum"] == "2", "optimum 2 reported");
    ok &= expect(report["stable"].size() == 1 &&
                     report["stable"][0]["ex_ante"] == "3/2" &&
                     report["stable"][0]["policy"]["I"] == "Left",
                 "stable all-Left at 3/2 reported");
    // Re-evaluate the reported numbers from the report itself.
    {
      auto game = validate(builtin("halfer-counterexample"));
      std::map<std::string, std::string> assignment;
      for (const auto& [label, action] : report["stable"][0]["policy"].items())
        assignment[label] = action.get<std::string>();
      Policy policy = policy_from_map(game, assignment);
      ok &= expect(ex_ante(game, policy) ==
                       Rational::parse(report["stable"][0]["ex_ante"].get<std::string>()),
                   "reported ex ante re-evaluates");
      ok &= expect(brute_force_optimum(game).first ==
                       Rational::parse(report["optimum"].get<std::string>()),
                   "reported optimum re-evaluates");
    }

    auto evaluate = run_cli("evaluate --builtin shaw --policy all:Left");
    ok &= expect(evaluate.exit_code == 0, "evaluate exit 0");
    ok &= expect(evaluate.output == "250\n", "evaluate prints 250");
    auto evaluate_machine = run_cli("evaluate --builtin shaw --policy all:Left --format machine");
    ok &= expect(json::parse(evaluate_machine.output)["ex_ante"] == "250",
                 "machine evaluate reports 250");

    auto additive = run_cli("check-additive --builtin three-awakenings --format machine");
    ok &= expect(additive.exit_code == 2, "check-additive exit 2");
    json additive_report = json::parse(additive.output);
    ok &= expect(additive_report["additive"] == false, "not additive reported");
    ok &= expect(additive_report.contains("witness") &&
                     additive_report["witness"].contains("profile_a") &&
                     additive_report["witness"].contains("profile_b"),
                 "witness quadruple present");
    // The reported witness must violate the additivity condition when
    // re-evaluated on the game.
    {
      auto game = validate(builtin("three-awakenings"));
      const auto& w = additive_report["witness"];
      int r = game.realization_index(w["realization"].get<std::string>());
      AdditivityWitness witness;
      witness.realization = r;
      witness.position = w["position"].get<int>() - 1;
      for (const auto& label : w["profile_a"])
        witness.profile_a.push_back(game.action_index(0, label.get<std::string>()));
      for (const auto& label : w["profile_b"])
        witness.profile_b.push_back(game.action_index(0, label.get<std::string>()));
      ok &= expect(witness_violates(game, witness), "reported witness re-verifies");
    }

    auto simulate =
        run_cli("simulate --builtin standard --trials 100000 --seed 7 --format machine");
    ok &= expect(simulate.exit_code == 0, "simulate exit 0");
    json simulate_report = json::parse(simulate.output);
    const auto& heads = simulate_report["infosets"]["I"]["events"]["Heads/1"];
    Rational fraction = Rational::parse(heads["fraction"].get<std::string>());
    ok &= expect((fraction - Rational(1, 3)).abs() <= Rational(1, 100),
                 "simulated Heads fraction near 1/3");
    std::uint64_t count = heads["count"].get<std::uint64_t>();
    std::uint64_t total = simulate_report["infosets"]["I"]["total"].get<std::uint64_t>();
    ok &= expect(Rational(static_cast<long long>(count), static_cast<long long>(total)) ==
                     fraction,
                 "fraction equals count ratio");

    ok &= expect(run_cli("evaluate --builtin shaw --policy all:Left --trials 3").exit_code == 3,
                 "irrelevant option rejected with exit 3");
    ok &= expect(run_cli("validate --builtin no-such-game").exit_code == 1,
                 "unknown builtin exits 1");
    return ok;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
