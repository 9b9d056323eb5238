#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "beauty/additivity.hpp"
#include "beauty/analysis.hpp"
#include "beauty/credence.hpp"
#include "beauty/decision.hpp"
#include "beauty/game.hpp"
#include "beauty/io.hpp"

namespace {

using beauty::Policy;
using beauty::Rational;
using beauty::ValidatedGame;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegativeVerdict = 2;
constexpr int kExitUsage = 3;

struct CommonOptions {
  std::string game_file;
  std::string builtin_name;
  std::string credence_rule = "thirder";
  std::string theory = "cdt";
  std::string policy_literal;
  std::string format = "table";
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw beauty::Error("PARSE_ERROR", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

beauty::GameSpec load_source(const CommonOptions& opts) {
  if (!opts.builtin_name.empty()) return beauty::builtin(opts.builtin_name);
  if (!opts.game_file.empty()) return beauty::load_game(read_file(opts.game_file));
  throw beauty::Error("PARSE_ERROR", "no game given: pass a file or --builtin");
}

std::string game_id(const CommonOptions& opts) {
  return opts.builtin_name.empty() ? opts.game_file : opts.builtin_name;
}

beauty::CredenceProfile make_credence(const ValidatedGame& game, const std::string& rule) {
  if (rule == "thirder") return beauty::thirder(game);
  if (rule == "halfer") return beauty::halfer(game);
  if (rule.rfind("custom=", 0) == 0)
    return beauty::custom_from_labels(
        game, beauty::load_weights(read_file(rule.substr(7))));
  throw beauty::Error("UNKNOWN_LABEL",
                      "credence rule must be thirder, halfer or custom=<file>");
}

// Policy literals: "all:<action>" or "<set>=<action>,<set>=<action>".
Policy parse_policy(const ValidatedGame& game, const std::string& literal) {
  if (literal.rfind("all:", 0) == 0)
    return beauty::uniform_policy(game, literal.substr(4));
  std::map<std::string, std::string> assignment;
  std::stringstream stream(literal);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw beauty::Error("PARSE_ERROR", "bad policy literal '" + literal + "'");
    assignment[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return beauty::policy_from_map(game, assignment);
}

std::string policy_str(const ValidatedGame& game, const Policy& policy) {
  std::string out;
  for (const auto& [label, action] : beauty::policy_to_map(game, policy)) {
    if (!out.empty()) out += ",";
    out += label + "=" + action;
  }
  return out;
}

json policy_json(const ValidatedGame& game, const Policy& policy) {
  json out = json::object();
  for (const auto& [label, action] : beauty::policy_to_map(game, policy))
    out[label] = action;
  return out;
}

void emit(const CommonOptions& opts, const json& machine, const std::string& table) {
  if (opts.format == "machine")
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << table;
}

json witness_json(const ValidatedGame& game, const beauty::AdditivityWitness& w) {
  auto profile_labels = [&](const std::vector<int>& profile) {
    json labels = json::array();
    const auto& events = game.realization_events(w.realization);
    for (size_t i = 0; i < profile.size(); ++i)
      labels.push_back(game.infoset(game.event(events[i]).infoset).actions[profile[i]]);
    return labels;
  };
  json out;
  out["realization"] = game.realization(w.realization).id;
  out["position"] = w.position + 1;
  out["profile_a"] = profile_labels(w.profile_a);
  out["profile_b"] = profile_labels(w.profile_b);
  return out;
}

int run_validate(const CommonOptions& opts) {
  beauty::GameSpec spec = load_source(opts);
  auto errors = beauty::check(spec);
  json machine;
  machine["valid"] = errors.empty();
  machine["violations"] = json::array();
  std::string table;
  for (const auto& e : errors) {
    machine["violations"].push_back({{"code", e.code}, {"detail", e.detail}});
    table += e.code + ": " + e.detail + "\n";
  }
  if (errors.empty()) table = "valid\n";
  emit(opts, machine, table);
  return errors.empty() ? kExitOk : kExitError;
}

int run_credence(const CommonOptions& opts) {
  ValidatedGame game = beauty::validate(load_source(opts));
  auto credence = make_credence(game, opts.credence_rule);
  json machine;
  machine["rule"] = credence.rule;
  std::string table;
  for (int i = 0; i < game.infoset_count(); ++i) {
    const std::string& label = game.infoset(i).label;
    table += "information set " + label + "\n";
    json realizations = json::object();
    for (int r = 0; r < game.realization_count(); ++r) {
      realizations[game.realization(r).id] = credence.realization_credence[i][r].str();
      table += "  P(" + game.realization(r).id + "|" + label + ") = " +
               credence.realization_credence[i][r].str() + "\n";
    }
    json events = json::object();
    const auto& members = game.infoset_events(i);
    for (size_t k = 0; k < members.size(); ++k) {
      events[game.event_label(members[k])] = credence.event_credence[i][k].str();
      table += "  P(" + game.event_label(members[k]) + "|" + label + ") = " +
               credence.event_credence[i][k].str() + "\n";
    }
    machine["infosets"][label] = {{"realizations", realizations}, {"events", events}};
  }
  emit(opts, machine, table);
  return kExitOk;
}

int run_decide(const CommonOptions& opts) {
  ValidatedGame game = beauty::validate(load_source(opts));
  auto credence = make_credence(game, opts.credence_rule);
  beauty::Theory theory = beauty::theory_from_name(opts.theory);
  Policy conjecture = parse_policy(game, opts.policy_literal);
  json machine;
  std::string table;
  for (int i = 0; i < game.infoset_count(); ++i) {
    const auto& iset = game.infoset(i);
    table += "information set " + iset.label + "\n";
    json values = json::object();
    for (size_t a = 0; a < iset.actions.size(); ++a) {
      Rational value = beauty::action_value(game, credence, theory, conjecture, i,
                                            static_cast<int>(a));
      values[iset.actions[a]] = value.str();
      table += "  " + iset.actions[a] + " -> " + value.str() + "\n";
    }
    json best = json::array();
    std::string best_table;
    for (int a : beauty::best_response(game, credence, theory, conjecture, i)) {
      best.push_back(iset.actions[a]);
      if (!best_table.empty()) best_table += ", ";
      best_table += iset.actions[a];
    }
    table += "  best response: " + best_table + "\n";
    machine["infosets"][iset.label] = {{"values", values}, {"best", best}};
  }
  emit(opts, machine, table);
  return kExitOk;
}

int run_stable(const CommonOptions& opts) {
  ValidatedGame game = beauty::validate(load_source(opts));
  auto credence = make_credence(game, opts.credence_rule);
  beauty::Theory theory = beauty::theory_from_name(opts.theory);
  auto stable = beauty::stable_policies(game, credence, theory);
  json machine;
  machine["stable"] = json::array();
  std::string table;
  for (const Policy& policy : stable) {
    Rational value = beauty::ex_ante(game, policy);
    machine["stable"].push_back(
        {{"policy", policy_json(game, policy)}, {"ex_ante", value.str()}});
    table += policy_str(game, policy) + "  ex-ante " + value.str() + "\n";
  }
  if (stable.empty()) table = "NO_STABLE_POLICY\n";
  emit(opts, machine, table);
  return kExitOk;
}

int run_evaluate(const CommonOptions& opts) {
  ValidatedGame game = beauty::validate(load_source(opts));
  Policy policy = parse_policy(game, opts.policy_literal);
  Rational value = beauty::ex_ante(game, policy);
  emit(opts, {{"ex_ante", value.str()}}, value.str() + "\n");
  return kExitOk;
}

int run_optimum(const CommonOptions& opts) {
  ValidatedGame game = beauty::validate(load_source(opts));
  auto [value, policies] = beauty::brute_force_optimum(game);
  json machine;
  machine["optimum"] = value.str();
  machine["policies"] = json::array();
  std::string table = "optimum " + value.str() + "\n";
  for (const Policy& policy : policies) {
    machine["policies"].push_back(policy_json(game, policy));
    table += "  " + policy_str(game, policy) + "\n";
  }
  emit(opts, machine, table);
  return kExitOk;
}

int run_check_additive(const CommonOptions& opts) {
  ValidatedGame game = beauty::validate(load_source(opts));
  auto witness = beauty::check_additive(game);
  json machine;
  machine["additive"] = !witness.has_value();
  std::string table;
  if (witness) {
    machine["witness"] = witness_json(game, *witness);
    table = "not additive\nwitness: realization " +
            game.realization(witness->realization).id + ", position " +
            std::to_string(witness->position + 1) + "\n  profile a: " +
            machine["witness"]["profile_a"].dump() + "\n  profile b: " +
            machine["witness"]["profile_b"].dump() + "\n";
  } else {
    table = "additive\n";
  }
  emit(opts, machine, table);
  return witness ? kExitNegativeVerdict : kExitOk;
}

int run_decompose(const CommonOptions& opts, const std::string& defaults_literal) {
  ValidatedGame game = beauty::validate(load_source(opts));
  std::optional<std::vector<int>> defaults;
  if (!defaults_literal.empty()) {
    Policy per_set = parse_policy(game, defaults_literal);
    std::vector<int> per_event(game.event_count());
    for (int v = 0; v < game.event_count(); ++v)
      per_event[v] = per_set[game.event(v).infoset];
    defaults = per_event;
  }
  try {
    beauty::Decomposition decomposition = beauty::decompose(game, defaults);
    json machine;
    std::string table;
    for (int v = 0; v < game.event_count(); ++v) {
      const auto& iset = game.infoset(game.event(v).infoset);
      json actions = json::object();
      table += "event " + game.event_label(v) + "\n";
      for (size_t a = 0; a < iset.actions.size(); ++a) {
        actions[iset.actions[a]] = decomposition.event_payoff[v][a].str();
        table += "  " + iset.actions[a] + " -> " + decomposition.event_payoff[v][a].str() + "\n";
      }
      machine["events"][game.event_label(v)] = actions;
    }
    for (int r = 0; r < game.realization_count(); ++r) {
      machine["constants"][game.realization(r).id] = decomposition.constant[r].str();
      table += "c(" + game.realization(r).id + ") = " + decomposition.constant[r].str() + "\n";
    }
    emit(opts, machine, table);
    return kExitOk;
  } catch (const beauty::Error& e) {
    if (e.code() != "NOT_ADDITIVE") throw;
    emit(opts, {{"additive", false}, {"error", e.what()}}, std::string(e.what()) + "\n");
    return kExitNegativeVerdict;
  }
}

int run_proposition(const CommonOptions& opts) {
  ValidatedGame game = beauty::validate(load_source(opts));
  auto credence = make_credence(game, opts.credence_rule);
  beauty::Theory theory = beauty::theory_from_name(opts.theory);
  auto result = beauty::check_proposition(game, credence, theory);
  json machine;
  machine["game"] = game_id(opts);
  machine["credence"] = credence.rule;
  machine["theory"] = beauty::theory_name(theory);
  machine["verdict"] = beauty::verdict_name(result.verdict);
  std::string table = beauty::verdict_name(result.verdict) + "\n";
  if (result.verdict == beauty::PropositionVerdict::Confirms ||
      result.verdict == beauty::PropositionVerdict::Violates) {
    machine["optimum"] = result.optimum.str();
    machine["stable"] = json::array();
    for (const Policy& policy : result.stable) {
      Rational value = beauty::ex_ante(game, policy);
      machine["stable"].push_back(
          {{"policy", policy_json(game, policy)}, {"ex_ante", value.str()}});
      table += "stable " + policy_str(game, policy) + "  ex-ante " + value.str() + "\n";
    }
    table += "optimum " + result.optimum.str() + "\n";
    if (result.witness) {
      machine["witness"] = policy_json(game, *result.witness);
      table += "witness " + policy_str(game, *result.witness) + "\n";
    }
  }
  emit(opts, machine, table);
  return result.verdict == beauty::PropositionVerdict::Violates ? kExitNegativeVerdict
                                                                : kExitOk;
}

int run_dutchbook(const CommonOptions& opts) {
  ValidatedGame game = beauty::validate(load_source(opts));
  auto credence = make_credence(game, opts.credence_rule);
  beauty::Theory theory = beauty::theory_from_name(opts.theory);
  auto result = beauty::dutch_book_verdict(game, credence, theory);
  json machine;
  machine["verdict"] = beauty::verdict_name(result.verdict);
  std::string table = beauty::verdict_name(result.verdict) + "\n";
  if (result.policy) {
    machine["policy"] = policy_json(game, *result.policy);
    machine["guaranteed_loss"] = result.guaranteed_loss->str();
    table += "policy " + policy_str(game, *result.policy) + "\nguaranteed loss " +
             result.guaranteed_loss->str() + "\n";
  }
  emit(opts, machine, table);
  return result.verdict == beauty::DutchBookVerdict::Vulnerable ? kExitNegativeVerdict
                                                                : kExitOk;
}

int run_simulate(const CommonOptions& opts, std::uint64_t trials, std::uint64_t seed) {
  ValidatedGame game = beauty::validate(load_source(opts));
  auto table_data = beauty::monte_carlo(game, trials, seed);
  json machine;
  machine["trials"] = trials;
  machine["seed"] = seed;
  std::string table;
  for (int i = 0; i < game.infoset_count(); ++i) {
    const std::string& label = game.infoset(i).label;
    table += "information set " + label + "\n";
    json events = json::object();
    const auto& members = game.infoset_events(i);
    for (size_t k = 0; k < members.size(); ++k) {
      Rational fraction = table_data.fraction(i, static_cast<int>(k));
      events[game.event_label(members[k])] = {
          {"count", table_data.counts[i][k]},
          {"fraction", fraction.str()},
      };
      table += "  " + game.event_label(members[k]) + ": " +
               std::to_string(table_data.counts[i][k]) + "/" +
               std::to_string(table_data.totals[i]) + " = " + fraction.str() + "\n";
    }
    machine["infosets"][label] = {{"total", table_data.totals[i]}, {"events", events}};
  }
  emit(opts, machine, table);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision variants of the Sleeping Beauty problem, in exact rationals"};
  app.require_subcommand(1);

  auto opts = std::make_shared<CommonOptions>();
  auto add_game_source = [&](CLI::App* cmd) {
    auto* file = cmd->add_option("game", opts->game_file, "game file (canonical JSON)");
    auto* name = cmd->add_option("--builtin", opts->builtin_name, "builtin game name");
    file->excludes(name);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"table", "machine"}));
  };
  auto add_credence = [&](CLI::App* cmd) {
    cmd->add_option("--credence", opts->credence_rule,
                    "credence rule: thirder, halfer or custom=<file>");
  };
  auto add_theory = [&](CLI::App* cmd) {
    cmd->add_option("--dt", opts->theory, "decision theory: cdt or edt")
        ->check(CLI::IsMember({"cdt", "edt"}));
  };

  int exit_code = kExitOk;
  auto wrap = [&](auto&& fn) {
    return [&exit_code, fn] { exit_code = fn(); };
  };

  auto* cmd_validate = app.add_subcommand("validate", "check every game invariant");
  add_game_source(cmd_validate);
  add_format(cmd_validate);
  cmd_validate->callback(wrap([opts] { return run_validate(*opts); }));

  auto* cmd_credence = app.add_subcommand("credence", "print the credence profile");
  add_game_source(cmd_credence);
  add_format(cmd_credence);
  add_credence(cmd_credence);
  cmd_credence->callback(wrap([opts] { return run_credence(*opts); }));

  auto* cmd_decide =
      app.add_subcommand("decide", "action values and best responses per information set");
  add_game_source(cmd_decide);
  add_format(cmd_decide);
  add_credence(cmd_decide);
  add_theory(cmd_decide);
  cmd_decide->add_option("--policy", opts->policy_literal, "conjectured policy")->required();
  cmd_decide->callback(wrap([opts] { return run_decide(*opts); }));

  auto* cmd_stable = app.add_subcommand("stable", "all self-supporting uniform policies");
  add_game_source(cmd_stable);
  add_format(cmd_stable);
  add_credence(cmd_stable);
  add_theory(cmd_stable);
  cmd_stable->callback(wrap([opts] { return run_stable(*opts); }));

  auto* cmd_evaluate = app.add_subcommand("evaluate", "ex ante value of a policy");
  add_game_source(cmd_evaluate);
  add_format(cmd_evaluate);
  cmd_evaluate->add_option("--policy", opts->policy_literal, "policy to evaluate")->required();
  cmd_evaluate->callback(wrap([opts] { return run_evaluate(*opts); }));

  auto* cmd_optimum = app.add_subcommand("optimum", "brute-force ex ante optimum");
  add_game_source(cmd_optimum);
  add_format(cmd_optimum);
  cmd_optimum->callback(wrap([opts] { return run_optimum(*opts); }));

  auto* cmd_additive = app.add_subcommand("check-additive", "payoff additivity verdict");
  add_game_source(cmd_additive);
  add_format(cmd_additive);
  cmd_additive->callback(wrap([opts] { return run_check_additive(*opts); }));

  auto defaults_literal = std::make_shared<std::string>();
  auto* cmd_decompose =
      app.add_subcommand("decompose", "per-event payoffs and per-realization constants");
  add_game_source(cmd_decompose);
  add_format(cmd_decompose);
  cmd_decompose->add_option("--defaults", *defaults_literal,
                            "default actions as a policy literal");
  cmd_decompose->callback(
      wrap([opts, defaults_literal] { return run_decompose(*opts, *defaults_literal); }));

  auto* cmd_proposition =
      app.add_subcommand("proposition", "do stable policies reach the ex ante optimum?");
  add_game_source(cmd_proposition);
  add_format(cmd_proposition);
  add_credence(cmd_proposition);
  add_theory(cmd_proposition);
  cmd_proposition->callback(wrap([opts] { return run_proposition(*opts); }));

  auto* cmd_dutchbook = app.add_subcommand("dutchbook", "sure-loss verdict for bet games");
  add_game_source(cmd_dutchbook);
  add_format(cmd_dutchbook);
  add_credence(cmd_dutchbook);
  add_theory(cmd_dutchbook);
  cmd_dutchbook->callback(wrap([opts] { return run_dutchbook(*opts); }));

  auto trials = std::make_shared<std::uint64_t>(100000);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto* cmd_simulate = app.add_subcommand("simulate", "seeded awakening-frequency simulation");
  add_game_source(cmd_simulate);
  add_format(cmd_simulate);
  cmd_simulate->add_option("--trials", *trials, "number of simulated realizations");
  cmd_simulate->add_option("--seed", *seed, "random seed");
  cmd_simulate->callback(
      wrap([opts, trials, seed] { return run_simulate(*opts, *trials, *seed); }));

  auto params = std::make_shared<beauty::GeneratorParams>();
  auto* cmd_generate = app.add_subcommand("generate", "emit a random game (canonical JSON)");
  cmd_generate->add_option("--seed", params->seed, "random seed");
  cmd_generate->add_flag("--additive", params->additive, "additive by construction");
  cmd_generate->add_option("--max-realizations", params->max_realizations)->check(CLI::Range(1, 4));
  cmd_generate->add_option("--max-awakenings", params->max_awakenings)->check(CLI::Range(1, 3));
  cmd_generate->add_option("--max-infosets", params->max_infosets)->check(CLI::Range(1, 3));
  cmd_generate->add_option("--max-actions", params->max_actions)->check(CLI::Range(1, 3));
  cmd_generate->callback(wrap([params] {
    std::cout << beauty::serialize_game(beauty::random_game(*params)) << "\n";
    return kExitOk;
  }));

  auto* cmd_list = app.add_subcommand("list-builtins", "names of the built-in games");
  cmd_list->callback(wrap([] {
    for (const auto& name : beauty::builtin_names()) std::cout << name << "\n";
    return kExitOk;
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const beauty::ValidationFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const beauty::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  return exit_code;
}
