#include <functional>

#include "beauty/game.hpp"

namespace beauty {

namespace {

// Expands a payoff rule over every profile of `positions` binary
// Left/Right choices.
std::vector<PayoffEntry> expand_left_right(
    int positions, const std::function<Rational(const std::vector<bool>&)>& rule) {
  std::vector<PayoffEntry> entries;
  for (int mask = 0; mask < (1 << positions); ++mask) {
    std::vector<bool> right(positions);
    std::vector<std::string> profile(positions);
    for (int i = 0; i < positions; ++i) {
      right[i] = (mask >> (positions - 1 - i)) & 1;
      profile[i] = right[i] ? "Right" : "Left";
    }
    entries.push_back({profile, rule(right)});
  }
  return entries;
}

int count_right(const std::vector<bool>& right) {
  int count = 0;
  for (bool r : right) count += r ? 1 : 0;
  return count;
}

// Three Awakenings payoff: by the number of Right presses across the three
// days, 0 -> 200, 1 -> 300, 2 -> 0, 3 -> 100.
Rational three_awakenings_rule(const std::vector<bool>& right) {
  switch (count_right(right)) {
    case 0: return 200;
    case 1: return 300;
    case 2: return 0;
    default: return 100;
  }
}

GameSpec make_standard() {
  GameSpec spec;
  spec.infosets = {{"I", {"wait"}, "", std::nullopt}};
  spec.realizations = {{"Heads", Rational(1, 2), {"I"}},
                       {"Tails", Rational(1, 2), {"I", "I"}}};
  spec.payoffs["Heads"] = {{{"wait"}, 0}};
  spec.payoffs["Tails"] = {{{"wait", "wait"}, 0}};
  return spec;
}

GameSpec make_shaw() {
  GameSpec spec;
  spec.infosets = {{"I", {"Left", "Right"}, "", std::nullopt}};
  spec.realizations = {{"Heads", Rational(1, 2), {"I"}},
                       {"Tails", Rational(1, 2), {"I", "I", "I", "I"}}};
  spec.payoffs["Heads"] = {{{"Left"}, 400}, {{"Right"}, 200}};
  // Tails, days Monday..Thursday: all Left -> 100, all Right -> 200,
  // Left on Monday and Right on at least one other day -> 200,
  // Right on Monday and Left on at least one other day -> 100.
  spec.payoffs["Tails"] = expand_left_right(4, [](const std::vector<bool>& right) {
    if (!right[0]) return Rational(count_right(right) == 0 ? 100 : 200);
    return Rational(count_right(right) == 4 ? 200 : 100);
  });
  return spec;
}

GameSpec make_three_awakenings() {
  GameSpec spec;
  spec.infosets = {{"I", {"Left", "Right"}, "", std::nullopt}};
  spec.realizations = {{"Only", Rational(1), {"I", "I", "I"}}};
  spec.payoffs["Only"] = expand_left_right(3, three_awakenings_rule);
  return spec;
}

GameSpec make_three_awakenings_coin() {
  GameSpec spec;
  spec.infosets = {{"I", {"Left", "Right"}, "", std::nullopt}};
  spec.realizations = {{"Heads", Rational(99, 100), {"I", "I", "I"}},
                       {"Tails", Rational(1, 100), {"I", "I", "I"}}};
  spec.payoffs["Heads"] = expand_left_right(3, three_awakenings_rule);
  // Tails pays 100 for each Left press.
  spec.payoffs["Tails"] = expand_left_right(3, [](const std::vector<bool>& right) {
    return Rational(100 * (3 - count_right(right)));
  });
  return spec;
}

// Heads (one awakening): Left -> heads_left, Right -> 0.
// Tails (two awakenings): each awakening pays 2 for Right, 0 for Left.
GameSpec make_counterexample(long long heads_left) {
  GameSpec spec;
  spec.infosets = {{"I", {"Left", "Right"}, "", std::nullopt}};
  spec.realizations = {{"Heads", Rational(1, 2), {"I"}},
                       {"Tails", Rational(1, 2), {"I", "I"}}};
  spec.payoffs["Heads"] = {{{"Left"}, heads_left}, {{"Right"}, 0}};
  spec.payoffs["Tails"] = expand_left_right(2, [](const std::vector<bool>& right) {
    return Rational(2 * count_right(right));
  });
  return spec;
}

// Three-sided coin: Heads awakens once in I1, Tails once in I2, Edge once in
// each. Heads/Tails pay 3 for Left and 0 for Right; Edge pays 2 per Right.
// I1 and I2 are fully symmetric and share one evidence class.
GameSpec make_three_sided(bool with_i3) {
  GameSpec spec;
  spec.infosets = {{"I1", {"Left", "Right"}, "sides", std::nullopt},
                   {"I2", {"Left", "Right"}, "sides", std::nullopt}};
  if (with_i3) spec.infosets.push_back({"I3", {"wait"}, "", std::nullopt});

  Rational third(1, 3);
  if (with_i3) {
    spec.realizations = {{"Heads", third, {"I1", "I3"}},
                         {"Tails", third, {"I2", "I3"}},
                         {"Edge", third, {"I1", "I2"}}};
    spec.payoffs["Heads"] = {{{"Left", "wait"}, 3}, {{"Right", "wait"}, 0}};
    spec.payoffs["Tails"] = {{{"Left", "wait"}, 3}, {{"Right", "wait"}, 0}};
  } else {
    spec.realizations = {{"Heads", third, {"I1"}},
                         {"Tails", third, {"I2"}},
                         {"Edge", third, {"I1", "I2"}}};
    spec.payoffs["Heads"] = {{{"Left"}, 3}, {{"Right"}, 0}};
    spec.payoffs["Tails"] = {{{"Left"}, 3}, {{"Right"}, 0}};
  }
  spec.payoffs["Edge"] = expand_left_right(2, [](const std::vector<bool>& right) {
    return Rational(2 * count_right(right));
  });
  return spec;
}

}  // namespace

GameSpec builtin(const std::string& name) {
  if (name == "standard") return make_standard();
  if (name == "shaw") return make_shaw();
  if (name == "three-awakenings") return make_three_awakenings();
  if (name == "three-awakenings-coin") return make_three_awakenings_coin();
  if (name == "halfer-counterexample") return make_counterexample(3);
  if (name == "thirder-edt-counterexample") return make_counterexample(5);
  if (name == "three-sided-edt") return make_three_sided(false);
  if (name == "three-sided-edt-i3") return make_three_sided(true);
  throw Error("UNKNOWN_BUILTIN", "no builtin game named '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"standard",
          "shaw",
          "three-awakenings",
          "three-awakenings-coin",
          "halfer-counterexample",
          "three-sided-edt",
          "three-sided-edt-i3",
          "thirder-edt-counterexample"};
}

}  // namespace beauty
