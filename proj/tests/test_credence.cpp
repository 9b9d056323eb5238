#include "doctest.h"

#include "beauty/analysis.hpp"
#include "beauty/credence.hpp"
#include "beauty/game.hpp"

using namespace beauty;

namespace {

void check_profile_invariants(const ValidatedGame& game, const CredenceProfile& profile) {
  for (int i = 0; i < game.infoset_count(); ++i) {
    Rational realization_sum(0);
    for (int r = 0; r < game.realization_count(); ++r) {
      realization_sum += profile.realization_credence[i][r];
      if (game.nu(i, r) == 0) CHECK(profile.realization_credence[i][r] == Rational(0));
    }
    CHECK(realization_sum == Rational(1));

    Rational event_sum(0);
    for (const auto& credence : profile.event_credence[i]) event_sum += credence;
    CHECK(event_sum == Rational(1));

    // Consistency: P(r|I) is the sum of P(v|I) over the set's events of r.
    const auto& events = game.infoset_events(i);
    for (int r = 0; r < game.realization_count(); ++r) {
      Rational from_events(0);
      for (size_t k = 0; k < events.size(); ++k)
        if (game.event(events[k]).realization == r) from_events += profile.event_credence[i][k];
      CHECK(from_events == profile.realization_credence[i][r]);
    }
  }
}

}  // namespace

TEST_CASE("nu counts awakenings per set and realization") {
  auto standard = validate(builtin("standard"));
  CHECK(nu(standard, "I", "Tails") == 2);
  CHECK(nu(standard, "I", "Heads") == 1);

  auto shaw = validate(builtin("shaw"));
  CHECK(nu(shaw, "I", "Tails") == 4);

  auto sides = validate(builtin("three-sided-edt"));
  CHECK(nu(sides, "I1", "Tails") == 0);
  CHECK(nu(sides, "I1", "Edge") == 1);

  CHECK_THROWS_AS(nu(standard, "J", "Heads"), Error);
  CHECK_THROWS_AS(nu(standard, "I", "Sideways"), Error);
}

TEST_CASE("thirder credences on the built-in games") {
  auto standard = validate(builtin("standard"));
  auto profile = thirder(standard);
  CHECK(profile.realization_credence[0][standard.realization_index("Heads")] == Rational(1, 3));

  auto shaw = validate(builtin("shaw"));
  profile = thirder(shaw);
  CHECK(profile.realization_credence[0][shaw.realization_index("Heads")] == Rational(1, 5));
  for (const auto& credence : profile.event_credence[0]) CHECK(credence == Rational(1, 5));
  CHECK(profile.realization_credence[0][shaw.realization_index("Tails")] == Rational(4, 5));

  auto coin = validate(builtin("three-awakenings-coin"));
  profile = thirder(coin);
  CHECK(profile.realization_credence[0][coin.realization_index("Heads")] == Rational(99, 100));

  auto counter = validate(builtin("halfer-counterexample"));
  profile = thirder(counter);
  CHECK(profile.realization_credence[0][counter.realization_index("Heads")] == Rational(1, 3));
  for (const auto& credence : profile.event_credence[0]) CHECK(credence == Rational(1, 3));
}

TEST_CASE("halfer credences on the built-in games") {
  auto standard = validate(builtin("standard"));
  auto profile = halfer(standard);
  CHECK(profile.realization_credence[0][standard.realization_index("Heads")] == Rational(1, 2));

  auto counter = validate(builtin("halfer-counterexample"));
  profile = halfer(counter);
  // Events listed per set in declaration order: Heads/1, Tails/1, Tails/2.
  CHECK(profile.event_credence[0][0] == Rational(1, 2));
  CHECK(profile.event_credence[0][1] == Rational(1, 4));
  CHECK(profile.event_credence[0][2] == Rational(1, 4));

  auto sides = validate(builtin("three-sided-edt"));
  profile = halfer(sides);
  int i1 = sides.infoset_index("I1");
  CHECK(profile.realization_credence[i1][sides.realization_index("Heads")] == Rational(1, 2));
  CHECK(profile.realization_credence[i1][sides.realization_index("Edge")] == Rational(1, 2));
  CHECK(profile.realization_credence[i1][sides.realization_index("Tails")] == Rational(0));

  auto coin = validate(builtin("three-awakenings-coin"));
  profile = halfer(coin);
  CHECK(profile.realization_credence[0][coin.realization_index("Heads")] == Rational(99, 100));
}

TEST_CASE("halfer and thirder agree when nu is constant across compatible realizations") {
  auto coin = validate(builtin("three-awakenings-coin"));
  auto h = halfer(coin);
  auto t = thirder(coin);
  CHECK(h.realization_credence == t.realization_credence);
  CHECK(h.event_credence == t.event_credence);
}

TEST_CASE("custom credences: inversion, uniformity, thirder recovery") {
  auto coin = validate(builtin("three-awakenings-coin"));

  std::map<int, Rational> inverted;
  for (int v = 0; v < coin.event_count(); ++v)
    inverted[v] = coin.event(v).realization == coin.realization_index("Heads")
                      ? Rational(1, 100)
                      : Rational(99, 100);
  auto profile = custom(coin, inverted);
  CHECK(profile.realization_credence[0][coin.realization_index("Heads")] == Rational(1, 100));
  CHECK(profile.realization_credence[0][coin.realization_index("Tails")] == Rational(99, 100));

  std::map<int, Rational> equal;
  for (int v = 0; v < coin.event_count(); ++v) equal[v] = Rational(1);
  profile = custom(coin, equal);
  for (const auto& credence : profile.event_credence[0]) CHECK(credence == Rational(1, 6));

  // weight(v) = P(r(v)) recovers the thirder profile.
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto game = validate(builtin(name));
    std::map<int, Rational> weights;
    for (int v = 0; v < game.event_count(); ++v)
      weights[v] = game.realization(game.event(v).realization).probability;
    auto recovered = custom(game, weights);
    auto expected = thirder(game);
    CHECK(recovered.realization_credence == expected.realization_credence);
    CHECK(recovered.event_credence == expected.event_credence);
  }
}

TEST_CASE("custom rejects zero mass and negative weights") {
  auto standard = validate(builtin("standard"));
  CHECK_THROWS_WITH_AS(custom(standard, {}), doctest::Contains("ZERO_MASS"), Error);
  CHECK_THROWS_WITH_AS(custom(standard, {{0, Rational(-1)}}),
                       doctest::Contains("NEGATIVE_WEIGHT"), Error);
}

TEST_CASE("custom_from_labels keys events as realization-id/index") {
  auto counter = validate(builtin("halfer-counterexample"));
  std::map<std::string, Rational> weights = {
      {"Heads/1", Rational(2)}, {"Tails/1", Rational(1)}, {"Tails/2", Rational(1)}};
  auto profile = custom_from_labels(counter, weights);
  CHECK(profile.realization_credence[0][counter.realization_index("Heads")] == Rational(1, 2));
  CHECK_THROWS_AS(custom_from_labels(counter, {{"Tails/9", Rational(1)}}), Error);
}

TEST_CASE("profile invariants hold for all rules on all builtins") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto game = validate(builtin(name));
    check_profile_invariants(game, thirder(game));
    check_profile_invariants(game, halfer(game));
  }
}

TEST_CASE("profile invariants and the thirder identity on random games") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GeneratorParams params;
    params.seed = seed;
    params.additive = (seed % 2) == 0;
    auto game = validate(random_game(params));
    auto t = thirder(game);
    auto h = halfer(game);
    check_profile_invariants(game, t);
    check_profile_invariants(game, h);

    std::map<int, Rational> weights;
    for (int v = 0; v < game.event_count(); ++v)
      weights[v] = Rational(1 + (v * 7) % 5, 3);
    check_profile_invariants(game, custom(game, weights));

    // P(v|I) * sum_r' P(r') nu(I,r') = P(r(v)), exactly.
    for (int i = 0; i < game.infoset_count(); ++i) {
      Rational denom(0);
      for (int r = 0; r < game.realization_count(); ++r)
        denom += game.realization(r).probability * Rational(game.nu(i, r));
      const auto& events = game.infoset_events(i);
      for (size_t k = 0; k < events.size(); ++k)
        CHECK(t.event_credence[i][k] * denom ==
              game.realization(game.event(events[k]).realization).probability);
    }
  }
}

TEST_CASE("empty information set has no credence profile") {
  GameSpec spec = builtin("standard");
  spec.infosets.push_back({"J", {"wait"}, "", std::nullopt});
  auto game = validate(spec);
  CHECK_THROWS_WITH_AS(thirder(game), doctest::Contains("EMPTY_INFOSET"), Error);
  CHECK_THROWS_WITH_AS(halfer(game), doctest::Contains("EMPTY_INFOSET"), Error);
}
