#include <doctest.h>

#include <random>

#include "permaut/error.hpp"
#include "permaut/permutation.hpp"
#include "test_support.hpp"

using namespace permaut;

namespace {

Permutation random_permutation(std::mt19937& rng, int k) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

unsigned factorial(int k) { return k <= 1 ? 1U : static_cast<unsigned>(k) * factorial(k - 1); }

}  // namespace

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_NOTHROW(Permutation({2, 3, 1}));
}

TEST_CASE("compose follows application order") {
  const auto c3 = Permutation::cycle(3, {1, 2, 3});
  const auto t12 = Permutation::cycle(3, {1, 2});
  // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
  CHECK(compose(c3, t12) == Permutation({1, 3, 2}));
  CHECK(compose(c3, t12).to_cycle_string() == "(2 3)");
  CHECK(compose(c3, Permutation::identity(3)) == c3);
  const auto t2 = Permutation::cycle(2, {1, 2});
  CHECK(compose(t2, t2).is_identity());
  CHECK_THROWS_AS(compose(c3, t2), Error);
  try {
    compose(c3, t2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(4)).is_identity());
  CHECK(inverse(Permutation::cycle(3, {1, 2, 3})) == Permutation::cycle(3, {1, 3, 2}));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_permutation(rng, 1 + trial % 7);
    CHECK(inverse(inverse(p)) == p);
    CHECK(compose(p, inverse(p)).is_identity());
  }
}

TEST_CASE("group laws on random samples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 6;
    const auto x = random_permutation(rng, k);
    const auto y = random_permutation(rng, k);
    const auto z = random_permutation(rng, k);
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(compose(Permutation::identity(k), x) == x);
    CHECK(compose(inverse(x), x).is_identity());
  }
}

TEST_CASE("cycle notation round trip") {
  CHECK(Permutation::identity(5).to_cycle_string() == "id");
  const auto p = compose(Permutation::cycle(6, {1, 2, 3}), Permutation::cycle(6, {5, 6}));
  CHECK(p.to_cycle_string() == "(1 2 3)(5 6)");
  CHECK(parse_cycles("(1 2 3)(5 6)", 6) == p);
  CHECK(parse_cycles("id", 3).is_identity());
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), Error);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), Error);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = random_permutation(rng, 1 + trial % 8);
    CHECK(parse_cycles(q.to_cycle_string(), q.degree()) == q);
  }
}

TEST_CASE("monoid closure") {
  SUBCASE("cycle and transposition give S_4") {
    const Permutation gens[] = {Permutation::cycle(4, {1, 2, 3, 4}), Permutation::cycle(4, {1, 2})};
    const auto s4 = generated_monoid_closure(gens, 4);
    CHECK(s4.size() == 24);
    CHECK(s4.closed());
  }
  SUBCASE("identity alone") {
    const Permutation gens[] = {Permutation::identity(3)};
    const auto g = generated_monoid_closure(gens, 3);
    CHECK(g.size() == 1);
    CHECK(g.contains(Permutation::identity(3)));
  }
  SUBCASE("powers of a 3-cycle") {
    const Permutation gens[] = {Permutation::cycle(3, {1, 2, 3})};
    const auto g = generated_monoid_closure(gens, 3);
    CHECK(g.size() == 3);
    CHECK(g.contains(Permutation::cycle(3, {1, 3, 2})));
  }
  SUBCASE("cap") {
    const Permutation gens[] = {Permutation::cycle(5, {1, 2, 3, 4, 5}), Permutation::cycle(5, {1, 2})};
    CHECK_THROWS_AS(generated_monoid_closure(gens, 5, 100), Error);
  }
  SUBCASE("closure contains inverses of random generating sets") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const int k = 2 + trial % 4;
      std::vector<Permutation> gens;
      for (int i = 0; i <= trial % 3; ++i) gens.push_back(random_permutation(rng, k));
      auto g = generated_monoid_closure(gens, k);
      for (const auto& p : g) CHECK(g.contains(inverse(p)));
      CHECK(g.verify_closed());
    }
  }
}

TEST_CASE("symmetric group sizes") {
  for (int k = 1; k <= 6; ++k) CHECK(symmetric_group(k).size() == factorial(k));
}

TEST_CASE("orbits and stabilizers") {
  const auto s4 = symmetric_group(4);
  CHECK(orbit(s4, 1) == std::set<int>{1, 2, 3, 4});
  const PermutationSet trivial(3, {Permutation::identity(3)}, true);
  CHECK(orbit(trivial, 2) == std::set<int>{2});
  CHECK(stabilizer(trivial, 2).size() == 1);
  CHECK(orbit(stabilizer(s4, 4), 1) == std::set<int>{1, 2, 3});

  const auto stab3 = stabilizer(symmetric_group(3), 3);
  CHECK(stab3.elements() ==
        std::set<Permutation>{Permutation::identity(3), Permutation::cycle(3, {1, 2})});

  PermutationSet unverified(3);
  unverified.insert(Permutation::cycle(3, {1, 2}));
  CHECK_THROWS_AS(orbit(unverified, 1), Error);
  CHECK_THROWS_AS(stabilizer(unverified, 1), Error);
  CHECK_THROWS_AS(orbit(s4, 5), Error);
}

TEST_CASE("orbit-stabilizer counts and transitivity of the point stabilizer") {
  for (int k = 1; k <= 5; ++k) {
    const auto sk = symmetric_group(k);
    for (int point = 1; point <= k; ++point) {
      CHECK(sk.size() == orbit(sk, point).size() * stabilizer(sk, point).size());
    }
    const auto stab = stabilizer(sk, k);
    CHECK(stab.size() == factorial(k - 1));
    std::set<int> first_k_minus_1;
    for (int i = 1; i < k; ++i) first_k_minus_1.insert(i);
    for (int i = 1; i < k; ++i) CHECK(orbit(stab, i) == first_k_minus_1);
  }
}

TEST_CASE("adjacent transposition words") {
  CHECK(adjacent_transposition_word(1, 4) == "aaaab");
  CHECK(adjacent_transposition_word(2, 3) == "aaba");
  CHECK(adjacent_transposition_word(3, 4) == "aabaa");
  CHECK_THROWS_AS(adjacent_transposition_word(0, 3), Error);
  CHECK_THROWS_AS(adjacent_transposition_word(3, 3), Error);
  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i < k; ++i) {
      const auto expected = Permutation::cycle(k, {i, i + 1});
      const auto word = adjacent_transposition_word(i, k);
      CHECK(Permutation(testing::ab_action(word, k)) == expected);
      CHECK(evaluate_ab_word(word, k) == expected);
    }
  }
}

TEST_CASE("word_for_permutation realizes every element of S_k") {
  CHECK(word_for_permutation(Permutation::identity(4), 4).empty());
  const auto t12 = Permutation::cycle(3, {1, 2});
  CHECK(Permutation(testing::ab_action(word_for_permutation(t12, 3), 3)) == t12);

  const auto target = Permutation::cycle(4, {1, 3, 2});
  const auto w = word_for_permutation(target, 4);
  CHECK(Permutation(testing::ab_action(w, 4)) == target);
  CHECK(testing::ab_action(w, 4)[3] == 4);

  for (int k = 2; k <= 5; ++k) {
    for (const auto& p : symmetric_group(k)) {
      const auto word = word_for_permutation(p, k);
      CHECK(word.find_first_not_of("ab") == std::string::npos);
      CHECK(Permutation(testing::ab_action(word, k)) == p);
    }
  }
  CHECK_THROWS_AS(word_for_permutation(Permutation::identity(3), 4), Error);
}
