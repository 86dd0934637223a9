#include <doctest.h>

#include <random>

#include "permaut/dfa.hpp"
#include "permaut/error.hpp"
#include "permaut/witnesses.hpp"
#include "test_support.hpp"

using namespace permaut;
using permaut::testing::all_words;
using permaut::testing::simulate;

namespace {

Dfa empty_language_dfa() { return Dfa(1, "ab", {{1}, {1}}, 1, {}); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("Dfa validates its invariants") {
  CHECK_THROWS_AS(Dfa(2, "a", {{1, 3}}, 1, {}), Error);
  CHECK_THROWS_AS(Dfa(2, "a", {{1}}, 1, {}), Error);
  CHECK_THROWS_AS(Dfa(2, "aa", {{1, 2}, {1, 2}}, 1, {}), Error);
  CHECK_THROWS_AS(Dfa(2, "a", {{1, 2}}, 3, {}), Error);
  CHECK_THROWS_AS(Dfa(2, "a", {{1, 2}}, 1, {0}), Error);
  CHECK_THROWS_AS(Dfa(0, "", {}, 1, {}), Error);
}

TEST_CASE("run") {
  const Dfa a12 = quotient_source({1, 1, 2});
  CHECK(run(a12, 1, "ab") == 1);  // 1 -a-> 2 -b-> 1
  CHECK(run(a12, 2, "") == 2);
  CHECK(run(unary_cycle(2), 1, "aaa") == 1);
  CHECK(kind_of([&] { run(a12, 1, "ax"); }) == ErrorKind::UnknownLetter);
}

TEST_CASE("accepts") {
  const Dfa b11 = quotient_divisor({1, 1, 1});
  CHECK(accepts(b11, ""));
  CHECK_FALSE(accepts(b11, "c"));
  for (const auto& w : all_words("ab", 4)) CHECK_FALSE(accepts(empty_language_dfa(), w));
  CHECK(kind_of([&] { accepts(b11, "z"); }) == ErrorKind::UnknownLetter);
}

TEST_CASE("is_permutation_automaton") {
  CHECK(is_permutation_automaton(quotient_source({2, 1, 3})));
  CHECK(is_permutation_automaton(unary_cycle(5)));
  CHECK_FALSE(is_permutation_automaton(Dfa(3, "ab", {{2, 3, 1}, {1, 1, 3}}, 1, {1})));
}

TEST_CASE("accessible_part") {
  SUBCASE("fixed point on accessible input, canonical numbering") {
    // Initial state 3; BFS order 3, 1, 2.
    const Dfa x(3, "a", {{2, 3, 1}}, 3, {2});
    const Dfa acc = accessible_part(x);
    CHECK(acc == Dfa(3, "a", {{2, 3, 1}}, 1, {3}));
    CHECK(accessible_part(acc) == acc);
  }
  SUBCASE("unreachable second cycle is dropped") {
    // Orbits {1, 2} and {3, 4, 5} of a single letter.
    const Dfa two_cycles(5, "a", {{2, 1, 4, 5, 3}}, 1, {2, 4});
    const Dfa acc = accessible_part(two_cycles);
    CHECK(acc.state_count() == 2);
    CHECK(acc == Dfa(2, "a", {{2, 1}}, 1, {2}));
    CHECK(is_permutation_automaton(acc));
  }
  SUBCASE("permutation automata stay permutation automata") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
      const auto p = testing::random_permutation_dfa(rng, 1 + trial % 8, trial % 2 ? "ab" : "abc");
      const auto acc = accessible_part(p);
      CHECK(is_permutation_automaton(acc));
      CHECK(equivalent(p, acc));
    }
    for (int m = 1; m <= 3; ++m) {
      for (int alpha = m; alpha <= 5; ++alpha) {
        CHECK(is_permutation_automaton(accessible_part(quotient_source({m, 1, alpha}))));
        CHECK(is_permutation_automaton(accessible_part(quotient_divisor({m, m, alpha}))));
      }
    }
  }
}

TEST_CASE("minimize") {
  SUBCASE("witness sources are already minimal") {
    for (int m = 1; m <= 3; ++m) {
      for (int alpha = m; alpha <= 5; ++alpha) {
        const Dfa a = quotient_source({m, 1, alpha});
        CHECK(isomorphic(minimize(a), a));
      }
    }
  }
  SUBCASE("duplicated state merges") {
    // State 4 copies the outgoing transitions of state 2 and takes over the
    // b-edge out of state 1.
    const Dfa base(3, "ab", {{2, 3, 1}, {2, 2, 3}}, 1, {2});
    const Dfa cloned(4, "ab", {{2, 3, 1, 3}, {4, 2, 3, 2}}, 1, {2, 4});
    CHECK(testing::is_minimal_by_table(base));
    const Dfa min = minimize(cloned);
    CHECK(min.state_count() == cloned.state_count() - 1);
    CHECK(isomorphic(min, base));
    for (const auto& w : all_words("ab", 2 * cloned.state_count())) {
      CHECK(simulate(cloned, w) == simulate(min, w));
    }
  }
  SUBCASE("empty language") {
    const Dfa sink(1, "a", {{1}}, 1, {});
    CHECK(minimize(sink) == sink);
    const Dfa bigger(3, "ab", {{2, 3, 1}, {3, 3, 1}}, 2, {});
    CHECK(minimize(bigger) == Dfa(1, "ab", {{1}, {1}}, 1, {}));
  }
}

TEST_CASE("equivalent") {
  const Dfa c1 = unary_cycle(1);
  const Dfa c2 = unary_cycle(2);
  CHECK(equivalent(c1, c1));
  // Both accept the empty word; "a" is accepted by C_2 only.
  CHECK(simulate(c1, ""));
  CHECK(simulate(c2, ""));
  CHECK_FALSE(simulate(c1, "a"));
  CHECK(simulate(c2, "a"));
  CHECK_FALSE(equivalent(c1, c2));
  CHECK(kind_of([&] { equivalent(c1, quotient_source({1, 1, 1})); }) ==
        ErrorKind::AlphabetMismatch);
}

TEST_CASE("asc") {
  for (int m = 1; m <= 3; ++m) {
    for (int alpha = m; alpha <= 5; ++alpha) CHECK(asc(quotient_source({m, 1, alpha})) == m);
  }
  for (int t = 0; t <= 6; ++t) CHECK(asc(unary_cycle(t)) == t);
  CHECK(asc(empty_language_dfa()) == 0);
}

TEST_CASE("induced_permutation") {
  const Dfa a12 = quotient_source({1, 1, 2});
  CHECK(induced_permutation(a12, "c").is_identity());
  CHECK(induced_permutation(a12, "").is_identity());
  CHECK(induced_permutation(a12, "a") == Permutation::cycle(3, {1, 2, 3}));
  CHECK(induced_permutation(a12, "aaba") == Permutation::cycle(3, {2, 3}));
  const Dfa not_perm(2, "a", {{1, 1}}, 1, {});
  CHECK(kind_of([&] { induced_permutation(not_perm, "a"); }) == ErrorKind::NotPermutation);
  CHECK(kind_of([&] { induced_permutation(a12, "d"); }) == ErrorKind::UnknownLetter);
}

TEST_CASE("induced permutations are a homomorphism") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string alphabet = trial % 2 ? "ab" : "abc";
    const Dfa p = testing::random_permutation_dfa(rng, 1 + trial % 7, alphabet);
    std::uniform_int_distribution<std::size_t> letter(0, alphabet.size() - 1);
    std::string u, v;
    for (int i = len(rng); i > 0; --i) u += alphabet[letter(rng)];
    for (int i = len(rng); i > 0; --i) v += alphabet[letter(rng)];
    CHECK(induced_permutation(p, u + v) ==
          compose(induced_permutation(p, u), induced_permutation(p, v)));
    for (State q = 1; q <= p.state_count(); ++q) {
      CHECK(induced_permutation(p, u).image(q) == run(p, q, u));
    }
  }
}

TEST_CASE("minimization properties on random DFAs") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    const std::string alphabet = std::string("abc").substr(0, 1 + trial % 3);
    const int states = 1 + trial % (alphabet.size() == 3 ? 6 : 12);
    const Dfa x = trial % 3 == 0 ? testing::random_permutation_dfa(rng, states, alphabet)
                                 : testing::random_dfa(rng, states, alphabet);
    const Dfa min = minimize(x);
    CHECK(equivalent(x, min));
    CHECK(minimize(min) == min);
    CHECK(testing::is_minimal_by_table(min));
    CHECK(asc(x) == asc(min));
    bool reaches_final = false;
    for (State q : testing::reachable_states(x)) reaches_final |= x.finals().contains(q);
    CHECK((asc(x) == 0) == !reaches_final);
    for (const auto& w : all_words(alphabet, x.state_count() + 2)) {
      CHECK(simulate(x, w) == simulate(min, w));
    }
  }
}
