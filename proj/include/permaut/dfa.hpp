#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "permaut/permutation.hpp"

namespace permaut {

using State = int;          // 1-based
using Word = std::string;   // one char per letter

/// Complete deterministic finite automaton over single-character letters.
///
/// States are 1..state_count(). Each letter owns an image array of length
/// state_count() holding the successor of every state. The constructor
/// validates totality, ranges and distinct letters, so a Dfa value is always
/// well formed.
class Dfa {
public:
  Dfa(int state_count, std::string alphabet, std::vector<std::vector<State>> transitions,
      State initial, std::set<State> finals);

  int state_count() const noexcept { return state_count_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  int letter_count() const noexcept { return static_cast<int>(alphabet_.size()); }
  State initial() const noexcept { return initial_; }
  const std::set<State>& finals() const noexcept { return finals_; }
  bool is_final(State q) const { return is_final_[static_cast<std::size_t>(q - 1)]; }

  /// Index of `letter` in the alphabet; throws UnknownLetter.
  int letter_index(char letter) const;

  /// Image array of the letter at `letter_index`.
  const std::vector<State>& column(int letter_index) const {
    return transitions_[static_cast<std::size_t>(letter_index)];
  }
  const std::vector<std::vector<State>>& transitions() const noexcept { return transitions_; }

  State step(State q, int letter_index) const {
    return transitions_[static_cast<std::size_t>(letter_index)][static_cast<std::size_t>(q - 1)];
  }

  /// Same automaton with the final set replaced.
  Dfa with_finals(std::set<State> finals) const;

  bool operator==(const Dfa&) const = default;

private:
  int state_count_;
  std::string alphabet_;
  std::vector<std::vector<State>> transitions_;
  State initial_;
  std::set<State> finals_;
  std::vector<bool> is_final_;
};

State run(const Dfa& dfa, State from, std::string_view word);
bool accepts(const Dfa& dfa, std::string_view word);

bool is_permutation_automaton(const Dfa& dfa);

/// States reachable from the initial state, renumbered breadth-first from the
/// initial state with letters explored in alphabet order.
Dfa accessible_part(const Dfa& dfa);

/// Canonical minimal DFA of L(dfa) (Moore partition refinement followed by
/// the breadth-first renumbering of accessible_part). The empty language
/// minimizes to a single nonfinal state.
Dfa minimize(const Dfa& dfa);

/// L(x) == L(y), decided by reachability of a disagreeing pair in the
/// product automaton. Throws AlphabetMismatch.
bool equivalent(const Dfa& x, const Dfa& y);

/// True iff the accessible parts are equal up to a state bijection.
bool isomorphic(const Dfa& x, const Dfa& y);

/// True iff no final state is reachable.
bool is_empty_language(const Dfa& dfa);

/// Accepting-state complexity: the number of final states of the minimal DFA.
int asc(const Dfa& dfa);

/// Permutation of the state set induced by `word`. Throws NotPermutation,
/// UnknownLetter.
Permutation induced_permutation(const Dfa& pdfa, std::string_view word);

/// The permutation induced by a single letter.
Permutation letter_permutation(const Dfa& pdfa, int letter_index);

}  // namespace permaut
