#include "permaut/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "permaut/error.hpp"

namespace permaut {

Dfa::Dfa(int state_count, std::string alphabet, std::vector<std::vector<State>> transitions,
         State initial, std::set<State> finals)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      initial_(initial),
      finals_(std::move(finals)) {
  if (state_count_ < 1) throw Error(ErrorKind::BadAutomaton, "state count must be positive");
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_.find(alphabet_[i], i + 1) != std::string::npos) {
      throw Error(ErrorKind::BadAutomaton, std::string("duplicate letter '") + alphabet_[i] + "'");
    }
  }
  if (transitions_.size() != alphabet_.size()) {
    throw Error(ErrorKind::BadAutomaton, "expected one image array per letter");
  }
  for (std::size_t a = 0; a < transitions_.size(); ++a) {
    const auto& col = transitions_[a];
    if (col.size() != static_cast<std::size_t>(state_count_)) {
      throw Error(ErrorKind::BadAutomaton,
                  std::string("image array of '") + alphabet_[a] + "' has wrong length");
    }
    for (State t : col) {
      if (t < 1 || t > state_count_) {
        throw Error(ErrorKind::BadAutomaton,
                    std::string("successor out of range under '") + alphabet_[a] + "'");
      }
    }
  }
  if (initial_ < 1 || initial_ > state_count_) {
    throw Error(ErrorKind::BadAutomaton, "initial state out of range");
  }
  is_final_.assign(static_cast<std::size_t>(state_count_), false);
  for (State f : finals_) {
    if (f < 1 || f > state_count_) throw Error(ErrorKind::BadAutomaton, "final state out of range");
    is_final_[static_cast<std::size_t>(f - 1)] = true;
  }
}

int Dfa::letter_index(char letter) const {
  const auto pos = alphabet_.find(letter);
  if (pos == std::string::npos) {
    throw Error(ErrorKind::UnknownLetter, std::string("letter '") + letter + "' not in alphabet");
  }
  return static_cast<int>(pos);
}

Dfa Dfa::with_finals(std::set<State> finals) const {
  return Dfa(state_count_, alphabet_, transitions_, initial_, std::move(finals));
}

State run(const Dfa& dfa, State from, std::string_view word) {
  if (from < 1 || from > dfa.state_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "state " + std::to_string(from));
  }
  State q = from;
  for (char letter : word) q = dfa.step(q, dfa.letter_index(letter));
  return q;
}

bool accepts(const Dfa& dfa, std::string_view word) {
  return dfa.is_final(run(dfa, dfa.initial(), word));
}

bool is_permutation_automaton(const Dfa& dfa) {
  std::vector<bool> hit(static_cast<std::size_t>(dfa.state_count()));
  for (const auto& col : dfa.transitions()) {
    std::fill(hit.begin(), hit.end(), false);
    for (State t : col) {
      if (hit[static_cast<std::size_t>(t - 1)]) return false;
      hit[static_cast<std::size_t>(t - 1)] = true;
    }
  }
  return true;
}

namespace {

// Breadth-first numbering of the states reachable from `initial`; 0 marks
// unreachable states.
std::vector<State> bfs_numbering(const Dfa& dfa) {
  std::vector<State> number(static_cast<std::size_t>(dfa.state_count()), 0);
  std::deque<State> queue{dfa.initial()};
  number[static_cast<std::size_t>(dfa.initial() - 1)] = 1;
  State next = 2;
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (int a = 0; a < dfa.letter_count(); ++a) {
      const State t = dfa.step(q, a);
      if (number[static_cast<std::size_t>(t - 1)] == 0) {
        number[static_cast<std::size_t>(t - 1)] = next++;
        queue.push_back(t);
      }
    }
  }
  return number;
}

}  // namespace

Dfa accessible_part(const Dfa& dfa) {
  const auto number = bfs_numbering(dfa);
  const int reachable =
      static_cast<int>(std::count_if(number.begin(), number.end(), [](State s) { return s != 0; }));
  std::vector<std::vector<State>> transitions(
      static_cast<std::size_t>(dfa.letter_count()),
      std::vector<State>(static_cast<std::size_t>(reachable)));
  std::set<State> finals;
  for (State q = 1; q <= dfa.state_count(); ++q) {
    const State nq = number[static_cast<std::size_t>(q - 1)];
    if (nq == 0) continue;
    for (int a = 0; a < dfa.letter_count(); ++a) {
      transitions[static_cast<std::size_t>(a)][static_cast<std::size_t>(nq - 1)] =
          number[static_cast<std::size_t>(dfa.step(q, a) - 1)];
    }
    if (dfa.is_final(q)) finals.insert(nq);
  }
  return Dfa(reachable, dfa.alphabet(), std::move(transitions), 1, std::move(finals));
}

Dfa minimize(const Dfa& dfa) {
  const Dfa acc = accessible_part(dfa);
  const auto n = static_cast<std::size_t>(acc.state_count());
  const auto letters = static_cast<std::size_t>(acc.letter_count());

  // Moore refinement: split classes by (class, successor classes) signatures
  // until the class count stops growing.
  std::vector<int> cls(n);
  for (std::size_t q = 0; q < n; ++q) cls[q] = acc.is_final(static_cast<State>(q + 1)) ? 1 : 0;
  std::size_t class_count = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    std::vector<int> signature(letters + 1);
    for (std::size_t q = 0; q < n; ++q) {
      signature[0] = cls[q];
      for (std::size_t a = 0; a < letters; ++a) {
        signature[a + 1] = cls[static_cast<std::size_t>(acc.step(static_cast<State>(q + 1),
                                                                 static_cast<int>(a)) - 1)];
      }
      const auto [it, inserted] = ids.try_emplace(signature, static_cast<int>(ids.size()));
      next[q] = it->second;
    }
    cls = std::move(next);
    if (ids.size() == class_count) break;
    class_count = ids.size();
  }

  std::vector<std::vector<State>> transitions(letters, std::vector<State>(class_count));
  std::set<State> finals;
  for (std::size_t q = 0; q < n; ++q) {
    const auto c = static_cast<std::size_t>(cls[q]);
    for (std::size_t a = 0; a < letters; ++a) {
      transitions[a][c] =
          cls[static_cast<std::size_t>(acc.step(static_cast<State>(q + 1), static_cast<int>(a)) - 1)] +
          1;
    }
    if (acc.is_final(static_cast<State>(q + 1))) finals.insert(static_cast<State>(c + 1));
  }
  const Dfa merged(static_cast<int>(class_count), acc.alphabet(), std::move(transitions),
                   cls[0] + 1, std::move(finals));
  return accessible_part(merged);
}

bool equivalent(const Dfa& x, const Dfa& y) {
  if (x.alphabet() != y.alphabet()) {
    throw Error(ErrorKind::AlphabetMismatch, "\"" + x.alphabet() + "\" vs \"" + y.alphabet() + "\"");
  }
  const auto ny = static_cast<std::size_t>(y.state_count());
  std::vector<bool> seen(static_cast<std::size_t>(x.state_count()) * ny, false);
  auto index = [&](State p, State q) {
    return static_cast<std::size_t>(p - 1) * ny + static_cast<std::size_t>(q - 1);
  };
  std::deque<std::pair<State, State>> queue{{x.initial(), y.initial()}};
  seen[index(x.initial(), y.initial())] = true;
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    if (x.is_final(p) != y.is_final(q)) return false;
    for (int a = 0; a < x.letter_count(); ++a) {
      const State tp = x.step(p, a);
      const State tq = y.step(q, a);
      if (!seen[index(tp, tq)]) {
        seen[index(tp, tq)] = true;
        queue.emplace_back(tp, tq);
      }
    }
  }
  return true;
}

bool isomorphic(const Dfa& x, const Dfa& y) {
  // Canonical BFS numbering is a complete invariant for accessible DFAs with
  // the same letter order.
  return accessible_part(x) == accessible_part(y);
}

bool is_empty_language(const Dfa& dfa) {
  return accessible_part(dfa).finals().empty();
}

int asc(const Dfa& dfa) { return static_cast<int>(minimize(dfa).finals().size()); }

Permutation letter_permutation(const Dfa& pdfa, int letter_index) {
  return Permutation(pdfa.column(letter_index));
}

Permutation induced_permutation(const Dfa& pdfa, std::string_view word) {
  if (!is_permutation_automaton(pdfa)) {
    throw Error(ErrorKind::NotPermutation, "automaton has a non-bijective letter");
  }
  std::vector<State> images(static_cast<std::size_t>(pdfa.state_count()));
  std::iota(images.begin(), images.end(), 1);
  for (char letter : word) {
    const int a = pdfa.letter_index(letter);
    for (auto& q : images) q = pdfa.step(q, a);
  }
  return Permutation(std::move(images));
}

}  // namespace permaut
