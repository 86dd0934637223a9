#include "permaut/quotient.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "permaut/error.hpp"

namespace permaut {

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) {
    throw Error(ErrorKind::AlphabetMismatch,
                "\"" + a.alphabet() + "\" vs \"" + b.alphabet() + "\"");
  }
}

}  // namespace

std::set<State> quotient_final_set(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const auto na = static_cast<std::size_t>(a.state_count());
  const auto nb = static_cast<std::size_t>(b.state_count());
  const auto pairs = na * nb;
  auto index = [nb](State p, State q) {
    return static_cast<std::size_t>(p - 1) * nb + static_cast<std::size_t>(q - 1);
  };

  // Reverse edges of the product automaton in CSR form.
  std::vector<std::size_t> in_degree(pairs + 1, 0);
  for (State p = 1; p <= a.state_count(); ++p) {
    for (State q = 1; q <= b.state_count(); ++q) {
      for (int l = 0; l < a.letter_count(); ++l) ++in_degree[index(a.step(p, l), b.step(q, l)) + 1];
    }
  }
  for (std::size_t i = 1; i <= pairs; ++i) in_degree[i] += in_degree[i - 1];
  std::vector<std::size_t> fill(in_degree.begin(), in_degree.end() - 1);
  std::vector<std::size_t> preds(in_degree.back());
  for (State p = 1; p <= a.state_count(); ++p) {
    for (State q = 1; q <= b.state_count(); ++q) {
      for (int l = 0; l < a.letter_count(); ++l) {
        preds[fill[index(a.step(p, l), b.step(q, l))]++] = index(p, q);
      }
    }
  }

  std::vector<bool> reached(pairs, false);
  std::deque<std::size_t> queue;
  for (State f : a.finals()) {
    for (State g : b.finals()) {
      reached[index(f, g)] = true;
      queue.push_back(index(f, g));
    }
  }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto i = in_degree[v]; i < in_degree[v + 1]; ++i) {
      if (!reached[preds[i]]) {
        reached[preds[i]] = true;
        queue.push_back(preds[i]);
      }
    }
  }

  std::set<State> result;
  for (State p = 1; p <= a.state_count(); ++p) {
    if (reached[index(p, b.initial())]) result.insert(p);
  }
  return result;
}

QuotientResult right_quotient(const Dfa& a, const Dfa& b, std::size_t group_cap) {
  auto saturated = quotient_final_set(a, b);
  QuotientResult result{a.with_finals(saturated), std::move(saturated), std::nullopt};
  if (is_permutation_automaton(a)) {
    try {
      result.divisor_group = induced_language_group(a, b, group_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
    }
  }
  return result;
}

bool member_of_quotient(const Dfa& a, const Dfa& b, std::string_view x) {
  require_same_alphabet(a, b);
  const State start = run(a, a.initial(), x);
  const auto nb = static_cast<std::size_t>(b.state_count());
  const auto pairs = static_cast<std::size_t>(a.state_count()) * nb;
  auto index = [nb](State p, State q) {
    return static_cast<std::size_t>(p - 1) * nb + static_cast<std::size_t>(q - 1);
  };
  // Layered BFS over witness lengths 0 .. pairs-1.
  std::vector<bool> seen(pairs, false);
  std::vector<std::pair<State, State>> layer{{start, b.initial()}};
  seen[index(start, b.initial())] = true;
  for (std::size_t length = 0; length < pairs && !layer.empty(); ++length) {
    std::vector<std::pair<State, State>> next;
    for (const auto& [p, q] : layer) {
      if (a.is_final(p) && b.is_final(q)) return true;
      for (int l = 0; l < a.letter_count(); ++l) {
        const State tp = a.step(p, l);
        const State tq = b.step(q, l);
        if (!seen[index(tp, tq)]) {
          seen[index(tp, tq)] = true;
          next.emplace_back(tp, tq);
        }
      }
    }
    layer = std::move(next);
  }
  return false;
}

PermutationSet induced_language_group(const Dfa& a, const Dfa& b, std::size_t cap) {
  require_same_alphabet(a, b);
  if (!is_permutation_automaton(a)) {
    throw Error(ErrorKind::NotPermutation, "dividend is not a permutation automaton");
  }
  std::vector<Permutation> letters;
  for (int l = 0; l < a.letter_count(); ++l) letters.push_back(letter_permutation(a, l));

  // Each permutation keeps the set of B-states it has been paired with.
  std::unordered_map<Permutation, std::vector<bool>, PermutationHash> visited;
  std::deque<std::pair<Permutation, State>> queue;
  PermutationSet result(a.state_count());
  auto visit = [&](const Permutation& p, State q) {
    auto [it, inserted] = visited.try_emplace(p);
    if (inserted) {
      if (visited.size() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "more than " + std::to_string(cap) + " induced permutations");
      }
      it->second.assign(static_cast<std::size_t>(b.state_count()), false);
    }
    auto&& mark = it->second[static_cast<std::size_t>(q - 1)];
    if (mark) return;
    mark = true;
    if (b.is_final(q)) result.insert(p);
    queue.emplace_back(p, q);
  };
  visit(Permutation::identity(a.state_count()), b.initial());
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    for (int l = 0; l < a.letter_count(); ++l) {
      visit(compose(p, letters[static_cast<std::size_t>(l)]), b.step(q, l));
    }
  }
  return result;
}

std::set<State> final_set_via_group(const std::set<State>& finals, const PermutationSet& group) {
  for (State f : finals) {
    if (f < 1 || f > group.degree()) {
      throw Error(ErrorKind::DegreeMismatch,
                  "final state " + std::to_string(f) + " outside degree " +
                      std::to_string(group.degree()));
    }
  }
  std::set<State> result;
  for (const auto& pi : group) {
    for (State q = 1; q <= pi.degree(); ++q) {
      if (finals.contains(pi.image(q))) result.insert(q);
    }
  }
  return result;
}

}  // namespace permaut
