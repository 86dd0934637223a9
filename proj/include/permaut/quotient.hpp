#pragma once

#include <optional>
#include <set>
#include <string_view>

#include "permaut/dfa.hpp"
#include "permaut/permutation.hpp"

namespace permaut {

/// Result of dividing A by B: A with its final set replaced by the saturated
/// set, plus the induced divisor group when A is a permutation automaton.
struct QuotientResult {
  Dfa automaton;
  std::set<State> saturated_finals;
  std::optional<PermutationSet> divisor_group;
};

/// States q of A such that q.w is final in A for some w in L(B). Computed by
/// backward reachability from F_A x F_B in the product automaton.
std::set<State> quotient_final_set(const Dfa& a, const Dfa& b);

/// Automaton for L(A) L(B)^-1. The divisor group is filled in when A is a
/// permutation automaton and the group stays within `group_cap`; a cap
/// overflow only leaves it empty.
QuotientResult right_quotient(const Dfa& a, const Dfa& b,
                              std::size_t group_cap = kDefaultClosureCap);

/// Direct membership test for x in L(A) L(B)^-1: searches the product forward
/// from (s_A.x, s_B) for a pair in F_A x F_B, bounded by |Q_A| * |Q_B| steps.
bool member_of_quotient(const Dfa& a, const Dfa& b, std::string_view x);

/// { pi_w restricted to Q_A | w in L(B) }, by BFS over pairs
/// (permutation of Q_A, state of B) starting from (id, s_B). The returned set
/// is not marked closed; call verify_closed() before orbit/stabilizer queries.
/// Throws NotPermutation, AlphabetMismatch, CapExceeded.
PermutationSet induced_language_group(const Dfa& a, const Dfa& b,
                                      std::size_t cap = kDefaultClosureCap);

/// Union of pi^-1(F) over pi in `group`.
std::set<State> final_set_via_group(const std::set<State>& finals, const PermutationSet& group);

}  // namespace permaut
