#pragma once

#include "permaut/dfa.hpp"
#include "permaut/quotient.hpp"

namespace permaut {

/// Parameters of the ternary witness pair: the dividend has m final states,
/// the divisor n, and the quotient is meant to have alpha = k - 1.
struct WitnessParams {
  int m = 1;
  int n = 1;
  int alpha = 1;

  int k() const noexcept { return alpha + 1; }

  /// Throws BadParams unless m >= 1, n >= 1 and alpha >= m.
  void validate() const;
};

/// Dividend automaton over {a, b, c} on [k]: a = (1 2 ... k), b = (1 2),
/// c = id, initial 1, finals {1, ..., m}. Only m and alpha are used.
Dfa quotient_source(const WitnessParams& params);

/// Divisor automaton over {a, b, c} on [k] x Z_{n+1}. The pair (p, i) is
/// state (p - 1) * (n + 1) + i + 1. Letters a and b act on p as in the
/// source; c sends i to i + 1 mod n + 1. Initial (k, 0); finals (k, i) for
/// i != n. Only n and alpha are used.
Dfa quotient_divisor(const WitnessParams& params);

/// Flattened index of the divisor pair (p, i).
State divisor_state(const WitnessParams& params, int p, int i);

/// Unary cycle of length t + 1 with finals {1, ..., t}; for t = 0 the
/// one-state automaton without final states.
Dfa unary_cycle(int t);

struct WitnessTriple {
  WitnessParams params;
  Dfa source;
  Dfa divisor;
  QuotientResult quotient;
  int asc_source;
  int asc_divisor;
  int asc_quotient;
};

/// Builds source, divisor and their quotient and re-measures all three asc
/// values. Throws WitnessCheckFailed if a measurement differs from
/// (m, n, alpha).
WitnessTriple witness_triple(const WitnessParams& params);

}  // namespace permaut
