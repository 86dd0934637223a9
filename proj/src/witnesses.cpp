#include "permaut/witnesses.hpp"

#include "permaut/error.hpp"

namespace permaut {

void WitnessParams::validate() const {
  if (m < 1 || n < 1 || alpha < m) {
    throw Error(ErrorKind::BadParams, "need m >= 1, n >= 1, alpha >= m (got m=" +
                                          std::to_string(m) + ", n=" + std::to_string(n) +
                                          ", alpha=" + std::to_string(alpha) + ")");
  }
}

namespace {

// a = (1 2 ... k), b = (1 2) as image arrays on [k].
std::vector<State> cycle_images(int k) {
  std::vector<State> a(static_cast<std::size_t>(k));
  for (int p = 1; p <= k; ++p) a[static_cast<std::size_t>(p - 1)] = p % k + 1;
  return a;
}

std::vector<State> swap12_images(int k) {
  std::vector<State> b(static_cast<std::size_t>(k));
  for (int p = 1; p <= k; ++p) b[static_cast<std::size_t>(p - 1)] = p;
  b[0] = 2;
  b[1] = 1;
  return b;
}

}  // namespace

Dfa quotient_source(const WitnessParams& params) {
  params.validate();
  const int k = params.k();
  std::vector<State> identity(static_cast<std::size_t>(k));
  for (int p = 1; p <= k; ++p) identity[static_cast<std::size_t>(p - 1)] = p;
  std::set<State> finals;
  for (int p = 1; p <= params.m; ++p) finals.insert(p);
  return Dfa(k, "abc", {cycle_images(k), swap12_images(k), identity}, 1, std::move(finals));
}

State divisor_state(const WitnessParams& params, int p, int i) {
  return (p - 1) * (params.n + 1) + i + 1;
}

Dfa quotient_divisor(const WitnessParams& params) {
  params.validate();
  const int k = params.k();
  const int residues = params.n + 1;
  const auto a_on_p = cycle_images(k);
  const auto b_on_p = swap12_images(k);
  const auto size = static_cast<std::size_t>(k * residues);
  std::vector<State> a(size), b(size), c(size);
  for (int p = 1; p <= k; ++p) {
    for (int i = 0; i < residues; ++i) {
      const auto s = static_cast<std::size_t>(divisor_state(params, p, i) - 1);
      a[s] = divisor_state(params, a_on_p[static_cast<std::size_t>(p - 1)], i);
      b[s] = divisor_state(params, b_on_p[static_cast<std::size_t>(p - 1)], i);
      c[s] = divisor_state(params, p, (i + 1) % residues);
    }
  }
  std::set<State> finals;
  for (int i = 0; i < params.n; ++i) finals.insert(divisor_state(params, k, i));
  return Dfa(k * residues, "abc", {std::move(a), std::move(b), std::move(c)},
             divisor_state(params, k, 0), std::move(finals));
}

Dfa unary_cycle(int t) {
  if (t < 0) throw Error(ErrorKind::BadParams, "cycle parameter must be nonnegative");
  if (t == 0) return Dfa(1, "a", {{1}}, 1, {});
  std::vector<State> a(static_cast<std::size_t>(t + 1));
  std::set<State> finals;
  for (int p = 1; p <= t + 1; ++p) a[static_cast<std::size_t>(p - 1)] = p % (t + 1) + 1;
  for (int p = 1; p <= t; ++p) finals.insert(p);
  return Dfa(t + 1, "a", {std::move(a)}, 1, std::move(finals));
}

WitnessTriple witness_triple(const WitnessParams& params) {
  params.validate();
  Dfa source = quotient_source(params);
  Dfa divisor = quotient_divisor(params);
  QuotientResult quotient = right_quotient(source, divisor);
  WitnessTriple triple{params,
                       source,
                       divisor,
                       quotient,
                       asc(source),
                       asc(divisor),
                       asc(quotient.automaton)};
  if (triple.asc_source != params.m || triple.asc_divisor != params.n ||
      triple.asc_quotient != params.alpha) {
    throw Error(ErrorKind::WitnessCheckFailed,
                "expected (" + std::to_string(params.m) + ", " + std::to_string(params.n) + ", " +
                    std::to_string(params.alpha) + "), measured (" +
                    std::to_string(triple.asc_source) + ", " +
                    std::to_string(triple.asc_divisor) + ", " +
                    std::to_string(triple.asc_quotient) + ")");
  }
  return triple;
}

}  // namespace permaut
