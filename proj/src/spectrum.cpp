#include "permaut/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "permaut/error.hpp"
#include "permaut/quotient.hpp"
#include "permaut/text_format.hpp"

namespace permaut {

const char* to_string(EvidenceClass kind) noexcept {
  switch (kind) {
    case EvidenceClass::UnarySearch: return "unary-search";
    case EvidenceClass::TernaryWitness: return "ternary-witness";
  }
  return "?";
}

Measurement measure(const Evidence& evidence) {
  const auto quotient = right_quotient(evidence.dividend, evidence.divisor);
  return {asc(evidence.dividend), asc(evidence.divisor), asc(quotient.automaton)};
}

namespace {

std::string set_string(const std::set<State>& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (State q : s) {
    out << (first ? "" : ",") << q;
    first = false;
  }
  out << '}';
  return out.str();
}

Dfa cycle_automaton(int length, const std::set<State>& finals) {
  std::vector<State> a(static_cast<std::size_t>(length));
  for (int p = 1; p <= length; ++p) a[static_cast<std::size_t>(p - 1)] = p % length + 1;
  return Dfa(length, "a", {std::move(a)}, 1, finals);
}

std::string describe_cycle(const Dfa& dfa) {
  return "cycle " + std::to_string(dfa.state_count()) + " finals " + set_string(dfa.finals());
}

// Calls `visit` with every size-`choose` subset of [n], lexicographically.
template <typename Visit>
void for_each_subset(int n, int choose, Visit&& visit) {
  if (choose > n || choose < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(choose));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    visit(std::set<State>(idx.begin(), idx.end()));
    int i = choose - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - choose + i + 1) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < choose; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

bool has_full_period(int length, const std::set<State>& finals) {
  for (int d = 1; d < length; ++d) {
    if (length % d != 0) continue;
    const bool invariant = std::all_of(finals.begin(), finals.end(), [&](State q) {
      return finals.contains((q - 1 + d) % length + 1);
    });
    if (invariant) return false;
  }
  return true;
}

std::vector<Dfa> minimal_unary_cycles(int final_count, int cycle_bound) {
  std::vector<Dfa> result;
  for (int length = std::max(1, final_count); length <= cycle_bound; ++length) {
    for_each_subset(length, final_count, [&](const std::set<State>& finals) {
      if (has_full_period(length, finals)) result.push_back(cycle_automaton(length, finals));
    });
  }
  return result;
}

SpectrumReport unary_bruteforce(int m, int n, int cycle_bound) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadParams, "need m, n >= 1");
  if (cycle_bound < 2) throw Error(ErrorKind::BadParams, "cycle bound must be at least 2");
  SpectrumReport report;
  report.m = m;
  report.n = n;
  report.search_bounds = "single cycles of length <= " + std::to_string(cycle_bound) +
                         ", initial state 1, final residues of full period";
  const auto dividends = minimal_unary_cycles(m, cycle_bound);
  const auto divisors = minimal_unary_cycles(n, cycle_bound);
  for (const auto& k : dividends) {
    for (const auto& l : divisors) {
      ++report.pairs_examined;
      const int alpha = asc(k.with_finals(quotient_final_set(k, l)));
      if (report.attained.insert(alpha).second) {
        report.evidence.emplace(
            alpha, Evidence{EvidenceClass::UnarySearch, alpha, k, l,
                            "K = " + describe_cycle(k) + "; L = " + describe_cycle(l)});
      }
    }
  }
  // The period filter must agree with minimization on every reported witness.
  for (const auto& [alpha, ev] : report.evidence) {
    if (minimize(ev.dividend).state_count() != ev.dividend.state_count() ||
        minimize(ev.divisor).state_count() != ev.divisor.state_count()) {
      throw Error(ErrorKind::WitnessCheckFailed, "non-minimal unary candidate: " + ev.description);
    }
  }
  for (int alpha = 1; alpha <= m * n; ++alpha) {
    if (!report.attained.contains(alpha)) report.missing.push_back(alpha);
  }
  return report;
}

namespace {

std::vector<std::vector<State>> all_permutations(int q) {
  std::vector<State> images(static_cast<std::size_t>(q));
  std::iota(images.begin(), images.end(), 1);
  std::vector<std::vector<State>> result;
  do {
    result.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

struct LanguageClass {
  Dfa representative;
  unsigned long long multiplicity;
};

bool quotient_is_empty(const Dfa& a, const Dfa& b) {
  return is_empty_language(a.with_finals(quotient_final_set(a, b)));
}

}  // namespace

ZeroScanReport zero_scan(int state_bound, int alphabet_bound, bool include_witnesses) {
  if (state_bound < 1 || alphabet_bound < 1 || state_bound > 6 || alphabet_bound > 4) {
    throw Error(ErrorKind::BadParams, "zero scan bounds must satisfy 1 <= states <= 6 and "
                                      "1 <= letters <= 4");
  }
  ZeroScanReport report;
  report.state_bound = state_bound;
  report.alphabet_bound = alphabet_bound;
  const std::string letters = "abcd";

  for (int sigma = 1; sigma <= alphabet_bound && report.passed(); ++sigma) {
    const std::string alphabet = letters.substr(0, static_cast<std::size_t>(sigma));
    std::map<std::string, LanguageClass> classes;
    for (int q = 1; q <= state_bound; ++q) {
      const auto perms = all_permutations(q);
      std::vector<std::size_t> choice(static_cast<std::size_t>(sigma), 0);
      while (true) {
        std::vector<std::vector<State>> columns;
        for (auto c : choice) columns.push_back(perms[c]);
        for (State initial = 1; initial <= q; ++initial) {
          for (unsigned mask = 0; mask < (1U << q); ++mask) {
            std::set<State> finals;
            for (int s = 0; s < q; ++s) {
              if (mask & (1U << s)) finals.insert(s + 1);
            }
            ++report.automata_enumerated;
            const Dfa dfa(q, alphabet, columns, initial, std::move(finals));
            Dfa minimal = minimize(dfa);
            if (minimal.finals().empty()) continue;
            ++report.nonempty_automata;
            auto key = format_dfa(minimal);
            auto [it, inserted] = classes.try_emplace(std::move(key), LanguageClass{minimal, 0});
            ++it->second.multiplicity;
          }
        }
        // Odometer over the letter tuple.
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == perms.size()) choice[pos++] = 0;
        if (pos == choice.size()) break;
      }
    }
    report.language_classes += classes.size();
    for (const auto& [ka, a] : classes) {
      for (const auto& [kb, b] : classes) {
        ++report.class_pairs_checked;
        report.automaton_pairs_covered += a.multiplicity * b.multiplicity;
        if (quotient_is_empty(a.representative, b.representative)) {
          report.counterexample.emplace(a.representative, b.representative);
          break;
        }
      }
      if (!report.passed()) break;
    }
  }

  if (include_witnesses && report.passed()) {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        for (int alpha = m; alpha <= 3; ++alpha) {
          const WitnessParams p{m, n, alpha};
          const Dfa a = quotient_source(p);
          const Dfa b = quotient_divisor(p);
          ++report.witness_pairs_checked;
          if (asc(right_quotient(a, b).automaton) < 1 && !report.counterexample) {
            report.counterexample.emplace(a, b);
          }
        }
      }
    }
  }
  return report;
}

TheoremReport verify_theorem(int m, int n, int alpha_max, const TheoremOptions& options) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadParams, "verify-theorem needs m, n >= 1");
  TheoremReport report;
  report.m = m;
  report.n = n;
  report.alpha_max = alpha_max;

  if (options.run_unary && alpha_max >= 1) {
    report.unary = unary_bruteforce(m, n, options.cycle_bound);
    for (const auto& [alpha, ev] : report.unary->evidence) {
      if (alpha >= 1 && alpha <= alpha_max) report.evidence[alpha].push_back(ev);
    }
  }

  for (int alpha = std::max(1, m); alpha <= alpha_max; ++alpha) {
    const WitnessParams params{m, n, alpha};
    try {
      const auto triple = witness_triple(params);
      report.evidence[alpha].push_back(
          Evidence{EvidenceClass::TernaryWitness, alpha, triple.source, triple.divisor,
                   "A^q(m=" + std::to_string(m) + ", alpha=" + std::to_string(alpha) +
                       ") / B^q(n=" + std::to_string(n) + ", alpha=" + std::to_string(alpha) +
                       ")"});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WitnessCheckFailed) throw;
      report.witness_failures.push_back(
          std::string(e.what()) + "\n--- source\n" + format_dfa(quotient_source(params)) +
          "--- divisor\n" + format_dfa(quotient_divisor(params)));
    }
  }

  for (int alpha = 1; alpha <= alpha_max; ++alpha) {
    if (!report.evidence.contains(alpha)) report.missing.push_back(alpha);
  }

  if (options.run_zero_scan) report.zero = zero_scan(options.state_bound, options.alphabet_bound);
  return report;
}

}  // namespace permaut
