#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permaut/dfa.hpp"
#include "permaut/witnesses.hpp"

namespace permaut {

enum class EvidenceClass { UnarySearch, TernaryWitness };

const char* to_string(EvidenceClass kind) noexcept;

/// One pair (K, L) realizing asc(K) = m, asc(L) = n, asc(K L^-1) = alpha.
struct Evidence {
  EvidenceClass kind;
  int alpha;
  Dfa dividend;
  Dfa divisor;
  std::string description;
};

/// Re-measures an evidence pair; returns (asc K, asc L, asc K L^-1).
struct Measurement {
  int asc_dividend;
  int asc_divisor;
  int asc_quotient;
  bool operator==(const Measurement&) const = default;
};
Measurement measure(const Evidence& evidence);

/// Attainable quotient complexities found for input complexities (m, n).
struct SpectrumReport {
  int m = 0;
  int n = 0;
  std::set<int> attained;
  std::map<int, Evidence> evidence;  // first witness found per alpha
  std::string search_bounds;
  std::size_t pairs_examined = 0;
  // Values of [1, m*n] with no witness inside the bounds.
  std::vector<int> missing;

  bool partial() const noexcept { return !missing.empty(); }
};

/// Whether the residue set `finals` of a cycle of `length` states has least
/// period exactly `length`, i.e. the unary cycle automaton is minimal.
bool has_full_period(int length, const std::set<State>& finals);

/// All minimal single-cycle unary automata with `final_count` finals and
/// cycle length at most `cycle_bound`, initial state 1, in a fixed order
/// (length ascending, final sets lexicographic).
std::vector<Dfa> minimal_unary_cycles(int final_count, int cycle_bound);

/// Exhaustive search over pairs of minimal unary cycles with asc m and n;
/// records every attained quotient asc. Flags values of [1, m*n] it could
/// not reach as missing rather than failing.
SpectrumReport unary_bruteforce(int m, int n, int cycle_bound = 12);

struct ZeroScanReport {
  int state_bound = 0;
  int alphabet_bound = 0;
  std::size_t automata_enumerated = 0;
  std::size_t nonempty_automata = 0;
  std::size_t language_classes = 0;
  std::size_t class_pairs_checked = 0;
  unsigned long long automaton_pairs_covered = 0;
  std::size_t witness_pairs_checked = 0;
  std::optional<std::pair<Dfa, Dfa>> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Enumerates every permutation automaton with at most `state_bound` states
/// over the first 1..`alphabet_bound` letters of "ab...", keeps those with a
/// nonempty language, and checks that every quotient of two of them is
/// nonempty. Automata are grouped by minimal DFA first: emptiness of K L^-1
/// depends only on the two languages. Witness pairs with m, n, alpha <= 3 are
/// checked as well when `include_witnesses` is set.
ZeroScanReport zero_scan(int state_bound = 4, int alphabet_bound = 2,
                         bool include_witnesses = true);

struct TheoremOptions {
  bool run_zero_scan = true;
  bool run_unary = true;
  int cycle_bound = 12;
  int state_bound = 4;
  int alphabet_bound = 2;
};

struct TheoremReport {
  int m = 0;
  int n = 0;
  int alpha_max = 0;
  std::map<int, std::vector<Evidence>> evidence;  // alpha in [1, alpha_max]
  std::vector<int> missing;
  std::vector<std::string> witness_failures;       // serialized failing instances
  std::optional<ZeroScanReport> zero;
  std::optional<SpectrumReport> unary;

  bool passed() const noexcept {
    return missing.empty() && witness_failures.empty() && (!zero || zero->passed());
  }
};

/// Checks the spectrum for (m, n) up to alpha_max: witness triples for every
/// alpha in [m, alpha_max], unary search for [1, min(m*n, alpha_max)], and
/// the zero scan. Throws BadParams if m < 1 or n < 1.
TheoremReport verify_theorem(int m, int n, int alpha_max, const TheoremOptions& options = {});

// Report rendering. Text is a human summary; machine is one JSON object per
// line with a fixed key order.
std::string format_text(const SpectrumReport& report);
std::string format_machine(const SpectrumReport& report);
std::string format_text(const ZeroScanReport& report);
std::string format_machine(const ZeroScanReport& report);
std::string format_text(const TheoremReport& report);
std::string format_machine(const TheoremReport& report);

}  // namespace permaut
