#include <sstream>

#include <json.hpp>

#include "permaut/spectrum.hpp"
#include "permaut/text_format.hpp"

namespace permaut {

namespace {

using Json = nlohmann::ordered_json;

Json evidence_record(const std::string& report, int m, int n, const Evidence& ev) {
  Json j;
  j["record"] = "alpha";
  j["report"] = report;
  j["m"] = m;
  j["n"] = n;
  j["alpha"] = ev.alpha;
  j["class"] = to_string(ev.kind);
  j["description"] = ev.description;
  j["dividend"] = format_dfa(ev.dividend);
  j["divisor"] = format_dfa(ev.divisor);
  return j;
}

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

Json zero_summary(const ZeroScanReport& r) {
  Json j;
  j["record"] = "zero-scan";
  j["state_bound"] = r.state_bound;
  j["alphabet_bound"] = r.alphabet_bound;
  j["automata_enumerated"] = r.automata_enumerated;
  j["nonempty_automata"] = r.nonempty_automata;
  j["language_classes"] = r.language_classes;
  j["class_pairs_checked"] = r.class_pairs_checked;
  j["automaton_pairs_covered"] = r.automaton_pairs_covered;
  j["witness_pairs_checked"] = r.witness_pairs_checked;
  j["passed"] = r.passed();
  if (r.counterexample) {
    j["counterexample_dividend"] = format_dfa(r.counterexample->first);
    j["counterexample_divisor"] = format_dfa(r.counterexample->second);
  }
  return j;
}

}  // namespace

std::string format_text(const SpectrumReport& r) {
  std::ostringstream out;
  out << "unary spectrum search m=" << r.m << " n=" << r.n << '\n';
  out << "bounds: " << r.search_bounds << '\n';
  out << "pairs examined: " << r.pairs_examined << '\n';
  std::vector<int> attained(r.attained.begin(), r.attained.end());
  out << "attained: " << join(attained) << '\n';
  for (const auto& [alpha, ev] : r.evidence) {
    out << "  alpha=" << alpha << " [" << to_string(ev.kind) << "] " << ev.description << '\n';
  }
  if (r.partial()) {
    out << "partial: yes (not found within bounds: " << join(r.missing) << ")\n";
  } else {
    out << "partial: no (every alpha in [1, " << r.m * r.n << "] attained)\n";
  }
  return out.str();
}

std::string format_machine(const SpectrumReport& r) {
  std::ostringstream out;
  Json head;
  head["record"] = "unary-bruteforce";
  head["m"] = r.m;
  head["n"] = r.n;
  head["search_bounds"] = r.search_bounds;
  head["pairs_examined"] = r.pairs_examined;
  head["attained"] = r.attained;
  head["missing"] = r.missing;
  head["partial"] = r.partial();
  out << head.dump() << '\n';
  for (const auto& [alpha, ev] : r.evidence) {
    out << evidence_record("unary-bruteforce", r.m, r.n, ev).dump() << '\n';
  }
  return out.str();
}

std::string format_text(const ZeroScanReport& r) {
  std::ostringstream out;
  out << "zero scan: permutation automata with <= " << r.state_bound << " states over <= "
      << r.alphabet_bound << " letters\n";
  out << "automata enumerated: " << r.automata_enumerated << '\n';
  out << "with nonempty language: " << r.nonempty_automata << '\n';
  out << "distinct languages: " << r.language_classes << '\n';
  out << "language pairs checked: " << r.class_pairs_checked << '\n';
  out << "automaton pairs covered: " << r.automaton_pairs_covered << '\n';
  out << "witness pairs checked: " << r.witness_pairs_checked << '\n';
  if (r.passed()) {
    out << "result: pass (no empty quotient)\n";
  } else {
    out << "result: COUNTEREXAMPLE\n--- dividend\n"
        << format_dfa(r.counterexample->first) << "--- divisor\n"
        << format_dfa(r.counterexample->second);
  }
  return out.str();
}

std::string format_machine(const ZeroScanReport& r) { return zero_summary(r).dump() + "\n"; }

std::string format_text(const TheoremReport& r) {
  std::ostringstream out;
  out << "verify-theorem m=" << r.m << " n=" << r.n << " alpha_max=" << r.alpha_max << '\n';
  for (int alpha = 1; alpha <= r.alpha_max; ++alpha) {
    out << "  alpha=" << alpha << ": ";
    const auto it = r.evidence.find(alpha);
    if (it == r.evidence.end()) {
      out << "MISSING\n";
      continue;
    }
    bool first = true;
    for (const auto& ev : it->second) {
      out << (first ? "" : ", ") << to_string(ev.kind);
      first = false;
    }
    out << '\n';
  }
  if (r.unary) {
    out << "unary search: " << r.unary->pairs_examined << " pairs, "
        << (r.unary->partial() ? "partial (missing " + join(r.unary->missing) + ")"
                               : std::string("complete on [1, m*n]"))
        << '\n';
  }
  if (r.zero) {
    out << "zero scan: " << r.zero->class_pairs_checked << " language pairs, "
        << (r.zero->passed() ? "0 not attained" : "COUNTEREXAMPLE") << '\n';
  }
  for (const auto& failure : r.witness_failures) out << "WITNESS FAILURE: " << failure << '\n';
  out << "result: " << (r.passed() ? "pass" : "FAIL") << '\n';
  return out.str();
}

std::string format_machine(const TheoremReport& r) {
  std::ostringstream out;
  Json head;
  head["record"] = "verify-theorem";
  head["m"] = r.m;
  head["n"] = r.n;
  head["alpha_max"] = r.alpha_max;
  head["missing"] = r.missing;
  head["witness_failures"] = r.witness_failures;
  head["passed"] = r.passed();
  out << head.dump() << '\n';
  for (const auto& [alpha, list] : r.evidence) {
    for (const auto& ev : list) out << evidence_record("verify-theorem", r.m, r.n, ev).dump() << '\n';
  }
  if (r.zero) out << zero_summary(*r.zero).dump() << '\n';
  return out.str();
}

}  // namespace permaut
