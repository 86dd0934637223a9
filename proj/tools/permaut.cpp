// Command-line front end: witness generation, quotients, asc and the spectrum
// checks.
//
// Exit codes: 0 success/equal, 1 negative verdict, 2 usage or parse error,
// 3 internal assertion failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "permaut/dfa.hpp"
#include "permaut/error.hpp"
#include "permaut/quotient.hpp"
#include "permaut/spectrum.hpp"
#include "permaut/text_format.hpp"
#include "permaut/witnesses.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw permaut::Error(permaut::ErrorKind::Parse, "cannot write " + out_path);
  out << text;
}

std::string set_line(const std::set<permaut::State>& s) {
  std::string out;
  for (auto q : s) out += (out.empty() ? "" : " ") + std::to_string(q);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace permaut;

  CLI::App app{"Permutation automata: accepting-state complexity and right quotient"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "text";
  int m = 1, n = 1, alpha = 1, alpha_max = 1, t = 0;
  int cycle_bound = 12, state_bound = 4, alphabet_bound = 2;
  std::string path_a, path_b;

  auto* witness = app.add_subcommand("witness", "Write a witness automaton");
  witness->require_subcommand(1);
  auto* w_source = witness->add_subcommand("source", "Dividend A^q(m, alpha)");
  w_source->add_option("--m", m, "Final states of the dividend")->required();
  w_source->add_option("--alpha", alpha, "Target quotient complexity")->required();
  w_source->add_option("--out", out_path, "Output file (default stdout)");
  auto* w_divisor = witness->add_subcommand("divisor", "Divisor B^q(n, alpha)");
  w_divisor->add_option("--n", n, "Final states of the divisor")->required();
  w_divisor->add_option("--alpha", alpha, "Target quotient complexity")->required();
  w_divisor->add_option("--out", out_path, "Output file (default stdout)");
  auto* w_cycle = witness->add_subcommand("cycle", "Unary cycle C_t");
  w_cycle->add_option("--t", t, "Number of final states")->required();
  w_cycle->add_option("--out", out_path, "Output file (default stdout)");

  auto* quotient = app.add_subcommand("quotient", "Right quotient A / B");
  quotient->add_option("dividend", path_a)->required();
  quotient->add_option("divisor", path_b)->required();
  quotient->add_option("--out", out_path, "Output file (default stdout)");

  auto* asc_cmd = app.add_subcommand("asc", "Accepting-state complexity");
  asc_cmd->add_option("automaton", path_a)->required();

  auto* minimize_cmd = app.add_subcommand("minimize", "Canonical minimal DFA");
  minimize_cmd->add_option("automaton", path_a)->required();
  minimize_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* equiv = app.add_subcommand("equiv", "Language equivalence (exit 0 equal, 1 different)");
  equiv->add_option("first", path_a)->required();
  equiv->add_option("second", path_b)->required();

  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  auto* verify = app.add_subcommand("verify-theorem", "Check the quotient spectrum for (m, n)");
  verify->add_option("--m", m)->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--alpha-max", alpha_max)->required();
  verify->add_option("--cycle-bound", cycle_bound);
  verify->add_option("--state-bound", state_bound);
  verify->add_option("--alphabet-bound", alphabet_bound);
  verify->add_option("--out", out_path, "Report file (default stdout)");
  add_format(verify);

  auto* unary = app.add_subcommand("unary-bruteforce", "Search unary cycle pairs");
  unary->add_option("--m", m)->required();
  unary->add_option("--n", n)->required();
  unary->add_option("--cycle-bound", cycle_bound);
  unary->add_option("--out", out_path, "Report file (default stdout)");
  add_format(unary);

  auto* zero = app.add_subcommand("zero-scan", "Exhaustive search for empty quotients");
  zero->add_option("--state-bound", state_bound);
  zero->add_option("--alphabet-bound", alphabet_bound);
  zero->add_option("--out", out_path, "Report file (default stdout)");
  add_format(zero);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*w_source) {
      emit(format_dfa(quotient_source({m, 1, alpha})), out_path);
    } else if (*w_divisor) {
      emit(format_dfa(quotient_divisor({1, n, alpha})), out_path);
    } else if (*w_cycle) {
      emit(format_dfa(unary_cycle(t)), out_path);
    } else if (*quotient) {
      const Dfa a = read_dfa_file(path_a);
      const Dfa b = read_dfa_file(path_b);
      const auto result = right_quotient(a, b);
      std::string summary;
      summary += "# saturated finals: " + set_line(result.saturated_finals) + "\n";
      summary += "# |saturated finals|: " + std::to_string(result.saturated_finals.size()) + "\n";
      summary += "# asc: " + std::to_string(asc(result.automaton)) + "\n";
      summary += std::string("# dividend permutation automaton: ") +
                 (is_permutation_automaton(a) ? "yes" : "no") + "\n";
      summary += std::string("# divisor permutation automaton: ") +
                 (is_permutation_automaton(b) ? "yes" : "no") + "\n";
      if (out_path.empty()) {
        std::cout << summary << format_dfa(result.automaton);
      } else {
        emit(format_dfa(result.automaton), out_path);
        std::cout << summary;
      }
    } else if (*asc_cmd) {
      std::cout << asc(read_dfa_file(path_a)) << '\n';
    } else if (*minimize_cmd) {
      emit(format_dfa(minimize(read_dfa_file(path_a))), out_path);
    } else if (*equiv) {
      const bool same = equivalent(read_dfa_file(path_a), read_dfa_file(path_b));
      std::cout << (same ? "equal" : "different") << '\n';
      return same ? kOk : kNegative;
    } else if (*verify) {
      TheoremOptions options;
      options.cycle_bound = cycle_bound;
      options.state_bound = state_bound;
      options.alphabet_bound = alphabet_bound;
      const auto report = verify_theorem(m, n, alpha_max, options);
      emit(format == "machine" ? format_machine(report) : format_text(report), out_path);
      if (!report.witness_failures.empty()) return kInternal;
      return report.passed() ? kOk : kNegative;
    } else if (*unary) {
      const auto report = unary_bruteforce(m, n, cycle_bound);
      emit(format == "machine" ? format_machine(report) : format_text(report), out_path);
    } else if (*zero) {
      const auto report = zero_scan(state_bound, alphabet_bound);
      emit(format == "machine" ? format_machine(report) : format_text(report), out_path);
      return report.passed() ? kOk : kNegative;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::WitnessCheckFailed ? kInternal : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
