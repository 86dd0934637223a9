#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "permaut/dfa.hpp"

namespace permaut {

// Line-based automaton format:
//
//   # comment
//   alphabet: a b c
//   states: 4
//   initial: 1
//   finals: 1 2
//   trans a: 2 3 4 1
//   trans b: 2 1 3 4
//   trans c: 1 2 3 4
//
// Lines may appear in any order on input; every letter needs exactly one
// trans line. Errors raise Error(Parse) with a line number.

Dfa parse_dfa(std::string_view text);
Dfa read_dfa_file(const std::string& path);

/// Canonical rendering: fields in the order above, single spaces, trailing
/// newline. "finals:" alone when the final set is empty.
std::string format_dfa(const Dfa& dfa);
void write_dfa_file(const Dfa& dfa, const std::string& path);

}  // namespace permaut
