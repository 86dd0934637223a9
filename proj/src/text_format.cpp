#include "permaut/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "permaut/error.hpp"

namespace permaut {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

int to_int(const std::string& tok, int line) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(line, "expected integer, got \"" + tok + "\"");
  return value;
}

std::vector<int> to_ints(const std::vector<std::string>& toks, int line) {
  std::vector<int> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(to_int(t, line));
  return out;
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  std::optional<std::string> alphabet;
  std::optional<int> states;
  std::optional<int> initial;
  std::optional<std::vector<int>> finals;
  std::map<char, std::pair<std::vector<int>, int>> trans;

  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto colon = raw.find(':');
    const auto head = split_ws(std::string_view(raw).substr(0, colon));
    if (head.empty() && colon == std::string::npos) continue;
    if (colon == std::string::npos) fail(line_no, "missing ':'");
    const auto body = split_ws(std::string_view(raw).substr(colon + 1));

    if (head.size() == 1 && head[0] == "alphabet") {
      if (alphabet) fail(line_no, "duplicate alphabet line");
      std::string letters;
      for (const auto& tok : body) {
        if (tok.size() != 1) fail(line_no, "letters must be single characters: \"" + tok + "\"");
        if (letters.find(tok[0]) != std::string::npos) {
          fail(line_no, "duplicate letter '" + tok + "'");
        }
        letters += tok[0];
      }
      alphabet = letters;
    } else if (head.size() == 1 && head[0] == "states") {
      if (states) fail(line_no, "duplicate states line");
      if (body.size() != 1) fail(line_no, "states takes one integer");
      states = to_int(body[0], line_no);
    } else if (head.size() == 1 && head[0] == "initial") {
      if (initial) fail(line_no, "duplicate initial line");
      if (body.size() != 1) fail(line_no, "initial takes one integer");
      initial = to_int(body[0], line_no);
    } else if (head.size() == 1 && head[0] == "finals") {
      if (finals) fail(line_no, "duplicate finals line");
      finals = to_ints(body, line_no);
    } else if (head.size() == 2 && head[0] == "trans") {
      if (head[1].size() != 1) fail(line_no, "letters must be single characters");
      const char letter = head[1][0];
      if (trans.contains(letter)) fail(line_no, "duplicate trans line for '" + head[1] + "'");
      trans.emplace(letter, std::make_pair(to_ints(body, line_no), line_no));
    } else {
      fail(line_no, "unknown field");
    }
  }

  if (!alphabet) fail(line_no, "missing alphabet line");
  if (!states) fail(line_no, "missing states line");
  if (!initial) fail(line_no, "missing initial line");
  if (!finals) fail(line_no, "missing finals line");

  std::vector<std::vector<State>> columns;
  for (char letter : *alphabet) {
    const auto it = trans.find(letter);
    if (it == trans.end()) fail(line_no, std::string("missing trans line for '") + letter + "'");
    if (it->second.first.size() != static_cast<std::size_t>(*states)) {
      fail(it->second.second, "expected " + std::to_string(*states) + " successors");
    }
    columns.push_back(it->second.first);
  }
  for (const auto& [letter, entry] : trans) {
    if (alphabet->find(letter) == std::string::npos) {
      fail(entry.second, std::string("trans line for letter '") + letter + "' not in alphabet");
    }
  }

  std::set<State> final_set;
  for (int f : *finals) {
    if (!final_set.insert(f).second) fail(line_no, "duplicate final state " + std::to_string(f));
  }
  try {
    return Dfa(*states, *alphabet, std::move(columns), *initial, std::move(final_set));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Dfa read_dfa_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dfa(buf.str());
}

std::string format_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << "alphabet:";
  for (char letter : dfa.alphabet()) out << ' ' << letter;
  out << "\nstates: " << dfa.state_count() << "\ninitial: " << dfa.initial() << "\nfinals:";
  for (State f : dfa.finals()) out << ' ' << f;
  out << '\n';
  for (int a = 0; a < dfa.letter_count(); ++a) {
    out << "trans " << dfa.alphabet()[static_cast<std::size_t>(a)] << ':';
    for (State t : dfa.column(a)) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

void write_dfa_file(const Dfa& dfa, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << format_dfa(dfa);
}

}  // namespace permaut
