#include "permaut/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "permaut/error.hpp"

namespace permaut {

namespace {

void require_same_degree(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "degrees " + std::to_string(x.degree()) + " and " +
                                               std::to_string(y.degree()));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = degree();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorKind::BadParams, "image array is not a bijection of [" +
                                            std::to_string(k) + "]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int degree, std::span<const int> points) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int from = points[i];
    const int to = points[(i + 1) % points.size()];
    if (from < 1 || from > degree) {
      throw Error(ErrorKind::IndexOutOfRange, "cycle point " + std::to_string(from));
    }
    images[static_cast<std::size_t>(from - 1)] = to;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)] || image(start) == start) continue;
    out << '(';
    int p = start;
    bool first = true;
    while (!done[static_cast<std::size_t>(p - 1)]) {
      done[static_cast<std::size_t>(p - 1)] = true;
      if (!first) out << ' ';
      out << p;
      first = false;
      p = image(p);
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "id" : s;
}

Permutation compose(const Permutation& first, const Permutation& then) {
  require_same_degree(first, then);
  std::vector<int> images(first.images().size());
  for (int i = 1; i <= first.degree(); ++i) {
    images[static_cast<std::size_t>(i - 1)] = then.image(first.image(i));
  }
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.images().size());
  for (int i = 1; i <= p.degree(); ++i) images[static_cast<std::size_t>(p.image(i) - 1)] = i;
  return Permutation(std::move(images));
}

Permutation parse_cycles(std::string_view text, int degree) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed == "id" || trimmed.empty()) return Permutation::identity(degree);

  Permutation result = Permutation::identity(degree);
  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    if (std::isspace(static_cast<unsigned char>(trimmed[pos]))) {
      ++pos;
      continue;
    }
    if (trimmed[pos] != '(') {
      throw Error(ErrorKind::Parse, "expected '(' in cycle string \"" + std::string(text) + "\"");
    }
    const auto close = trimmed.find(')', pos);
    if (close == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "unterminated cycle in \"" + std::string(text) + "\"");
    }
    std::istringstream body{std::string(trimmed.substr(pos + 1, close - pos - 1))};
    std::vector<int> points;
    int v = 0;
    while (body >> v) points.push_back(v);
    if (!body.eof()) {
      throw Error(ErrorKind::Parse, "bad cycle entry in \"" + std::string(text) + "\"");
    }
    // Cycles are written left to right and applied in that order.
    result = compose(result, Permutation::cycle(degree, points));
    pos = close + 1;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

PermutationSet::PermutationSet(int degree, std::set<Permutation> elements, bool closed)
    : degree_(degree), elements_(std::move(elements)), closed_(closed) {
  for (const auto& p : elements_) {
    if (p.degree() != degree_) {
      throw Error(ErrorKind::DegreeMismatch, "element of degree " + std::to_string(p.degree()) +
                                                 " in set of degree " + std::to_string(degree_));
    }
  }
}

void PermutationSet::insert(const Permutation& p) {
  if (p.degree() != degree_) {
    throw Error(ErrorKind::DegreeMismatch, "element of degree " + std::to_string(p.degree()) +
                                               " in set of degree " + std::to_string(degree_));
  }
  if (elements_.insert(p).second) closed_ = false;
}

bool PermutationSet::verify_closed() {
  closed_ = false;
  if (!elements_.contains(Permutation::identity(degree_))) return false;
  for (const auto& x : elements_) {
    if (!elements_.contains(inverse(x))) return false;
    for (const auto& y : elements_) {
      if (!elements_.contains(compose(x, y))) return false;
    }
  }
  closed_ = true;
  return true;
}

PermutationSet generated_monoid_closure(std::span<const Permutation> generators, int degree,
                                        std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::DegreeMismatch, "generator of degree " +
                                                 std::to_string(g.degree()) + ", expected " +
                                                 std::to_string(degree));
    }
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto visit = [&](const Permutation& p) {
    if (seen.insert(p).second) {
      if (seen.size() > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "closure exceeds " + std::to_string(cap) + " elements");
      }
      queue.push_back(p);
    }
  };
  visit(Permutation::identity(degree));
  for (const auto& g : generators) visit(g);
  while (!queue.empty()) {
    const Permutation current = queue.front();
    queue.pop_front();
    for (const auto& g : generators) visit(compose(current, g));
  }
  // A finite submonoid of a symmetric group is a subgroup, so no inverse step.
  return PermutationSet(degree, std::set<Permutation>(seen.begin(), seen.end()), true);
}

PermutationSet symmetric_group(int k, std::size_t cap) {
  if (k < 1) throw Error(ErrorKind::BadParams, "degree must be positive");
  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 1);
  const Permutation gens[] = {Permutation::cycle(k, all),
                              k >= 2 ? Permutation::cycle(k, {1, 2}) : Permutation::identity(k)};
  return generated_monoid_closure(gens, k, cap);
}

std::set<int> orbit(const PermutationSet& group, int point) {
  if (!group.closed()) throw Error(ErrorKind::NotClosed, "orbit of an unverified set");
  if (point < 1 || point > group.degree()) {
    throw Error(ErrorKind::IndexOutOfRange, "point " + std::to_string(point));
  }
  std::set<int> result;
  for (const auto& p : group) result.insert(p.image(point));
  return result;
}

PermutationSet stabilizer(const PermutationSet& group, int point) {
  if (!group.closed()) throw Error(ErrorKind::NotClosed, "stabilizer of an unverified set");
  if (point < 1 || point > group.degree()) {
    throw Error(ErrorKind::IndexOutOfRange, "point " + std::to_string(point));
  }
  std::set<Permutation> fixing;
  for (const auto& p : group) {
    if (p.fixes(point)) fixing.insert(p);
  }
  return PermutationSet(group.degree(), std::move(fixing), true);
}

std::string adjacent_transposition_word(int i, int k) {
  if (i < 1 || i >= k) {
    throw Error(ErrorKind::IndexOutOfRange,
                "adjacent transposition index " + std::to_string(i) + " for degree " +
                    std::to_string(k));
  }
  std::string word(static_cast<std::size_t>(k - (i - 1)), 'a');
  word += 'b';
  word.append(static_cast<std::size_t>(i - 1), 'a');
  return word;
}

std::string word_for_permutation(const Permutation& target, int k) {
  if (target.degree() != k) {
    throw Error(ErrorKind::DegreeMismatch, "target degree " + std::to_string(target.degree()) +
                                               ", expected " + std::to_string(k));
  }
  // Swapping positions j, j+1 of the image array precomposes (j j+1). Sorting
  // by swaps s_1, ..., s_r therefore gives target = s_1 s_2 ... s_r in
  // application order. A fixed k never moves since it is the maximum.
  std::vector<int> images = target.images();
  std::string word;
  for (int pass = 0; pass < k; ++pass) {
    bool swapped = false;
    for (int j = 1; j < k; ++j) {
      auto& left = images[static_cast<std::size_t>(j - 1)];
      auto& right = images[static_cast<std::size_t>(j)];
      if (left > right) {
        std::swap(left, right);
        word += adjacent_transposition_word(j, k);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return word;
}

Permutation evaluate_ab_word(std::string_view word, int k) {
  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 1);
  const Permutation a = Permutation::cycle(k, all);
  const Permutation b = k >= 2 ? Permutation::cycle(k, {1, 2}) : Permutation::identity(k);
  Permutation result = Permutation::identity(k);
  for (char letter : word) {
    if (letter == 'a') {
      result = compose(result, a);
    } else if (letter == 'b') {
      result = compose(result, b);
    } else {
      throw Error(ErrorKind::UnknownLetter, std::string("letter '") + letter + "' not in {a,b}");
    }
  }
  return result;
}

}  // namespace permaut
