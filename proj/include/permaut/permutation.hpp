#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permaut {

/// A bijection of [k] = {1, ..., k} stored as an image array.
///
/// Points are 1-based. `image(i)` is the image of i, written i*pi in
/// right-action notation, so that applying a word letter by letter matches
/// composing permutations left to right.
class Permutation {
public:
  Permutation() = default;

  /// Throws Error(BadParams) unless `images` is a bijection of [images.size()].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// The cycle (p_1 p_2 ... p_r) on [degree].
  static Permutation cycle(int degree, std::span<const int> points);
  static Permutation cycle(int degree, std::initializer_list<int> points) {
    return cycle(degree, std::span<const int>(points.begin(), points.size()));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool fixes(int point) const { return image(point) == point; }

  /// Cycle notation with fixed points omitted, "id" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

/// Application-order product: i -> (i*first)*then.
Permutation compose(const Permutation& first, const Permutation& then);
Permutation inverse(const Permutation& p);

/// Parses "(1 2 3)(5 6)" or "id" into a permutation of [degree].
Permutation parse_cycles(std::string_view text, int degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A finite set of permutations of one degree.
///
/// `closed()` is true only when the set was verified (or constructed) to be a
/// group; orbit and stabilizer queries require it.
class PermutationSet {
public:
  explicit PermutationSet(int degree) : degree_(degree) {}
  PermutationSet(int degree, std::set<Permutation> elements, bool closed);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool closed() const noexcept { return closed_; }
  bool contains(const Permutation& p) const { return elements_.contains(p); }
  const std::set<Permutation>& elements() const noexcept { return elements_; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  void insert(const Permutation& p);

  /// Recomputes closure under composition and inverse; updates the flag.
  bool verify_closed();

  bool operator==(const PermutationSet& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

private:
  int degree_;
  std::set<Permutation> elements_;
  bool closed_ = false;
};

inline constexpr std::size_t kDefaultClosureCap = 3628800;  // 10!

/// Breadth-first closure of {identity} and `generators` under
/// right-multiplication by the generators. Throws CapExceeded if the closure
/// grows past `cap` elements.
PermutationSet generated_monoid_closure(std::span<const Permutation> generators, int degree,
                                        std::size_t cap = kDefaultClosureCap);

/// The full symmetric group S_k, generated by (1 2 ... k) and (1 2).
PermutationSet symmetric_group(int k, std::size_t cap = kDefaultClosureCap);

std::set<int> orbit(const PermutationSet& group, int point);
PermutationSet stabilizer(const PermutationSet& group, int point);

/// The word a^{k-(i-1)} b a^{i-1}, which induces the adjacent transposition
/// (i i+1) when a = (1 2 ... k) and b = (1 2).
std::string adjacent_transposition_word(int i, int k);

/// Some word over {a, b} inducing `target` under a = (1 2 ... k), b = (1 2).
/// Built from a bubble-sort decomposition into adjacent transpositions; if
/// the target fixes k, only transpositions of [k-1] are used.
std::string word_for_permutation(const Permutation& target, int k);

/// Evaluates a word over {a, b} under a = (1 2 ... k), b = (1 2).
Permutation evaluate_ab_word(std::string_view word, int k);

}  // namespace permaut
