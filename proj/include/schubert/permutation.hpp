#pragma once

/**
 * @file permutation.hpp
 * @brief Finitely supported permutations of the positive integers.
 *
 * A permutation is stored in one-line notation with trailing fixed points
 * trimmed, so S_n sits inside S_{n+1} without any conversion. Composition
 * follows (u * v)(i) = u(v(i)), and a word (i1, ..., il) denotes the product
 * s_{i1} * ... * s_{il}.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace schubert {

class InvalidPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Permutation {
 public:
  /// The identity.
  Permutation() = default;

  /// Throws InvalidPermutation unless `values` is a permutation of {1..m}.
  static Permutation from_one_line(std::span<const int> values);
  static Permutation from_one_line(std::initializer_list<int> values) {
    return from_one_line(std::span<const int>(values.begin(), values.size()));
  }

  /// s_i = (i, i+1), i >= 1.
  static Permutation simple_reflection(int i);

  /// [n, n-1, ..., 1]; throws std::invalid_argument for n < 1.
  static Permutation longest_element(int n);

  /// Product s_{i1} * ... * s_{il}.
  static Permutation from_word(std::span<const int> word);

  /// Image of i (1-based); fixed outside the stored range.
  int operator()(int i) const noexcept {
    return i >= 1 && i <= static_cast<int>(one_line_.size()) ? one_line_[i - 1] : i;
  }

  const std::vector<int>& one_line() const noexcept { return one_line_; }

  /// Number of stored entries; 0 for the identity.
  int size() const noexcept { return static_cast<int>(one_line_.size()); }

  /// Smallest n >= 1 with this permutation in S_n.
  int min_rank() const noexcept { return one_line_.empty() ? 1 : size(); }

  bool in_group(int n) const noexcept { return size() <= n; }
  bool is_identity() const noexcept { return one_line_.empty(); }

  /// Number of inversions.
  int length() const noexcept;

  Permutation inverse() const;

  /// w * s_i, i.e. positions i and i+1 of the one-line notation swapped.
  Permutation times_simple(int i) const;

  /// True when w(i) > w(i+1), so that l(w s_i) = l(w) - 1.
  bool has_right_descent(int i) const noexcept { return (*this)(i) > (*this)(i + 1); }

  /// Lehmer code c_i = #{j > i : w(j) < w(i)}, trimmed like the one-line form.
  std::vector<int> lehmer_code() const;

  /// One-line notation as "[3,1,2]"; the identity prints as "[]".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& u, const Permutation& v);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.one_line_ <=> b.one_line_;
  }

 private:
  explicit Permutation(std::vector<int> values);
  void trim() noexcept;

  std::vector<int> one_line_;
};

/// All elements of S_n, in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// All reduced words of w, sorted lexicographically.
std::vector<std::vector<int>> reduced_words(const Permutation& w);

/// Lexicographically smallest reduced word of w.
std::vector<int> first_reduced_word(const Permutation& w);

/// Pairs (u, v) with u * v = w and l(u) + l(v) = l(w), sorted.
std::vector<std::pair<Permutation, Permutation>> reduced_factorizations(const Permutation& w);

/// Triples (a, b, c) with a * b * c = w and l(a) + l(b) + l(c) = l(w), sorted.
std::vector<std::tuple<Permutation, Permutation, Permutation>> triple_reduced_factorizations(
    const Permutation& w);

/// Bruhat order via the rank-matrix (tableau) criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// Parses "3,1,2", "312" (single digits only) or "[3,1,2]".
Permutation parse_permutation(const std::string& text);

}  // namespace schubert
