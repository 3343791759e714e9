#pragma once

/**
 * @file schubert.hpp
 * @brief Single and double Schubert polynomials from the divided-difference recursion.
 *
 * The top element w0 of S_n gets x1^{n-1} x2^{n-2} ... x_{n-1} (single) or
 * prod_{i+j<=n} (x_i - y_j) (double); every other w in S_n is reached by
 * applying d_{a1} d_{a2} ... d_{ak} for the lexicographically smallest
 * reduced word (a1, ..., ak) of w^{-1} w0.
 */

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// x1^{n-1} x2^{n-2} ... x_{n-1}.
Polynomial top_schubert_single(int n);

/// prod over i + j <= n of (x_i - y_j).
Polynomial top_schubert_double(int n);

/// Applies d_{word[0]} d_{word[1]} ... d_{word.back()} to f (rightmost first).
Polynomial apply_demazure_word(const Polynomial& f, const std::vector<int>& word);

/**
 * Memoized Schubert polynomials keyed by (w, n, kind).
 *
 * Lookups take a shared lock and inserts an exclusive one, so a table may be
 * shared between threads; the computed values do not depend on the order in
 * which entries were filled.
 */
class SchubertTable {
 public:
  /// S_w(x), computed inside S_n for the smallest n containing w.
  Polynomial single(const Permutation& w);

  /// S_w(x) computed inside S_n; throws std::invalid_argument unless w is in S_n.
  Polynomial single_in(const Permutation& w, int n);

  /// S_w(x, y) computed inside S_n; throws std::invalid_argument unless w is in S_n.
  Polynomial double_poly(const Permutation& w, int n);

  /// S_w(x, y) with n = smallest rank containing w.
  Polynomial double_poly(const Permutation& w) { return double_poly(w, w.min_rank()); }

  std::size_t cached_entries() const;

 private:
  enum class Kind { Single, Double };
  using Key = std::tuple<Permutation, int, Kind>;

  Polynomial compute(const Permutation& w, int n, Kind kind);

  mutable std::shared_mutex mutex_;
  std::map<Key, Polynomial> cache_;
};

/// Process-wide table used by the convenience functions below.
SchubertTable& default_table();

inline Polynomial schubert_single(const Permutation& w) { return default_table().single(w); }
inline Polynomial schubert_double(const Permutation& w, int n) {
  return default_table().double_poly(w, n);
}

/// One (w, i) check of the recursion d_i S_w = S_{w s_i} or 0.
struct RecursionCheck {
  Permutation w;
  int index = 0;
  bool descent = false;  // l(w s_i) = l(w) - 1
  bool double_version = false;
  bool passed = false;
};

/// Checks both branches of the recursion for every w in S_n and i < n,
/// for the single polynomials and, when `include_double`, the double ones.
std::vector<RecursionCheck> verify_demazure_recursion(int n, bool include_double = true);

}  // namespace schubert
