#pragma once

// Independent reference computations and random generators for the tests.
// Nothing here calls into the code under test except for the value types.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace oracle {

using schubert::Permutation;
using schubert::Polynomial;

// Product of simple reflections, composed by hand: (u v)(i) = u(v(i)).
inline std::vector<int> apply_word(const std::vector<int>& word, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (int a : word) std::swap(w[a - 1], w[a]);  // w * s_a swaps positions a, a+1
  return w;
}

inline Permutation perm(std::vector<int> one_line) { return Permutation::from_one_line(one_line); }

inline int inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j];
  return c;
}

// Every word over {1..n-1} of length l(w) that multiplies to w.
inline std::set<std::vector<int>> words_by_search(const Permutation& w, int n) {
  std::vector<int> target(n);
  for (int i = 1; i <= n; ++i) target[i - 1] = w(i);
  const int len = inversions(target);
  std::set<std::vector<int>> out;
  std::vector<int> word;
  std::function<void()> grow = [&] {
    if (static_cast<int>(word.size()) == len) {
      if (apply_word(word, n) == target) out.insert(word);
      return;
    }
    for (int a = 1; a < n; ++a) {
      word.push_back(a);
      grow();
      word.pop_back();
    }
  };
  grow();
  return out;
}

// u <= w iff some reduced word of w has a subword that is a reduced word of u.
inline bool bruhat_by_subwords(const Permutation& u, const Permutation& w, int n) {
  std::vector<int> target(n);
  for (int i = 1; i <= n; ++i) target[i - 1] = u(i);
  const auto words = words_by_search(w, n);
  const std::vector<int>& word = *words.begin();  // one word suffices
  const int len = static_cast<int>(word.size());
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::vector<int> sub;
    for (int b = 0; b < len; ++b)
      if (mask >> b & 1) sub.push_back(word[b]);
    if (apply_word(sub, n) == target) return true;
  }
  return false;
}

// Billey-Jockusch-Stanley: sum over reduced words a of w and compatible
// sequences i_1 <= ... <= i_l with i_j <= a_j, strict where a_j < a_{j+1}, of
// prod x_{i_j} (single) or prod (x_{i_j} - y_{a_j - i_j + 1}) (double).
inline Polynomial bjs(const Permutation& w, bool dbl) {
  const int n = w.min_rank();
  Polynomial total;
  for (const auto& a : words_by_search(w, n)) {
    const int l = static_cast<int>(a.size());
    std::vector<int> seq(l);
    std::function<void(int, int)> fill = [&](int j, int lo) {
      if (j == l) {
        Polynomial t(1);
        for (int k = 0; k < l; ++k)
          t *= dbl ? Polynomial::x(seq[k]) - Polynomial::y(a[k] - seq[k] + 1) : Polynomial::x(seq[k]);
        total += t;
        return;
      }
      for (int i = lo; i <= a[j]; ++i) {
        seq[j] = i;
        const bool strict = j + 1 < l && a[j] < a[j + 1];
        fill(j + 1, strict ? i + 1 : i);
      }
    };
    fill(0, 1);
  }
  return total;
}

// Rothe diagram {(i, j) : j < w(i), w^{-1}(j) > i}.
inline std::set<std::pair<int, int>> rothe_diagram(const Permutation& w, int n) {
  std::set<std::pair<int, int>> d;
  const Permutation inv = w.inverse();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j < w(i) && inv(j) > i) d.insert({i, j});
  return d;
}

// --- generators -------------------------------------------------------------

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_one_line(v);
}

// Small random polynomial in x1..x_vars (and y1..y_vars when with_y).
inline Polynomial random_polynomial(std::mt19937& rng, int vars, int max_deg, int terms, bool with_y = false) {
  std::uniform_int_distribution<int> coeff(-4, 4), exp(0, max_deg), idx(1, vars);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Polynomial m(coeff(rng));
    for (int k = 0; k < 3; ++k) {
      const int e = exp(rng);
      for (int r = 0; r < e; ++r) m *= Polynomial::x(idx(rng));
    }
    if (with_y && exp(rng) > 0) m *= Polynomial::y(idx(rng));
    p += m;
  }
  return p;
}

}  // namespace oracle
