#include "schubert/schubert.hpp"

#include <stdexcept>

namespace schubert {

Polynomial top_schubert_single(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  Monomial m;
  for (int i = 1; i < n; ++i) m.x.push_back(n - i);
  return Polynomial::term(m);
}

Polynomial top_schubert_double(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  Polynomial p(1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) p *= Polynomial::x(i) - Polynomial::y(j);
  return p;
}

Polynomial apply_demazure_word(const Polynomial& f, const std::vector<int>& word) {
  Polynomial r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure(r, *it);
  return r;
}

Polynomial SchubertTable::single(const Permutation& w) { return single_in(w, w.min_rank()); }

Polynomial SchubertTable::single_in(const Permutation& w, int n) {
  if (!w.in_group(n)) {
    throw std::invalid_argument(w.to_string() + " is not in S_" + std::to_string(n));
  }
  return compute(w, n, Kind::Single);
}

Polynomial SchubertTable::double_poly(const Permutation& w, int n) {
  if (!w.in_group(n)) {
    throw std::invalid_argument(w.to_string() + " is not in S_" + std::to_string(n));
  }
  return compute(w, n, Kind::Double);
}

std::size_t SchubertTable::cached_entries() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

Polynomial SchubertTable::compute(const Permutation& w, int n, Kind kind) {
  Key key{w, n, kind};
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const Permutation w0 = Permutation::longest_element(n);
  const Polynomial top = kind == Kind::Single ? top_schubert_single(n) : top_schubert_double(n);
  Polynomial result = apply_demazure_word(top, first_reduced_word(w.inverse() * w0));
  if (result.degree() != w.length() || !result.is_homogeneous()) {
    throw InvariantViolation("Schubert polynomial of " + w.to_string() +
                             " is not homogeneous of degree l(w)");
  }
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

SchubertTable& default_table() {
  static SchubertTable table;
  return table;
}

std::vector<RecursionCheck> verify_demazure_recursion(int n, bool include_double) {
  std::vector<RecursionCheck> out;
  SchubertTable& table = default_table();
  for (const Permutation& w : all_permutations(n)) {
    for (int i = 1; i < n; ++i) {
      const bool descent = w.has_right_descent(i);
      for (int pass = 0; pass < (include_double ? 2 : 1); ++pass) {
        const bool dbl = pass == 1;
        const Polynomial sw = dbl ? table.double_poly(w, n) : table.single_in(w, n);
        const Polynomial lhs = demazure(sw, i);
        Polynomial rhs;
        if (descent) {
          const Permutation ws = w.times_simple(i);
          rhs = dbl ? table.double_poly(ws, n) : table.single_in(ws, n);
        }
        out.push_back({w, i, descent, dbl, lhs == rhs});
      }
    }
  }
  return out;
}

}  // namespace schubert
