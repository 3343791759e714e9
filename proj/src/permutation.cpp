#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace schubert {

Permutation::Permutation(std::vector<int> values) : one_line_(std::move(values)) { trim(); }

void Permutation::trim() noexcept {
  while (!one_line_.empty() && one_line_.back() == static_cast<int>(one_line_.size())) {
    one_line_.pop_back();
  }
}

Permutation Permutation::from_one_line(std::span<const int> values) {
  const int m = static_cast<int>(values.size());
  std::vector<bool> seen(m + 1, false);
  for (int v : values) {
    if (v < 1 || v > m) {
      throw InvalidPermutation("entry " + std::to_string(v) + " out of range 1.." +
                               std::to_string(m));
    }
    if (seen[v]) throw InvalidPermutation("duplicate entry " + std::to_string(v));
    seen[v] = true;
  }
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation Permutation::simple_reflection(int i) {
  if (i < 1) throw std::invalid_argument("simple reflection index must be >= 1");
  std::vector<int> v(i + 1);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

Permutation Permutation::longest_element(int n) {
  if (n < 1) throw std::invalid_argument("longest_element requires n >= 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(std::span<const int> word) {
  Permutation w;
  for (int i : word) w = w.times_simple(i);
  return w;
}

int Permutation::length() const noexcept {
  int inv = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    for (std::size_t j = i + 1; j < one_line_.size(); ++j)
      if (one_line_[i] > one_line_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) v[one_line_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1) throw std::invalid_argument("simple reflection index must be >= 1");
  std::vector<int> v = one_line_;
  const std::size_t need = static_cast<std::size_t>(i) + 1;
  while (v.size() < need) v.push_back(static_cast<int>(v.size()) + 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

std::vector<int> Permutation::lehmer_code() const {
  std::vector<int> code(one_line_.size(), 0);
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    for (std::size_t j = i + 1; j < one_line_.size(); ++j)
      if (one_line_[j] < one_line_[i]) ++code[i];
  while (!code.empty() && code.back() == 0) code.pop_back();
  return code;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < one_line_.size(); ++i) os << (i ? "," : "") << one_line_[i];
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int m = std::max(u.size(), v.size());
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("all_permutations requires n >= 1");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

void collect_words(const Permutation& w, std::vector<int>& suffix,
                   std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i = 1; i < w.size(); ++i) {
    if (!w.has_right_descent(i)) continue;
    suffix.push_back(i);
    collect_words(w.times_simple(i), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> first_reduced_word(const Permutation& w) {
  // Greedy on left descents: w = s_i * (s_i w) with l(s_i w) < l(w) iff w^{-1}(i) > w^{-1}(i+1).
  std::vector<int> word;
  Permutation rest = w;
  while (!rest.is_identity()) {
    const Permutation inv = rest.inverse();
    for (int i = 1; i < inv.size(); ++i) {
      if (inv.has_right_descent(i)) {
        word.push_back(i);
        rest = Permutation::simple_reflection(i) * rest;
        break;
      }
    }
  }
  return word;
}

std::vector<std::pair<Permutation, Permutation>> reduced_factorizations(const Permutation& w) {
  std::vector<std::pair<Permutation, Permutation>> out;
  const int lw = w.length();
  for (const Permutation& u : all_permutations(w.min_rank())) {
    const int lu = u.length();
    if (lu > lw) continue;
    Permutation v = u.inverse() * w;
    if (lu + v.length() == lw) out.emplace_back(u, std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::tuple<Permutation, Permutation, Permutation>> triple_reduced_factorizations(
    const Permutation& w) {
  std::vector<std::tuple<Permutation, Permutation, Permutation>> out;
  for (const auto& [a, bc] : reduced_factorizations(w))
    for (const auto& [b, c] : reduced_factorizations(bc)) out.emplace_back(a, b, c);
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  const int n = std::max(u.size(), w.size());
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      int cu = 0, cw = 0;
      for (int j = 1; j <= i; ++j) {
        if (u(j) >= k) ++cu;
        if (w(j) >= k) ++cw;
      }
      if (cu > cw) return false;
    }
  }
  return true;
}

Permutation parse_permutation(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ') body.push_back(c);
  std::vector<int> values;
  if (body.find(',') == std::string::npos) {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidPermutation("cannot parse permutation '" + text + "'");
      values.push_back(c - '0');
    }
  } else {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
          })) {
        throw InvalidPermutation("cannot parse permutation '" + text + "'");
      }
      values.push_back(std::stoi(item));
    }
  }
  return Permutation::from_one_line(values);
}

}  // namespace schubert
