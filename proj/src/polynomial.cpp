#include "schubert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schubert {

namespace {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

void trim_vector(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Lexicographic comparison of zero-padded exponent vectors: -1, 0, 1.
int compare_padded(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ai = i < a.size() ? a[i] : 0;
    const int bi = i < b.size() ? b[i] : 0;
    if (ai != bi) return ai < bi ? -1 : 1;
  }
  return 0;
}

std::vector<int>& slot(Monomial& m, Alphabet a) { return a == Alphabet::X ? m.x : m.y; }

}  // namespace

Monomial Monomial::of(Variable v, int power) {
  if (v.index < 1) throw std::invalid_argument("variable index must be >= 1");
  Monomial m;
  auto& e = slot(m, v.alphabet);
  e.assign(v.index, 0);
  e[v.index - 1] = power;
  m.trim();
  return m;
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (int e : x) d += e;
  for (int e : y) d += e;
  return d;
}

void Monomial::trim() noexcept {
  trim_vector(x);
  trim_vector(y);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.x.assign(std::max(a.x.size(), b.x.size()), 0);
  m.y.assign(std::max(a.y.size(), b.y.size()), 0);
  for (std::size_t i = 0; i < a.x.size(); ++i) m.x[i] += a.x[i];
  for (std::size_t i = 0; i < b.x.size(); ++i) m.x[i] += b.x[i];
  for (std::size_t i = 0; i < a.y.size(); ++i) m.y[i] += a.y[i];
  for (std::size_t i = 0; i < b.y.size(); ++i) m.y[i] += b.y[i];
  return m;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  if (int c = compare_padded(a.x, b.x); c != 0) return c > 0;
  return compare_padded(a.y, b.y) > 0;
}

Polynomial::Polynomial(Coefficient constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::x(int i) { return variable({Alphabet::X, i}); }
Polynomial Polynomial::y(int j) { return variable({Alphabet::Y, j}); }
Polynomial Polynomial::variable(Variable v) { return term(Monomial::of(v)); }

Polynomial Polynomial::term(Monomial m, Coefficient c) {
  Polynomial p;
  m.trim();
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const noexcept {
  // Graded order puts the highest degree first.
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Polynomial::involves_y() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.first.y.empty(); });
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  Monomial key = m;
  key.trim();
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, checked_mul(ca, cb));
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, checked_mul(c, -1));
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Coefficient magnitude = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    auto emit = [&](char name, const std::vector<int>& e) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::string f = name + std::to_string(i + 1);
        if (e[i] > 1) f += "^" + std::to_string(e[i]);
        factors.push_back(std::move(f));
      }
    };
    emit('x', m.x);
    emit('y', m.y);

    if (factors.empty()) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

Polynomial Polynomial::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::size_t pos = 0;
  auto fail = [&]() -> std::invalid_argument {
    return std::invalid_argument("cannot parse polynomial '" + text + "' at offset " + std::to_string(pos));
  };
  auto read_int = [&]() -> long long {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || pos - start > 18) throw fail();
    return std::stoll(s.substr(start, pos - start));
  };

  Polynomial r;
  bool first = true;
  while (pos < s.size()) {
    Coefficient sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail();
    }
    first = false;
    Coefficient coeff = sign;
    Monomial m;
    bool expect_factor = true;
    while (expect_factor) {
      if (pos >= s.size()) throw fail();
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = checked_mul(coeff, read_int());
      } else if (s[pos] == 'x' || s[pos] == 'y') {
        const Alphabet a = s[pos] == 'x' ? Alphabet::X : Alphabet::Y;
        ++pos;
        const int index = static_cast<int>(read_int());
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          power = static_cast<int>(read_int());
        }
        if (index < 1) throw fail();
        m = m * Monomial::of({a, index}, power);
      } else {
        throw fail();
      }
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    m.trim();
    r.add_term(m, coeff);
  }
  return r;
}

Polynomial swap_x(const Polynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("swap_x index must be >= 1");
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    Monomial s = m;
    if (s.x.size() < static_cast<std::size_t>(i) + 1) s.x.resize(i + 1, 0);
    std::swap(s.x[i - 1], s.x[i]);
    s.trim();
    r.add_term(s, c);
  }
  return r;
}

Polynomial demazure(const Polynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("demazure index must be >= 1");
  // x_i^a x_{i+1}^b -> sign * (x_i x_{i+1})^min * h_{|a-b|-1}(x_i, x_{i+1}).
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    const int a = m.x_exponent(i), b = m.x_exponent(i + 1);
    if (a == b) continue;
    const int low = std::min(a, b), gap = std::abs(a - b);
    const Coefficient sign = a > b ? c : checked_mul(c, -1);
    for (int k = 0; k < gap; ++k) {
      Monomial t = m;
      if (t.x.size() < static_cast<std::size_t>(i) + 1) t.x.resize(i + 1, 0);
      t.x[i - 1] = low + k;
      t.x[i] = low + gap - 1 - k;
      t.trim();
      r.add_term(t, sign);
    }
  }
  if (!r.is_zero() && f.is_homogeneous() && r.degree() != f.degree() - 1) {
    throw InvariantViolation("demazure operator did not lower the degree by one");
  }
  return r;
}

Polynomial rename_variables(const Polynomial& f, const std::function<Variable(Variable)>& map) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    Monomial t;
    auto push = [&](Alphabet a, const std::vector<int>& e) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        const Variable to = map({a, static_cast<int>(k) + 1});
        t = t * Monomial::of(to, e[k]);
      }
    };
    push(Alphabet::X, m.x);
    push(Alphabet::Y, m.y);
    r.add_term(t, c);
  }
  return r;
}

Polynomial substitute(const Polynomial& f, const std::function<Polynomial(Variable)>& map) {
  Polynomial r;
  for (const auto& [m, c] : f.terms()) {
    Polynomial t(c);
    auto push = [&](Alphabet a, const std::vector<int>& e) {
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        const Polynomial image = map({a, static_cast<int>(k) + 1});
        for (int p = 0; p < e[k]; ++p) t *= image;
      }
    };
    push(Alphabet::X, m.x);
    push(Alphabet::Y, m.y);
    r += t;
  }
  return r;
}

Polynomial substitute_y_by_permuted_x(const Polynomial& f, const Permutation& wp,
                                      SubstitutionConvention convention) {
  const Permutation act = convention == SubstitutionConvention::Direct ? wp : wp.inverse();
  return rename_variables(f, [&](Variable v) {
    if (v.alphabet == Alphabet::X) return v;
    return Variable{Alphabet::X, act(v.index)};
  });
}

Polynomial set_y_zero(const Polynomial& f) {
  Polynomial r;
  for (const auto& [m, c] : f.terms())
    if (m.y.empty()) r.add_term(m, c);
  return r;
}

Coefficient evaluate(const Polynomial& f, std::span<const Coefficient> x_values,
                     std::span<const Coefficient> y_values) {
  auto value = [](std::span<const Coefficient> vals, std::size_t k) -> Coefficient {
    return k < vals.size() ? vals[k] : 0;
  };
  Coefficient total = 0;
  for (const auto& [m, c] : f.terms()) {
    Coefficient t = c;
    for (std::size_t k = 0; k < m.x.size(); ++k)
      for (int p = 0; p < m.x[k]; ++p) t = checked_mul(t, value(x_values, k));
    for (std::size_t k = 0; k < m.y.size(); ++k)
      for (int p = 0; p < m.y[k]; ++p) t = checked_mul(t, value(y_values, k));
    total = checked_add(total, t);
  }
  return total;
}

}  // namespace schubert
