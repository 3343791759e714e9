#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact sparse integer polynomials in two alphabets x_1, x_2, ... and y_1, y_2, ...
 *
 * Terms are kept in graded lexicographic order (total degree first, then the
 * x exponent vector, then the y exponent vector, all descending), which is
 * also the print order. Zero coefficients are never stored. Coefficients are
 * 64-bit integers; arithmetic that would overflow throws std::overflow_error.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

using Coefficient = std::int64_t;

/// Raised when an internal algebraic invariant fails; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Alphabet { X, Y };

struct Variable {
  Alphabet alphabet;
  int index;  // 1-based
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Exponent vectors with trailing zeros trimmed.
struct Monomial {
  std::vector<int> x;
  std::vector<int> y;

  static Monomial of(Variable v, int power = 1);

  int degree() const noexcept;
  int x_exponent(int i) const noexcept { return i >= 1 && i <= static_cast<int>(x.size()) ? x[i - 1] : 0; }
  int y_exponent(int j) const noexcept { return j >= 1 && j <= static_cast<int>(y.size()) ? y[j - 1] : 0; }
  void trim() noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic, larger terms first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Coefficient, GrlexDescending>;

  Polynomial() = default;
  Polynomial(Coefficient constant);  // NOLINT(google-explicit-constructor)

  static Polynomial x(int i);
  static Polynomial y(int j);
  static Polynomial variable(Variable v);
  static Polynomial term(Monomial m, Coefficient c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool involves_y() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  Coefficient coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  /// Adds c * m.
  void add_term(const Monomial& m, Coefficient c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Canonical text, e.g. "x1^2*x2 - x1*y1 + 3"; zero prints as "0".
  std::string to_string() const;

  /// Inverse of to_string; also accepts spaces anywhere and explicit "1*" factors.
  /// Throws std::invalid_argument on malformed text.
  static Polynomial parse(const std::string& text);

 private:
  Terms terms_;
};

/// f with x_i and x_{i+1} exchanged.
Polynomial swap_x(const Polynomial& f, int i);

/// Divided difference (f - s_i f) / (x_i - x_{i+1}) acting on the x alphabet.
Polynomial demazure(const Polynomial& f, int i);

/// How y = w'x is read: Direct sends y_j to x_{w'(j)}, Inverse to x_{w'^{-1}(j)}.
enum class SubstitutionConvention { Direct, Inverse };

Polynomial substitute_y_by_permuted_x(const Polynomial& f, const Permutation& wp,
                                      SubstitutionConvention convention = SubstitutionConvention::Direct);

/// f(x, 0).
Polynomial set_y_zero(const Polynomial& f);

/// Renames every variable; the map must be injective on the variables of f
/// for the result to be a relabelling, but any map is accepted.
Polynomial rename_variables(const Polynomial& f, const std::function<Variable(Variable)>& map);

/// Replaces each variable by a polynomial.
Polynomial substitute(const Polynomial& f, const std::function<Polynomial(Variable)>& map);

/// Exact evaluation; variables beyond the given values evaluate to 0.
Coefficient evaluate(const Polynomial& f, std::span<const Coefficient> x_values,
                     std::span<const Coefficient> y_values = {});

}  // namespace schubert
