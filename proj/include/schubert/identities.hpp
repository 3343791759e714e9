#pragma once

/**
 * @file identities.hpp
 * @brief Characterizing identities for Schubert-like families: the signed
 * convolution, the three-alphabet convolution and substitution vanishing.
 */

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

enum class FamilySource { Demazure, PipeDreamSum, BpdSum };

const char* source_name(FamilySource s) noexcept;
FamilySource source_from_name(const std::string& name);

/// A permutation-indexed polynomial family w -> S_w. Evaluations are memoized
/// and the cache is safe to share between threads.
class PolynomialFamily {
 public:
  using Evaluator = std::function<Polynomial(const Permutation&)>;

  PolynomialFamily(std::string name, Evaluator evaluator);

  /// Demazure, pipe-dream or BPD sums, single (x only) or double (x and y).
  static PolynomialFamily make(FamilySource source, bool double_version);

  /// Same values as `base` except S_{s_1} + 1; a negative control.
  static PolynomialFamily perturbed(const PolynomialFamily& base);

  const std::string& name() const noexcept { return name_; }
  Polynomial operator()(const Permutation& w) const;

 private:
  struct Cache;
  std::string name_;
  Evaluator evaluator_;
  std::shared_ptr<Cache> cache_;
};

/// sum over reduced w = u v of (-1)^{l(v)} S_{v^{-1}} S_u, or S_v when !invert_v;
/// S_u always comes from the Demazure recursion.
Polynomial convolution(const Permutation& w, const PolynomialFamily& family, bool invert_v = true);

struct IdentityCheck {
  Permutation w;
  Permutation other;  // second permutation for pairwise checks, identity otherwise
  std::string check;
  bool passed = false;
  Polynomial witness;  // offending value when the check fails
};

nlohmann::json checks_to_json(const std::vector<IdentityCheck>& checks);
bool all_passed(const std::vector<IdentityCheck>& checks);

/// convolution(w, family, true) == delta_{w, id} for every w in S_n.
std::vector<IdentityCheck> verify_chofsch(int n, const PolynomialFamily& family);

/// Index offset realizing the third alphabet: t_j is stored as y_{kThirdAlphabetStride + j}.
inline constexpr int kThirdAlphabetStride = 16;

/// sum over reduced w = a b c of S_c(x, t) S_b(t, y) S_a(y, x), Demazure double polynomials.
Polynomial triple_convolution(const Permutation& w);

/// True iff S_w(x, w'x) is zero under the given reading of w'x.
bool vanishing_check(const Permutation& w, const Permutation& wp, const PolynomialFamily& double_family,
                     SubstitutionConvention convention);

/// The reading of w'x under which the Bruhat vanishing holds on all of S_3
/// for the Demazure double polynomials. Computed once.
SubstitutionConvention canonical_substitution_convention();

enum class VanishingRange { BruhatBelow, ShorterLength };

/// S_w(x, w'x) == 0 for every w in S_n and every w' with w' < w (Bruhat) or
/// l(w') < l(w).
std::vector<IdentityCheck> vanishing_sweep(int n, const PolynomialFamily& double_family, VanishingRange range,
                                           SubstitutionConvention convention);

/// Per w in S_n: deg S_w = l(w) (homogeneous), S_w(x, 0) = S_w(x), and the
/// Bruhat vanishing under the canonical convention.
std::vector<IdentityCheck> verify_chofsch2_hypotheses(int n, const PolynomialFamily& double_family);

/// Demazure = pipe-dream sum = BPD sum on S_n, single or double.
std::vector<IdentityCheck> verify_three_way_equality(int n, bool double_version);

/// triple_convolution(w) == delta_{w, id} on S_n.
std::vector<IdentityCheck> verify_triple(int n);

}  // namespace schubert
