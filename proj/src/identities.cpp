#include "schubert/identities.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "schubert/bumpless.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

const char* source_name(FamilySource s) noexcept {
  switch (s) {
    case FamilySource::Demazure: return "demazure";
    case FamilySource::PipeDreamSum: return "pd";
    case FamilySource::BpdSum: return "bpd";
  }
  return "?";
}

FamilySource source_from_name(const std::string& name) {
  for (FamilySource s : {FamilySource::Demazure, FamilySource::PipeDreamSum, FamilySource::BpdSum})
    if (name == source_name(s)) return s;
  throw std::invalid_argument("unknown family '" + name + "' (expected demazure, pd or bpd)");
}

struct PolynomialFamily::Cache {
  std::shared_mutex mutex;
  std::map<Permutation, Polynomial> values;
};

PolynomialFamily::PolynomialFamily(std::string name, Evaluator evaluator)
    : name_(std::move(name)), evaluator_(std::move(evaluator)), cache_(std::make_shared<Cache>()) {}

Polynomial PolynomialFamily::operator()(const Permutation& w) const {
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->values.find(w); it != cache_->values.end()) return it->second;
  }
  Polynomial value = evaluator_(w);
  std::unique_lock lock(cache_->mutex);
  return cache_->values.try_emplace(w, std::move(value)).first->second;
}

PolynomialFamily PolynomialFamily::make(FamilySource source, bool double_version) {
  const std::string name = std::string(source_name(source)) + (double_version ? "-double" : "-single");
  switch (source) {
    case FamilySource::Demazure:
      return {name, [double_version](const Permutation& w) {
                return double_version ? schubert_double(w, w.min_rank()) : schubert_single(w);
              }};
    case FamilySource::PipeDreamSum:
      return {name, [double_version](const Permutation& w) {
                Polynomial sum;
                for (const PipeDream& pd : enumerate_pds(w))
                  sum += double_version ? pd_weight_double(pd) : pd_weight_single(pd);
                return sum;
              }};
    case FamilySource::BpdSum:
      return {name, [double_version](const Permutation& w) {
                Polynomial sum;
                for (const BumplessPipeDream& b : enumerate_bpds(w))
                  sum += double_version ? bpd_weight_double(b) : bpd_weight_single(b);
                return sum;
              }};
  }
  throw std::invalid_argument("unknown family source");
}

PolynomialFamily PolynomialFamily::perturbed(const PolynomialFamily& base) {
  const Permutation s1 = Permutation::simple_reflection(1);
  return {base.name() + "-perturbed", [base, s1](const Permutation& w) {
            Polynomial p = base(w);
            if (w == s1) p += Polynomial(1);
            return p;
          }};
}

Polynomial convolution(const Permutation& w, const PolynomialFamily& family, bool invert_v) {
  Polynomial sum;
  for (const auto& [u, v] : reduced_factorizations(w)) {
    Polynomial term = family(invert_v ? v.inverse() : v) * schubert_single(u);
    if (v.length() % 2 == 1) sum -= term;
    else sum += term;
  }
  return sum;
}

nlohmann::json checks_to_json(const std::vector<IdentityCheck>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"w", c.w.to_string()}, {"check", c.check}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.other.is_identity() || c.check.find("vanishing") != std::string::npos) item["w_prime"] = c.other.to_string();
    if (!c.passed) item["witness"] = c.witness.to_string();
    out.push_back(std::move(item));
  }
  return out;
}

bool all_passed(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<IdentityCheck> verify_chofsch(int n, const PolynomialFamily& family) {
  std::vector<IdentityCheck> out;
  for (const Permutation& w : all_permutations(n)) {
    const Polynomial value = convolution(w, family, true);
    const Polynomial expected = w.is_identity() ? Polynomial(1) : Polynomial();
    out.push_back({w, {}, "convolution:" + family.name(), value == expected, value});
  }
  return out;
}

Polynomial triple_convolution(const Permutation& w) {
  const int n = w.min_rank();
  auto t_of_y = [](Variable v) {
    return v.alphabet == Alphabet::Y ? Variable{Alphabet::Y, kThirdAlphabetStride + v.index} : v;
  };
  auto t_of_x = [](Variable v) {
    return v.alphabet == Alphabet::X ? Variable{Alphabet::Y, kThirdAlphabetStride + v.index} : v;
  };
  auto swap_alphabets = [](Variable v) {
    return Variable{v.alphabet == Alphabet::X ? Alphabet::Y : Alphabet::X, v.index};
  };
  Polynomial sum;
  for (const auto& [a, b, c] : triple_reduced_factorizations(w)) {
    const Polynomial sc = rename_variables(schubert_double(c, n), t_of_y);         // S_c(x, t)
    const Polynomial sb = rename_variables(schubert_double(b, n), t_of_x);         // S_b(t, y)
    const Polynomial sa = rename_variables(schubert_double(a, n), swap_alphabets);  // S_a(y, x)
    sum += sc * sb * sa;
  }
  return sum;
}

bool vanishing_check(const Permutation& w, const Permutation& wp, const PolynomialFamily& double_family,
                     SubstitutionConvention convention) {
  return substitute_y_by_permuted_x(double_family(w), wp, convention).is_zero();
}

SubstitutionConvention canonical_substitution_convention() {
  static const SubstitutionConvention chosen = [] {
    const PolynomialFamily demazure = PolynomialFamily::make(FamilySource::Demazure, true);
    for (SubstitutionConvention c : {SubstitutionConvention::Direct, SubstitutionConvention::Inverse}) {
      if (all_passed(vanishing_sweep(3, demazure, VanishingRange::BruhatBelow, c))) return c;
    }
    throw InvariantViolation("no substitution convention makes the Bruhat vanishing hold on S_3");
  }();
  return chosen;
}

std::vector<IdentityCheck> vanishing_sweep(int n, const PolynomialFamily& double_family, VanishingRange range,
                                           SubstitutionConvention convention) {
  const std::string label = std::string(range == VanishingRange::BruhatBelow ? "vanishing-bruhat" : "vanishing-length") +
                            (convention == SubstitutionConvention::Direct ? ":direct" : ":inverse");
  std::vector<IdentityCheck> out;
  const auto perms = all_permutations(n);
  for (const Permutation& w : perms) {
    for (const Permutation& wp : perms) {
      const bool in_range = range == VanishingRange::BruhatBelow ? (wp != w && bruhat_leq(wp, w))
                                                                 : wp.length() < w.length();
      if (!in_range) continue;
      const Polynomial value = substitute_y_by_permuted_x(double_family(w), wp, convention);
      out.push_back({w, wp, label, value.is_zero(), value});
    }
  }
  return out;
}

std::vector<IdentityCheck> verify_chofsch2_hypotheses(int n, const PolynomialFamily& double_family) {
  const SubstitutionConvention convention = canonical_substitution_convention();
  const auto perms = all_permutations(n);
  std::vector<IdentityCheck> out;
  for (const Permutation& w : perms) {
    const Polynomial s = double_family(w);
    const bool degree_ok = s.is_homogeneous() && s.degree() == w.length();
    out.push_back({w, {}, "degree", degree_ok, s});
    const Polynomial at_zero = set_y_zero(s);
    out.push_back({w, {}, "specialization", at_zero == schubert_single(w), at_zero});
    bool vanish_ok = true;
    Polynomial witness;
    for (const Permutation& wp : perms) {
      if (wp == w || !bruhat_leq(wp, w)) continue;
      Polynomial v = substitute_y_by_permuted_x(s, wp, convention);
      if (!v.is_zero()) {
        vanish_ok = false;
        witness = std::move(v);
        break;
      }
    }
    out.push_back({w, {}, "vanishing", vanish_ok, witness});
  }
  return out;
}

std::vector<IdentityCheck> verify_three_way_equality(int n, bool double_version) {
  std::vector<IdentityCheck> out;
  const std::string label = double_version ? "three-way-double" : "three-way-single";
  for (const Permutation& w : all_permutations(n)) {
    const Polynomial demazure = double_version ? schubert_double(w, n) : schubert_single(w);
    Polynomial pd_sum, bpd_sum;
    for (const PipeDream& pd : enumerate_pds(w, n)) pd_sum += double_version ? pd_weight_double(pd) : pd_weight_single(pd);
    for (const BumplessPipeDream& b : enumerate_bpds(w, n))
      bpd_sum += double_version ? bpd_weight_double(b) : bpd_weight_single(b);
    const bool ok = demazure == pd_sum && demazure == bpd_sum;
    out.push_back({w, {}, label, ok, demazure == pd_sum ? bpd_sum : pd_sum});
  }
  return out;
}

std::vector<IdentityCheck> verify_triple(int n) {
  std::vector<IdentityCheck> out;
  for (const Permutation& w : all_permutations(n)) {
    const Polynomial value = triple_convolution(w);
    const Polynomial expected = w.is_identity() ? Polynomial(1) : Polynomial();
    out.push_back({w, {}, "triple-convolution", value == expected, value});
  }
  return out;
}

}  // namespace schubert
