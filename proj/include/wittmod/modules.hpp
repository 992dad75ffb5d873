#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wittmod/poly.hpp"
#include "wittmod/witt.hpp"

namespace wittmod {

enum class Family {
  Omega,          // Omega(Lambda_n, a), a W_n-module
  Gamma,          // Gamma(lambda, a), a W_1^+-module
  OmegaS,         // Omega(Lambda_n, a, S), a W_n^+-module
  VirasoroOmega,  // Omega(lambda, a) as a Virasoro module, C acting by 0
};

const char* to_string(Family family);
Family parse_family(const std::string& name);

/// Selects one module structure on C[x_1..x_n]. Unset lambda_i / a are
/// symbolic (carried as the variables l_i / a of the context).
class ModuleSpec {
 public:
  ModuleSpec(Family family, int rank, std::vector<std::optional<Scalar>> lambda = {},
             std::optional<Scalar> a = std::nullopt, std::vector<int> subset = {});

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const std::vector<std::optional<Scalar>>& lambda() const { return lambda_; }
  const std::optional<Scalar>& a() const { return a_; }
  /// Sorted 1-based indices; meaningful for OmegaS only.
  const std::vector<int>& subset() const { return subset_; }
  bool in_subset(int i) const;

  Algebra algebra() const;
  VarContext context() const { return VarContext(rank_); }
  /// True when every parameter is bound to a number.
  bool concrete() const;

  /// The parameter a as a polynomial (a constant or the variable a).
  Poly a_poly() const;
  /// Lambda_n^k = lambda_1^{k_1} ... lambda_n^{k_n}, a Laurent monomial in
  /// symbolic mode.
  Poly lambda_power(std::span<const int> k) const;

  bool admits(const WittTerm& t) const;

  std::string describe() const;

 private:
  Family family_;
  int rank_;
  std::vector<std::optional<Scalar>> lambda_;
  std::optional<Scalar> a_;
  std::vector<int> subset_;
};

/// Elements of the module are polynomials in x_1..x_n (parameters may
/// appear as coefficients in symbolic mode); the generator v is 1.
using ModuleElement = Poly;

/// Action of one basis term, exactly as each family defines it.
ModuleElement act_basis(const ModuleSpec& spec, const WittTerm& t, const ModuleElement& f);

/// Linear extension of act_basis.
ModuleElement act(const ModuleSpec& spec, const AlgElement& x, const ModuleElement& f);

/// t . 1; never zero for derivation terms.
ModuleElement act_on_generator(const ModuleSpec& spec, const WittTerm& t);

/// All monomials in x_1..x_n of total degree <= degmax, ascending.
std::vector<ModuleElement> test_monomials(const VarContext& ctx, int degmax);

}  // namespace wittmod
