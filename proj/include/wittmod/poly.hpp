#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittmod/scalar.hpp"

namespace wittmod {

enum class VarKind {
  Module,        // x_i, exponent >= 0
  LaurentParam,  // lambda_i, any integer exponent
  PolyParam,     // a, b and auxiliary coefficients c_j, exponent >= 0
};

/// Variable layout for rank n: x1..xn, l1..ln, a, b, then optional
/// auxiliary coefficient variables c0..c{m-1}. Variable ids follow this
/// order, which is also the lex order used for canonical form.
class VarContext {
 public:
  static constexpr int kMaxVars = 16;

  explicit VarContext(int rank, int coeff_vars = 0);

  int rank() const { return rank_; }
  int coeff_vars() const { return coeff_vars_; }
  int size() const { return 2 * rank_ + 2 + coeff_vars_; }

  /// 1-based index, matching x_1..x_n.
  int x(int i) const { return i - 1; }
  int lambda(int i) const { return rank_ + i - 1; }
  int a() const { return 2 * rank_; }
  int b() const { return 2 * rank_ + 1; }
  /// 0-based index c_0..c_{m-1}.
  int coeff(int j) const { return 2 * rank_ + 2 + j; }

  VarKind kind(int var) const;
  std::string name(int var) const;

  friend bool operator==(const VarContext&, const VarContext&) = default;

 private:
  int rank_;
  int coeff_vars_;
};

/// Power product over the variables of a VarContext. Ordered graded-lex:
/// total degree first, then the exponent of the lowest variable id wins.
class Monomial {
 public:
  Monomial() = default;

  static Monomial single(int var, int exponent);

  int exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
  void set_exponent(int var, int exponent);
  int total_degree() const { return total_; }
  bool is_one() const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y);

 private:
  std::array<std::int16_t, VarContext::kMaxVars> exps_{};
  std::int16_t total_ = 0;
};

/// Returned by degree() for the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Canonical sparse Laurent polynomial with exact rational coefficients.
/// Terms are kept in strictly decreasing monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit Poly(VarContext ctx) : ctx_(ctx) {}

  static Poly constant(VarContext ctx, const Scalar& c);
  static Poly variable(VarContext ctx, int var, int exponent = 1);
  static Poly monomial(VarContext ctx, const Monomial& m, const Scalar& c = Scalar(1));
  /// Canonicalizes arbitrary (unsorted, duplicated, zero) terms.
  static Poly from_terms(VarContext ctx, std::vector<Term> terms);

  const VarContext& context() const { return ctx_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Largest term in canonical order; precondition: nonzero.
  const Term& leading() const { return terms_.front(); }

  Scalar coeff(const Monomial& m) const;
  Scalar constant_term() const { return coeff(Monomial()); }

  Poly operator-() const;
  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Poly p, const Scalar& c) { return p *= c; }
  friend Poly operator*(const Scalar& c, Poly p) { return p *= c; }

  Poly pow(int exponent) const;

  friend bool operator==(const Poly& p, const Poly& q);

 private:
  void check_context(const Poly& q) const;

  VarContext ctx_;
  std::vector<Term> terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

/// Replaces every module variable x_i by x_i - k_i. `k.size()` must equal the rank.
Poly shift_sub(const Poly& p, std::span<const int> k);

/// prod_{p=0}^{m-1} (x_q + offset - p); the empty product (m = 0) is 1.
/// `offset` must not involve module variables.
Poly falling_product(const VarContext& ctx, int q, int m, const Poly& offset);

/// Substitutes concrete values for parameter variables (lambda_i, a, b, c_j).
/// A lambda_i bound to zero is rejected.
Poly eval_params(const Poly& p, const std::map<int, Scalar>& bindings);

/// Replaces one variable (exponent must be nonnegative in p) by a polynomial.
Poly substitute(const Poly& p, int var, const Poly& replacement);

Scalar coeff_of(const Poly& p, const Monomial& m);
/// Total degree, or kMinusInfinity for the zero polynomial.
int degree(const Poly& p);
int degree(const Poly& p, int var);

}  // namespace wittmod
