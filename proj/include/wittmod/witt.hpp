#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittmod/scalar.hpp"

namespace wittmod {

enum class Algebra {
  Witt,      // W_n = Der C[t^{+-1}]
  WittPlus,  // W_n^+ = Der C[t]
  Virasoro,  // central extension of W_1
};

const char* to_string(Algebra algebra);

inline constexpr int kMaxRank = 7;

/// Basis element t^k d_i (direction i is 1-based) or the Virasoro central
/// element C.
class WittTerm {
 public:
  static WittTerm derivation(std::span<const int> k, int direction);
  /// d_m = t^m d_1 in rank one.
  static WittTerm d(int m);
  static WittTerm central();

  bool is_central() const { return central_; }
  int rank() const { return rank_; }
  int direction() const { return direction_; }
  int exponent(int i) const { return k_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> exponents() const { return {k_.data(), static_cast<std::size_t>(rank_)}; }

  friend bool operator==(const WittTerm&, const WittTerm&) = default;
  /// Derivations ordered by direction then exponent vector; C sorts last.
  friend std::strong_ordering operator<=>(const WittTerm& x, const WittTerm& y);

 private:
  bool central_ = false;
  int rank_ = 0;
  int direction_ = 0;
  std::array<int, kMaxRank> k_{};
};

/// k in Z^n_{+,i}: k_i >= -1 and k_j >= 0 otherwise.
bool in_plus_domain(const WittTerm& t);

/// Whether `t` is a basis element of `algebra` in rank `n`.
bool admissible(const WittTerm& t, Algebra algebra, int n);

/// Finite linear combination of basis terms of one algebra.
class AlgElement {
 public:
  using Term = std::pair<WittTerm, Scalar>;

  AlgElement(Algebra algebra, int rank);
  static AlgElement basis(Algebra algebra, int rank, const WittTerm& t, const Scalar& c = Scalar(1));
  static AlgElement from_terms(Algebra algebra, int rank, std::vector<Term> terms);

  Algebra algebra() const { return algebra_; }
  int rank() const { return rank_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const WittTerm& t) const;

  AlgElement operator-() const;
  AlgElement& operator+=(const AlgElement& y);
  AlgElement& operator*=(const Scalar& c);
  friend AlgElement operator+(AlgElement x, const AlgElement& y) { return x += y; }
  friend AlgElement operator-(AlgElement x, const AlgElement& y) { return x += -y; }
  friend AlgElement operator*(const Scalar& c, AlgElement x) { return x *= c; }

  friend bool operator==(const AlgElement&, const AlgElement&) = default;

 private:
  void check_compatible(const AlgElement& y) const;

  Algebra algebra_;
  int rank_;
  std::vector<Term> terms_;
};

/// Default Virasoro cocycle scale: [d_i, d_j] carries delta_{i,-j} (i^3 - i) * scale * C.
Scalar virasoro_cocycle_scale();

/// Bracket of two basis elements:
///   [t^r d_i, t^s d_j] = s_i t^{r+s} d_j - r_j t^{r+s} d_i,
/// plus the central term for Virasoro. C is central.
AlgElement bracket_basis(const WittTerm& x, const WittTerm& y, Algebra algebra, int rank);
AlgElement bracket_basis(const WittTerm& x, const WittTerm& y, Algebra algebra, int rank,
                         const Scalar& cocycle_scale);

AlgElement bracket(const AlgElement& x, const AlgElement& y);
AlgElement bracket(const AlgElement& x, const AlgElement& y, const Scalar& cocycle_scale);

/// All basis terms of `algebra` with |k_j| <= kmax (C included for Virasoro),
/// in canonical order.
std::vector<WittTerm> basis_terms(Algebra algebra, int rank, int kmax);

}  // namespace wittmod
