#pragma once

#include <vector>

#include "wittmod/poly.hpp"

namespace wittmod {

/// Reduced row-echelon basis of a finite-dimensional space of polynomials
/// with numeric coefficients. Rows have distinct leading monomials, each
/// leading coefficient is 1, and no row contains another row's leading
/// monomial.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(VarContext ctx) : ctx_(ctx) {}

  /// Adds `p` to the span. Returns the reduced new direction, or zero when
  /// `p` was already in the span.
  Poly insert(const Poly& p);
  /// Remainder of `p` modulo the span.
  Poly reduce(const Poly& p) const;
  bool contains(const Poly& p) const { return reduce(p).is_zero(); }

  std::size_t dimension() const { return rows_.size(); }
  /// Rows ordered by decreasing leading monomial.
  const std::vector<Poly>& rows() const { return rows_; }
  const VarContext& context() const { return ctx_; }

 private:
  VarContext ctx_;
  std::vector<Poly> rows_;
};

}  // namespace wittmod
