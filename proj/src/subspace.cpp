#include "wittmod/subspace.hpp"

#include <algorithm>

#include "wittmod/error.hpp"

namespace wittmod {

namespace {

void require_numeric(const Poly& p) {
  const VarContext& ctx = p.context();
  for (const auto& t : p.terms()) {
    for (int v = ctx.rank(); v < ctx.size(); ++v) {
      if (t.first.exponent(v) != 0) {
        throw Error(ErrorCode::Config, "span computations need concrete parameters; found " + ctx.name(v));
      }
    }
  }
}

}  // namespace

Poly SubspaceBasis::reduce(const Poly& p) const {
  if (!(p.context() == ctx_)) throw Error(ErrorCode::ContextMismatch, "polynomial from another context");
  Poly r = p;
  // Rows are in decreasing leading order and fully reduced against each
  // other, so one pass eliminates every pivot.
  for (const auto& row : rows_) {
    Scalar c = r.coeff(row.leading().first);
    if (!c.is_zero()) r -= c * row;
  }
  return r;
}

Poly SubspaceBasis::insert(const Poly& p) {
  require_numeric(p);
  Poly r = reduce(p);
  if (r.is_zero()) return r;
  r *= r.leading().second.inverse();
  const Monomial& pivot = r.leading().first;
  for (auto& row : rows_) {
    Scalar c = row.coeff(pivot);
    if (!c.is_zero()) row -= c * r;
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const Poly& row, const Monomial& m) { return row.leading().first > m; });
  rows_.insert(pos, r);
  return r;
}

}  // namespace wittmod
