#include "wittmod/poly.hpp"

#include <algorithm>

#include "wittmod/error.hpp"

namespace wittmod {

VarContext::VarContext(int rank, int coeff_vars) : rank_(rank), coeff_vars_(coeff_vars) {
  if (rank < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  if (coeff_vars < 0 || 2 * rank + 2 + coeff_vars > kMaxVars) {
    throw Error(ErrorCode::InvalidArgument,
                "variable context too large (at most " + std::to_string(kMaxVars) + " variables)");
  }
}

VarKind VarContext::kind(int var) const {
  if (var < rank_) return VarKind::Module;
  if (var < 2 * rank_) return VarKind::LaurentParam;
  return VarKind::PolyParam;
}

std::string VarContext::name(int var) const {
  if (var < rank_) return "x" + std::to_string(var + 1);
  if (var < 2 * rank_) return "l" + std::to_string(var - rank_ + 1);
  if (var == a()) return "a";
  if (var == b()) return "b";
  return "c" + std::to_string(var - coeff(0));
}

Monomial Monomial::single(int var, int exponent) {
  Monomial m;
  m.set_exponent(var, exponent);
  return m;
}

void Monomial::set_exponent(int var, int exponent) {
  if (exponent < std::numeric_limits<std::int16_t>::min() ||
      exponent > std::numeric_limits<std::int16_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "exponent out of range");
  }
  auto& slot = exps_[static_cast<std::size_t>(var)];
  total_ = static_cast<std::int16_t>(total_ - slot + exponent);
  slot = static_cast<std::int16_t>(exponent);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int16_t e) { return e == 0; });
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial r;
  for (std::size_t v = 0; v < x.exps_.size(); ++v) {
    r.exps_[v] = static_cast<std::int16_t>(x.exps_[v] + y.exps_[v]);
  }
  r.total_ = static_cast<std::int16_t>(x.total_ + y.total_);
  return r;
}

std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
  if (x.total_ != y.total_) return x.total_ <=> y.total_;
  for (std::size_t v = 0; v < x.exps_.size(); ++v) {
    if (x.exps_[v] != y.exps_[v]) return x.exps_[v] <=> y.exps_[v];
  }
  return std::strong_ordering::equal;
}

namespace {

void check_monomial(const VarContext& ctx, const Monomial& m) {
  for (int v = 0; v < VarContext::kMaxVars; ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (v >= ctx.size()) throw Error(ErrorCode::UnknownVariable, "variable outside context");
    if (e < 0 && ctx.kind(v) != VarKind::LaurentParam) {
      throw Error(ErrorCode::NegativeModuleExponent,
                  "negative exponent on " + ctx.name(v) + " is not allowed");
    }
  }
}

// Sorts descending, merges equal monomials, drops zeros.
void canonicalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& l, const Poly::Term& r) { return l.first > r.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Scalar c = terms[i].second;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].first == terms[i].first; ++j) c += terms[j].second;
    if (!c.is_zero()) {
      terms[out].first = terms[i].first;
      terms[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly Poly::constant(VarContext ctx, const Scalar& c) {
  Poly p(ctx);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(), c);
  return p;
}

Poly Poly::variable(VarContext ctx, int var, int exponent) {
  return monomial(ctx, Monomial::single(var, exponent));
}

Poly Poly::monomial(VarContext ctx, const Monomial& m, const Scalar& c) {
  check_monomial(ctx, m);
  Poly p(ctx);
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(VarContext ctx, std::vector<Term> terms) {
  for (const auto& t : terms) check_monomial(ctx, t.first);
  canonicalize(terms);
  Poly p(ctx);
  p.terms_ = std::move(terms);
  return p;
}

Scalar Poly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Scalar(0);
}

void Poly::check_context(const Poly& q) const {
  if (!(ctx_ == q.ctx_)) throw Error(ErrorCode::ContextMismatch, "polynomials from different contexts");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly& Poly::operator+=(const Poly& q) {
  check_context(q);
  if (q.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = q.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto i = terms_.begin();
  auto j = q.terms_.begin();
  while (i != terms_.end() && j != q.terms_.end()) {
    auto c = i->first <=> j->first;
    if (c > 0) {
      out.push_back(std::move(*i++));
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Scalar s = i->second + j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != q.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) { return *this += -q; }

Poly operator*(const Poly& p, const Poly& q) {
  p.check_context(q);
  Poly r(p.ctx_);
  if (p.terms_.empty() || q.terms_.empty()) return r;
  r.terms_.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) r.terms_.emplace_back(mp * mq, cp * cq);
  }
  if (p.terms_.size() > 1 && q.terms_.size() > 1) canonicalize(r.terms_);
  return r;
}

Poly& Poly::operator*=(const Poly& q) { return *this = *this * q; }

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative power of a polynomial");
  Poly result = constant(ctx_, 1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const Poly& p, const Poly& q) { return p.ctx_ == q.ctx_ && p.terms_ == q.terms_; }

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly shift_sub(const Poly& p, std::span<const int> k) {
  const VarContext& ctx = p.context();
  if (static_cast<int>(k.size()) != ctx.rank()) {
    throw Error(ErrorCode::InvalidArgument, "shift vector length must equal the rank");
  }
  if (std::all_of(k.begin(), k.end(), [](int v) { return v == 0; })) return p;

  std::vector<Poly::Term> out;
  std::vector<Poly::Term> partial;
  std::vector<Poly::Term> next;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    for (int i = 1; i <= ctx.rank(); ++i) {
      if (k[static_cast<std::size_t>(i - 1)] != 0) rest.set_exponent(ctx.x(i), 0);
    }
    partial.assign(1, {rest, c});
    for (int i = 1; i <= ctx.rank(); ++i) {
      const int shift = k[static_cast<std::size_t>(i - 1)];
      const int e = m.exponent(ctx.x(i));
      if (shift == 0 || e == 0) continue;
      // (x_i - shift)^e = sum_j C(e,j) x_i^j (-shift)^(e-j)
      next.clear();
      Scalar binom(1);
      const Scalar neg_shift(-shift);
      for (int j = e; j >= 0; --j) {
        Scalar factor = binom * neg_shift.pow(e - j);
        for (const auto& [pm, pc] : partial) {
          Monomial nm = pm;
          nm.set_exponent(ctx.x(i), j);
          next.emplace_back(nm, pc * factor);
        }
        binom = binom * Scalar(j) / Scalar(e - j + 1);
      }
      partial.swap(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return Poly::from_terms(ctx, std::move(out));
}

Poly falling_product(const VarContext& ctx, int q, int m, const Poly& offset) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "falling product length must be nonnegative");
  if (q < 1 || q > ctx.rank()) throw Error(ErrorCode::InvalidArgument, "falling product index out of range");
  for (const auto& [mono, c] : offset.terms()) {
    for (int i = 1; i <= ctx.rank(); ++i) {
      if (mono.exponent(ctx.x(i)) != 0) {
        throw Error(ErrorCode::InvalidArgument, "falling product offset must not involve module variables");
      }
    }
  }
  Poly base = Poly::variable(ctx, ctx.x(q)) + offset;
  Poly result = Poly::constant(ctx, 1);
  for (int p = 0; p < m; ++p) result *= base - Poly::constant(ctx, p);
  return result;
}

Poly eval_params(const Poly& p, const std::map<int, Scalar>& bindings) {
  const VarContext& ctx = p.context();
  for (const auto& [var, value] : bindings) {
    if (var < 0 || var >= ctx.size()) throw Error(ErrorCode::UnknownVariable, "binding for unknown variable");
    if (ctx.kind(var) == VarKind::Module) {
      throw Error(ErrorCode::InvalidArgument, "module variable " + ctx.name(var) + " cannot be bound");
    }
    if (ctx.kind(var) == VarKind::LaurentParam && value.is_zero()) {
      throw Error(ErrorCode::ParameterDomain, ctx.name(var) + " must be nonzero");
    }
  }
  std::vector<Poly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial nm = m;
    Scalar nc = c;
    for (const auto& [var, value] : bindings) {
      int e = m.exponent(var);
      if (e == 0) continue;
      nc *= value.pow(e);
      nm.set_exponent(var, 0);
    }
    out.emplace_back(nm, nc);
  }
  return Poly::from_terms(ctx, std::move(out));
}

Poly substitute(const Poly& p, int var, const Poly& replacement) {
  const VarContext& ctx = p.context();
  Poly result(ctx);
  std::vector<Poly> powers{Poly::constant(ctx, 1)};
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(var);
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "cannot substitute into a negative power");
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * replacement);
    Monomial rest = m;
    rest.set_exponent(var, 0);
    result += Poly::monomial(ctx, rest, c) * powers[static_cast<std::size_t>(e)];
  }
  return result;
}

Scalar coeff_of(const Poly& p, const Monomial& m) { return p.coeff(m); }

int degree(const Poly& p) {
  if (p.is_zero()) return kMinusInfinity;
  return p.leading().first.total_degree();
}

int degree(const Poly& p, int var) {
  if (p.is_zero()) return kMinusInfinity;
  int d = std::numeric_limits<int>::min();
  for (const auto& t : p.terms()) d = std::max(d, t.first.exponent(var));
  return d;
}

}  // namespace wittmod
