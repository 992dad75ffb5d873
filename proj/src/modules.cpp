#include "wittmod/modules.hpp"

#include <algorithm>
#include <sstream>

#include "wittmod/error.hpp"

namespace wittmod {

const char* to_string(Family family) {
  switch (family) {
    case Family::Omega: return "omega";
    case Family::Gamma: return "gamma";
    case Family::OmegaS: return "omega-s";
    case Family::VirasoroOmega: return "virasoro-omega";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "omega") return Family::Omega;
  if (name == "gamma") return Family::Gamma;
  if (name == "omega-s") return Family::OmegaS;
  if (name == "virasoro-omega") return Family::VirasoroOmega;
  throw Error(ErrorCode::Config, "unknown module family: " + name);
}

ModuleSpec::ModuleSpec(Family family, int rank, std::vector<std::optional<Scalar>> lambda,
                       std::optional<Scalar> a, std::vector<int> subset)
    : family_(family), rank_(rank), lambda_(std::move(lambda)), a_(std::move(a)), subset_(std::move(subset)) {
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorCode::Config, "rank out of range");
  if ((family == Family::Gamma || family == Family::VirasoroOmega) && rank != 1) {
    throw Error(ErrorCode::Config, std::string(to_string(family)) + " requires n = 1");
  }
  if (lambda_.empty()) lambda_.resize(static_cast<std::size_t>(rank));
  if (static_cast<int>(lambda_.size()) != rank) {
    throw Error(ErrorCode::Config, "expected " + std::to_string(rank) + " lambda values");
  }
  for (const auto& l : lambda_) {
    if (l && l->is_zero()) throw Error(ErrorCode::ParameterDomain, "lambda_i must be nonzero");
  }
  if (family != Family::OmegaS && !subset_.empty()) {
    throw Error(ErrorCode::Config, "the index set S applies to omega-s only");
  }
  std::sort(subset_.begin(), subset_.end());
  subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
  for (int i : subset_) {
    if (i < 1 || i > rank) throw Error(ErrorCode::Config, "S must be a subset of {1..n}");
  }
}

bool ModuleSpec::in_subset(int i) const { return std::binary_search(subset_.begin(), subset_.end(), i); }

Algebra ModuleSpec::algebra() const {
  switch (family_) {
    case Family::Omega: return Algebra::Witt;
    case Family::Gamma:
    case Family::OmegaS: return Algebra::WittPlus;
    case Family::VirasoroOmega: return Algebra::Virasoro;
  }
  return Algebra::Witt;
}

bool ModuleSpec::concrete() const {
  return a_.has_value() && std::all_of(lambda_.begin(), lambda_.end(), [](const auto& l) { return l.has_value(); });
}

Poly ModuleSpec::a_poly() const {
  const VarContext ctx = context();
  return a_ ? Poly::constant(ctx, *a_) : Poly::variable(ctx, ctx.a());
}

Poly ModuleSpec::lambda_power(std::span<const int> k) const {
  const VarContext ctx = context();
  Monomial m;
  Scalar c(1);
  for (int i = 1; i <= rank_; ++i) {
    const int e = k[static_cast<std::size_t>(i - 1)];
    if (e == 0) continue;
    const auto& l = lambda_[static_cast<std::size_t>(i - 1)];
    if (l) {
      c *= l->pow(e);
    } else {
      m.set_exponent(ctx.lambda(i), e);
    }
  }
  return Poly::monomial(ctx, m, c);
}

bool ModuleSpec::admits(const WittTerm& t) const {
  if (t.rank() != rank_) return false;
  if (t.is_central()) return family_ == Family::VirasoroOmega;
  switch (family_) {
    case Family::Omega:
    case Family::VirasoroOmega: return true;
    case Family::Gamma:
    case Family::OmegaS: return in_plus_domain(t);
  }
  return false;
}

std::string ModuleSpec::describe() const {
  std::ostringstream os;
  os << to_string(family_) << "(n=" << rank_ << ", lambda=";
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    os << (i ? "," : "") << (lambda_[i] ? lambda_[i]->to_string() : "l" + std::to_string(i + 1));
  }
  os << ", a=" << (a_ ? a_->to_string() : "a");
  if (family_ == Family::OmegaS) {
    os << ", S={";
    for (std::size_t i = 0; i < subset_.size(); ++i) os << (i ? "," : "") << subset_[i];
    os << "}";
  }
  os << ")";
  return os.str();
}

namespace {

void require_admits(const ModuleSpec& spec, const WittTerm& t) {
  if (t.rank() != spec.rank()) throw Error(ErrorCode::RankMismatch, "term rank differs from module rank");
  if (t.is_central() && spec.family() != Family::VirasoroOmega) {
    throw Error(ErrorCode::CentralOutsideVirasoro, "C acts only on virasoro-omega");
  }
  if (!spec.admits(t)) {
    throw Error(ErrorCode::InadmissibleTerm,
                std::string("no action of this term is defined on ") + to_string(spec.family()));
  }
}

// x_i - k_i (a + 1)
Poly linear_factor(const ModuleSpec& spec, int i, int k_i) {
  const VarContext ctx = spec.context();
  return Poly::variable(ctx, ctx.x(i)) - Scalar(k_i) * (spec.a_poly() + Poly::constant(ctx, 1));
}

// The polynomial multiplying f(x - k) in t^k d_i . f.
Poly multiplier(const ModuleSpec& spec, const WittTerm& t) {
  const VarContext ctx = spec.context();
  const int i = t.direction();
  const auto k = t.exponents();
  Poly m = spec.lambda_power(k);
  switch (spec.family()) {
    case Family::Omega:
    case Family::VirasoroOmega:
      return m * linear_factor(spec, i, t.exponent(i));
    case Family::Gamma: {
      const int kk = t.exponent(1);
      if (kk == -1) return m;
      // f(x-k)(x-k(a+1)) prod_{i=0}^{k-1}(x+a-i)
      return m * linear_factor(spec, 1, kk) * falling_product(ctx, 1, kk, spec.a_poly());
    }
    case Family::OmegaS: {
      const bool special = t.exponent(i) == -1 && spec.in_subset(i);
      Poly phi = special ? Poly::constant(ctx, 1) : linear_factor(spec, i, t.exponent(i));
      for (int q : spec.subset()) {
        if (special && q == i) continue;
        phi *= falling_product(ctx, q, t.exponent(q), spec.a_poly());
      }
      return m * phi;
    }
  }
  return m;
}

}  // namespace

ModuleElement act_basis(const ModuleSpec& spec, const WittTerm& t, const ModuleElement& f) {
  require_admits(spec, t);
  if (!(f.context() == spec.context())) throw Error(ErrorCode::ContextMismatch, "element from another context");
  if (t.is_central()) return Poly(spec.context());
  return shift_sub(f, t.exponents()) * multiplier(spec, t);
}

ModuleElement act(const ModuleSpec& spec, const AlgElement& x, const ModuleElement& f) {
  if (x.rank() != spec.rank()) throw Error(ErrorCode::RankMismatch, "element rank differs from module rank");
  Poly result(spec.context());
  for (const auto& [t, c] : x.terms()) result += c * act_basis(spec, t, f);
  return result;
}

ModuleElement act_on_generator(const ModuleSpec& spec, const WittTerm& t) {
  Poly r = act_basis(spec, t, Poly::constant(spec.context(), 1));
  if (!t.is_central() && r.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "t^k d_i . v vanished; the module structure is broken");
  }
  return r;
}

std::vector<ModuleElement> test_monomials(const VarContext& ctx, int degmax) {
  std::vector<ModuleElement> out;
  const int n = ctx.rank();
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    int total = 0;
    for (int v : e) total += v;
    if (total <= degmax) {
      Monomial m;
      for (int i = 1; i <= n; ++i) m.set_exponent(ctx.x(i), e[static_cast<std::size_t>(i - 1)]);
      out.push_back(Poly::monomial(ctx, m));
    }
    std::size_t pos = 0;
    while (pos < e.size() && e[pos] == degmax) e[pos++] = 0;
    if (pos == e.size()) break;
    ++e[pos];
  }
  std::sort(out.begin(), out.end(), [](const Poly& l, const Poly& r) { return l.leading().first < r.leading().first; });
  return out;
}

}  // namespace wittmod
