#include "wittmod/verify.hpp"

#include <chrono>

#include "wittmod/error.hpp"
#include "wittmod/exprio.hpp"

namespace wittmod {

void CheckConfig::validate() const {
  if (kmax < 1) throw Error(ErrorCode::Config, "kmax must be at least 1");
  if (degmax < 0) throw Error(ErrorCode::Config, "degmax must be nonnegative");
  if (depth < 1) throw Error(ErrorCode::Config, "depth must be at least 1");
  if (jobs < 1) throw Error(ErrorCode::Config, "jobs must be at least 1");
}

ModuleModel ModuleModel::standard(const ModuleSpec& spec) {
  ModuleModel model{spec, nullptr, nullptr};
  model.act = [spec](const WittTerm& t, const Poly& f) { return act_basis(spec, t, f); };
  model.bracket = [algebra = spec.algebra(), n = spec.rank()](const WittTerm& x, const WittTerm& y) {
    return bracket_basis(x, y, algebra, n);
  };
  return model;
}

Poly ModuleModel::act_element(const AlgElement& x, const Poly& f) const {
  Poly result(spec.context());
  for (const auto& [t, c] : x.terms()) result += c * act(t, f);
  return result;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<WittTerm> generators(const ModuleSpec& spec, int kmax) {
  std::vector<WittTerm> out;
  for (const auto& t : basis_terms(spec.algebra(), spec.rank(), kmax)) {
    if (spec.admits(t)) out.push_back(t);
  }
  return out;
}

Report from_sweep(std::string name, const ModuleSpec& spec, const kernels::SweepResult& sweep,
                  Clock::time_point start) {
  Report r;
  r.check_name = std::move(name);
  r.spec = spec.describe();
  r.status = sweep.first_failure ? Status::Fail : Status::Pass;
  r.counterexample = sweep.first_failure;
  r.stats.pairs_checked = sweep.checked;
  r.stats.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace

Report verify_axioms(const CheckConfig& cfg) { return verify_axioms(cfg, ModuleModel::standard(cfg.spec)); }

Report verify_axioms(const CheckConfig& cfg, const ModuleModel& model) {
  cfg.validate();
  const auto start = Clock::now();
  const auto terms = generators(model.spec, cfg.kmax);
  const auto fs = test_monomials(model.spec.context(), cfg.degmax);
  const auto sweep = cfg.jobs > 1 ? kernels::axiom_sweep_parallel(model, terms, fs, cfg.jobs)
                                  : kernels::axiom_sweep_serial(model, terms, fs);
  return from_sweep("verify_axioms", model.spec, sweep, start);
}

Report verify_lemma1_shift(const CheckConfig& cfg) {
  return verify_lemma1_shift(cfg, ModuleModel::standard(cfg.spec));
}

Report verify_lemma1_shift(const CheckConfig& cfg, const ModuleModel& model) {
  cfg.validate();
  const auto start = Clock::now();
  const auto terms = generators(model.spec, cfg.kmax);
  const auto fs = test_monomials(model.spec.context(), cfg.degmax);
  const auto sweep = cfg.jobs > 1 ? kernels::shift_sweep_parallel(model, terms, fs, cfg.jobs)
                                  : kernels::shift_sweep_serial(model, terms, fs);
  return from_sweep("verify_lemma1_shift", model.spec, sweep, start);
}

Report gamma_coincidence(int kmax) {
  if (kmax < 1) throw Error(ErrorCode::Config, "kmax must be at least 1");
  const auto start = Clock::now();
  const ModuleSpec at_zero(Family::Gamma, 1, {}, Scalar(0));
  const ModuleSpec at_minus_one(Family::Gamma, 1, {}, Scalar(-1));
  Report r;
  r.check_name = "gamma_coincidence";
  r.spec = "gamma(n=1, lambda=l1, a=0 vs a=-1)";
  for (int k = -1; k <= kmax && !r.counterexample; ++k) {
    const WittTerm t = WittTerm::d(k);
    ++r.stats.pairs_checked;
    Poly lhs = act_on_generator(at_zero, t);
    Poly rhs = act_on_generator(at_minus_one, t);
    if (!(lhs == rhs)) {
      r.counterexample = Counterexample{print_term(t), "", "1", print_poly(lhs), print_poly(rhs)};
    }
  }
  r.status = r.counterexample ? Status::Fail : Status::Pass;
  r.stats.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace wittmod
