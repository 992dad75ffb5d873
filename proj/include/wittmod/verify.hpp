#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wittmod/modules.hpp"
#include "wittmod/report.hpp"
#include "wittmod/subspace.hpp"

namespace wittmod {

struct CheckConfig {
  ModuleSpec spec;
  int kmax = 2;    // |k_j| <= kmax for every generator
  int degmax = 2;  // test monomials have total degree <= degmax
  int depth = 3;   // closure word length
  int jobs = 1;    // worker threads; results never depend on it

  void validate() const;
};

/// A module structure as the verifier sees it: a bracket on basis terms and
/// an action of basis terms. The standard model is the library's; tests
/// swap in mutated callables to make sure the checks can fail.
struct ModuleModel {
  using ActFn = std::function<Poly(const WittTerm&, const Poly&)>;
  using BracketFn = std::function<AlgElement(const WittTerm&, const WittTerm&)>;

  ModuleSpec spec;
  ActFn act;
  BracketFn bracket;

  static ModuleModel standard(const ModuleSpec& spec);

  Poly act_element(const AlgElement& x, const Poly& f) const;
};

/// Module axiom [x,y].f = x.(y.f) - y.(x.f) over all ordered pairs of
/// admissible basis terms within kmax and all monomials of degree <= degmax.
Report verify_axioms(const CheckConfig& cfg);
Report verify_axioms(const CheckConfig& cfg, const ModuleModel& model);

/// t^k d_i . f = f(x - k) * (t^k d_i . 1), and t^k d_i . 1 != 0.
Report verify_lemma1_shift(const CheckConfig& cfg);
Report verify_lemma1_shift(const CheckConfig& cfg, const ModuleModel& model);

/// Gamma(lambda, 0) and Gamma(lambda, -1) have literally equal actions on the
/// generator for -1 <= k <= kmax.
Report gamma_coincidence(int kmax);

/// Exact polynomial identities from the classification of W_1^+ structures.
Report theorem2_suite();

struct Theorem3Options {
  Scalar cocycle_scale = virasoro_cocycle_scale();
  int degmax = 3;
};

/// The d_{-2} derivation and the deduction that C acts by zero.
Report theorem3_suite(const Theorem3Options& options = {});

/// Echelon basis of the span of all words of at most cfg.depth generators
/// (|k_j| <= cfg.kmax) applied to the seeds, seeds included.
SubspaceBasis submodule_closure(const ModuleSpec& spec, std::span<const Poly> seeds, const CheckConfig& cfg);

/// Bounded-depth evidence for (non-)simplicity.
Report simplicity_probe(const ModuleSpec& spec, std::span<const Poly> seeds, const CheckConfig& cfg);

/// Name of the invariance certificate attached to EVIDENCE_NOT_SIMPLE.
inline constexpr const char* kZeroConstantTermCertificate = "zero-constant-term-invariance";

namespace kernels {

/// Outcome of one sweep. `first_failure` is the failure with the smallest
/// (x, y, f) index triple, so serial and parallel runs agree exactly.
struct SweepResult {
  std::uint64_t checked = 0;
  std::optional<Counterexample> first_failure;
};

SweepResult axiom_sweep_serial(const ModuleModel& model, std::span<const WittTerm> terms, std::span<const Poly> fs);
SweepResult axiom_sweep_parallel(const ModuleModel& model, std::span<const WittTerm> terms,
                                 std::span<const Poly> fs, int jobs);

SweepResult shift_sweep_serial(const ModuleModel& model, std::span<const WittTerm> terms, std::span<const Poly> fs);
SweepResult shift_sweep_parallel(const ModuleModel& model, std::span<const WittTerm> terms,
                                 std::span<const Poly> fs, int jobs);

}  // namespace kernels

}  // namespace wittmod
