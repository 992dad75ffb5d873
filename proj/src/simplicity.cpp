#include <chrono>
#include <exception>

#include <omp.h>

#include "wittmod/error.hpp"
#include "wittmod/exprio.hpp"
#include "wittmod/verify.hpp"

namespace wittmod {

namespace {

using Clock = std::chrono::steady_clock;

struct Closure {
  SubspaceBasis basis;
  int reached_one_at = -1;  // word length at which 1 entered the span, or -1
  std::uint64_t actions = 0;
};

std::vector<WittTerm> closure_generators(const ModuleSpec& spec, int kmax) {
  std::vector<WittTerm> out;
  for (const auto& t : basis_terms(spec.algebra(), spec.rank(), kmax)) {
    // C acts by zero and contributes nothing to a span.
    if (spec.admits(t) && !t.is_central()) out.push_back(t);
  }
  return out;
}

void require_concrete(const ModuleSpec& spec) {
  if (!spec.concrete()) {
    throw Error(ErrorCode::Config, "submodule closure needs concrete lambda and a: " + spec.describe());
  }
}

// V_0 = span(seeds), V_{j+1} = V_j + sum_t t.V_j. Only the directions new at
// level j need to be acted on, since t.V_{j-1} is already inside V_j.
Closure close(const ModuleSpec& spec, const std::vector<WittTerm>& gens, std::span<const Poly> seeds, int depth,
              bool stop_at_one) {
  const VarContext ctx = spec.context();
  const Poly one = Poly::constant(ctx, 1);
  Closure c{SubspaceBasis(ctx)};
  std::vector<Poly> frontier;
  for (const Poly& s : seeds) {
    Poly fresh = c.basis.insert(s);
    if (!fresh.is_zero()) frontier.push_back(std::move(fresh));
  }
  if (c.basis.contains(one)) c.reached_one_at = 0;
  for (int level = 1; level <= depth && !frontier.empty(); ++level) {
    if (stop_at_one && c.reached_one_at >= 0) break;
    std::vector<Poly> next;
    for (const Poly& v : frontier) {
      for (const WittTerm& t : gens) {
        ++c.actions;
        Poly fresh = c.basis.insert(act_basis(spec, t, v));
        if (!fresh.is_zero()) next.push_back(std::move(fresh));
      }
    }
    frontier = std::move(next);
    if (c.reached_one_at < 0 && c.basis.contains(one)) c.reached_one_at = level;
  }
  return c;
}

// Every closure row has zero constant term, and so does every generator
// image of every row.
bool zero_constant_term_invariant(const ModuleSpec& spec, const std::vector<WittTerm>& gens,
                                  const SubspaceBasis& basis, std::uint64_t& checks) {
  for (const Poly& row : basis.rows()) {
    ++checks;
    if (!row.constant_term().is_zero()) return false;
  }
  for (const Poly& row : basis.rows()) {
    for (const WittTerm& t : gens) {
      ++checks;
      if (!act_basis(spec, t, row).constant_term().is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

SubspaceBasis submodule_closure(const ModuleSpec& spec, std::span<const Poly> seeds, const CheckConfig& cfg) {
  cfg.validate();
  require_concrete(spec);
  return close(spec, closure_generators(spec, cfg.kmax), seeds, cfg.depth, false).basis;
}

Report simplicity_probe(const ModuleSpec& spec, std::span<const Poly> seeds, const CheckConfig& cfg) {
  cfg.validate();
  require_concrete(spec);
  if (seeds.empty()) throw Error(ErrorCode::Config, "simplicity probe needs at least one seed");
  const auto start = Clock::now();
  const auto gens = closure_generators(spec, cfg.kmax);

  struct SeedOutcome {
    int reached = -1;
    std::size_t dim = 0;
    bool certified = false;
    std::uint64_t checks = 0;
  };
  const auto n = static_cast<std::int64_t>(seeds.size());
  std::vector<SeedOutcome> outcomes(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.jobs)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      const auto idx = static_cast<std::size_t>(i);
      Closure c = close(spec, gens, seeds.subspan(idx, 1), cfg.depth, true);
      SeedOutcome& out = outcomes[idx];
      out.reached = c.reached_one_at;
      out.dim = c.basis.dimension();
      out.checks = c.actions;
      if (out.reached < 0) out.certified = zero_constant_term_invariant(spec, gens, c.basis, out.checks);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Report r;
  r.check_name = "simplicity_probe";
  r.spec = spec.describe();
  bool all_reached = true;
  bool any_certified = false;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto& o = outcomes[i];
    r.stats.pairs_checked += o.checks;
    const std::string seed = "seed " + print_poly(seeds[i]) + ": ";
    if (o.reached >= 0) {
      r.witness.push_back(seed + "1 in closure at word length " + std::to_string(o.reached));
      continue;
    }
    all_reached = false;
    std::string line = seed + "1 not in closure (dim " + std::to_string(o.dim) + ", depth " +
                       std::to_string(cfg.depth) + ")";
    if (o.certified) {
      any_certified = true;
      line += "; closure rows and all generator images have zero constant term";
    }
    r.witness.push_back(line);
  }
  if (all_reached) {
    r.status = Status::EvidenceReachedOne;
  } else if (any_certified) {
    r.status = Status::EvidenceNotSimple;
    r.certificate = kZeroConstantTermCertificate;
  } else {
    r.status = Status::Inconclusive;
  }
  r.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return r;
}

}  // namespace wittmod
