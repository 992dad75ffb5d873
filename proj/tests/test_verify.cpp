#include <gtest/gtest.h>

#include <random>

#include "wittmod/error.hpp"
#include "wittmod/exprio.hpp"
#include "wittmod/verify.hpp"

using namespace wittmod;

namespace {

Poly P(const std::string& s, int rank = 1) { return parse_poly(s, VarContext(rank)); }

CheckConfig cfg(ModuleSpec spec, int kmax, int degmax, int depth = 3, int jobs = 1) {
  return CheckConfig{std::move(spec), kmax, degmax, depth, jobs};
}

ModuleSpec concrete_omega(int n, std::vector<Scalar> lambda, Scalar a) {
  std::vector<std::optional<Scalar>> l(lambda.begin(), lambda.end());
  return ModuleSpec(Family::Omega, n, l, a);
}

ModuleModel mutated_square(const ModuleSpec& spec) {
  ModuleModel model = ModuleModel::standard(spec);
  model.act = [spec](const WittTerm& t, const Poly& f) {
    const VarContext ctx = spec.context();
    const int i = t.direction();
    const Scalar k(t.exponent(i));
    const Poly lin = Poly::variable(ctx, ctx.x(i)) - k * k * (spec.a_poly() + Poly::constant(ctx, 1));
    return spec.lambda_power(t.exponents()) * lin * shift_sub(f, t.exponents());
  };
  return model;
}

}  // namespace

TEST(CheckConfig, Validation) {
  EXPECT_THROW(cfg(ModuleSpec(Family::Omega, 1), 0, 1).validate(), Error);
  EXPECT_THROW(cfg(ModuleSpec(Family::Omega, 1), 1, -1).validate(), Error);
  EXPECT_THROW(cfg(ModuleSpec(Family::Omega, 1), 1, 1, 0).validate(), Error);
  EXPECT_THROW(cfg(ModuleSpec(Family::Omega, 1), 1, 1, 1, 0).validate(), Error);
}

TEST(VerifyAxioms, Examples) {
  EXPECT_EQ(verify_axioms(cfg(ModuleSpec(Family::Omega, 2), 2, 2)).status, Status::Pass);
  EXPECT_EQ(verify_axioms(cfg(ModuleSpec(Family::Gamma, 1), 3, 2)).status, Status::Pass);
}

TEST(VerifyAxioms, MutatedMultiplierFails) {
  const ModuleSpec spec(Family::Omega, 2);
  const Report r = verify_axioms(cfg(spec, 1, 1), mutated_square(spec));
  ASSERT_EQ(r.status, Status::Fail);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->lhs, r.counterexample->rhs);
}

TEST(VerifyAxioms, SymbolicPassImpliesConcretePass) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  auto nonzero = [&] {
    int v = num(rng);
    return Scalar(v == 0 ? 1 : v, den(rng));
  };
  ASSERT_EQ(verify_axioms(cfg(ModuleSpec(Family::OmegaS, 2, {}, std::nullopt, {1}), 2, 2)).status, Status::Pass);
  for (int trial = 0; trial < 5; ++trial) {
    const ModuleSpec spec(Family::OmegaS, 2, {nonzero(), nonzero()}, Scalar(num(rng), den(rng)), {1});
    EXPECT_EQ(verify_axioms(cfg(spec, 2, 2)).status, Status::Pass) << spec.describe();
  }
}

TEST(VerifyLemma1, Examples) {
  EXPECT_EQ(verify_lemma1_shift(cfg(ModuleSpec(Family::OmegaS, 2, {}, std::nullopt, {1}), 2, 3)).status, Status::Pass);
  EXPECT_EQ(verify_lemma1_shift(cfg(ModuleSpec(Family::VirasoroOmega, 1), 3, 3)).status, Status::Pass);
  EXPECT_EQ(verify_lemma1_shift(cfg(ModuleSpec(Family::Gamma, 1), 3, 0)).status, Status::Pass);
}

TEST(VerifyLemma1, DetectsActionThatIgnoresTheShift) {
  const ModuleSpec spec(Family::Omega, 1);
  ModuleModel model = ModuleModel::standard(spec);
  model.act = [spec](const WittTerm& t, const Poly& f) { return act_on_generator(spec, t) * f; };
  EXPECT_EQ(verify_lemma1_shift(cfg(spec, 1, 1), model).status, Status::Fail);
}

TEST(Kernels, ParallelMatchesSerial) {
  for (const auto& spec : {ModuleSpec(Family::Omega, 2), ModuleSpec(Family::OmegaS, 2, {}, std::nullopt, {2})}) {
    std::vector<WittTerm> terms;
    for (const auto& t : basis_terms(spec.algebra(), 2, 1)) {
      if (spec.admits(t)) terms.push_back(t);
    }
    const auto fs = test_monomials(spec.context(), 2);
    for (const auto& model : {ModuleModel::standard(spec), mutated_square(spec)}) {
      const auto serial = kernels::axiom_sweep_serial(model, terms, fs);
      const auto shift_serial = kernels::shift_sweep_serial(model, terms, fs);
      for (int jobs : {1, 3, 8}) {
        const auto par = kernels::axiom_sweep_parallel(model, terms, fs, jobs);
        EXPECT_EQ(par.checked, serial.checked);
        EXPECT_EQ(par.first_failure, serial.first_failure);
        const auto shift_par = kernels::shift_sweep_parallel(model, terms, fs, jobs);
        EXPECT_EQ(shift_par.checked, shift_serial.checked);
        EXPECT_EQ(shift_par.first_failure, shift_serial.first_failure);
      }
    }
  }
}

TEST(GammaCoincidence, Passes) {
  const Report r = gamma_coincidence(6);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.stats.pairs_checked, 8u);
  EXPECT_THROW(gamma_coincidence(0), Error);
}

TEST(Theorem2, AllSubchecksPass) {
  const Report r = theorem2_suite();
  ASSERT_EQ(r.status, Status::Pass);
  ASSERT_EQ(r.subchecks.size(), 5u);
  const char* names[] = {"case_i_f2", "case_ii_obstruction", "g_recursion", "b_constraint", "f2_factorization"};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(r.subchecks[i].check_name, names[i]);
    EXPECT_EQ(r.subchecks[i].status, Status::Pass);
  }
}

TEST(Theorem2, FactorizationExpansion) {
  // Both sides, expanded independently by hand.
  const Poly expected = P("x1^3 - 3*x1^2 + (-3*a^2 - 3*a + 2)*x1 + 2*a^3 + 6*a^2 + 4*a");
  EXPECT_EQ(P("(x1+a)*(x1+a-1)*(x1-2*(a+1)) + 4*a^3 + 6*a^2 + 2*a"), expected);
  EXPECT_EQ(P("(x1-(a+1))*(x1-(a+1)-1)*(x1+2*a)"), expected);
}

TEST(Theorem3, Passes) {
  const Report r = theorem3_suite();
  ASSERT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.subchecks[0].check_name, "dm2_identity");
  EXPECT_EQ(r.subchecks[1].check_name, "central_zero");
}

TEST(Theorem3, DoubleActionOnGenerator) {
  const ModuleSpec vir(Family::VirasoroOmega, 1);
  const Poly one = P("1");
  const Poly comm = act_basis(vir, WittTerm::d(-2), act_basis(vir, WittTerm::d(2), one)) -
                    act_basis(vir, WittTerm::d(2), act_basis(vir, WittTerm::d(-2), one));
  EXPECT_EQ(comm, P("4*x1"));
}

TEST(Theorem3, MutatedCocycleFails) {
  const Report r = theorem3_suite(Theorem3Options{Scalar(-1, 12), 3});
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_EQ(r.subchecks[1].status, Status::Fail);
  EXPECT_EQ(r.subchecks[1].counterexample->lhs, "4*d0 + 1/2*C");
}

TEST(Closure, RequiresConcreteParameters) {
  const Poly seed = P("x1");
  try {
    submodule_closure(ModuleSpec(Family::Omega, 1), std::span(&seed, 1), cfg(ModuleSpec(Family::Omega, 1), 2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Config);
  }
}

TEST(Closure, AtMinusOneStaysInIdealOfX) {
  const ModuleSpec spec = concrete_omega(1, {Scalar(2)}, Scalar(-1));
  const Poly seed = P("x1");
  const SubspaceBasis b = submodule_closure(spec, std::span(&seed, 1), cfg(spec, 3, 1, 3));
  EXPECT_GT(b.dimension(), 1u);
  for (const auto& row : b.rows()) EXPECT_TRUE(row.constant_term().is_zero()) << print_poly(row);
}

TEST(Closure, ContainsSeedsAndGeneratorImages) {
  const ModuleSpec spec = concrete_omega(1, {Scalar(2)}, Scalar(1, 2));
  const Poly seed = P("1");
  const SubspaceBasis b = submodule_closure(spec, std::span(&seed, 1), cfg(spec, 2, 0, 1));
  EXPECT_TRUE(b.contains(seed));
  for (int k = -2; k <= 2; ++k) EXPECT_TRUE(b.contains(act_on_generator(spec, WittTerm::d(k))));
}

TEST(Closure, ReachesOneAtAZero) {
  const ModuleSpec spec = concrete_omega(1, {Scalar(2)}, Scalar(0));
  const Poly seed = P("x1^2");
  const SubspaceBasis b = submodule_closure(spec, std::span(&seed, 1), cfg(spec, 4, 0, 4));
  EXPECT_TRUE(b.contains(P("1")));
}

TEST(Closure, MonotoneAndDeterministic) {
  const ModuleSpec spec(Family::OmegaS, 2, {Scalar(2), Scalar(3)}, Scalar(-1), {1});
  const std::vector<Poly> seeds{P("x2^2", 2)};
  const std::vector<Poly> more{P("x2^2", 2), P("x1*x2", 2)};
  std::vector<const SubspaceBasis*> chain;
  const SubspaceBasis small = submodule_closure(spec, seeds, cfg(spec, 1, 0, 1));
  const SubspaceBasis deeper = submodule_closure(spec, seeds, cfg(spec, 1, 0, 2));
  const SubspaceBasis wider = submodule_closure(spec, seeds, cfg(spec, 2, 0, 2));
  const SubspaceBasis seeded = submodule_closure(spec, more, cfg(spec, 2, 0, 2));
  for (const auto& [sub, super] : {std::pair{&small, &deeper}, {&deeper, &wider}, {&wider, &seeded}}) {
    EXPECT_LE(sub->dimension(), super->dimension());
    for (const auto& row : sub->rows()) EXPECT_TRUE(super->contains(row));
  }
  const SubspaceBasis again = submodule_closure(spec, more, cfg(spec, 2, 0, 2));
  EXPECT_EQ(again.rows(), seeded.rows());
}

TEST(Subspace, EchelonInvariants) {
  const VarContext ctx(2);
  SubspaceBasis b(ctx);
  b.insert(parse_poly("x1 + x2 + 1", ctx));
  b.insert(parse_poly("x2 - 1", ctx));
  EXPECT_TRUE(b.insert(parse_poly("x1 + 2*x2", ctx)).is_zero());
  b.insert(parse_poly("x1^2 + 3*x1", ctx));
  ASSERT_EQ(b.dimension(), 3u);
  for (std::size_t i = 0; i < b.rows().size(); ++i) {
    EXPECT_TRUE(b.rows()[i].leading().second.is_one());
    for (std::size_t j = 0; j < b.rows().size(); ++j) {
      if (i != j) EXPECT_TRUE(b.rows()[j].coeff(b.rows()[i].leading().first).is_zero());
    }
  }
  EXPECT_THROW(b.insert(parse_poly("a*x1", ctx)), Error);
}

TEST(Simplicity, Examples) {
  {
    const ModuleSpec spec = concrete_omega(1, {Scalar(2)}, Scalar(-1));
    const std::vector<Poly> seeds{P("x1")};
    const Report r = simplicity_probe(spec, seeds, cfg(spec, 3, 1, 3));
    EXPECT_EQ(r.status, Status::EvidenceNotSimple);
    EXPECT_EQ(r.certificate, std::string(kZeroConstantTermCertificate));
    EXPECT_EQ(write_report(r)["certificate"], "zero-constant-term-invariance");
  }
  {
    const ModuleSpec spec = concrete_omega(2, {Scalar(2), Scalar(3)}, Scalar(0));
    const auto seeds = test_monomials(spec.context(), 2);
    EXPECT_EQ(simplicity_probe(spec, seeds, cfg(spec, 4, 2, 4)).status, Status::EvidenceReachedOne);
  }
  {
    const ModuleSpec spec(Family::OmegaS, 1, {Scalar(2)}, Scalar(-1), {1});
    const std::vector<Poly> seeds{P("x1")};
    EXPECT_EQ(simplicity_probe(spec, seeds, cfg(spec, 3, 1, 3)).status, Status::EvidenceReachedOne);
  }
}

TEST(Simplicity, InconclusiveWithoutCertificate) {
  // Gamma(lambda, 0) from x at depth 1: 1 is not reached and d_{-1}
  // produces a nonzero constant term, so no certificate applies.
  const ModuleSpec spec(Family::Gamma, 1, {Scalar(2)}, Scalar(0));
  const std::vector<Poly> seeds{P("x1^3")};
  EXPECT_EQ(simplicity_probe(spec, seeds, cfg(spec, 1, 1, 1)).status, Status::Inconclusive);
}

TEST(Simplicity, SameResultForAnyJobCount) {
  const ModuleSpec spec = concrete_omega(2, {Scalar(2), Scalar(3)}, Scalar(-1));
  const auto seeds = test_monomials(spec.context(), 2);
  const auto one = write_report_untimed(simplicity_probe(spec, seeds, cfg(spec, 2, 2, 2, 1)));
  const auto four = write_report_untimed(simplicity_probe(spec, seeds, cfg(spec, 2, 2, 2, 4)));
  EXPECT_EQ(one.dump(), four.dump());
}
