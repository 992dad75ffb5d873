#include <gtest/gtest.h>

#include "generators.hpp"
#include "wittmod/error.hpp"
#include "wittmod/exprio.hpp"
#include "wittmod/verify.hpp"

using namespace wittmod;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Config;
}

}  // namespace

TEST(ParsePoly, Examples) {
  const VarContext ctx(1);
  Monomial m;
  m.set_exponent(ctx.x(1), 2);
  m.set_exponent(ctx.lambda(1), -1);
  EXPECT_EQ(parse_poly("3/2*x1^2*l1^-1", ctx), Poly::monomial(ctx, m, Scalar(3, 2)));
  EXPECT_EQ(print_poly(parse_poly("x1+1", ctx)), "x1 + 1");
  EXPECT_EQ(print_poly(parse_poly(" - ( x1 - 1 ) * 2 ", ctx)), "-2*x1 + 2");
  EXPECT_EQ(print_poly(parse_poly("x1 - x1", ctx)), "0");
  EXPECT_EQ(print_poly(parse_poly("3/2*x1^2*l1^-1", ctx)), "3/2*x1^2*l1^-1");
}

TEST(ParsePoly, Errors) {
  const VarContext ctx(2);
  EXPECT_EQ(code_of([&] { parse_poly("x1^-1", ctx); }), ErrorCode::NegativeModuleExponent);
  EXPECT_EQ(code_of([&] { parse_poly("a^-2", ctx); }), ErrorCode::NegativeModuleExponent);
  EXPECT_EQ(code_of([&] { parse_poly("x3", ctx); }), ErrorCode::UnknownVariable);
  EXPECT_EQ(code_of([&] { parse_poly("y", ctx); }), ErrorCode::Syntax);
  EXPECT_EQ(code_of([&] { parse_poly("x1 +", ctx); }), ErrorCode::Syntax);
  EXPECT_EQ(code_of([&] { parse_poly("(x1", ctx); }), ErrorCode::Syntax);
  EXPECT_EQ(code_of([&] { parse_poly("1/0", ctx); }), ErrorCode::Syntax);
  try {
    parse_poly("x1 + * 2", ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(ParseElement, Examples) {
  const AlgElement x = parse_element("t[1,0]d2 - t[1,1]d1", Algebra::Witt, 2);
  EXPECT_EQ(x.terms().size(), 2u);
  const int k1[] = {1, 0};
  const int k2[] = {1, 1};
  EXPECT_EQ(x.coeff(WittTerm::derivation(k1, 2)), Scalar(1));
  EXPECT_EQ(x.coeff(WittTerm::derivation(k2, 1)), Scalar(-1));
  const AlgElement v = parse_element("d-2 + 1/2*C", Algebra::Virasoro, 1);
  EXPECT_EQ(v.coeff(WittTerm::d(-2)), Scalar(1));
  EXPECT_EQ(v.coeff(WittTerm::central()), Scalar(1, 2));
  EXPECT_EQ(print_element(v), "d-2 + 1/2*C");
  EXPECT_EQ(parse_element("2d1", Algebra::Witt, 1), parse_element("2*t[1]d1", Algebra::Witt, 1));
}

TEST(ParseElement, Errors) {
  EXPECT_EQ(code_of([] { parse_element("t[-1,-1]d1", Algebra::WittPlus, 2); }), ErrorCode::InadmissibleTerm);
  EXPECT_EQ(code_of([] { parse_element("d1 + C", Algebra::Witt, 1); }), ErrorCode::CentralOutsideVirasoro);
  EXPECT_EQ(code_of([] { parse_element("t[1]d1", Algebra::Witt, 2); }), ErrorCode::RankMismatch);
  EXPECT_EQ(code_of([] { parse_element("d1", Algebra::Witt, 2); }), ErrorCode::RankMismatch);
  EXPECT_EQ(code_of([] { parse_element("d-2", Algebra::WittPlus, 1); }), ErrorCode::InadmissibleTerm);
  EXPECT_EQ(code_of([] { parse_element("d1 d2", Algebra::Witt, 1); }), ErrorCode::Syntax);
}

TEST(RoundTrip, RandomPolys) {
  std::mt19937 rng(99);
  for (int rank : {1, 2, 3}) {
    const VarContext ctx(rank);
    std::set<std::string> seen;
    std::vector<Poly> distinct;
    for (int i = 0; i < 3000; ++i) {
      const Poly p = testgen::random_poly(ctx, rng);
      const std::string s = print_poly(p);
      ASSERT_EQ(parse_poly(s, ctx), p) << s;
      // injectivity: equal prints only for equal polynomials
      if (seen.insert(s).second) distinct.push_back(p);
    }
    for (std::size_t i = 1; i < distinct.size(); ++i) ASSERT_NE(print_poly(distinct[i - 1]), print_poly(distinct[i]));
  }
}

TEST(RoundTrip, RandomElements) {
  std::mt19937 rng(5);
  const std::pair<Algebra, int> algebras[] = {
      {Algebra::Witt, 1}, {Algebra::Witt, 3}, {Algebra::WittPlus, 2}, {Algebra::Virasoro, 1}};
  for (const auto& [algebra, n] : algebras) {
    for (int i = 0; i < 1000; ++i) {
      const AlgElement x = testgen::random_element(algebra, n, rng);
      const std::string s = print_element(x);
      ASSERT_EQ(parse_element(s, algebra, n), x) << s;
    }
  }
}

TEST(Report, PassDocument) {
  Report r;
  r.check_name = "demo";
  r.stats.pairs_checked = 3;
  const auto j = write_report(r);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_TRUE(j["counterexample"].is_null());
  EXPECT_EQ(j.dump(), R"({"check_name":"demo","status":"PASS","counterexample":null,"stats":{"pairs_checked":3,"elapsed_ms":0}})");
  EXPECT_FALSE(write_report_untimed(r)["stats"].contains("elapsed_ms"));
}

TEST(Report, FailCounterexampleReparses) {
  // A mutated Omega action: x_i - k_i^2(a+1) in place of x_i - k_i(a+1).
  const ModuleSpec spec(Family::Omega, 1);
  ModuleModel model = ModuleModel::standard(spec);
  model.act = [spec](const WittTerm& t, const Poly& f) {
    const VarContext ctx = spec.context();
    const Scalar k(t.exponent(1));
    const Poly lin = Poly::variable(ctx, ctx.x(1)) - k * k * (Poly::variable(ctx, ctx.a()) + Poly::constant(ctx, 1));
    return spec.lambda_power(t.exponents()) * lin * shift_sub(f, t.exponents());
  };
  const Report r = verify_axioms(CheckConfig{spec, 1, 1, 1, 1}, model);
  ASSERT_EQ(r.status, Status::Fail);
  const auto j = write_report(r);
  const auto& c = j["counterexample"];
  const VarContext ctx = spec.context();
  const AlgElement x = parse_element(c["x"].get<std::string>(), Algebra::Witt, 1);
  const AlgElement y = parse_element(c["y"].get<std::string>(), Algebra::Witt, 1);
  const Poly f = parse_poly(c["f"].get<std::string>(), ctx);
  const Poly lhs = parse_poly(c["lhs"].get<std::string>(), ctx);
  const Poly rhs = parse_poly(c["rhs"].get<std::string>(), ctx);
  EXPECT_EQ(print_element(x), r.counterexample->x);
  EXPECT_EQ(print_element(y), r.counterexample->y);
  EXPECT_EQ(print_poly(f), r.counterexample->f);
  EXPECT_NE(lhs, rhs);
  // lhs is the mutated action of [x, y] on f.
  EXPECT_EQ(lhs, model.act_element(bracket(x, y), f));
}
