// Identities behind the classification of rank-one free modules over W_1^+
// and the Virasoro algebra, each checked as an exact polynomial equality in
// the ring Q[d0, a, b, c_j]; d0 is spelled x1.
#include <chrono>
#include <initializer_list>

#include "wittmod/exprio.hpp"
#include "wittmod/verify.hpp"

namespace wittmod {

namespace {

using Clock = std::chrono::steady_clock;

class Ring {
 public:
  explicit Ring(int coeff_vars = 0) : ctx_(1, coeff_vars) {}

  const VarContext& ctx() const { return ctx_; }
  Poly d0() const { return Poly::variable(ctx_, ctx_.x(1)); }
  Poly a() const { return Poly::variable(ctx_, ctx_.a()); }
  Poly b() const { return Poly::variable(ctx_, ctx_.b()); }
  Poly c(int j) const { return Poly::variable(ctx_, ctx_.coeff(j)); }
  Poly num(std::int64_t v) const { return Poly::constant(ctx_, v); }

  /// g(d0 - s)
  static Poly at_minus(const Poly& g, int s) {
    const int k[] = {s};
    return shift_sub(g, k);
  }

  /// (d0+a)...(d0+a-k+1) (d0 - k(a+1)): the b = 0 solution d_k . 1 / lambda^k.
  Poly gamma_f(int k) const {
    return falling_product(ctx_, 1, k, a()) * (d0() - num(k) * (a() + num(1)));
  }

 private:
  VarContext ctx_;
};

struct Checker {
  Report report;
  explicit Checker(std::string name) { report.check_name = std::move(name); }

  // Records lhs == rhs; only the first failure is kept as counterexample.
  bool equal(const Poly& lhs, const Poly& rhs, const std::string& what = "") {
    ++report.stats.pairs_checked;
    if (lhs == rhs) return true;
    if (!report.counterexample) {
      report.counterexample = Counterexample{what, "", "", print_poly(lhs), print_poly(rhs)};
    }
    return false;
  }

  Report finish() {
    report.status = report.counterexample ? Status::Fail : Status::Pass;
    return std::move(report);
  }
};

Report aggregate(std::string name, std::vector<Report> subs, Clock::time_point start) {
  Report r;
  r.check_name = std::move(name);
  r.status = Status::Pass;
  for (const auto& s : subs) {
    r.stats.pairs_checked += s.stats.pairs_checked;
    if (s.status != Status::Pass && r.status == Status::Pass) {
      r.status = Status::Fail;
      r.counterexample = s.counterexample;
    }
  }
  r.subchecks = std::move(subs);
  r.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return r;
}

// Coefficient of x1^e in p, as a polynomial in the remaining variables.
Poly coefficient_in_d0(const Poly& p, int e) {
  const VarContext& ctx = p.context();
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(ctx.x(1)) != e) continue;
    Monomial rest = m;
    rest.set_exponent(ctx.x(1), 0);
    out.emplace_back(rest, c);
  }
  return Poly::from_terms(ctx, std::move(out));
}

Report case_i_f2() {
  Ring R;
  Checker chk("case_i_f2");
  const Poly f = R.d0() - R.num(2) * R.a();
  const Poly lhs = R.num(3) * (R.d0() - R.a());
  const Poly expanded = (R.d0() + R.a()) * R.at_minus(f, -1) - (R.d0() + R.a() - R.num(2)) * f;
  const Poly regrouped = (R.d0() + R.a()) * (R.at_minus(f, -1) - f) + R.num(2) * f;
  chk.equal(expanded, regrouped, "regrouping");
  chk.equal(lhs, expanded, "3(d0-a) = (d0+a)f(d0+1) - (d0+a-2)f(d0)");
  return chk.finish();
}

Report case_ii_obstruction() {
  constexpr int kMaxS = 4;
  Ring R(kMaxS + 1);
  Checker chk("case_ii_obstruction");
  for (int s = 0; s <= kMaxS; ++s) {
    Poly f(R.ctx());
    for (int j = 0; j <= s; ++j) f += R.c(j) * R.d0().pow(j);
    const Poly shifted = R.at_minus(f, -1);
    const Poly original = (R.d0() - R.a()) * (R.d0() + R.a() + R.num(1)) * shifted -
                          (R.d0() - R.a() - R.num(2)) * (R.d0() + R.a() - R.num(1)) * f;
    const Poly regrouped = (R.d0() - R.a()) * (R.d0() + R.a() + R.num(1)) * (shifted - f) +
                           R.num(2) * (R.num(2) * R.d0() - R.num(1)) * f;
    const std::string tag = "s=" + std::to_string(s);
    chk.equal(original, regrouped, tag + " regrouping");
    chk.equal(Poly::constant(R.ctx(), degree(regrouped, R.ctx().x(1))), Poly::constant(R.ctx(), s + 1),
              tag + " degree in d0");
    chk.equal(coefficient_in_d0(regrouped, s + 1), R.num(s + 4) * R.c(s), tag + " leading coefficient");
  }
  return chk.finish();
}

// g_2 = seed, (k-1) g_{k+1}(d0) = g_k(d0-1) f_1(d0) - g_k(d0) f_1(d0-k), k = 2..4.
std::vector<Poly> g_sequence(const Ring& R, const Poly& seed) {
  const Poly f1 = (R.d0() + R.a()) * (R.d0() - (R.a() + R.num(1)));
  std::vector<Poly> g{Poly(R.ctx()), Poly(R.ctx()), seed};
  for (int k = 2; k <= 4; ++k) {
    const Poly& gk = g[static_cast<std::size_t>(k)];
    g.push_back((R.at_minus(gk, 1) * f1 - gk * R.at_minus(f1, k)) * Scalar(1, k - 1));
  }
  return g;
}

Report g_recursion() {
  Ring R;
  Checker chk("g_recursion");
  const Poly& d = R.d0();
  const Poly& a = R.a();
  const Poly two_b = R.num(2) * R.b();
  const auto g = g_sequence(R, R.b());
  chk.equal(g[3], two_b * (R.num(2) * d - R.num(3)), "g3");
  chk.equal(g[4], two_b * (R.num(5) * d.pow(2) - R.num(20) * d + (R.num(18) + a + a.pow(2))), "g4");
  chk.equal(g[5],
            two_b * (R.num(10) * d.pow(3) - R.num(75) * d.pow(2) +
                     (R.num(173) + R.num(6) * a + R.num(6) * a.pow(2)) * d -
                     (R.num(120) + R.num(15) * a + R.num(15) * a.pow(2))),
            "g5");
  // b = 0 branch: every g_k vanishes.
  const auto g0 = g_sequence(R, Poly(R.ctx()));
  for (int k = 2; k <= 5; ++k) chk.equal(g0[static_cast<std::size_t>(k)], Poly(R.ctx()), "g" + std::to_string(k) + " at b=0");
  const std::map<int, Scalar> b_zero{{R.ctx().b(), Scalar(0)}};
  for (int k = 2; k <= 5; ++k) {
    chk.equal(eval_params(g[static_cast<std::size_t>(k)], b_zero), Poly(R.ctx()),
              "g" + std::to_string(k) + " specialized to b=0");
  }
  return chk.finish();
}

Report b_constraint() {
  Ring R;
  Checker chk("b_constraint");
  const Poly& d = R.d0();
  const Poly& a = R.a();
  const Poly& b = R.b();
  const auto g = g_sequence(R, b);
  const Poly& g2 = g[2];
  const Poly& g3 = g[3];
  const Poly f20 = R.gamma_f(2);
  const Poly f30 = R.gamma_f(3);
  const Poly f50 = R.gamma_f(5);

  // d_5 . 1 = [d_2, d_3] . 1 = f_3(d0-2) f_2(d0) - f_2(d0-3) f_3(d0), with f_k = f_k0 + g_k.
  const Poly f2 = f20 + g2;
  const Poly f3 = f30 + g3;
  const Poly f5 = R.at_minus(f3, 2) * f2 - R.at_minus(f2, 3) * f3;
  chk.equal(R.at_minus(f30, 2) * f20 - R.at_minus(f20, 3) * f30, f50, "b=0 part of [d2,d3] is f_{5,0}");

  const Poly alternative = f20 * R.at_minus(g3, 2) + R.at_minus(f30, 2) * g2 + g2 * R.at_minus(g3, 2) -
                           f30 * R.at_minus(g2, 3) - R.at_minus(f20, 3) * g3 - g3 * R.at_minus(g2, 3);
  chk.equal(f5 - f50, alternative, "g5 from [d2,d3]");
  chk.equal(alternative,
            R.num(2) * b *
                (R.num(10) * d.pow(3) - R.num(75) * d.pow(2) +
                 (R.num(173) + R.num(6) * a + R.num(6) * a.pow(2)) * d -
                 (R.num(4) * b + R.num(120) + R.num(7) * a - R.num(9) * a.pow(2) - R.num(16) * a.pow(3))),
            "closed form of g5 from [d2,d3]");
  const Poly difference = g[5] - alternative;
  const Poly expected = R.num(8) * b * (b - (R.num(4) * a.pow(3) + R.num(6) * a.pow(2) + R.num(2) * a));
  chk.equal(difference, expected, "g5(recursion) - g5([d2,d3]) = 8b(b-(4a^3+6a^2+2a))");
  return chk.finish();
}

Report f2_factorization() {
  Ring R;
  Checker chk("f2_factorization");
  const Poly& d = R.d0();
  const Poly& a = R.a();
  const Poly shift = R.num(4) * a.pow(3) + R.num(6) * a.pow(2) + R.num(2) * a;
  const Poly lhs = R.gamma_f(2) + shift;
  const Poly rhs = (d - (a + R.num(1))) * (d - (a + R.num(1)) - R.num(1)) * (d + R.num(2) * a);
  chk.equal(lhs, rhs, "f2 + (4a^3+6a^2+2a) factorization");
  // With a' = -(a+1) the same polynomial is the b = 0 f_2 of Gamma(lambda, a').
  const Poly a_prime = -(a + R.num(1));
  chk.equal(substitute(R.gamma_f(2), R.ctx().a(), a_prime), rhs, "f2 at a' = -(a+1)");
  const Poly f1 = (d + a) * (d - (a + R.num(1)));
  chk.equal(substitute(f1, R.ctx().a(), a_prime), f1, "f1 invariant under a -> -(a+1)");
  return chk.finish();
}

}  // namespace

Report theorem2_suite() {
  const auto start = Clock::now();
  return aggregate("theorem2_suite",
                   {case_i_f2(), case_ii_obstruction(), g_recursion(), b_constraint(), f2_factorization()}, start);
}

Report theorem3_suite(const Theorem3Options& options) {
  const auto start = Clock::now();
  Ring R;
  const Poly& d = R.d0();
  const Poly& a = R.a();

  Checker dm2("dm2_identity");
  {
    const Poly g = d + R.num(2) * (a + R.num(1));
    const Poly lhs = R.num(-3) * (d + a + R.num(1));
    const Poly expanded = (d - a - R.num(1)) * R.at_minus(g, 1) - (d - a + R.num(1)) * g;
    const Poly regrouped = (d - a - R.num(1)) * (R.at_minus(g, 1) - g) - R.num(2) * g;
    dm2.equal(expanded, regrouped, "regrouping");
    dm2.equal(lhs, expanded, "-3(d0+a+1) = (d0-a-1)g(d0-1) - (d0-a+1)g(d0)");
    // The module realizes it: d_{-2} . 1 = l1^-2 (x1 + 2(a+1)).
    const ModuleSpec vir(Family::VirasoroOmega, 1);
    const Poly l_inv2 = Poly::variable(R.ctx(), R.ctx().lambda(1), -2);
    dm2.equal(act_on_generator(vir, WittTerm::d(-2)), l_inv2 * g, "d-2 . 1");
  }

  Checker cz("central_zero");
  {
    const ModuleSpec vir(Family::VirasoroOmega, 1);
    const ModuleModel model = ModuleModel::standard(vir);
    const WittTerm dm2_t = WittTerm::d(-2);
    const WittTerm d2_t = WittTerm::d(2);
    const AlgElement br = bracket_basis(dm2_t, d2_t, Algebra::Virasoro, 1, options.cocycle_scale);
    // [d_{-2}, d_2] = 4 d_0 - (2^3-2)/12 C
    const AlgElement expected = AlgElement::from_terms(
        Algebra::Virasoro, 1, {{WittTerm::d(0), Scalar(4)}, {WittTerm::central(), Scalar(-6, 12)}});
    ++cz.report.stats.pairs_checked;
    if (!(br == expected) && !cz.report.counterexample) {
      cz.report.counterexample = Counterexample{"d-2", "d2", "", print_element(br), print_element(expected)};
    }
    // The C coefficient must be nonzero for the bracket to force C v = 0.
    ++cz.report.stats.pairs_checked;
    if (br.coeff(WittTerm::central()).is_zero() && !cz.report.counterexample) {
      cz.report.counterexample = Counterexample{"d-2", "d2", "", print_element(br), "C coefficient is zero"};
    }
    const Poly x = Poly::variable(vir.context(), vir.context().x(1));
    for (const Poly& f : test_monomials(vir.context(), options.degmax)) {
      const Poly via_bracket = act(vir, br, f);
      const Poly commutator = model.act(dm2_t, model.act(d2_t, f)) - model.act(d2_t, model.act(dm2_t, f));
      ++cz.report.stats.pairs_checked;
      if (!(via_bracket == Scalar(4) * (x * f)) && !cz.report.counterexample) {
        cz.report.counterexample =
            Counterexample{"d-2", "d2", print_poly(f), print_poly(via_bracket), print_poly(Scalar(4) * (x * f))};
      }
      ++cz.report.stats.pairs_checked;
      if (!(commutator == via_bracket) && !cz.report.counterexample) {
        cz.report.counterexample =
            Counterexample{"d-2", "d2", print_poly(f), print_poly(commutator), print_poly(via_bracket)};
      }
    }
  }
  return aggregate("theorem3_suite", {dm2.finish(), cz.finish()}, start);
}

}  // namespace wittmod
