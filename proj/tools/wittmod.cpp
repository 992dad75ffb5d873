// wittmod: command-line front end for the module families and their checks.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "wittmod/error.hpp"
#include "wittmod/exprio.hpp"
#include "wittmod/verify.hpp"

namespace {

using namespace wittmod;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string family = "omega";
  int n = 1;
  std::string lambda = "sym";
  std::string a = "sym";
  std::string subset;
  int kmax = 2;
  int degmax = 2;
  int depth = 3;
  int jobs = 0;
  bool json = false;
  std::vector<std::string> seeds;
  std::string expect;
  std::string term;
  std::string f = "1";
  std::string x;
  std::string y;
  std::string algebra;
  std::string check;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("WITTMOD_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::Config, std::string("WITTMOD_JOBS must be a positive integer, got '") + env + "'");
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ModuleSpec make_spec(const Options& o) {
  const Family family = parse_family(o.family);
  std::vector<std::optional<Scalar>> lambda(static_cast<std::size_t>(o.n));
  if (o.lambda != "sym") {
    auto parts = split_commas(o.lambda);
    if (static_cast<int>(parts.size()) != o.n) {
      throw Error(ErrorCode::Config, "--lambda needs " + std::to_string(o.n) + " comma-separated values");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) lambda[i] = Scalar::parse(parts[i]);
  }
  std::optional<Scalar> a;
  if (o.a != "sym") a = Scalar::parse(o.a);
  std::vector<int> subset;
  for (const auto& s : split_commas(o.subset)) {
    try {
      subset.push_back(std::stoi(s));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Config, "--S expects integers, got '" + s + "'");
    }
  }
  return ModuleSpec(family, o.n, std::move(lambda), std::move(a), std::move(subset));
}

Algebra parse_algebra(const std::string& s) {
  if (s == "witt" || s == "w") return Algebra::Witt;
  if (s == "witt-plus" || s == "w+") return Algebra::WittPlus;
  if (s == "virasoro") return Algebra::Virasoro;
  throw Error(ErrorCode::Config, "unknown algebra: " + s);
}

CheckConfig make_config(const Options& o) {
  CheckConfig cfg{make_spec(o), o.kmax, o.degmax, o.depth, o.jobs > 0 ? o.jobs : default_jobs()};
  cfg.validate();
  return cfg;
}

void print_text(const Report& r, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::cout << pad << r.check_name << ": " << to_string(r.status);
  if (!r.spec.empty()) std::cout << " [" << r.spec << "]";
  std::cout << " (checked " << r.stats.pairs_checked << ", " << r.stats.elapsed_ms << " ms)\n";
  if (r.certificate) std::cout << pad << "  certificate: " << *r.certificate << "\n";
  for (const auto& w : r.witness) std::cout << pad << "  " << w << "\n";
  if (r.counterexample && r.subchecks.empty()) {
    const auto& c = *r.counterexample;
    std::cout << pad << "  counterexample: x=" << c.x << " y=" << c.y << " f=" << c.f << "\n"
              << pad << "    lhs = " << c.lhs << "\n"
              << pad << "    rhs = " << c.rhs << "\n";
  }
  for (const auto& s : r.subchecks) print_text(s, indent + 2);
}

void emit(const Report& r, bool json) {
  if (json) {
    std::cout << write_report(r).dump(2) << "\n";
  } else {
    print_text(r);
  }
}

int run_act(const Options& o) {
  const ModuleSpec spec = make_spec(o);
  const AlgElement x = parse_element(o.term, spec.algebra(), spec.rank());
  const Poly f = parse_poly(o.f, spec.context());
  const Poly result = act(spec, x, f);
  if (o.json) {
    nlohmann::ordered_json j;
    j["spec"] = spec.describe();
    j["term"] = print_element(x);
    j["f"] = print_poly(f);
    j["result"] = print_poly(result);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print_poly(result) << "\n";
  }
  return kExitOk;
}

int run_bracket(const Options& o) {
  const Algebra algebra = o.algebra.empty() ? make_spec(o).algebra() : parse_algebra(o.algebra);
  const AlgElement x = parse_element(o.x, algebra, o.n);
  const AlgElement y = parse_element(o.y, algebra, o.n);
  const AlgElement r = bracket(x, y);
  if (o.json) {
    nlohmann::ordered_json j;
    j["algebra"] = to_string(algebra);
    j["x"] = print_element(x);
    j["y"] = print_element(y);
    j["result"] = print_element(r);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print_element(r) << "\n";
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  Report r;
  if (o.check == "axioms") {
    r = verify_axioms(make_config(o));
  } else if (o.check == "lemma1") {
    r = verify_lemma1_shift(make_config(o));
  } else if (o.check == "gamma-iso") {
    r = gamma_coincidence(o.kmax);
  } else if (o.check == "theorem2") {
    r = theorem2_suite();
  } else if (o.check == "theorem3") {
    r = theorem3_suite(Theorem3Options{virasoro_cocycle_scale(), o.degmax});
  } else {
    throw Error(ErrorCode::Config, "unknown check: " + o.check);
  }
  emit(r, o.json);
  return r.passed() ? kExitOk : kExitFailed;
}

int run_simplicity(const Options& o) {
  const CheckConfig cfg = make_config(o);
  std::vector<Poly> seeds;
  for (const auto& s : o.seeds) seeds.push_back(parse_poly(s, cfg.spec.context()));
  if (seeds.empty()) seeds = test_monomials(cfg.spec.context(), cfg.degmax);
  const Report r = simplicity_probe(cfg.spec, seeds, cfg);
  emit(r, o.json);
  if (o.expect.empty()) return kExitOk;
  const Status wanted = o.expect == "simple" ? Status::EvidenceReachedOne : Status::EvidenceNotSimple;
  if (r.status != wanted) {
    std::cerr << "expected " << to_string(wanted) << ", got " << to_string(r.status) << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

void add_module_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "omega | gamma | omega-s | virasoro-omega");
  cmd->add_option("--n", o.n, "rank");
  cmd->add_option("--lambda", o.lambda, "sym or comma-separated nonzero rationals");
  cmd->add_option("--a", o.a, "sym or a rational");
  cmd->add_option("--S", o.subset, "comma-separated subset of 1..n (omega-s)");
  cmd->add_option("--jobs", o.jobs, "worker threads (default: WITTMOD_JOBS or hardware concurrency)");
  cmd->add_flag("--json", o.json, "structured output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witt and Virasoro module families on polynomial rings"};
  app.require_subcommand(1);
  Options o;

  auto* act_cmd = app.add_subcommand("act", "act with an algebra element on a module element");
  add_module_flags(act_cmd, o);
  act_cmd->add_option("--term", o.term, "algebra element, e.g. \"d2\" or \"t[1,0]d2\"")->required();
  act_cmd->add_option("--f", o.f, "module element (default 1)");

  auto* br_cmd = app.add_subcommand("bracket", "Lie bracket of two algebra elements");
  add_module_flags(br_cmd, o);
  br_cmd->add_option("--algebra", o.algebra, "witt | witt-plus | virasoro (default: the family's algebra)");
  br_cmd->add_option("--x", o.x, "first element")->required();
  br_cmd->add_option("--y", o.y, "second element")->required();

  auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
  add_module_flags(ver_cmd, o);
  ver_cmd->add_option("check", o.check, "axioms | lemma1 | gamma-iso | theorem2 | theorem3")
      ->required()
      ->check(CLI::IsMember({"axioms", "lemma1", "gamma-iso", "theorem2", "theorem3"}));
  ver_cmd->add_option("--kmax", o.kmax, "exponent bound");
  ver_cmd->add_option("--degmax", o.degmax, "test monomial degree bound");

  auto* simp_cmd = app.add_subcommand("simplicity", "bounded-depth simplicity probe");
  add_module_flags(simp_cmd, o);
  simp_cmd->add_option("--seed", o.seeds, "seed element (repeatable; default: monomials of degree <= degmax)");
  simp_cmd->add_option("--kmax", o.kmax, "exponent bound");
  simp_cmd->add_option("--degmax", o.degmax, "degree of default seeds");
  simp_cmd->add_option("--depth", o.depth, "word length bound");
  simp_cmd->add_option("--expect", o.expect, "simple | not-simple")
      ->check(CLI::IsMember({"simple", "not-simple"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*act_cmd) return run_act(o);
    if (*br_cmd) return run_bracket(o);
    if (*ver_cmd) return run_verify(o);
    if (*simp_cmd) return run_simplicity(o);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
