#include "wittmod/exprio.hpp"

#include <cctype>
#include <sstream>

#include "wittmod/error.hpp"

namespace wittmod {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Next raw character without skipping whitespace.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::Syntax) const {
    throw Error(code, msg + " at position " + std::to_string(pos_), pos_);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  int signed_int() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    std::string d = digits();
    if (d.size() > 9) fail("integer too large");
    int v = std::stoi(d);
    return neg ? -v : v;
  }

  Scalar rational() {
    std::string num = digits();
    if (accept('/')) {
      std::string den = digits();
      Scalar q = Scalar::parse(den);
      if (q.is_zero()) fail("zero denominator");
      return Scalar::parse(num) / q;
    }
    return Scalar::parse(num);
  }

  void advance() { ++pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarContext& ctx) : cur_(text), ctx_(ctx) {}

  Poly parse() {
    Poly p = expr();
    if (!cur_.done()) cur_.fail("unexpected trailing input");
    return p;
  }

 private:
  Poly expr() {
    Poly result(ctx_);
    bool negate = cur_.accept('-');
    if (!negate) cur_.accept('+');
    Poly t = term();
    result += negate ? -t : t;
    while (true) {
      if (cur_.accept('+')) {
        result += term();
      } else if (cur_.accept('-')) {
        result -= term();
      } else {
        break;
      }
    }
    return result;
  }

  Poly term() {
    Poly p = factor();
    while (cur_.accept('*')) p *= factor();
    return p;
  }

  Poly factor() {
    char c = cur_.peek();
    if (c == '(') {
      cur_.advance();
      Poly inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ctx_, cur_.rational());
    std::size_t start = cur_.pos();
    int var = variable();
    int e = 1;
    if (cur_.accept('^')) e = cur_.signed_int();
    if (e < 0 && ctx_.kind(var) != VarKind::LaurentParam) {
      throw Error(ErrorCode::NegativeModuleExponent,
                  "negative exponent on " + ctx_.name(var) + " at position " + std::to_string(start), start);
    }
    try {
      return Poly::variable(ctx_, var, e);
    } catch (const Error& err) {
      throw Error(err.code(), std::string(err.what()) + " at position " + std::to_string(start), start);
    }
  }

  int variable() {
    char c = cur_.peek();
    std::size_t start = cur_.pos();
    if (c == 'a' || c == 'b') {
      cur_.advance();
      return c == 'a' ? ctx_.a() : ctx_.b();
    }
    if (c != 'x' && c != 'l' && c != 'c') cur_.fail("expected a number, variable or '('");
    cur_.advance();
    if (!std::isdigit(static_cast<unsigned char>(cur_.peek_raw()))) cur_.fail("expected variable index");
    std::string d = cur_.digits();
    int idx = d.size() > 3 ? 1000 : std::stoi(d);
    auto unknown = [&] {
      throw Error(ErrorCode::UnknownVariable,
                  "unknown variable " + std::string(1, c) + d + " at position " + std::to_string(start), start);
    };
    if (c == 'c') {
      if (idx >= ctx_.coeff_vars()) unknown();
      return ctx_.coeff(idx);
    }
    if (idx < 1 || idx > ctx_.rank()) unknown();
    return c == 'x' ? ctx_.x(idx) : ctx_.lambda(idx);
  }

  Cursor cur_;
  VarContext ctx_;
};

class ElementParser {
 public:
  ElementParser(std::string_view text, Algebra algebra, int rank) : cur_(text), algebra_(algebra), rank_(rank) {}

  AlgElement parse() {
    std::vector<AlgElement::Term> terms;
    if (cur_.peek() == '0') {
      // The zero element prints as "0".
      cur_.advance();
      if (!cur_.done()) cur_.fail("unexpected trailing input");
      return AlgElement(algebra_, rank_);
    }
    Scalar sign(1);
    if (cur_.accept('-')) {
      sign = Scalar(-1);
    } else {
      cur_.accept('+');
    }
    terms.push_back(algterm(sign));
    while (!cur_.done()) {
      if (cur_.accept('+')) {
        terms.push_back(algterm(Scalar(1)));
      } else if (cur_.accept('-')) {
        terms.push_back(algterm(Scalar(-1)));
      } else {
        cur_.fail("expected '+' or '-'");
      }
    }
    return AlgElement::from_terms(algebra_, rank_, std::move(terms));
  }

 private:
  AlgElement::Term algterm(const Scalar& sign) {
    Scalar c = sign;
    if (std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      c *= cur_.rational();
      cur_.accept('*');
    }
    std::size_t start = cur_.pos();
    char ch = cur_.peek();
    if (ch == 'C') {
      cur_.advance();
      if (algebra_ != Algebra::Virasoro) {
        throw Error(ErrorCode::CentralOutsideVirasoro,
                    "C outside the Virasoro algebra at position " + std::to_string(start), start);
      }
      return {WittTerm::central(), c};
    }
    if (ch == 'd') {
      cur_.advance();
      int m = cur_.signed_int();
      if (rank_ != 1) {
        throw Error(ErrorCode::RankMismatch, "d<m> shorthand needs rank 1 at position " + std::to_string(start),
                    start);
      }
      return {WittTerm::d(m), c};
    }
    if (ch == 't') {
      cur_.advance();
      if (cur_.peek_raw() != '[') cur_.fail("expected '['");
      cur_.expect('[');
      std::vector<int> k{cur_.signed_int()};
      while (cur_.accept(',')) k.push_back(cur_.signed_int());
      cur_.expect(']');
      cur_.expect('d');
      std::string d = cur_.digits();
      int dir = d.size() > 3 ? 1000 : std::stoi(d);
      if (static_cast<int>(k.size()) != rank_ || dir < 1 || dir > rank_) {
        throw Error(ErrorCode::RankMismatch, "term does not match rank " + std::to_string(rank_) + " at position " +
                                                 std::to_string(start),
                    start);
      }
      return {WittTerm::derivation(k, dir), c};
    }
    cur_.fail("expected t[...]d<i>, d<m> or C");
  }

  Cursor cur_;
  Algebra algebra_;
  int rank_;
};

std::string coefficient_prefix(const Scalar& magnitude, bool has_body) {
  if (!has_body) return magnitude.to_string();
  if (magnitude.is_one()) return "";
  return magnitude.to_string() + "*";
}

}  // namespace

Poly parse_poly(std::string_view text, const VarContext& ctx) { return PolyParser(text, ctx).parse(); }

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  const VarContext& ctx = p.context();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string body;
    for (int v = 0; v < ctx.size(); ++v) {
      int e = m.exponent(v);
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += ctx.name(v);
      if (e != 1) body += "^" + std::to_string(e);
    }
    os << coefficient_prefix(neg ? -c : c, !body.empty()) << body;
  }
  return os.str();
}

AlgElement parse_element(std::string_view text, Algebra algebra, int rank) {
  return ElementParser(text, algebra, rank).parse();
}

std::string print_term(const WittTerm& t) {
  if (t.is_central()) return "C";
  if (t.rank() == 1) return "d" + std::to_string(t.exponent(1));
  std::string s = "t[";
  for (int j = 1; j <= t.rank(); ++j) {
    if (j > 1) s += ",";
    s += std::to_string(t.exponent(j));
  }
  return s + "]d" + std::to_string(t.direction());
}

std::string print_element(const AlgElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    os << coefficient_prefix(neg ? -c : c, true) << print_term(t);
  }
  return os.str();
}

const char* to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::EvidenceNotSimple: return "EVIDENCE_NOT_SIMPLE";
    case Status::EvidenceReachedOne: return "EVIDENCE_REACHED_ONE";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

nlohmann::ordered_json to_json(const Report& r, bool timed) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["status"] = to_string(r.status);
  if (!r.spec.empty()) j["spec"] = r.spec;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"x", c.x}, {"y", c.y}, {"f", c.f}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  if (r.certificate) j["certificate"] = *r.certificate;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.subchecks.empty()) {
    auto subs = nlohmann::ordered_json::array();
    for (const auto& s : r.subchecks) subs.push_back(to_json(s, timed));
    j["subchecks"] = std::move(subs);
  }
  nlohmann::ordered_json stats;
  stats["pairs_checked"] = r.stats.pairs_checked;
  if (timed) stats["elapsed_ms"] = r.stats.elapsed_ms;
  j["stats"] = std::move(stats);
  return j;
}

}  // namespace

nlohmann::ordered_json write_report(const Report& report) { return to_json(report, true); }
nlohmann::ordered_json write_report_untimed(const Report& report) { return to_json(report, false); }

}  // namespace wittmod
