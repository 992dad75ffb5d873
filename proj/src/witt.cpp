#include "wittmod/witt.hpp"

#include <algorithm>

#include "wittmod/error.hpp"

namespace wittmod {

const char* to_string(Algebra algebra) {
  switch (algebra) {
    case Algebra::Witt: return "W";
    case Algebra::WittPlus: return "W+";
    case Algebra::Virasoro: return "Vir";
  }
  return "?";
}

WittTerm WittTerm::derivation(std::span<const int> k, int direction) {
  if (k.empty() || k.size() > static_cast<std::size_t>(kMaxRank)) {
    throw Error(ErrorCode::InvalidArgument, "rank must be between 1 and " + std::to_string(kMaxRank));
  }
  if (direction < 1 || direction > static_cast<int>(k.size())) {
    throw Error(ErrorCode::RankMismatch, "derivation direction out of range");
  }
  WittTerm t;
  t.rank_ = static_cast<int>(k.size());
  t.direction_ = direction;
  std::copy(k.begin(), k.end(), t.k_.begin());
  return t;
}

WittTerm WittTerm::d(int m) {
  const int k[] = {m};
  return derivation(k, 1);
}

WittTerm WittTerm::central() {
  WittTerm t;
  t.central_ = true;
  t.rank_ = 1;
  return t;
}

std::strong_ordering operator<=>(const WittTerm& x, const WittTerm& y) {
  if (x.central_ != y.central_) return x.central_ <=> y.central_;
  if (x.rank_ != y.rank_) return x.rank_ <=> y.rank_;
  if (x.direction_ != y.direction_) return x.direction_ <=> y.direction_;
  return x.k_ <=> y.k_;
}

bool in_plus_domain(const WittTerm& t) {
  if (t.is_central()) return false;
  for (int j = 1; j <= t.rank(); ++j) {
    const int bound = j == t.direction() ? -1 : 0;
    if (t.exponent(j) < bound) return false;
  }
  return true;
}

bool admissible(const WittTerm& t, Algebra algebra, int n) {
  if (t.rank() != n) return false;
  switch (algebra) {
    case Algebra::Witt: return !t.is_central();
    case Algebra::WittPlus: return in_plus_domain(t);
    case Algebra::Virasoro: return n == 1;
  }
  return false;
}

namespace {

void require_admissible(const WittTerm& t, Algebra algebra, int n) {
  if (t.rank() != n) throw Error(ErrorCode::RankMismatch, "term rank differs from algebra rank");
  if (t.is_central() && algebra != Algebra::Virasoro) {
    throw Error(ErrorCode::CentralOutsideVirasoro, "C exists only in the Virasoro algebra");
  }
  if (!admissible(t, algebra, n)) {
    throw Error(ErrorCode::InadmissibleTerm, std::string("term is not a basis element of ") + to_string(algebra));
  }
}

void canonicalize(std::vector<AlgElement::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const AlgElement::Term& l, const AlgElement::Term& r) { return l.first < r.first; });
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

AlgElement::AlgElement(Algebra algebra, int rank) : algebra_(algebra), rank_(rank) {
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorCode::InvalidArgument, "rank out of range");
  if (algebra == Algebra::Virasoro && rank != 1) {
    throw Error(ErrorCode::RankMismatch, "the Virasoro algebra has rank 1");
  }
}

AlgElement AlgElement::basis(Algebra algebra, int rank, const WittTerm& t, const Scalar& c) {
  return from_terms(algebra, rank, {{t, c}});
}

AlgElement AlgElement::from_terms(Algebra algebra, int rank, std::vector<Term> terms) {
  AlgElement x(algebra, rank);
  canonicalize(terms);
  // Zero terms are gone before admissibility is checked.
  for (const auto& t : terms) require_admissible(t.first, algebra, rank);
  x.terms_ = std::move(terms);
  return x;
}

Scalar AlgElement::coeff(const WittTerm& t) const {
  for (const auto& [term, c] : terms_) {
    if (term == t) return c;
  }
  return Scalar(0);
}

void AlgElement::check_compatible(const AlgElement& y) const {
  if (algebra_ != y.algebra_) throw Error(ErrorCode::InvalidArgument, "elements of different algebras");
  if (rank_ != y.rank_) throw Error(ErrorCode::RankMismatch, "elements of different rank");
}

AlgElement AlgElement::operator-() const {
  AlgElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

AlgElement& AlgElement::operator+=(const AlgElement& y) {
  check_compatible(y);
  terms_.insert(terms_.end(), y.terms_.begin(), y.terms_.end());
  canonicalize(terms_);
  return *this;
}

AlgElement& AlgElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Scalar virasoro_cocycle_scale() { return Scalar(1, 12); }

AlgElement bracket_basis(const WittTerm& x, const WittTerm& y, Algebra algebra, int rank) {
  return bracket_basis(x, y, algebra, rank, virasoro_cocycle_scale());
}

AlgElement bracket_basis(const WittTerm& x, const WittTerm& y, Algebra algebra, int rank,
                         const Scalar& cocycle_scale) {
  require_admissible(x, algebra, rank);
  require_admissible(y, algebra, rank);
  std::vector<AlgElement::Term> terms;
  if (x.is_central() || y.is_central()) return AlgElement(algebra, rank);

  std::array<int, kMaxRank> sum{};
  for (int j = 1; j <= rank; ++j) sum[static_cast<std::size_t>(j - 1)] = x.exponent(j) + y.exponent(j);
  std::span<const int> k(sum.data(), static_cast<std::size_t>(rank));
  const int i = x.direction();
  const int j = y.direction();
  // s_i t^{r+s} d_j - r_j t^{r+s} d_i
  terms.emplace_back(WittTerm::derivation(k, j), Scalar(y.exponent(i)));
  terms.emplace_back(WittTerm::derivation(k, i), Scalar(-x.exponent(j)));

  if (algebra == Algebra::Virasoro && x.exponent(1) == -y.exponent(1)) {
    const std::int64_t m = x.exponent(1);
    terms.emplace_back(WittTerm::central(), Scalar(m * m * m - m) * cocycle_scale);
  }
  return AlgElement::from_terms(algebra, rank, std::move(terms));
}

AlgElement bracket(const AlgElement& x, const AlgElement& y) {
  return bracket(x, y, virasoro_cocycle_scale());
}

AlgElement bracket(const AlgElement& x, const AlgElement& y, const Scalar& cocycle_scale) {
  if (x.algebra() != y.algebra()) throw Error(ErrorCode::InvalidArgument, "elements of different algebras");
  if (x.rank() != y.rank()) throw Error(ErrorCode::RankMismatch, "elements of different rank");
  AlgElement result(x.algebra(), x.rank());
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) {
      result += (cx * cy) * bracket_basis(tx, ty, x.algebra(), x.rank(), cocycle_scale);
    }
  }
  return result;
}

std::vector<WittTerm> basis_terms(Algebra algebra, int rank, int kmax) {
  if (kmax < 0) throw Error(ErrorCode::InvalidArgument, "kmax must be nonnegative");
  if (algebra == Algebra::Virasoro && rank != 1) throw Error(ErrorCode::RankMismatch, "Virasoro has rank 1");
  std::vector<WittTerm> out;
  std::vector<int> k(static_cast<std::size_t>(rank), -kmax);
  for (int dir = 1; dir <= rank; ++dir) {
    std::fill(k.begin(), k.end(), -kmax);
    while (true) {
      WittTerm t = WittTerm::derivation(k, dir);
      if (admissible(t, algebra, rank)) out.push_back(t);
      std::size_t pos = 0;
      while (pos < k.size() && k[pos] == kmax) k[pos++] = -kmax;
      if (pos == k.size()) break;
      ++k[pos];
    }
  }
  if (algebra == Algebra::Virasoro) out.push_back(WittTerm::central());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wittmod
