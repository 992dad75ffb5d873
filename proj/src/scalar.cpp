#include "wittmod/scalar.hpp"

#include <limits>
#include <ostream>

#include "wittmod/error.hpp"

namespace wittmod {

namespace {

using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 x, u128 y) {
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

u128 abs_u128(__int128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

mpz_class mpz_from_i128(__int128 v) {
  const bool neg = v < 0;
  u128 mag = abs_u128(v);
  mpz_class hi(static_cast<unsigned long>(mag >> 64));
  mpz_class lo(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ContextMismatch: return "CONTEXT_MISMATCH";
    case ErrorCode::ParameterDomain: return "PARAMETER_DOMAIN";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::InadmissibleTerm: return "INADMISSIBLE_TERM";
    case ErrorCode::RankMismatch: return "RANK_MISMATCH";
    case ErrorCode::CentralOutsideVirasoro: return "CENTRAL_OUTSIDE_VIRASORO";
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::NegativeModuleExponent: return "NEGATIVE_MODULE_EXPONENT";
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::Config: return "CONFIG";
  }
  return "UNKNOWN";
}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  *this = from_i128(num, den);
}

Scalar::Scalar(const mpq_class& q) { *this = from_mpq(q); }

Scalar Scalar::from_i128(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Scalar r;
  if (num == 0) return r;
  u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
  num /= static_cast<__int128>(g);
  den /= static_cast<__int128>(g);
  if (num >= kMin && num <= kMax && den <= kMax) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Scalar Scalar::from_mpq(mpq_class q) {
  q.canonicalize();
  Scalar r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return from_mpq(mpq_class(mpz_class(s, 10)));
    }
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    if (den <= 0) throw Error(ErrorCode::Syntax, "denominator must be positive: " + s);
    return from_mpq(mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Syntax, "not a rational number: " + s);
  }
}

bool Scalar::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Scalar::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
  if (big_ || num_ == kMin) return from_mpq(-to_mpq());
  Scalar r = *this;
  r.num_ = -num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return from_i128(den_, num_);
}

Scalar Scalar::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (x.big_ || y.big_) return Scalar::from_mpq(x.to_mpq() + y.to_mpq());
  if (x.den_ == 1 && y.den_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(x.num_, y.num_, &s)) return Scalar(s);
  }
  __int128 n = static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_;
  __int128 d = static_cast<__int128>(x.den_) * y.den_;
  return Scalar::from_i128(n, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.big_ || y.big_) return Scalar::from_mpq(x.to_mpq() * y.to_mpq());
  if (x.den_ == 1 && y.den_ == 1) {
    std::int64_t p;
    if (!__builtin_mul_overflow(x.num_, y.num_, &p)) return Scalar(p);
  }
  return Scalar::from_i128(static_cast<__int128>(x.num_) * y.num_,
                           static_cast<__int128>(x.den_) * y.den_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

bool operator==(const Scalar& x, const Scalar& y) {
  // Canonical form makes big/small representation unique.
  if (x.big_ || y.big_) return x.big_ && y.big_ && *x.big_ == *y.big_;
  return x.num_ == y.num_ && x.den_ == y.den_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  if (x.big_ || y.big_) {
    int c = cmp(x.to_mpq(), y.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  __int128 l = static_cast<__int128>(x.num_) * y.den_;
  __int128 r = static_cast<__int128>(y.num_) * x.den_;
  return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace wittmod
