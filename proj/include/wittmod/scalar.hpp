#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wittmod {

/// Exact rational number. Values that fit in 64-bit numerator/denominator
/// stay on a fast path; anything larger is carried as a GMP rational.
/// Always reduced with positive denominator; zero is 0/1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& q);

  /// Parses "int" or "int/posint".
  static Scalar parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::int64_t exponent) const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

 private:
  static Scalar from_i128(__int128 num, __int128 den);
  static Scalar from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;  // set iff the value does not fit
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace wittmod
