#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "gplab/errors.hpp"

namespace gplab {

/// Exact arbitrary-precision rational, always in lowest terms with positive
/// denominator. This is the scalar type for every coordinate and slope in
/// the library; nothing is ever rounded.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    require(den != 0, ErrorKind::MalformedInput, "zero denominator");
    v_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    require(den != 0, ErrorKind::MalformedInput, "zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (base 10). Canonicalizes; rejects malformed input.
  static Rational parse(const std::string& s) {
    auto bad = [&] { fail(ErrorKind::MalformedInput, "bad rational '" + s + "'"); };
    if (s.empty()) bad();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(mpz_class(s), mpz_class(1));
      }
      const std::string num = s.substr(0, slash);
      const std::string den = s.substr(slash + 1);
      if (num.empty() || den.empty()) bad();
      return Rational(mpz_class(num), mpz_class(den));
    } catch (const std::invalid_argument&) {
      bad();
    }
    return Rational();  // unreachable
  }

  /// Lowest-terms string, "p/q", or just "p" for integers.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(o.sign() != 0, ErrorKind::MalformedInput, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// r^e for integer e (e may be negative; r must be nonzero then).
inline Rational pow_int(const Rational& r, long e) {
  if (e < 0) {
    require(r.sign() != 0, ErrorKind::MalformedInput, "0^negative");
    return pow_int(Rational(1) / r, -e);
  }
  Rational acc(1), base = r;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

/// 2^e as an exact rational.
inline Rational pow2(long e) { return pow_int(Rational(2), e); }

struct RationalHash {
  std::size_t operator()(const Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};

}  // namespace gplab
