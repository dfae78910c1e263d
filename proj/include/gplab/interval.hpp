#pragma once

#include <optional>
#include <string>

#include "gplab/rational.hpp"

namespace gplab {

/// Closed nondegenerate-or-point interval [lo, hi], lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    require(lo <= hi, ErrorKind::MalformedInput,
            "interval endpoints out of order: [" + lo.str() + "," + hi.str() + "]");
  }

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const Interval& a, const Interval& b) = default;

  std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
};

inline bool disjoint(const Interval& a, const Interval& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo, b.lo), max(a.hi, b.hi));
}

inline std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const Rational lo = max(a.lo, b.lo);
  const Rational hi = min(a.hi, b.hi);
  if (hi < lo) return std::nullopt;
  return Interval(lo, hi);
}

}  // namespace gplab
