#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gplab/interval.hpp"
#include "gplab/rational.hpp"

namespace gplab {

using GraphPoint = std::pair<Rational, Rational>;

/// Slope pair at the two endpoints, kept multiplicatively so everything
/// stays rational. The endpoint homomorphism's kernel is slope pair (1,1).
struct EndpointSlopes {
  Rational at_zero;
  Rational at_one;

  bool in_kernel() const { return at_zero == Rational(1) && at_one == Rational(1); }
  friend bool operator==(const EndpointSlopes&, const EndpointSlopes&) = default;
};

namespace detail {

inline bool collinear(const GraphPoint& a, const GraphPoint& b, const GraphPoint& c) {
  // (b-a) x (c-b) == 0, all exact
  return (b.second - a.second) * (c.first - b.first) ==
         (c.second - b.second) * (b.first - a.first);
}

// Removes interior points that do not change the slope. Input must be
// strictly increasing in both coordinates and include both endpoints.
inline void prune_collinear(std::vector<GraphPoint>& pts) {
  if (pts.size() < 3) return;
  std::vector<GraphPoint> out;
  out.reserve(pts.size());
  out.push_back(pts.front());
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    out.push_back(pts[i]);
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), pts[i + 1])) {
      out.pop_back();
      break;  // only the just-pushed point can be redundant here
    }
  }
  out.push_back(pts.back());
  pts = std::move(out);
}

}  // namespace detail

/// Orientation-preserving piecewise-linear homeomorphism of [0,1] in
/// canonical form: the stored lists are the interior break points and their
/// values, strictly increasing, with no spurious (collinear) entries. The
/// endpoints 0 -> 0 and 1 -> 1 are implicit. Canonical form makes equality
/// structural, which the Cayley-ball deduplication depends on.
class PLMap {
 public:
  PLMap() = default;  // identity

  static PLMap identity() { return PLMap(); }

  /// Builds the canonical map through the given graph points. The endpoint
  /// points (0,0) and (1,1) may be included or omitted. Throws NotMonotone
  /// if either coordinate fails to be strictly increasing, OutOfRange if a
  /// coordinate leaves [0,1].
  static PLMap from_points(std::vector<GraphPoint> pts) {
    const Rational zero(0), one(1);
    for (const auto& [x, y] : pts) {
      require(zero <= x && x <= one && zero <= y && y <= one,
              ErrorKind::OutOfRange, "graph point outside [0,1]^2");
    }
    if (pts.empty() || pts.front() != GraphPoint{zero, zero})
      pts.insert(pts.begin(), {zero, zero});
    if (pts.back() != GraphPoint{one, one}) pts.push_back({one, one});
    for (std::size_t i = 1; i < pts.size(); ++i) {
      require(pts[i - 1].first < pts[i].first && pts[i - 1].second < pts[i].second,
              ErrorKind::NotMonotone, "graph points not strictly increasing");
    }
    detail::prune_collinear(pts);
    PLMap f;
    f.xs_.reserve(pts.size() - 2);
    f.ys_.reserve(pts.size() - 2);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      f.xs_.push_back(pts[i].first);
      f.ys_.push_back(pts[i].second);
    }
    return f;
  }

  bool is_identity() const { return xs_.empty(); }
  std::size_t breakpoint_count() const { return xs_.size(); }
  const std::vector<Rational>& break_xs() const { return xs_; }
  const std::vector<Rational>& break_ys() const { return ys_; }

  /// Full graph including the implicit endpoints.
  std::vector<GraphPoint> graph() const {
    std::vector<GraphPoint> pts;
    pts.reserve(xs_.size() + 2);
    pts.push_back({Rational(0), Rational(0)});
    for (std::size_t i = 0; i < xs_.size(); ++i) pts.push_back({xs_[i], ys_[i]});
    pts.push_back({Rational(1), Rational(1)});
    return pts;
  }

  /// Exact evaluation by affine interpolation on the containing segment.
  Rational operator()(const Rational& x) const {
    require(Rational(0) <= x && x <= Rational(1), ErrorKind::OutOfRange,
            "evaluate: x outside [0,1]");
    return eval_unchecked(x);
  }

  /// Exact inverse evaluation (the value lists are strictly increasing).
  Rational inverse_at(const Rational& y) const {
    require(Rational(0) <= y && y <= Rational(1), ErrorKind::OutOfRange,
            "inverse_at: y outside [0,1]");
    // segment index: number of break values < y
    const std::size_t i =
        std::lower_bound(ys_.begin(), ys_.end(), y) - ys_.begin();
    const Rational x0 = (i == 0) ? Rational(0) : xs_[i - 1];
    const Rational y0 = (i == 0) ? Rational(0) : ys_[i - 1];
    const Rational x1 = (i == xs_.size()) ? Rational(1) : xs_[i];
    const Rational y1 = (i == xs_.size()) ? Rational(1) : ys_[i];
    return x0 + (y - y0) * (x1 - x0) / (y1 - y0);
  }

  PLMap inverse() const {
    PLMap g;
    g.xs_ = ys_;
    g.ys_ = xs_;
    return g;
  }

  friend bool operator==(const PLMap& a, const PLMap& b) = default;

  /// Slopes of the successive segments (breakpoint_count() + 1 entries).
  std::vector<Rational> slopes() const {
    std::vector<Rational> s;
    const auto pts = graph();
    s.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      s.push_back((pts[i + 1].second - pts[i].second) /
                  (pts[i + 1].first - pts[i].first));
    }
    return s;
  }

  EndpointSlopes endpoint_slopes() const {
    if (xs_.empty()) return {Rational(1), Rational(1)};
    const Rational s0 = ys_.front() / xs_.front();
    const Rational s1 =
        (Rational(1) - ys_.back()) / (Rational(1) - xs_.back());
    return {s0, s1};
  }

  /// max over segments of max(slope, 1/slope); exp of the slope length
  /// function, kept rational so comparisons stay exact.
  Rational slope_norm() const {
    Rational best(1);
    for (const auto& s : slopes()) {
      if (best < s) best = s;
      const Rational inv = Rational(1) / s;
      if (best < inv) best = inv;
    }
    return best;
  }

  /// Smallest closed interval containing {x : f(x) != x}; nullopt for the
  /// identity. A segment is an identity segment iff both endpoints lie on
  /// the diagonal.
  std::optional<Interval> support_hull() const {
    const auto pts = graph();
    std::size_t first = pts.size(), last = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const bool ident = pts[i].first == pts[i].second &&
                         pts[i + 1].first == pts[i + 1].second;
      if (!ident) {
        first = std::min(first, i);
        last = i + 1;
      }
    }
    if (first == pts.size()) return std::nullopt;
    return Interval(pts[first].first, pts[last].first);
  }

  /// Exact check of f(x) >= x for all x (it suffices to check the vertices).
  bool dominates_identity() const {
    for (std::size_t i = 0; i < xs_.size(); ++i)
      if (ys_[i] < xs_[i]) return false;
    return true;
  }

  std::string str() const {
    std::string s = "PL{";
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (i) s += ";";
      s += xs_[i].str() + "->" + ys_[i].str();
    }
    return s + "}";
  }

 private:
  Rational eval_unchecked(const Rational& x) const {
    const std::size_t i =
        std::lower_bound(xs_.begin(), xs_.end(), x) - xs_.begin();
    const Rational x0 = (i == 0) ? Rational(0) : xs_[i - 1];
    const Rational y0 = (i == 0) ? Rational(0) : ys_[i - 1];
    const Rational x1 = (i == xs_.size()) ? Rational(1) : xs_[i];
    const Rational y1 = (i == xs_.size()) ? Rational(1) : ys_[i];
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
  }

  friend PLMap compose(const PLMap&, const PLMap&);

  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

/// fable g, i.e. x -> f(g(x)). Break points of the result lie in
/// BP(g) union g^{-1}(BP(f)); the canonical form prunes the ones where the
/// chain-rule slopes happen to agree.
inline PLMap compose(const PLMap& f, const PLMap& g) {
  std::vector<Rational> cand;
  cand.reserve(f.breakpoint_count() + g.breakpoint_count());
  for (const auto& x : g.break_xs()) cand.push_back(x);
  for (const auto& y : f.break_xs()) cand.push_back(g.inverse_at(y));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<GraphPoint> pts;
  pts.reserve(cand.size() + 2);
  pts.push_back({Rational(0), Rational(0)});
  for (const auto& x : cand) {
    if (x == Rational(0) || x == Rational(1)) continue;
    pts.push_back({x, f(g(x))});
  }
  pts.push_back({Rational(1), Rational(1)});
  detail::prune_collinear(pts);

  PLMap h;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    h.xs_.push_back(pts[i].first);
    h.ys_.push_back(pts[i].second);
  }
  return h;
}

/// f^n for any integer n (repeated exact composition).
inline PLMap power(const PLMap& f, long n) {
  if (n < 0) return power(f.inverse(), -n);
  PLMap acc;
  for (long i = 0; i < n; ++i) acc = compose(f, acc);
  return acc;
}

/// [f,g] = f g f^{-1} g^{-1}.
inline PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(f, g), compose(f.inverse(), g.inverse()));
}

inline PLMap conjugate(const PLMap& f, const PLMap& c) {
  return compose(compose(c, f), c.inverse());
}

// ---------------------------------------------------------------------------
// Named constructors

/// Identity outside [a1,b1], x + alpha on [a,b], affine ramps between; in
/// the kernel of the endpoint homomorphism and >= id everywhere.
/// Requires 0 < a1 < a < b < b+alpha < b1 < 1.
inline PLMap bump(const Rational& a1, const Rational& a, const Rational& b,
                  const Rational& b1, const Rational& alpha) {
  require(Rational(0) < a1 && a1 < a && a < b && b + alpha < b1 &&
              b1 < Rational(1) && Rational(0) < alpha,
          ErrorKind::InvalidBump, "bump parameters out of order");
  return PLMap::from_points(
      {{a1, a1}, {a, a + alpha}, {b, b + alpha}, {b1, b1}});
}

/// The map h with h^{-1}(x) = x/2 + 1/4 on [a1,b1] and affine outside.
inline PLMap mather_h(const Rational& a1, const Rational& b1) {
  require(Rational(0) < a1 && a1 < b1 && b1 < Rational(1),
          ErrorKind::MalformedInput, "mather_h: need 0 < a' < b' < 1");
  const Rational half(1, 2), quarter(1, 4);
  PLMap hinv = PLMap::from_points(
      {{a1, a1 * half + quarter}, {b1, b1 * half + quarter}});
  return hinv.inverse();
}

/// r(x) = 2x on [0,3/8], affine from (3/8,3/4) to (1,1).
inline PLMap mather_r() {
  return PLMap::from_points({{Rational(3, 8), Rational(3, 4)}});
}

// ---------------------------------------------------------------------------
// Patches: PL graphs over a subinterval, used for exact restriction checks.

/// A strictly increasing PL graph over a closed subinterval of [0,1]. Unlike
/// PLMap, the endpoints are explicit and need not be fixed. Canonical (no
/// collinear interior vertex), so equality is structural.
class PLPatch {
 public:
  /// pts must be strictly increasing in both coordinates, size >= 2.
  explicit PLPatch(std::vector<GraphPoint> pts) : pts_(std::move(pts)) {
    require(pts_.size() >= 2, ErrorKind::Internal, "patch needs >= 2 points");
    for (std::size_t i = 1; i < pts_.size(); ++i)
      require(pts_[i - 1].first < pts_[i].first &&
                  pts_[i - 1].second < pts_[i].second,
              ErrorKind::NotMonotone, "patch graph not strictly increasing");
    detail::prune_collinear(pts_);
  }

  /// Restriction of f to J.
  static PLPatch of(const PLMap& f, const Interval& J) {
    require(!J.is_point(), ErrorKind::Internal, "degenerate patch domain");
    std::vector<GraphPoint> pts;
    pts.push_back({J.lo, f(J.lo)});
    for (std::size_t i = 0; i < f.break_xs().size(); ++i) {
      const Rational& x = f.break_xs()[i];
      if (J.lo < x && x < J.hi) pts.push_back({x, f.break_ys()[i]});
    }
    pts.push_back({J.hi, f(J.hi)});
    return PLPatch(std::move(pts));
  }

  static PLPatch identity_on(const Interval& J) {
    return PLPatch({{J.lo, J.lo}, {J.hi, J.hi}});
  }

  Interval domain() const { return Interval(pts_.front().first, pts_.back().first); }
  Interval range() const { return Interval(pts_.front().second, pts_.back().second); }
  const std::vector<GraphPoint>& points() const { return pts_; }

  Rational operator()(const Rational& x) const {
    require(domain().contains(x), ErrorKind::OutOfRange, "patch eval outside domain");
    std::size_t i = 1;
    while (i + 1 < pts_.size() && pts_[i].first < x) ++i;
    const auto& [x0, y0] = pts_[i - 1];
    const auto& [x1, y1] = pts_[i];
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
  }

  PLPatch inverse() const {
    std::vector<GraphPoint> pts;
    pts.reserve(pts_.size());
    for (const auto& [x, y] : pts_) pts.push_back({y, x});
    return PLPatch(std::move(pts));
  }

  /// Restriction to a subinterval of the domain.
  PLPatch restricted(const Interval& J) const {
    require(domain().contains(J) && !J.is_point(), ErrorKind::OutOfRange,
            "patch restriction outside domain");
    std::vector<GraphPoint> pts;
    pts.push_back({J.lo, (*this)(J.lo)});
    for (const auto& p : pts_)
      if (J.lo < p.first && p.first < J.hi) pts.push_back(p);
    pts.push_back({J.hi, (*this)(J.hi)});
    return PLPatch(std::move(pts));
  }

  bool is_identity() const {
    return pts_.size() == 2 && pts_.front().first == pts_.front().second &&
           pts_.back().first == pts_.back().second;
  }

  friend bool operator==(const PLPatch& a, const PLPatch& b) = default;

  std::string str() const {
    std::string s = "Patch{";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (i) s += ";";
      s += "(" + pts_[i].first.str() + "," + pts_[i].second.str() + ")";
    }
    return s + "}";
  }

 private:
  std::vector<GraphPoint> pts_;
};

/// f after g as patches: g.range() must lie within f.domain(); the result
/// lives over g.domain().
inline PLPatch compose(const PLPatch& f, const PLPatch& g) {
  require(f.domain().contains(g.range()), ErrorKind::Internal,
          "patch composition domains do not chain");
  const PLPatch fr = f.domain() == g.range() ? f : f.restricted(g.range());
  std::vector<Rational> cand;
  for (const auto& p : g.points()) cand.push_back(p.first);
  const PLPatch ginv = g.inverse();
  for (const auto& p : fr.points()) {
    const Rational x = ginv(p.first);
    cand.push_back(x);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<GraphPoint> pts;
  pts.reserve(cand.size());
  for (const auto& x : cand) pts.push_back({x, fr(g(x))});
  return PLPatch(std::move(pts));
}

}  // namespace gplab
