#ifndef SPNI_PARETO_HPP
#define SPNI_PARETO_HPP

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spni/point.hpp"

namespace spni {

/// Keeps the items whose projected point is not dominated by any other
/// item's point. Equal points are merged into the one that came first in
/// the input. The result is sorted by ascending f1, hence strictly
/// decreasing f2.
///
/// Sort plus a single sweep, O(N log N): after ordering by (f1, f2)
/// descending, an item survives iff its f2 beats every f2 seen so far.
template <class T, class Proj = std::identity>
std::vector<T> filter_nondominated(std::vector<T> items, Proj proj = {}) {
  std::stable_sort(items.begin(), items.end(), [&](const T& a, const T& b) {
    const Point& pa = std::invoke(proj, a);
    const Point& pb = std::invoke(proj, b);
    return pb < pa;
  });
  std::vector<T> kept;
  std::optional<ExtNat> best_f2;
  for (T& item : items) {
    const ExtNat f2 = std::invoke(proj, item).f2;
    if (best_f2 && f2 <= *best_f2)
      continue;
    best_f2 = f2;
    kept.push_back(std::move(item));
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

/// Mutually non-dominated, deduplicated points in ascending f1 order.
class LabelSet {
public:
  LabelSet() = default;
  LabelSet(std::initializer_list<Point> points)
      : points_(filter_nondominated(std::vector<Point>(points))) {}

  /// Filters an arbitrary multiset.
  static LabelSet from_points(std::vector<Point> points) {
    LabelSet s;
    s.points_ = filter_nondominated(std::move(points));
    return s;
  }

  /// Adopts points already in canonical order. Caller guarantees it.
  static LabelSet from_canonical(std::vector<Point> points) {
    LabelSet s;
    s.points_ = std::move(points);
    return s;
  }

  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

private:
  std::vector<Point> points_;
};

/// True iff `points` is strictly increasing in f1 and strictly decreasing in f2.
inline bool is_canonical(std::span<const Point> points) {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1].f1 < points[i].f1 && points[i - 1].f2 > points[i].f2))
      return false;
  return true;
}

/// Index of a point of the canonical set that weakly dominates `p`, if any.
/// Among points with f1 >= p.f1 the first has the largest f2.
inline std::optional<std::size_t> find_cover(std::span<const Point> canonical, const Point& p) {
  auto it = std::lower_bound(canonical.begin(), canonical.end(), p.f1,
                             [](const Point& q, const ExtNat& f1) { return q.f1 < f1; });
  if (it == canonical.end() || it->f2 < p.f2)
    return std::nullopt;
  return static_cast<std::size_t>(it - canonical.begin());
}

/// {a + b | a in A, b in B}, row-major over A. Overflow throws.
inline std::vector<Point> minkowski_sum(std::span<const Point> a, std::span<const Point> b) {
  std::vector<Point> out;
  out.reserve(a.size() * b.size());
  for (const Point& p : a)
    for (const Point& q : b)
      out.push_back(point_add(p, q));
  return out;
}

/// {min(a, b) componentwise | a in A, b in B}, row-major over A.
inline std::vector<Point> min_combine(std::span<const Point> a, std::span<const Point> b) {
  std::vector<Point> out;
  out.reserve(a.size() * b.size());
  for (const Point& p : a)
    for (const Point& q : b)
      out.push_back(point_min(p, q));
  return out;
}

} // namespace spni

#endif // SPNI_PARETO_HPP
