#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace wiretap {

struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;

  friend bool operator==(const RatePoint& a, const RatePoint& b) {
    return a.r1 == b.r1 && a.r2 == b.r2;
  }
};

inline double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

inline constexpr double kHullTol = 1e-12;

/// Monotone-chain convex hull, counterclockwise, no collinear interior points.
inline std::vector<RatePoint> convex_hull(std::vector<RatePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
    return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;

  std::vector<RatePoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= kHullTol) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kHullTol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

/// Signed membership slack of p in the hull: >= -tol when p lies inside or on
/// the boundary of the convex polygon (CCW vertex order).
inline bool hull_contains(const std::vector<RatePoint>& hull, const RatePoint& p,
                          double tol) {
  if (hull.empty()) return false;
  if (hull.size() == 1) {
    return std::abs(p.r1 - hull[0].r1) <= tol && std::abs(p.r2 - hull[0].r2) <= tol;
  }
  if (hull.size() == 2) {
    const double c = cross(hull[0], hull[1], p);
    const double len = std::hypot(hull[1].r1 - hull[0].r1, hull[1].r2 - hull[0].r2);
    if (std::abs(c) > tol * std::max(1.0, len)) return false;
    const double t = (p.r1 - hull[0].r1) * (hull[1].r1 - hull[0].r1) +
                     (p.r2 - hull[0].r2) * (hull[1].r2 - hull[0].r2);
    return t >= -tol && t <= len * len + tol;
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RatePoint& a = hull[i];
    const RatePoint& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < -tol) return false;
  }
  return true;
}

/// Clip a convex polygon by the halfplane {a*r1 + b*r2 <= c}
/// (Sutherland-Hodgman step). Vertices stay CCW.
inline std::vector<RatePoint> clip_halfplane(const std::vector<RatePoint>& poly,
                                             double a, double b, double c) {
  std::vector<RatePoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RatePoint& p = poly[i];
    const RatePoint& q = poly[(i + 1) % n];
    const double fp = a * p.r1 + b * p.r2 - c;
    const double fq = a * q.r1 + b * q.r2 - c;
    if (fp <= kHullTol) out.push_back(p);
    if ((fp < -kHullTol && fq > kHullTol) || (fp > kHullTol && fq < -kHullTol)) {
      const double t = fp / (fp - fq);
      out.push_back({p.r1 + t * (q.r1 - p.r1), p.r2 + t * (q.r2 - p.r2)});
    }
  }
  return out;
}

}  // namespace wiretap
