#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wiretap/channel/channel.hpp"
#include "wiretap/prob/info.hpp"
#include "wiretap/region/geometry.hpp"

namespace wiretap {

/// The three rate bounds of the achievability region for one encoder policy,
/// clipped at zero, with the unclipped values kept for diagnostics.
struct RateBounds {
  double b1 = 0.0;
  double b2 = 0.0;
  double b12 = 0.0;
  double raw1 = 0.0;
  double raw2 = 0.0;
  double raw12 = 0.0;
};

/// b1  = [I(U1;Y1,S1) - max(I(U1;Z), I(U1;S1,S2))]+
/// b2  = [I(U2;Y2,S2) - max(I(U2;Z), I(U2;S1,S2))]+
/// b12 = [I(U1;Y1,S1) + I(U2;Y2,S2) - I(U1;U2)
///        - max(I(U1,U2;Z), I(U1,U2;S1,S2))]+
inline RateBounds rate_bounds(const FullJoint& fj) {
  const Pmf& q = fj.joint;
  const double i1 = mutual_information(q, {axis::u1}, {axis::y1, axis::s1});
  const double i2 = mutual_information(q, {axis::u2}, {axis::y2, axis::s2});
  const double leak1 = std::max(mutual_information(q, {axis::u1}, {axis::z}),
                                mutual_information(q, {axis::u1}, {axis::s1, axis::s2}));
  const double leak2 = std::max(mutual_information(q, {axis::u2}, {axis::z}),
                                mutual_information(q, {axis::u2}, {axis::s1, axis::s2}));
  const double pair = mutual_information(q, {axis::u1}, {axis::u2});
  const double leak12 =
      std::max(mutual_information(q, {axis::u1, axis::u2}, {axis::z}),
               mutual_information(q, {axis::u1, axis::u2}, {axis::s1, axis::s2}));
  RateBounds b;
  b.raw1 = i1 - leak1;
  b.raw2 = i2 - leak2;
  b.raw12 = i1 + i2 - pair - leak12;
  b.b1 = std::max(0.0, b.raw1);
  b.b2 = std::max(0.0, b.raw2);
  b.b12 = std::max(0.0, b.raw12);
  return b;
}

/// Convex polygon of achievable pairs, counterclockwise from the origin.
struct RegionPolygon {
  std::vector<RatePoint> vertices;

  bool contains(const RatePoint& p, double tol = 1e-9) const {
    return hull_contains(vertices, p, tol);
  }
};

/// {(R1,R2) : 0 <= R1 <= b1, 0 <= R2 <= b2, R1+R2 <= b12} as a polygon.
inline RegionPolygon region_from_bounds(const RateBounds& b) {
  std::vector<RatePoint> poly = {
      {0.0, 0.0}, {b.b1, 0.0}, {b.b1, b.b2}, {0.0, b.b2}};
  poly = clip_halfplane(poly, 1.0, 1.0, b.b12);
  std::vector<RatePoint> out;
  for (const auto& p : poly) {
    const RatePoint clean{std::max(0.0, p.r1), std::max(0.0, p.r2)};
    const bool dup =
        !out.empty() && std::abs(out.back().r1 - clean.r1) <= kHullTol &&
        std::abs(out.back().r2 - clean.r2) <= kHullTol;
    if (!dup) out.push_back(clean);
  }
  while (out.size() > 1 && std::abs(out.front().r1 - out.back().r1) <= kHullTol &&
         std::abs(out.front().r2 - out.back().r2) <= kHullTol) {
    out.pop_back();
  }
  if (out.empty()) out.push_back({0.0, 0.0});
  return RegionPolygon{std::move(out)};
}

/// Maximal (non-dominated) vertices, sorted by R1 ascending.
inline std::vector<RatePoint> pareto_points(const RegionPolygon& region) {
  std::vector<RatePoint> out;
  for (const auto& p : region.vertices) {
    bool dominated = false;
    for (const auto& q : region.vertices) {
      if (q.r1 >= p.r1 && q.r2 >= p.r2 && (q.r1 > p.r1 || q.r2 > p.r2)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const RatePoint& a, const RatePoint& b) {
    return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2);
  });
  return out;
}

/// Single-receiver specialization: min(I(U1;Y1) - I(U1;S1,S2),
/// I(U1;Y1) - I(U1;Z)) on a joint whose u2, y2, s2 axes are degenerate.
/// The receiver here sees Y1 alone; the state axes are encoder-side only.
inline double chen_vinck_bound(const FullJoint& fj) {
  const Pmf& q = fj.joint;
  for (const char* name : {axis::u2, axis::y2, axis::s2}) {
    const auto& a = q.axes()[q.axis_index(name)];
    if (a.size != 1) {
      throw std::invalid_argument("chen_vinck_bound: axis '" + a.name +
                                  "' must be degenerate (size 1), got size " +
                                  std::to_string(a.size));
    }
  }
  const double iy = mutual_information(q, {axis::u1}, {axis::y1});
  const double is = mutual_information(q, {axis::u1}, {axis::s1, axis::s2});
  const double iz = mutual_information(q, {axis::u1}, {axis::z});
  return std::min(iy - is, iy - iz);
}

}  // namespace wiretap
