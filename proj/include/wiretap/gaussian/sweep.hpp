#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wiretap/gaussian/rates.hpp"
#include "wiretap/region/bounds.hpp"
#include "wiretap/util/parallel.hpp"

namespace wiretap {

struct SweepGrid {
  std::vector<double> alpha1;
  std::vector<double> alpha2;
  std::vector<double> beta;
};

/// Default parameter grid: per alpha, 20 log-spaced magnitudes in [0.01, 10]
/// of each sign plus 0 (41 values); beta uniform on [0,1] with 21 values.
inline SweepGrid default_sweep_grid() {
  SweepGrid g;
  std::vector<double> alphas;
  alphas.push_back(0.0);
  for (int i = 0; i < 20; ++i) {
    const double mag = std::pow(10.0, -2.0 + 3.0 * i / 19.0);
    alphas.push_back(mag);
    alphas.push_back(-mag);
  }
  g.alpha1 = alphas;
  g.alpha2 = alphas;
  for (int i = 0; i <= 20; ++i) g.beta.push_back(i / 20.0);
  return g;
}

/// Hull vertex together with the grid point whose polygon contributed it.
struct SweepVertex {
  RatePoint point;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta = 0.0;
  RateBounds bounds;
};

struct SweepResult {
  RegionPolygon region;
  std::vector<SweepVertex> vertices;  // one entry per region vertex, same order
};

/// Convex hull of region_from_bounds over the grid. Grid points are evaluated
/// independently and merged in grid order, so the result does not depend on
/// the thread count.
inline SweepResult sweep_region(const GaussianParams& gp, const SweepGrid& grid,
                                bool with_eavesdropper = true,
                                std::size_t threads = 1) {
  gp.validate();
  const std::size_t n =
      grid.alpha1.size() * grid.alpha2.size() * grid.beta.size();
  std::vector<RateBounds> bounds(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const std::size_t bi = i % grid.beta.size();
    const std::size_t a2i = (i / grid.beta.size()) % grid.alpha2.size();
    const std::size_t a1i = i / (grid.beta.size() * grid.alpha2.size());
    const AuxParams ap{grid.alpha1[a1i], grid.alpha2[a2i], grid.beta[bi]};
    bounds[i] = gaussian_rate_bounds(gp, ap, with_eavesdropper);
  });

  std::vector<RatePoint> points;
  std::map<std::pair<double, double>, std::size_t> producer;  // vertex -> grid index
  for (std::size_t i = 0; i < n; ++i) {
    const RegionPolygon poly = region_from_bounds(bounds[i]);
    for (const auto& v : poly.vertices) {
      points.push_back(v);
      producer.emplace(std::make_pair(v.r1, v.r2), i);
    }
  }

  SweepResult out;
  out.region = RegionPolygon{convex_hull(std::move(points))};
  for (const auto& v : out.region.vertices) {
    const std::size_t i = producer.at(std::make_pair(v.r1, v.r2));
    const std::size_t bi = i % grid.beta.size();
    const std::size_t a2i = (i / grid.beta.size()) % grid.alpha2.size();
    const std::size_t a1i = i / (grid.beta.size() * grid.alpha2.size());
    out.vertices.push_back(SweepVertex{v, grid.alpha1[a1i], grid.alpha2[a2i],
                                       grid.beta[bi], bounds[i]});
  }
  return out;
}

/// Largest R1 + R2 over the region boundary.
inline double max_sum_rate(const RegionPolygon& region) {
  double best = 0.0;
  for (const auto& v : region.vertices) best = std::max(best, v.r1 + v.r2);
  return best;
}

}  // namespace wiretap
