#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wiretap/channel/channel.hpp"
#include "wiretap/region/bounds.hpp"
#include "wiretap/region/geometry.hpp"
#include "wiretap/util/parallel.hpp"
#include "wiretap/util/rng.hpp"

namespace wiretap {

struct SearchConfig {
  std::size_t aux1_size = 0;  // 0 -> default |x|*|s1|*|s2|
  std::size_t aux2_size = 0;
  std::size_t sample_budget = 1000;
  std::size_t refinement_iterations = 0;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::size_t threads = 1;
};

/// Best policy found for one weighting lambda of the objective
/// lambda*R1 + (1-lambda)*R2.
struct SupportPoint {
  double lambda = 0.0;
  RatePoint point;
  RateBounds bounds;
  ConditionalPmf policy;
};

struct SearchResult {
  RegionPolygon region;
  std::vector<SupportPoint> supports;
};

namespace detail {

inline constexpr double kLambdas[] = {0.0, 0.25, 0.5, 0.75, 1.0};

inline double support_value(const RegionPolygon& poly, double lambda) {
  double best = 0.0;
  for (const auto& v : poly.vertices) {
    best = std::max(best, lambda * v.r1 + (1.0 - lambda) * v.r2);
  }
  return best;
}

struct Candidate {
  ConditionalPmf policy;
  RateBounds bounds;
  RegionPolygon poly;
};

inline Candidate evaluate_policy(const ChannelSpec& spec, ConditionalPmf policy) {
  AuxPolicy pol(std::move(policy));
  const RateBounds b = rate_bounds(build_full_joint(spec, pol));
  RegionPolygon poly = region_from_bounds(b);
  return Candidate{std::move(pol.policy), b, std::move(poly)};
}

inline std::pair<AxisList, AxisList> policy_axes(const ChannelSpec& spec,
                                                 std::size_t a1, std::size_t a2) {
  AxisList given = {{axis::s1, spec.axis_size(axis::s1)},
                    {axis::s2, spec.axis_size(axis::s2)}};
  AxisList output = {{axis::u1, a1}, {axis::u2, a2}, {axis::x, spec.axis_size(axis::x)}};
  return {std::move(given), std::move(output)};
}

inline ConditionalPmf random_policy(const ChannelSpec& spec, std::size_t a1,
                                    std::size_t a2, Rng& rng) {
  auto [given, output] = policy_axes(spec, a1, a2);
  const std::size_t gsize = table_size(given);
  const std::size_t osize = table_size(output);
  std::vector<double> table(gsize * osize);
  for (std::size_t g = 0; g < gsize; ++g) {
    const auto slice = rng.simplex_uniform(osize);
    std::copy(slice.begin(), slice.end(), table.begin() + g * osize);
  }
  return ConditionalPmf(std::move(given), std::move(output), std::move(table), 1e-6);
}

/// Deterministic warm starts: constant auxiliaries with uniform input, and the
/// identity embeddings u=x / u=(x,s1,s2) where the auxiliary alphabet permits.
inline std::vector<ConditionalPmf> canonical_policies(const ChannelSpec& spec,
                                                      std::size_t a1, std::size_t a2) {
  const std::size_t nx = spec.axis_size(axis::x);
  const std::size_t n1 = spec.axis_size(axis::s1);
  const std::size_t n2 = spec.axis_size(axis::s2);
  auto [given, output] = policy_axes(spec, a1, a2);
  const std::size_t gsize = table_size(given);
  const std::size_t osize = table_size(output);

  // cell(u1, u2, x) within one slice
  const auto cell = [&](std::size_t u1, std::size_t u2, std::size_t x) {
    return (u1 * a2 + u2) * nx + x;
  };
  std::vector<ConditionalPmf> out;
  const auto push = [&](const std::vector<double>& table) {
    out.emplace_back(given, output, table, 1e-6);
  };

  {
    std::vector<double> t(gsize * osize, 0.0);
    for (std::size_t g = 0; g < gsize; ++g) {
      for (std::size_t x = 0; x < nx; ++x) t[g * osize + cell(0, 0, x)] = 1.0 / nx;
    }
    push(t);
  }
  if (a1 >= nx) {
    std::vector<double> t(gsize * osize, 0.0);
    for (std::size_t g = 0; g < gsize; ++g) {
      for (std::size_t x = 0; x < nx; ++x) t[g * osize + cell(x, 0, x)] = 1.0 / nx;
    }
    push(t);
  }
  if (a2 >= nx) {
    std::vector<double> t(gsize * osize, 0.0);
    for (std::size_t g = 0; g < gsize; ++g) {
      for (std::size_t x = 0; x < nx; ++x) t[g * osize + cell(0, x, x)] = 1.0 / nx;
    }
    push(t);
  }
  if (a1 >= nx && a2 >= nx) {
    std::vector<double> t(gsize * osize, 0.0);
    for (std::size_t g = 0; g < gsize; ++g) {
      for (std::size_t x = 0; x < nx; ++x) t[g * osize + cell(x, x, x)] = 1.0 / nx;
    }
    push(t);
  }
  if (a1 >= nx * n1 * n2) {
    std::vector<double> t(gsize * osize, 0.0);
    for (std::size_t s1 = 0; s1 < n1; ++s1) {
      for (std::size_t s2 = 0; s2 < n2; ++s2) {
        const std::size_t g = s1 * n2 + s2;
        for (std::size_t x = 0; x < nx; ++x) {
          t[g * osize + cell((x * n1 + s1) * n2 + s2, 0, x)] = 1.0 / nx;
        }
      }
    }
    push(t);
  }
  if (a2 >= nx * n1 * n2) {
    std::vector<double> t(gsize * osize, 0.0);
    for (std::size_t s1 = 0; s1 < n1; ++s1) {
      for (std::size_t s2 = 0; s2 < n2; ++s2) {
        const std::size_t g = s1 * n2 + s2;
        for (std::size_t x = 0; x < nx; ++x) {
          t[g * osize + cell(0, (x * n1 + s1) * n2 + s2, x)] = 1.0 / nx;
        }
      }
    }
    push(t);
  }
  return out;
}

inline ConditionalPmf mutate_policy(const ConditionalPmf& pol, Rng& rng) {
  const std::size_t gsize = pol.given_size();
  const std::size_t osize = pol.output_size();
  std::vector<double> t = pol.table();
  const std::uint64_t kind = rng.uniform_int(3);
  if (kind == 0) {  // multiplicative log-normal noise
    const double sigma = 0.05 * std::pow(8.0, static_cast<double>(rng.uniform_int(3)));
    for (auto& w : t) w = std::max(1e-300, w) * std::exp(sigma * rng.normal());
  } else if (kind == 1) {  // temperature scaling of every slice
    static constexpr double kGamma[] = {0.5, 2.0, 4.0};
    const double gamma = kGamma[rng.uniform_int(3)];
    for (auto& w : t) w = std::pow(std::max(w, 1e-300), gamma);
  } else {  // round one slice to its argmax cell
    const std::size_t g = rng.uniform_int(gsize);
    std::size_t best = 0;
    for (std::size_t o = 1; o < osize; ++o) {
      if (t[g * osize + o] > t[g * osize + best]) best = o;
    }
    for (std::size_t o = 0; o < osize; ++o) t[g * osize + o] = (o == best) ? 1.0 : 0.0;
  }
  for (std::size_t g = 0; g < gsize; ++g) {
    double sum = 0.0;
    for (std::size_t o = 0; o < osize; ++o) sum += t[g * osize + o];
    for (std::size_t o = 0; o < osize; ++o) t[g * osize + o] /= sum;
  }
  return ConditionalPmf(pol.given_axes(), pol.output_axes(), std::move(t), 1e-6);
}

}  // namespace detail

/// Random policy sampling plus per-objective hill climbing; the returned region
/// is the convex hull of every evaluated per-policy polygon. Deterministic for
/// a fixed seed, independent of cfg.threads; candidate i depends only on
/// (seed, i), so a larger sample budget re-evaluates the same prefix.
inline SearchResult search_region(const ChannelSpec& spec, const SearchConfig& cfg) {
  if (cfg.sample_budget < 1) throw std::invalid_argument("sample_budget must be >= 1");
  const std::size_t dflt =
      spec.axis_size(axis::x) * spec.axis_size(axis::s1) * spec.axis_size(axis::s2);
  const std::size_t a1 = cfg.aux1_size > 0 ? cfg.aux1_size : dflt;
  const std::size_t a2 = cfg.aux2_size > 0 ? cfg.aux2_size : dflt;

  std::vector<detail::Candidate> candidates;
  for (auto& pol : detail::canonical_policies(spec, a1, a2)) {
    candidates.push_back(detail::evaluate_policy(spec, std::move(pol)));
  }

  const Rng base(cfg.seed);
  std::vector<std::optional<detail::Candidate>> sampled(cfg.sample_budget);
  parallel_for(cfg.sample_budget, cfg.threads, [&](std::size_t i) {
    Rng rng = base.stream(i);
    sampled[i] = detail::evaluate_policy(spec, detail::random_policy(spec, a1, a2, rng));
  });
  for (auto& c : sampled) candidates.push_back(std::move(*c));

  std::vector<SupportPoint> supports;
  std::vector<RatePoint> points = {{0.0, 0.0}};
  for (const auto& c : candidates) {
    points.insert(points.end(), c.poly.vertices.begin(), c.poly.vertices.end());
  }

  constexpr std::size_t kNumLambdas = std::size(detail::kLambdas);
  for (std::size_t li = 0; li < kNumLambdas; ++li) {
    const double lambda = detail::kLambdas[li];
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const double s = detail::support_value(candidates[i].poly, lambda);
      if (s > best_score) {
        best_score = s;
        best = i;
      }
    }
    detail::Candidate cur = candidates[best];
    Rng rng = base.stream(0x5247000ULL + li);
    for (std::size_t it = 0; it < cfg.refinement_iterations; ++it) {
      detail::Candidate prop =
          detail::evaluate_policy(spec, detail::mutate_policy(cur.policy, rng));
      const double s = detail::support_value(prop.poly, lambda);
      if (s > best_score) {
        best_score = s;
        cur = std::move(prop);
        points.insert(points.end(), cur.poly.vertices.begin(), cur.poly.vertices.end());
      }
    }
    RatePoint arg{0.0, 0.0};
    double arg_score = -1.0;
    for (const auto& v : cur.poly.vertices) {
      const double s = lambda * v.r1 + (1.0 - lambda) * v.r2;
      if (s > arg_score) {
        arg_score = s;
        arg = v;
      }
    }
    supports.push_back(SupportPoint{lambda, arg, cur.bounds, std::move(cur.policy)});
  }

  RegionPolygon region{convex_hull(std::move(points))};
  return SearchResult{std::move(region), std::move(supports)};
}

}  // namespace wiretap
