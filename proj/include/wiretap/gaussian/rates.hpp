#pragma once

#include <algorithm>
#include <cmath>

#include "wiretap/gaussian/covariance.hpp"
#include "wiretap/region/bounds.hpp"

namespace wiretap {

/// Theorem-style bounds evaluated on the Gaussian model. When
/// with_eavesdropper is false the I(.;Z) terms are dropped and only the
/// state-covering losses remain.
inline RateBounds gaussian_rate_bounds(const GaussianParams& gp, const AuxParams& ap,
                                       bool with_eavesdropper = true) {
  const GaussianVector gv = build_covariance(gp, ap);
  const std::vector<std::string> states = {"S1", "S2"};
  const double i1 = gaussian_mi(gv, {"U1"}, {"Y1", "S1"});
  const double i2 = gaussian_mi(gv, {"U2"}, {"Y2", "S2"});
  double leak1 = gaussian_mi(gv, {"U1"}, states);
  double leak2 = gaussian_mi(gv, {"U2"}, states);
  double leak12 = gaussian_mi(gv, {"U1", "U2"}, states);
  if (with_eavesdropper) {
    leak1 = std::max(leak1, gaussian_mi(gv, {"U1"}, {"Z"}));
    leak2 = std::max(leak2, gaussian_mi(gv, {"U2"}, {"Z"}));
    leak12 = std::max(leak12, gaussian_mi(gv, {"U1", "U2"}, {"Z"}));
  }
  const double pair = gaussian_mi(gv, {"U1"}, {"U2"});
  RateBounds b;
  b.raw1 = i1 - leak1;
  b.raw2 = i2 - leak2;
  b.raw12 = i1 + i2 - pair - leak12;
  b.b1 = std::max(0.0, b.raw1);
  b.b2 = std::max(0.0, b.raw2);
  b.b12 = std::max(0.0, b.raw12);
  return b;
}

/// Single-user channel where the decoder also knows the state:
/// Y1 = X + S + W1, Z = X + S + W3, auxiliary U = X + alpha1*S with full power.
/// Uses the two-user covariance with the state routed through the S2 slot
/// (the slot that both Y1 and U1 see) and the unused state variance at zero.
/// Rate = max(0, I(U;Y1,S) - max(I(U;Z), I(U;S))).
inline double decoder_side_info_rate(const GaussianParams& gp, double alpha1) {
  gp.validate();
  GaussianParams routed = gp;
  routed.Q1 = 0.0;
  routed.Q2 = gp.Q1;
  routed.rho = 0.0;
  routed.N2 = gp.N1;
  const GaussianVector gv = build_covariance(routed, AuxParams{alpha1, 0.0, 1.0});
  // min-form of I(U;Y1,S) - max(I(U;Z), I(U;S)); the first branch reduces to
  // I(U;Y1|S), which stays well-conditioned for large alpha1 where the direct
  // difference of two diverging terms would lose precision.
  const double state_branch = gaussian_cmi(gv, {"U1"}, {"Y1"}, {"S2"});
  const double eve_branch =
      gaussian_mi(gv, {"U1"}, {"Y1", "S2"}) - gaussian_mi(gv, {"U1"}, {"Z"});
  return std::max(0.0, std::min(state_branch, eve_branch));
}

/// 1/2 log2(1 + P/N1): the state-known-everywhere capacity of that channel.
inline double capacity_limit(const GaussianParams& gp) {
  gp.validate();
  return 0.5 * std::log2(1.0 + gp.P / gp.N1);
}

}  // namespace wiretap
