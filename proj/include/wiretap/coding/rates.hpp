#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wiretap/channel/channel.hpp"
#include "wiretap/prob/info.hpp"

namespace wiretap {

/// Binning-scheme rates for one user, all in bits per symbol.
/// r_y = r_u + r (codebook = bins x bin size), r_u = r_w + r_z
/// (bin = sub-bins x sub-bin size).
struct UserRates {
  double r_y = 0.0;  // codebook exponent
  double r = 0.0;    // message (bin count) rate
  double r_u = 0.0;  // per-bin exponent
  double r_w = 0.0;  // sub-bin count exponent
  double r_z = 0.0;  // sub-bin size exponent
};

struct BinningRates {
  UserRates user[2];

  void validate() const {
    for (int k = 0; k < 2; ++k) {
      const UserRates& u = user[k];
      for (double v : {u.r_y, u.r, u.r_u, u.r_w, u.r_z}) {
        if (v < 0.0 || !std::isfinite(v)) {
          throw std::invalid_argument("rates must be finite and >= 0");
        }
      }
      if (std::abs(u.r_y - (u.r_u + u.r)) > 1e-12) {
        throw std::invalid_argument("r_y must equal r_u + r");
      }
      if (std::abs(u.r_u - (u.r_w + u.r_z)) > 1e-12) {
        throw std::invalid_argument("r_u must equal r_w + r_z");
      }
    }
  }
};

struct InfeasibleRates : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The mutual-information terms of the binning constraint system.
struct BinningInfo {
  double cover[2];   // I(Uk; S1,S2)
  double decode[2];  // I(Uk; Yk,Sk)
  double eve[2];     // I(Uk; Z)
  double pair_cover; // I(U1;U2) + I(U1,U2; S1,S2)
  double eve_sum;    // I(U1;U2) + I(U1,U2; Z)
};

inline BinningInfo binning_info(const FullJoint& fj) {
  const Pmf& q = fj.joint;
  BinningInfo bi{};
  const AxisNames states = {axis::s1, axis::s2};
  bi.cover[0] = mutual_information(q, {axis::u1}, states);
  bi.cover[1] = mutual_information(q, {axis::u2}, states);
  bi.decode[0] = mutual_information(q, {axis::u1}, {axis::y1, axis::s1});
  bi.decode[1] = mutual_information(q, {axis::u2}, {axis::y2, axis::s2});
  bi.eve[0] = mutual_information(q, {axis::u1}, {axis::z});
  bi.eve[1] = mutual_information(q, {axis::u2}, {axis::z});
  const double pair = mutual_information(q, {axis::u1}, {axis::u2});
  bi.pair_cover = pair + mutual_information(q, {axis::u1, axis::u2}, states);
  bi.eve_sum = pair + mutual_information(q, {axis::u1, axis::u2}, {axis::z});
  return bi;
}

/// Places every strict inequality of the binning constraint system `margin`
/// bits inside its limit:
///   r_u[k] = max(I(Uk;S1,S2), I(Uk;Z)) + margin, bumped equally if the pair
///            covering constraint r_u1+r_u2 > I(U1;U2)+I(U1,U2;S1,S2) needs it,
///   r_y[k] = I(Uk;Yk,Sk) - margin,
///   r[k]   = r_y[k] - r_u[k]   (the Theorem bound minus margins),
///   r_z[k] = max(0, I(Uk;Z) - margin), r_w[k] = r_u[k] - r_z[k].
/// The sub-bin sum constraint r_z1+r_z2 < I(U1;U2)+I(U1,U2;Z) then holds
/// automatically because I(U1;Z)+I(U2;Z) <= I(U1;U2)+I(U1,U2;Z).
inline BinningRates derive_rates(const FullJoint& fj, double margin) {
  if (!(margin > 0.0)) throw std::invalid_argument("margin must be > 0");
  const BinningInfo bi = binning_info(fj);

  BinningRates out;
  double r_u[2];
  for (int k = 0; k < 2; ++k) {
    r_u[k] = std::max(bi.cover[k], bi.eve[k]) + margin;
  }
  const double deficit = bi.pair_cover + margin - (r_u[0] + r_u[1]);
  if (deficit > 0.0) {
    r_u[0] += deficit / 2.0;
    r_u[1] += deficit / 2.0;
  }
  for (int k = 0; k < 2; ++k) {
    UserRates& u = out.user[k];
    u.r_u = r_u[k];
    u.r_y = bi.decode[k] - margin;
    u.r = u.r_y - u.r_u;
    if (u.r <= 0.0) {
      throw InfeasibleRates(
          "margin " + std::to_string(margin) + " infeasible for user " +
          std::to_string(k + 1) + ": codebook rate " + std::to_string(u.r_y) +
          " (I(U" + std::to_string(k + 1) + ";Y,S) - margin) does not exceed the "
          "bin rate " + std::to_string(u.r_u) + " required by the covering "
          "constraints, so no message rate remains");
    }
    u.r_z = std::max(0.0, bi.eve[k] - margin);
    u.r_w = u.r_u - u.r_z;
  }
  out.validate();
  return out;
}

}  // namespace wiretap
