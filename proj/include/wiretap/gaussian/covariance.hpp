#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiretap {

/// Scalar Gaussian broadcast wiretap channel parameters.
struct GaussianParams {
  double P = 1.0;    // input power
  double N1 = 1.5;   // receiver-1 noise variance (the weaker receiver: N1 >= N2)
  double N2 = 1.0;   // receiver-2 noise variance
  double N3 = 2.0;   // eavesdropper noise variance
  double Q1 = 0.0;   // variance of state S1
  double Q2 = 0.0;   // variance of state S2
  double rho = 0.0;  // correlation coefficient of (S1, S2)

  void validate() const {
    if (!(P > 0.0)) throw std::invalid_argument("P must be > 0");
    if (!(N1 > 0.0) || !(N2 > 0.0) || !(N3 > 0.0)) {
      throw std::invalid_argument("N1, N2, N3 must be > 0");
    }
    if (N1 < N2) throw std::invalid_argument("N1 must be >= N2");
    if (Q1 < 0.0 || Q2 < 0.0) throw std::invalid_argument("Q1, Q2 must be >= 0");
    if (std::abs(rho) > 1.0) throw std::invalid_argument("|rho| must be <= 1");
  }
};

/// Dirty-paper style auxiliary coefficients and the power split
/// Var(X1) = beta*P, Var(X2) = (1-beta)*P.
struct AuxParams {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta = 0.5;

  void validate() const {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must be in [0,1]");
    if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) {
      throw std::invalid_argument("alpha1, alpha2 must be finite");
    }
  }
};

/// Jointly Gaussian zero-mean vector: labeled covariance matrix.
struct GaussianVector {
  std::vector<std::string> labels;
  Eigen::MatrixXd cov;

  Eigen::Index index_of(const std::string& label) const {
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(labels.size()); ++i) {
      if (labels[i] == label) return i;
    }
    throw std::invalid_argument("unknown variable '" + label + "'");
  }
};

/// Covariance of (X1,X2,S1,S2,W1,W2,W3,U1,U2,X,Y1,Y2,Z). Base variables are
/// independent except Cov(S1,S2) = rho*sqrt(Q1*Q2); derived rows follow by
/// linearity:
///   U1 = X1 + alpha1*S2, U2 = X2 + alpha2*(S1 + X1), X = X1 + X2,
///   Y1 = X + S2 + W1, Y2 = X + S1 + W2, Z = X + S1 + S2 + W3.
inline GaussianVector build_covariance(const GaussianParams& gp, const AuxParams& ap) {
  gp.validate();
  ap.validate();
  const std::vector<std::string> base = {"X1", "X2", "S1", "S2", "W1", "W2", "W3"};
  const std::vector<std::string> derived = {"U1", "U2", "X", "Y1", "Y2", "Z"};
  const Eigen::Index nb = static_cast<Eigen::Index>(base.size());
  const Eigen::Index nd = static_cast<Eigen::Index>(derived.size());

  Eigen::MatrixXd sigma_base = Eigen::MatrixXd::Zero(nb, nb);
  sigma_base(0, 0) = ap.beta * gp.P;
  sigma_base(1, 1) = (1.0 - ap.beta) * gp.P;
  sigma_base(2, 2) = gp.Q1;
  sigma_base(3, 3) = gp.Q2;
  sigma_base(4, 4) = gp.N1;
  sigma_base(5, 5) = gp.N2;
  sigma_base(6, 6) = gp.N3;
  sigma_base(2, 3) = sigma_base(3, 2) = gp.rho * std::sqrt(gp.Q1 * gp.Q2);

  // rows: coefficients of each derived variable in the base variables
  Eigen::MatrixXd lin = Eigen::MatrixXd::Zero(nd, nb);
  lin(0, 0) = 1.0;                                      // U1 = X1 + a1*S2
  lin(0, 3) = ap.alpha1;
  lin(1, 1) = 1.0;                                      // U2 = X2 + a2*(S1+X1)
  lin(1, 2) = ap.alpha2;
  lin(1, 0) = ap.alpha2;
  lin(2, 0) = lin(2, 1) = 1.0;                          // X = X1 + X2
  lin(3, 0) = lin(3, 1) = lin(3, 3) = lin(3, 4) = 1.0;  // Y1 = X + S2 + W1
  lin(4, 0) = lin(4, 1) = lin(4, 2) = lin(4, 5) = 1.0;  // Y2 = X + S1 + W2
  lin(5, 0) = lin(5, 1) = lin(5, 2) = lin(5, 3) = lin(5, 6) = 1.0;  // Z

  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(nb + nd, nb);
  full.topRows(nb) = Eigen::MatrixXd::Identity(nb, nb);
  full.bottomRows(nd) = lin;

  GaussianVector gv;
  gv.labels = base;
  gv.labels.insert(gv.labels.end(), derived.begin(), derived.end());
  gv.cov = full * sigma_base * full.transpose();
  gv.cov = 0.5 * (gv.cov + gv.cov.transpose().eval());  // exact symmetry
  return gv;
}

inline constexpr double kJitterScale = 1e-12;

namespace detail {

inline Eigen::MatrixXd submatrix(const GaussianVector& gv,
                                 const std::vector<std::string>& group) {
  const Eigen::Index k = static_cast<Eigen::Index>(group.size());
  Eigen::MatrixXd sub(k, k);
  std::vector<Eigen::Index> idx(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) idx[i] = gv.index_of(group[i]);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = gv.cov(idx[i], idx[j]);
  }
  return sub;
}

inline double log2_det_jittered(Eigen::MatrixXd sub, double jitter) {
  sub.diagonal().array() += jitter;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(sub);
  if (ldlt.info() != Eigen::Success) {
    throw std::runtime_error("covariance block factorization failed");
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sub.rows(); ++i) {
    acc += std::log2(std::max(ldlt.vectorD()(i), 1e-300));
  }
  return acc;
}

inline void require_disjoint_groups(const std::vector<std::string>& group_a,
                                    const std::vector<std::string>& group_b,
                                    const char* what) {
  for (const auto& a : group_a) {
    for (const auto& b : group_b) {
      if (a == b) {
        throw std::invalid_argument(std::string(what) + ": groups share '" + a + "'");
      }
    }
  }
}

}  // namespace detail

/// I(A;B) = 1/2 (log2 det Sigma_A + log2 det Sigma_B - log2 det Sigma_AB) bits.
/// One absolute jitter, jitter_scale * trace(Sigma_AB), is added to every
/// block diagonal so that zero-variance variables contribute the same factor
/// to marginal and joint determinants and cancel exactly.
inline double gaussian_mi(const GaussianVector& gv,
                          const std::vector<std::string>& group_a,
                          const std::vector<std::string>& group_b,
                          double jitter_scale = kJitterScale) {
  if (group_a.empty() || group_b.empty()) {
    throw std::invalid_argument("gaussian_mi: empty group");
  }
  detail::require_disjoint_groups(group_a, group_b, "gaussian_mi");
  std::vector<std::string> both = group_a;
  both.insert(both.end(), group_b.begin(), group_b.end());
  const Eigen::MatrixXd joint = detail::submatrix(gv, both);
  const double jitter = std::max(jitter_scale * joint.trace(), 1e-300);
  const double mi =
      0.5 * (detail::log2_det_jittered(detail::submatrix(gv, group_a), jitter) +
             detail::log2_det_jittered(detail::submatrix(gv, group_b), jitter) -
             detail::log2_det_jittered(joint, jitter));
  return std::max(mi, 0.0);
}

/// I(A;B|C) via the conditional covariance Sigma_AB|C = Sigma_AB -
/// Sigma_AB,C Sigma_C^-1 Sigma_C,AB, then the same determinant-ratio formula.
/// Conditioning first keeps the result well-scaled when the C variables have
/// much larger variance than the conditional problem.
inline double gaussian_cmi(const GaussianVector& gv,
                           const std::vector<std::string>& group_a,
                           const std::vector<std::string>& group_b,
                           const std::vector<std::string>& group_c,
                           double jitter_scale = kJitterScale) {
  if (group_c.empty()) return gaussian_mi(gv, group_a, group_b, jitter_scale);
  detail::require_disjoint_groups(group_a, group_b, "gaussian_cmi");
  detail::require_disjoint_groups(group_a, group_c, "gaussian_cmi");
  detail::require_disjoint_groups(group_b, group_c, "gaussian_cmi");

  std::vector<std::string> all = group_a;
  all.insert(all.end(), group_b.begin(), group_b.end());
  all.insert(all.end(), group_c.begin(), group_c.end());
  const Eigen::MatrixXd full = detail::submatrix(gv, all);
  const Eigen::Index na = static_cast<Eigen::Index>(group_a.size());
  const Eigen::Index nb = static_cast<Eigen::Index>(group_b.size());
  const Eigen::Index nc = static_cast<Eigen::Index>(group_c.size());
  const Eigen::MatrixXd sab = full.topLeftCorner(na + nb, na + nb);
  const Eigen::MatrixXd scc = full.bottomRightCorner(nc, nc);
  const Eigen::MatrixXd sxc = full.topRightCorner(na + nb, nc);

  // pseudo-inverse solve: conditioning on a degenerate variable conditions on
  // nothing, and well-conditioned blocks are not biased by any jitter
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(scc);
  const Eigen::MatrixXd cond = sab - sxc * cod.solve(sxc.transpose());

  GaussianVector residual;
  residual.labels = group_a;
  residual.labels.insert(residual.labels.end(), group_b.begin(), group_b.end());
  residual.cov = 0.5 * (cond + cond.transpose().eval());
  return gaussian_mi(residual, group_a, group_b, jitter_scale);
}

}  // namespace wiretap
