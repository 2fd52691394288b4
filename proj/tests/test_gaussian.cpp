#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>

#include "wiretap/gaussian/covariance.hpp"
#include "wiretap/gaussian/rates.hpp"
#include "wiretap/gaussian/sweep.hpp"
#include "wiretap/util/rng.hpp"

using namespace wiretap;

namespace {

GaussianParams random_params(Rng& rng) {
  GaussianParams gp;
  gp.P = 0.1 + 5.0 * rng.uniform01();
  gp.N2 = 0.1 + 2.0 * rng.uniform01();
  gp.N1 = gp.N2 + 2.0 * rng.uniform01();
  gp.N3 = 0.1 + 3.0 * rng.uniform01();
  gp.Q1 = 5.0 * rng.uniform01();
  gp.Q2 = 5.0 * rng.uniform01();
  gp.rho = 2.0 * rng.uniform01() - 1.0;
  return gp;
}

AuxParams random_aux(Rng& rng) {
  return AuxParams{4.0 * rng.uniform01() - 2.0, 4.0 * rng.uniform01() - 2.0,
                   rng.uniform01()};
}

double var_of(const GaussianVector& gv, const std::string& v) {
  const auto i = gv.index_of(v);
  return gv.cov(i, i);
}

}  // namespace

TEST_CASE("auxiliary variances match the closed-form expressions") {
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    const GaussianParams gp = random_params(rng);
    const AuxParams ap = random_aux(rng);
    const GaussianVector gv = build_covariance(gp, ap);
    const double bb = 1.0 - ap.beta;
    CHECK(var_of(gv, "U1") ==
          Catch::Approx(ap.beta * gp.P + ap.alpha1 * ap.alpha1 * gp.Q2).margin(1e-12));
    CHECK(var_of(gv, "U2") ==
          Catch::Approx(bb * gp.P + ap.alpha2 * ap.alpha2 * (gp.Q1 + ap.beta * gp.P))
              .margin(1e-12));
  }
}

TEST_CASE("covariance is symmetric positive semidefinite") {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const GaussianVector gv = build_covariance(random_params(rng), random_aux(rng));
    CHECK((gv.cov - gv.cov.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gv.cov);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9);
  }
}

TEST_CASE("full-power zero-alpha collapses U1 onto X") {
  GaussianParams gp;
  gp.P = 2.5;
  gp.Q1 = 1.0;
  gp.Q2 = 1.0;
  const GaussianVector gv = build_covariance(gp, AuxParams{0.0, 0.0, 1.0});
  const auto u1 = gv.index_of("U1");
  const auto y1 = gv.index_of("Y1");
  const auto x = gv.index_of("X");
  CHECK(gv.cov(u1, y1) == Catch::Approx(gp.P).margin(1e-12));
  CHECK(gv.cov(u1, x) == Catch::Approx(gp.P).margin(1e-12));
}

TEST_CASE("parameter validation") {
  GaussianParams gp;
  gp.P = -1.0;
  CHECK_THROWS_AS(gp.validate(), std::invalid_argument);
  gp = GaussianParams{};
  gp.N1 = 0.5;  // below N2
  CHECK_THROWS_AS(gp.validate(), std::invalid_argument);
  gp = GaussianParams{};
  gp.rho = 1.5;
  CHECK_THROWS_AS(gp.validate(), std::invalid_argument);
  AuxParams ap;
  ap.beta = 1.2;
  CHECK_THROWS_AS(ap.validate(), std::invalid_argument);
}

TEST_CASE("gaussian mi basic cases") {
  GaussianParams gp;
  gp.P = 3.0;
  gp.Q1 = 1.0;
  gp.Q2 = 2.0;
  const GaussianVector gv = build_covariance(gp, AuxParams{0.7, -0.3, 0.4});
  // independent base variables
  CHECK(gaussian_mi(gv, {"X1"}, {"W1"}) == Catch::Approx(0.0).margin(1e-9));
  CHECK_THROWS_AS(gaussian_mi(gv, {}, {"X"}), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_mi(gv, {"X"}, {"X", "W1"}), std::invalid_argument);
}

TEST_CASE("awgn mutual information closed form") {
  // Y1 = X + W1 when both states have zero variance
  GaussianParams gp;
  gp.P = 2.0;
  gp.N1 = 1.0;
  gp.N2 = 0.5;
  const GaussianVector gv = build_covariance(gp, AuxParams{0.0, 0.0, 1.0});
  const double want = 0.5 * std::log2(1.0 + gp.P / gp.N1);
  CHECK(gaussian_mi(gv, {"X"}, {"Y1"}) == Catch::Approx(want).margin(1e-9));
}

TEST_CASE("pairwise mi equals the correlation closed form") {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const GaussianVector gv = build_covariance(random_params(rng), random_aux(rng));
    const auto a = gv.index_of("U1");
    const auto b = gv.index_of("Y1");
    const double r2 = gv.cov(a, b) * gv.cov(a, b) / (gv.cov(a, a) * gv.cov(b, b));
    const double want = -0.5 * std::log2(1.0 - r2);
    CHECK(gaussian_mi(gv, {"U1"}, {"Y1"}) == Catch::Approx(want).margin(1e-6));
  }
}

TEST_CASE("block mi matches a schur-complement oracle") {
  Rng rng(7);
  // random 4-dim PSD matrix, split {0,1} | {2,3}
  Eigen::MatrixXd a(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = rng.normal();
  }
  Eigen::MatrixXd sigma = a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(4, 4);
  GaussianVector gv;
  gv.labels = {"v0", "v1", "v2", "v3"};
  gv.cov = sigma;
  const Eigen::MatrixXd saa = sigma.topLeftCorner(2, 2);
  const Eigen::MatrixXd sbb = sigma.bottomRightCorner(2, 2);
  const Eigen::MatrixXd sab = sigma.topRightCorner(2, 2);
  // I(A;B) = 1/2 log2 det(Sigma_B) / det(Sigma_B - Sigma_BA Sigma_A^-1 Sigma_AB)
  const Eigen::MatrixXd cond = sbb - sab.transpose() * saa.inverse() * sab;
  const double want = 0.5 * std::log2(sbb.determinant() / cond.determinant());
  CHECK(gaussian_mi(gv, {"v0", "v1"}, {"v2", "v3"}) ==
        Catch::Approx(want).margin(1e-9));
}

TEST_CASE("block mi matches a sampling estimate") {
  Rng rng(11);
  Eigen::MatrixXd a(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = rng.normal();
  }
  const Eigen::MatrixXd sigma =
      a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(4, 4);
  GaussianVector gv;
  gv.labels = {"v0", "v1", "v2", "v3"};
  gv.cov = sigma;
  const double lib = gaussian_mi(gv, {"v0", "v1"}, {"v2", "v3"});

  // density-ratio Monte Carlo: E[ log f(x) - log fA(xA) - log fB(xB) ]
  const Eigen::MatrixXd l = sigma.llt().matrixL();
  const Eigen::MatrixXd inv = sigma.inverse();
  const Eigen::MatrixXd inva = sigma.topLeftCorner(2, 2).inverse();
  const Eigen::MatrixXd invb = sigma.bottomRightCorner(2, 2).inverse();
  const double logdet = std::log(sigma.determinant());
  const double logdeta = std::log(sigma.topLeftCorner(2, 2).determinant());
  const double logdetb = std::log(sigma.bottomRightCorner(2, 2).determinant());
  double acc = 0.0;
  const int n = 1000000;
  Eigen::Vector4d g;
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < 4; ++i) g(i) = rng.normal();
    const Eigen::Vector4d x = l * g;
    const Eigen::Vector2d xa = x.head(2);
    const Eigen::Vector2d xb = x.tail(2);
    const double log_ratio = -0.5 * (x.dot(inv * x) + logdet) +
                             0.5 * (xa.dot(inva * xa) + logdeta) +
                             0.5 * (xb.dot(invb * xb) + logdetb);
    acc += log_ratio;
  }
  const double estimate = acc / n / std::log(2.0);
  CHECK(lib == Catch::Approx(estimate).margin(0.02));
}

TEST_CASE("mi invariant under invertible scaling of a group") {
  Rng rng(13);
  const GaussianVector gv = build_covariance(random_params(rng), random_aux(rng));
  GaussianVector scaled = gv;
  const auto u1 = gv.index_of("U1");
  scaled.cov.row(u1) *= 2.0;
  scaled.cov.col(u1) *= 2.0;
  CHECK(gaussian_mi(gv, {"U1"}, {"Y1", "S1"}) ==
        Catch::Approx(gaussian_mi(scaled, {"U1"}, {"Y1", "S1"})).margin(1e-9));
}

TEST_CASE("mi stable across the documented jitter range") {
  // degenerate corner: no states, full power, so several blocks are singular
  GaussianParams gp;
  gp.P = 1.0;
  const GaussianVector gv = build_covariance(gp, AuxParams{0.0, 0.0, 1.0});
  for (const auto groups : {std::pair{std::vector<std::string>{"U1"},
                                      std::vector<std::string>{"S2"}},
                            std::pair{std::vector<std::string>{"X1", "X"},
                                      std::vector<std::string>{"W1"}},
                            std::pair{std::vector<std::string>{"U1"},
                                      std::vector<std::string>{"Y1", "S1"}}}) {
    const double lo = gaussian_mi(gv, groups.first, groups.second, 1e-13);
    const double hi = gaussian_mi(gv, groups.first, groups.second, 1e-10);
    CHECK(lo == Catch::Approx(hi).margin(1e-9));
    CHECK(std::isfinite(lo));
  }
}

TEST_CASE("stateless bounds match the hand power-splitting formula") {
  Rng rng(17);
  for (int k = 0; k < 20; ++k) {
    GaussianParams gp = random_params(rng);
    gp.Q1 = 0.0;
    gp.Q2 = 0.0;
    const double beta = rng.uniform01();
    const RateBounds b = gaussian_rate_bounds(gp, AuxParams{0.0, 0.0, beta});
    const double bp = beta * gp.P;
    const double rest = (1.0 - beta) * gp.P;
    const double want = std::max(
        0.0, 0.5 * std::log2(1.0 + bp / (rest + gp.N1)) -
                 0.5 * std::log2(1.0 + bp / (rest + gp.N3)));
    CHECK(b.b1 == Catch::Approx(want).margin(1e-6));
  }
}

TEST_CASE("zero power share with zero alpha2 kills the second bound") {
  Rng rng(19);
  const GaussianParams gp = random_params(rng);
  const RateBounds b = gaussian_rate_bounds(gp, AuxParams{0.3, 0.0, 1.0});
  CHECK(b.b2 == Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("zero power share alone does not null the formula's second bound") {
  // With beta=1 and alpha2 != 0, U2 = alpha2*(S1+X1) is shared randomness the
  // strong receiver observes better than the eavesdropper, so the Theorem-style
  // formula gives a genuinely positive value. Hand oracle, P=1, Q1=1, N2=0.5,
  // N3=10, rho=0, Q2=0:
  //   I(U2;Y2,S2) = 1/2 log2(1 + 2/0.5),  I(U2;S1,S2) = 1/2 log2 2,
  //   I(U2;Z) = 1/2 log2(24/20) < 1/2 log2 2.
  GaussianParams gp;
  gp.P = 1.0;
  gp.Q1 = 1.0;
  gp.Q2 = 0.0;
  gp.N1 = 0.5;
  gp.N2 = 0.5;
  gp.N3 = 10.0;
  const RateBounds b = gaussian_rate_bounds(gp, AuxParams{0.0, 1.0, 1.0});
  const double want = 0.5 * std::log2(5.0) - 0.5 * std::log2(2.0);
  CHECK(b.b2 == Catch::Approx(want).margin(1e-9));
}

TEST_CASE("sweep with one grid point equals the single polygon") {
  GaussianParams gp;
  gp.Q1 = 0.5;
  gp.Q2 = 0.5;
  SweepGrid grid;
  grid.alpha1 = {0.5};
  grid.alpha2 = {0.5};
  grid.beta = {0.5};
  const SweepResult res = sweep_region(gp, grid);
  const RegionPolygon direct =
      region_from_bounds(gaussian_rate_bounds(gp, AuxParams{0.5, 0.5, 0.5}));
  REQUIRE(res.region.vertices.size() == direct.vertices.size());
  for (std::size_t i = 0; i < direct.vertices.size(); ++i) {
    CHECK(res.region.contains(direct.vertices[i], 1e-9));
  }
  REQUIRE(res.vertices.size() == res.region.vertices.size());
  for (const auto& v : res.vertices) {
    CHECK(v.alpha1 == 0.5);
    CHECK(v.beta == 0.5);
  }
}

TEST_CASE("refining the grid never shrinks the sweep hull") {
  GaussianParams gp;
  gp.Q1 = 1.0;
  gp.Q2 = 1.0;
  SweepGrid coarse;
  coarse.alpha1 = {0.0, 1.0};
  coarse.alpha2 = {0.0, 1.0};
  coarse.beta = {0.0, 0.5, 1.0};
  SweepGrid fine = coarse;
  fine.alpha1 = {0.0, 0.5, 1.0, -0.5};
  fine.alpha2 = {0.0, 0.5, 1.0, -0.5};
  fine.beta = {0.0, 0.25, 0.5, 0.75, 1.0};
  const SweepResult rc = sweep_region(gp, coarse);
  const SweepResult rf = sweep_region(gp, fine);
  for (const auto& v : rc.region.vertices) {
    REQUIRE(rf.region.contains(v, 1e-9));
  }
}

TEST_CASE("sweep independent of thread count") {
  GaussianParams gp;
  gp.Q1 = 2.0;
  gp.Q2 = 2.0;
  SweepGrid grid;
  grid.alpha1 = {0.0, 0.7, -0.7};
  grid.alpha2 = {0.0, 0.7};
  grid.beta = {0.0, 0.5, 1.0};
  const SweepResult a = sweep_region(gp, grid, true, 1);
  const SweepResult b = sweep_region(gp, grid, true, 4);
  REQUIRE(a.region.vertices.size() == b.region.vertices.size());
  for (std::size_t i = 0; i < a.region.vertices.size(); ++i) {
    REQUIRE(a.region.vertices[i] == b.region.vertices[i]);
  }
}

TEST_CASE("state variance compensates for the eavesdropper") {
  // sum rate nondecreasing in Q and gap to the no-eavesdropper sweep closes
  SweepGrid grid;
  grid.alpha1 = {0.0, 0.25, 0.5, 1.0, 2.0, -0.5};
  grid.alpha2 = {0.0, 0.25, 0.5, 1.0, 2.0, -0.5};
  grid.beta = {0.0, 0.25, 0.5, 0.75, 1.0};
  double prev = -1.0;
  double gap_first = 0.0, gap_last = 0.0;
  const std::vector<double> qs = {0.1, 1.0, 5.0, 20.0};
  for (std::size_t i = 0; i < qs.size(); ++i) {
    GaussianParams gp;
    gp.Q1 = qs[i];
    gp.Q2 = qs[i];
    const double with = max_sum_rate(sweep_region(gp, grid, true).region);
    const double without = max_sum_rate(sweep_region(gp, grid, false).region);
    REQUIRE(with >= prev - 1e-9);
    prev = with;
    if (i == 0) gap_first = without - with;
    if (i + 1 == qs.size()) gap_last = without - with;
  }
  CHECK(gap_last <= 0.25 * gap_first);
}

TEST_CASE("decoder side information rate approaches capacity") {
  GaussianParams gp;
  gp.P = 1.0;
  gp.N1 = 1.0;
  gp.N2 = 1.0;
  gp.N3 = 2.0;
  gp.Q1 = 5.0;
  const double cap = capacity_limit(gp);
  CHECK(cap == Catch::Approx(0.5).margin(1e-12));
  double prev = -1.0;
  for (const double alpha : {1.0, 10.0, 100.0, 1000.0}) {
    const double r = decoder_side_info_rate(gp, alpha);
    REQUIRE(r >= prev - 1e-9);
    REQUIRE(r <= cap + 1e-9);
    prev = r;
  }
  CHECK(cap - prev <= 0.01);
}

TEST_CASE("decoder side information rate at alpha zero matches hand formula") {
  // U = X independent of the state: rate = C - I(X;Z), which approaches C
  // (not zero) as the state variance grows since the state masks X from Z.
  GaussianParams gp;
  gp.P = 1.0;
  gp.N1 = 1.0;
  gp.N2 = 1.0;
  gp.N3 = 2.0;
  for (const double q : {0.1, 5.0, 1000.0}) {
    gp.Q1 = q;
    const double want =
        0.5 * std::log2(1.0 + gp.P / gp.N1) -
        0.5 * std::log2((gp.P + q + gp.N3) / (q + gp.N3));
    CHECK(decoder_side_info_rate(gp, 0.0) == Catch::Approx(want).margin(1e-9));
  }
}
