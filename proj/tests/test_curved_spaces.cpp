#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "isocompat/boost_demo.hpp"
#include "isocompat/haar.hpp"
#include "isocompat/hyperbolic.hpp"
#include "isocompat/packing.hpp"
#include "isocompat/rng.hpp"
#include "isocompat/spd.hpp"

using namespace isocompat;

namespace {

Vec vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

HyperboloidPoint base2() { return HyperboloidPoint::base(2); }

SpdPoint random_spd(int n, CounterRng& rng) {
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
  return SpdPoint::normalized(a * a.transpose() + 0.5 * Mat::Identity(n, n));
}

Mat random_sl(int n, CounterRng& rng) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  double det = g.determinant();
  if (det < 0) {
    g.row(0) *= -1.0;
    det = -det;
  }
  return g / std::pow(det, 1.0 / n);
}

}  // namespace

TEST_CASE("hyp_distance examples") {
  CHECK(hyp_distance(base2(), base2()) == 0.0);
  const HyperboloidPoint q(vec({std::sinh(1.0), 0, std::cosh(1.0)}));
  CHECK(hyp_distance(base2(), q) == doctest::Approx(1.0).epsilon(1e-14));
  const auto a = hyp_exp(base2(), vec({1, 0, 0}));
  const auto b = hyp_exp(base2(), vec({0, 1, 0}));
  // -B = cosh(1)^2 by direct evaluation of the Minkowski form.
  const double expected = std::acosh(std::cosh(1.0) * std::cosh(1.0));
  CHECK(expected == doctest::Approx(1.5133).epsilon(1e-4));
  CHECK(hyp_distance(a, b) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(hyp_distance(a, b) == hyp_distance(b, a));
}

TEST_CASE("hyp_distance is accurate for nearby points") {
  const auto p = hyp_exp(base2(), vec({0.3, -0.2, 0}));
  const Vec dir = tangent_project(p, vec({1, 2, 0}));
  for (double eps : {1e-4, 1e-7, 1e-10}) {
    const auto q = hyp_exp(p, eps * dir / std::sqrt(minkowski(dir, dir)));
    CHECK(hyp_distance(p, q) == doctest::Approx(eps).epsilon(1e-8));
  }
}

TEST_CASE("hyp_exp examples and errors") {
  CHECK(hyp_exp(base2(), vec({0, 0, 0})).coords() == base2().coords());
  const auto e = hyp_exp(base2(), vec({1, 0, 0}));
  CHECK(e.coords()(0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
  CHECK(e.coords()(1) == 0.0);
  CHECK(e.coords()(2) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
  CHECK(minkowski(e.coords(), e.coords()) == doctest::Approx(-1.0).epsilon(1e-14));
  // Geodesic additivity: two steps of s along the same geodesic equal one step of 2s.
  const double s = 0.8;
  const Vec u = vec({0.6, 0.8, 0});
  const auto one = hyp_exp(base2(), s * u);
  // Parallel direction at `one` along the geodesic is the normalized velocity sinh s p + cosh s u.
  const Vec vel = std::sinh(s) * base2().coords() + std::cosh(s) * u;
  const auto two = hyp_exp(one, s * vel);
  const auto direct = hyp_exp(base2(), 2 * s * u);
  CHECK((two.coords() - direct.coords()).norm() < 1e-13);
  CHECK_THROWS(hyp_exp(base2(), vec({0, 0, 1})));
  CHECK_THROWS(HyperboloidPoint(vec({0, 0, -1})));
  CHECK_THROWS(HyperboloidPoint(vec({1, 0, 1})));
}

TEST_CASE("property: exp lands on the sheet at distance |v| (n = 2, 3)") {
  for (int n : {2, 3}) {
    CounterRng rng(31, static_cast<std::uint64_t>(n), 0);
    for (int k = 0; k < 10000; ++k) {
      Vec x(n + 1);
      for (int i = 0; i < n; ++i) x(i) = rng.uniform(-1, 1);
      x(n) = 0.0;
      const auto p = hyp_exp(HyperboloidPoint::base(n), x);
      Vec u(n + 1);
      for (int i = 0; i <= n; ++i) u(i) = rng.normal();
      Vec v = tangent_project(p, u);
      v *= rng.uniform(0, 5) / std::sqrt(minkowski(v, v));
      const auto q = hyp_exp(p, v);
      CHECK(std::abs(minkowski(q.coords(), q.coords()) + 1.0) <= 1e-9 * std::max(1.0, q.time() * q.time()));
      CHECK(std::abs(hyp_distance(p, q) - std::sqrt(minkowski(v, v))) < 1e-9);
    }
  }
}

TEST_CASE("rauch_check examples") {
  const auto same = rauch_check(base2(), vec({0.4, 0.1, 0}), vec({0.4, 0.1, 0}));
  CHECK(same.lhs == 0.0);
  CHECK(same.rhs == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(same.holds);
  const double s = 1.7;
  const auto line = rauch_check(base2(), vec({s, 0, 0}), vec({-s, 0, 0}));
  CHECK(line.lhs == doctest::Approx(2 * s).epsilon(1e-15));
  CHECK(line.rhs == doctest::Approx(2 * s).epsilon(1e-12));
  CHECK(line.holds);
  const auto corner = rauch_check(base2(), vec({1, 0, 0}), vec({0, 1, 0}));
  CHECK(corner.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(corner.rhs == doctest::Approx(std::acosh(std::cosh(1.0) * std::cosh(1.0))).epsilon(1e-14));
  CHECK(corner.holds);
}

TEST_CASE("property: Rauch sweep, 1e4 pairs in H^2 and H^3") {
  for (int n : {2, 3}) {
    const auto rep = rauch_sweep(n, 10000, 2024);
    CHECK(rep.violations == 0);
    CHECK(rep.max_sheet_defect <= 1e-9);
    CHECK(rep.max_exp_length_error <= 1e-9);
    CHECK(rep.max_ratio <= 1.0 + 1e-9);
  }
  const auto a = rauch_sweep(2, 3000, 5, 5.0, 1e-9, 1);
  const auto b = rauch_sweep(2, 3000, 5, 5.0, 1e-9, 7);
  CHECK(a.min_slack == b.min_slack);
  CHECK(a.max_ratio == b.max_ratio);
}

TEST_CASE("Lorentz boosts preserve the form and act by translation along a geodesic") {
  const auto g = LorentzIsometry::boost(2, 0.7);
  Mat eta = Mat::Identity(3, 3);
  eta(2, 2) = -1;
  CHECK((g.matrix().transpose() * eta * g.matrix() - eta).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(hyp_distance(base2(), g.apply(base2())) == doctest::Approx(0.7).epsilon(1e-14));
  Mat flip = Mat::Identity(3, 3);
  flip(2, 2) = -1;
  CHECK_THROWS(LorentzIsometry(flip));
  CHECK_THROWS(LorentzIsometry(2.0 * Mat::Identity(3, 3)));
}

TEST_CASE("boost_orbit_demo examples") {
  const auto a = boost_orbit_demo(1.0, 50);
  CHECK(a.m_hat == 50);
  CHECK(a.radius == 0.25);
  CHECK(a.separation_verified);
  CHECK(boost_orbit_demo(1.0, 1).m_hat == 1);
  const auto c = boost_orbit_demo(0.5, 40);
  CHECK(c.m_hat == 40);
  CHECK(c.radius == 0.125);
  // Oracle: d(g^i p, g^j p) = |i - j| t.
  const auto& reps = a.selected_representatives;
  for (std::size_t i = 0; i + 1 < 6; ++i) {
    const double d = hyp_distance(reps[i].as_hyperboloid(), reps[i + 1].as_hyperboloid());
    CHECK(std::fmod(d + 1e-9, 1.0) < 1e-8);
  }
  CHECK_THROWS(boost_orbit_demo(0.0, 5));
}

TEST_CASE("estimate_m runs on hyperboloid points") {
  // SO(2) rotating the x-block of H^2: orbit of exp_p(rho e1) is a circle of radius rho.
  const double rho = 2.0, r = 0.5;
  const auto spec = block_orthogonal({{2, Flavor::SO}});
  const auto y = MetricPoint::hyperboloid(hyp_exp(base2(), vec({rho, 0, 0})));
  const auto rep = estimate_m(spec, y, r, 20000, 0);
  // Chord angle theta* with cosh(2r) = cosh^2 rho - sinh^2 rho cos theta*.
  const double sh = std::sinh(rho), ch = std::cosh(rho);
  const double theta = std::acos((ch * ch - std::cosh(2 * r)) / (sh * sh));
  const auto oracle = static_cast<std::size_t>(std::floor(2 * M_PI / theta));
  CHECK(rep.m_hat <= oracle);
  CHECK(rep.m_hat + 1 >= oracle);
  CHECK(rep.separation_verified);
}

TEST_CASE("estimate_m runs on SPD points") {
  const auto spec = block_orthogonal({{2, Flavor::SO}});
  const auto y = MetricPoint::spd(SpdPoint(vec({std::exp(1.0), std::exp(-1.0)}).asDiagonal()));
  const auto rep = estimate_m(spec, y, 0.2, 5000, 0);
  CHECK(rep.m_hat > 1);
  CHECK(rep.separation_verified);
  for (std::size_t i = 0; i < rep.m_hat; ++i)
    for (std::size_t j = i + 1; j < rep.m_hat; ++j)
      CHECK(distance(rep.selected_representatives[i], rep.selected_representatives[j]) > 0.4);
}

TEST_CASE("spd_distance examples") {
  CHECK(spd_distance(SpdPoint::identity(2), SpdPoint::identity(2)) == 0.0);
  const SpdPoint d(vec({std::exp(1.0), std::exp(-1.0)}).asDiagonal());
  CHECK(spd_distance(SpdPoint::identity(2), d) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS(SpdPoint(vec({2.0, 2.0}).asDiagonal()));
  Mat skew = Mat::Identity(2, 2);
  skew(0, 1) = 0.1;
  CHECK_THROWS(SpdPoint{skew});
  CHECK_THROWS(SpdPoint(vec({-1.0, -1.0}).asDiagonal()));
}

TEST_CASE("property: spd_distance symmetric, congruence invariant, triangle inequality") {
  CounterRng rng(8, 8, 8);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 3;
    const auto p = random_spd(n, rng), q = random_spd(n, rng);
    CHECK(std::abs(spd_distance(p, q) - spd_distance(q, p)) < 1e-10);
    const Mat g = random_sl(n, rng);
    CHECK(std::abs(spd_distance(spd_congruence(g, p), spd_congruence(g, q)) - spd_distance(p, q)) < 1e-8);
    // Independent evaluation through the matrix logarithm.
    const Mat pinv_sqrt = p.matrix().sqrt().inverse();
    const Mat m = pinv_sqrt * q.matrix() * pinv_sqrt;
    CHECK(std::abs(m.log().norm() - spd_distance(p, q)) < 1e-8);
  }
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_spd(3, rng), b = random_spd(3, rng), c = random_spd(3, rng);
    CHECK(spd_distance(a, c) <= spd_distance(a, b) + spd_distance(b, c) + 1e-8);
  }
}

TEST_CASE("su_embedding_check examples") {
  CHECK(su_embedding_check(Mat::Identity(4, 4)));
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2, 2);
  u(0, 0) = std::polar(1.0, 0.9);
  u(1, 1) = std::polar(1.0, -0.9);
  // Block real form A + iB -> [[A, B], [-B, A]], built by hand.
  const Mat a = u.real(), b = u.imag();
  Mat c(4, 4);
  c << a, b, -b, a;
  CHECK(c == complex_to_real(u));
  CHECK(su_embedding_check(c));
  CHECK_FALSE(su_embedding_check(vec({1, 1, 1, -1}).asDiagonal()));
  CounterRng rng(1, 2, 3);
  for (int k = 0; k < 20; ++k) CHECK(su_embedding_check(complex_to_real(haar_su(3, rng))));
  // U(1) phase with nontrivial determinant is in SO(2n) and commutes with J but is not special.
  Eigen::MatrixXcd ph = Eigen::MatrixXcd::Identity(2, 2);
  ph(0, 0) = std::polar(1.0, 0.5);
  const Mat cp = complex_to_real(ph);
  CHECK((cp * standard_complex_structure(2) * cp.transpose() - standard_complex_structure(2)).norm() < 1e-14);
}

TEST_CASE("haar_su: unitary with unit determinant") {
  CounterRng rng(4, 4, 4);
  for (int k = 0; k < 50; ++k) {
    const auto u = haar_su(3, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);
    CHECK(std::abs(u.determinant() - std::complex<double>(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("commutant_fixed_dim examples") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(commutant_fixed_dim(2, 10, seed).dimension == 0);
    CHECK(commutant_fixed_dim(3, 10, 100 + seed).dimension == 0);
  }
  const auto with_trace = commutant_fixed_dim(2, 10, 0, false);
  REQUIRE(with_trace.dimension == 1);
  const Mat& s = with_trace.basis[0];
  const Mat iden = Mat::Identity(4, 4) / 2.0;  // unit Frobenius norm
  CHECK(std::min((s - iden).norm(), (s + iden).norm()) < 1e-10);
}

TEST_CASE("commutant: the symmetric commutant of a single generic sample is larger") {
  // One sample is not enough to pin down the SU(n)-fixed space; several are.
  CHECK(commutant_fixed_dim(2, 1, 0).dimension > 0);
  CHECK(commutant_fixed_dim(2, 3, 0).dimension == 0);
}

TEST_CASE("sl_twist_check examples") {
  const auto two = sl_twist_check(2, 50, 0);
  CHECK(two.tau_involutive);
  CHECK(two.tau_outside);
  CHECK(two.conjugation_closed);
  CHECK(two.tau_j_relation == 0.0);
  const auto one = sl_twist_check(1, 20, 0);
  CHECK(one.all_pass());
  CHECK(sl_twist_tau(1) == vec({1, -1}).asDiagonal().toDenseMatrix());
  const auto ident = sl_twist_check(2, 20, 0, Mat::Identity(4, 4));
  CHECK(ident.tau_involutive);
  CHECK_FALSE(ident.tau_outside);
}

TEST_CASE("tau conjugation is complex conjugation on the real image") {
  CounterRng rng(12, 0, 0);
  const Mat tau = sl_twist_tau(3);
  for (int k = 0; k < 10; ++k) {
    const auto u = haar_su(3, rng);
    CHECK((tau * complex_to_real(u) * tau - complex_to_real(u.conjugate())).norm() < 1e-13);
  }
}
