#include "isocompat/spd.hpp"

#include <cmath>

#include "isocompat/errors.hpp"
#include "isocompat/haar.hpp"
#include "isocompat/linalg.hpp"
#include "isocompat/rng.hpp"

namespace isocompat {

SpdPoint::SpdPoint(Mat p) : p_(std::move(p)) {
  if (p_.rows() != p_.cols() || p_.rows() < 1) throw DimensionError("SPD point must be a square matrix");
  const double scale = std::max(1.0, p_.cwiseAbs().maxCoeff());
  if ((p_ - p_.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) throw InvariantError("matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> eig(p_, Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) throw InvariantError("matrix is not positive definite");
  const double logdet = eig.eigenvalues().array().log().sum();
  if (std::abs(std::exp(logdet) - 1.0) > 1e-8) throw InvariantError("matrix does not have determinant one");
}

SpdPoint SpdPoint::normalized(const Mat& p) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(p, Eigen::EigenvaluesOnly);
  const double logdet = eig.eigenvalues().array().log().sum();
  return SpdPoint(p * std::exp(-logdet / static_cast<double>(p.rows())));
}

double spd_distance(const SpdPoint& p, const SpdPoint& q) {
  require_dims(p.dimension(), q.dimension(), "spd_distance");
  Eigen::SelfAdjointEigenSolver<Mat> eig(p.matrix());
  const Vec inv_sqrt = eig.eigenvalues().array().rsqrt();
  const Mat p_inv_half = eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().transpose();
  Mat m = p_inv_half * q.matrix() * p_inv_half;
  m = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> inner(m, Eigen::EigenvaluesOnly);
  return std::sqrt(inner.eigenvalues().array().log().square().sum());
}

SpdPoint spd_congruence(const Mat& g, const SpdPoint& p) {
  require_dims(p.dimension(), g.rows(), "spd_congruence");
  Mat m = g * p.matrix() * g.transpose();
  return SpdPoint(0.5 * (m + m.transpose()));
}

Mat standard_complex_structure(int n) {
  Mat j = Mat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Mat::Identity(n, n);
  j.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  return j;
}

bool su_embedding_check(const Mat& c, double tol) {
  if (c.rows() != c.cols() || c.rows() % 2 != 0 || c.rows() == 0) return false;
  const int n = static_cast<int>(c.rows()) / 2;
  if (orthogonality_defect(c) > tol) return false;
  if (std::abs(c.determinant() - 1.0) > tol) return false;
  const Mat j = standard_complex_structure(n);
  return (c * j * c.transpose() - j).cwiseAbs().maxCoeff() <= tol;
}

Mat sl_twist_tau(int n) {
  Mat tau = Mat::Identity(2 * n, 2 * n);
  tau.bottomRightCorner(n, n) *= -1.0;
  return tau;
}

CommutantResult commutant_fixed_dim(int n, std::size_t samples, std::uint64_t seed, bool trace_free, double cutoff) {
  if (n < 1) throw std::invalid_argument("commutant_fixed_dim: n must be positive");
  const int m = 2 * n;
  // Coordinates: upper triangle (i <= j), S = sum c_ij (E_ij + E_ji) / (1 + [i == j]).
  std::vector<std::pair<int, int>> coords;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) coords.emplace_back(i, j);
  const auto unknowns = static_cast<long>(coords.size());
  auto basis_matrix = [&](long k) {
    Mat e = Mat::Zero(m, m);
    const auto [i, j] = coords[static_cast<std::size_t>(k)];
    e(i, j) = 1.0;
    e(j, i) = 1.0;
    return e;
  };

  const long rows = static_cast<long>(samples) * m * m + (trace_free ? 1 : 0);
  Mat system = Mat::Zero(rows, unknowns);
  for (std::size_t s = 0; s < samples; ++s) {
    CounterRng rng(seed, 0x5355ULL, s);
    const Mat c = complex_to_real(haar_su(n, rng));
    for (long k = 0; k < unknowns; ++k) {
      const Mat e = basis_matrix(k);
      const Mat image = c * e * c.transpose() - e;
      system.block(static_cast<long>(s) * m * m, k, m * m, 1) = image.reshaped();
    }
  }
  if (trace_free) {
    for (long k = 0; k < unknowns; ++k) {
      const auto [i, j] = coords[static_cast<std::size_t>(k)];
      if (i == j) system(rows - 1, k) = 1.0;
    }
  }

  const NullspaceResult ns = nullspace(system, cutoff);
  CommutantResult result;
  result.n = n;
  result.trace_free = trace_free;
  result.samples = samples;
  result.dimension = static_cast<int>(ns.basis.cols());
  result.singular_values = ns.singular_values;
  for (long b = 0; b < ns.basis.cols(); ++b) {
    Mat s = Mat::Zero(m, m);
    for (long k = 0; k < unknowns; ++k) s += ns.basis(k, b) * basis_matrix(k);
    result.basis.push_back(s / s.norm());
  }
  return result;
}

SlTwistReport sl_twist_check(int n, std::size_t samples, std::uint64_t seed, const std::optional<Mat>& tau_override) {
  if (n < 1) throw std::invalid_argument("sl_twist_check: n must be positive");
  const Mat tau = tau_override ? *tau_override : sl_twist_tau(n);
  require_dims(2 * n, tau.rows(), "sl_twist_check tau");
  SlTwistReport report;
  report.n = n;
  report.samples = samples;
  report.tau_involutive = (tau * tau).isIdentity(0.0);
  report.tau_outside = !su_embedding_check(tau);
  const Mat j = standard_complex_structure(n);
  report.tau_j_relation = (tau * j * tau.transpose() + j).cwiseAbs().maxCoeff();
  for (std::size_t s = 0; s < samples; ++s) {
    CounterRng rng(seed, 0x534cULL, s);
    const Mat c = complex_to_real(haar_su(n, rng));
    if (!su_embedding_check(tau * c * tau)) ++report.conjugation_failures;
  }
  report.conjugation_closed = report.conjugation_failures == 0;
  return report;
}

}  // namespace isocompat
