#include "isocompat/haar.hpp"

#include <cmath>
#include <complex>

namespace isocompat {

namespace {

Eigen::MatrixXd rotation_from_quaternion(double w, double x, double y, double z) {
  Eigen::MatrixXd r(3, 3);
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
       2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
       2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

}  // namespace

Eigen::MatrixXd haar_so(int k, CounterRng& rng) {
  if (k <= 1) return Eigen::MatrixXd::Identity(k, k);
  if (k == 2) {
    const double angle = rng.uniform(0.0, 2.0 * M_PI);
    Eigen::MatrixXd r(2, 2);
    r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return r;
  }
  if (k == 3) {
    double q[4];
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (double& c : q) {
        c = rng.normal();
        norm2 += c * c;
      }
    } while (norm2 < 1e-300);
    const double s = 1.0 / std::sqrt(norm2);
    return rotation_from_quaternion(q[0] * s, q[1] * s, q[2] * s, q[3] * s);
  }
  Eigen::MatrixXd g(k, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

Eigen::MatrixXd haar_o(int k, CounterRng& rng) {
  Eigen::MatrixXd a = haar_so(k, rng);
  if (k >= 1 && rng.coin()) a.col(0) *= -1.0;
  return a;
}

Eigen::MatrixXcd haar_su(int n, CounterRng& rng) {
  Eigen::MatrixXcd z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) z(i, j) = {rng.normal() * M_SQRT1_2, rng.normal() * M_SQRT1_2};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  const std::complex<double> det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / n);
  return q;
}

Eigen::MatrixXd complex_to_real(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  Eigen::MatrixXd c(2 * n, 2 * n);
  c.topLeftCorner(n, n) = u.real();
  c.topRightCorner(n, n) = u.imag();
  c.bottomLeftCorner(n, n) = -u.imag();
  c.bottomRightCorner(n, n) = u.real();
  return c;
}

}  // namespace isocompat
