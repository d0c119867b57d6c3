#pragma once

#include <Eigen/Dense>

#include "isocompat/rng.hpp"

namespace isocompat {

/// SO(2): uniform angle.  SO(3): uniform unit quaternion.  SO(k), k >= 4: QR of a
/// Gaussian matrix with the sign of diag(R) absorbed, then one column flipped if det < 0.
Eigen::MatrixXd haar_so(int k, CounterRng& rng);

/// O(k): an SO(k) sample times diag(-1, 1, ..., 1) on a fair coin.
Eigen::MatrixXd haar_o(int k, CounterRng& rng);

/// U(n) via QR of a complex Gaussian with phase correction, rescaled by det^(-1/n).
Eigen::MatrixXcd haar_su(int n, CounterRng& rng);

/// Real form A + iB -> [[A, B], [-B, A]].
Eigen::MatrixXd complex_to_real(const Eigen::MatrixXcd& u);

}  // namespace isocompat
