#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocompat/isometry.hpp"

namespace isocompat {

/// Determinant-one symmetric positive definite matrix: a point of SL(n,R)/SO(n).
class SpdPoint {
 public:
  explicit SpdPoint(Mat p);
  static SpdPoint identity(int n) { return SpdPoint(Mat::Identity(n, n)); }
  /// Rescales an arbitrary SPD matrix to determinant one.
  static SpdPoint normalized(const Mat& p);

  int dimension() const { return static_cast<int>(p_.rows()); }
  const Mat& matrix() const { return p_; }

 private:
  Mat p_;
};

/// Affine-invariant distance |log(P^{-1/2} Q P^{-1/2})|_F.
double spd_distance(const SpdPoint& p, const SpdPoint& q);

/// Congruence g P g^T; the result is renormalized only by symmetrization.
SpdPoint spd_congruence(const Mat& g, const SpdPoint& p);

/// J = [[0, -I], [I, 0]] of size 2n.
Mat standard_complex_structure(int n);

/// True iff C is in SO(2n) and C J C^T = J, both to `tol`.
bool su_embedding_check(const Mat& c, double tol = 1e-10);

struct CommutantResult {
  int n = 0;
  bool trace_free = true;
  std::size_t samples = 0;
  int dimension = 0;
  std::vector<Mat> basis;  // Frobenius-orthonormal symmetric matrices
  std::vector<double> singular_values;
};

/// Symmetric (optionally traceless) S with C S C^T = S for `samples` Haar draws C from
/// the real image of SU(n) in SO(2n); nullspace by SVD with absolute cutoff.
CommutantResult commutant_fixed_dim(int n, std::size_t samples, std::uint64_t seed, bool trace_free = true,
                                    double cutoff = 1e-8);

struct SlTwistReport {
  int n = 0;
  std::size_t samples = 0;
  bool tau_involutive = false;
  bool tau_outside = false;
  bool conjugation_closed = false;
  std::size_t conjugation_failures = 0;
  double tau_j_relation = 0.0;  // max |tau J tau^T + J|: 0 means tau J tau^T = -J

  bool all_pass() const { return tau_involutive && tau_outside && conjugation_closed; }
};

/// tau = diag(I_n, -I_n) against the SU(n) image in SO(2n): tau^2 = I exactly,
/// tau outside the image, and tau C tau inside the image for every sampled C.
SlTwistReport sl_twist_check(int n, std::size_t samples, std::uint64_t seed,
                             const std::optional<Mat>& tau_override = std::nullopt);

Mat sl_twist_tau(int n);

}  // namespace isocompat
