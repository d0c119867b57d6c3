#pragma once

#include <vector>

#include <Eigen/Dense>

namespace isocompat {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kOrthoTol = 1e-12;
inline constexpr double kLatticeTol = 1e-9;

/// Element of Iso(R^n) = O(n) x| R^n acting as x -> A x + v.
class EuclideanIsometry {
 public:
  /// Throws InvariantError unless A^T A = I to kOrthoTol, DimensionError on shape mismatch.
  EuclideanIsometry(Mat matrix, Vec translation);

  static EuclideanIsometry identity(int n);
  static EuclideanIsometry translation(Vec v);
  static EuclideanIsometry linear(Mat matrix);
  /// Rotation by `angle` in the oriented coordinate plane (i, j) of R^n.
  static EuclideanIsometry plane_rotation(int n, int i, int j, double angle);

  int dimension() const { return static_cast<int>(translation_.size()); }
  const Mat& matrix() const { return matrix_; }
  const Vec& translation_part() const { return translation_; }

  Vec apply(const Vec& x) const;
  EuclideanIsometry inverse() const;

  /// Max-norm distance between the (matrix, translation) pairs.
  double max_abs_difference(const EuclideanIsometry& other) const;
  bool approx_equal(const EuclideanIsometry& other, double tol = kOrthoTol) const {
    return max_abs_difference(other) <= tol;
  }

 private:
  struct Unchecked {};
  EuclideanIsometry(Unchecked, Mat matrix, Vec translation)
      : matrix_(std::move(matrix)), translation_(std::move(translation)) {}
  friend EuclideanIsometry compose(const EuclideanIsometry&, const EuclideanIsometry&);

  Mat matrix_;
  Vec translation_;
};

/// (A, v) o (B, w) = (AB, Aw + v); apply(compose(g, h), x) == apply(g, apply(h, x)).
EuclideanIsometry compose(const EuclideanIsometry& g, const EuclideanIsometry& h);

Vec apply(const EuclideanIsometry& g, const Vec& x);

/// Block-diagonal direct sum of isometries acting on concatenated coordinates.
EuclideanIsometry direct_sum(const std::vector<EuclideanIsometry>& parts);

/// max |A^T A - I|.
double orthogonality_defect(const Mat& a);

}  // namespace isocompat
