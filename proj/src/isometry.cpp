#include "isocompat/isometry.hpp"

#include <cmath>
#include <string>

#include "isocompat/errors.hpp"

namespace isocompat {

double orthogonality_defect(const Mat& a) {
  const Mat a_t_a = a.transpose() * a;
  return (a_t_a - Mat::Identity(a.cols(), a.cols())).cwiseAbs().maxCoeff();
}

EuclideanIsometry::EuclideanIsometry(Mat matrix, Vec translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw DimensionError("isometry matrix must be square");
  }
  require_dims(matrix_.rows(), translation_.size(), "isometry translation");
  if (matrix_.size() > 0) {
    const double defect = orthogonality_defect(matrix_);
    if (!(defect <= kOrthoTol)) {
      throw InvariantError("isometry matrix is not orthogonal (defect " + std::to_string(defect) + ")");
    }
  }
}

EuclideanIsometry EuclideanIsometry::identity(int n) {
  return EuclideanIsometry(Unchecked{}, Mat::Identity(n, n), Vec::Zero(n));
}

EuclideanIsometry EuclideanIsometry::translation(Vec v) {
  const auto n = v.size();
  return EuclideanIsometry(Unchecked{}, Mat::Identity(n, n), std::move(v));
}

EuclideanIsometry EuclideanIsometry::linear(Mat matrix) {
  const auto n = matrix.rows();
  return EuclideanIsometry(std::move(matrix), Vec::Zero(n));
}

EuclideanIsometry EuclideanIsometry::plane_rotation(int n, int i, int j, double angle) {
  Mat a = Mat::Identity(n, n);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  a(i, i) = c;
  a(j, j) = c;
  a(i, j) = -s;
  a(j, i) = s;
  return EuclideanIsometry(Unchecked{}, std::move(a), Vec::Zero(n));
}

Vec EuclideanIsometry::apply(const Vec& x) const {
  require_dims(dimension(), x.size(), "apply");
  return matrix_ * x + translation_;
}

EuclideanIsometry EuclideanIsometry::inverse() const {
  Mat a_t = matrix_.transpose();
  Vec v = -(a_t * translation_);
  return EuclideanIsometry(Unchecked{}, std::move(a_t), std::move(v));
}

double EuclideanIsometry::max_abs_difference(const EuclideanIsometry& other) const {
  require_dims(dimension(), other.dimension(), "isometry comparison");
  if (dimension() == 0) return 0.0;
  return std::max((matrix_ - other.matrix_).cwiseAbs().maxCoeff(),
                  (translation_ - other.translation_).cwiseAbs().maxCoeff());
}

EuclideanIsometry compose(const EuclideanIsometry& g, const EuclideanIsometry& h) {
  require_dims(g.dimension(), h.dimension(), "compose");
  return EuclideanIsometry(EuclideanIsometry::Unchecked{}, g.matrix_ * h.matrix_,
                           g.matrix_ * h.translation_ + g.translation_);
}

Vec apply(const EuclideanIsometry& g, const Vec& x) { return g.apply(x); }

EuclideanIsometry direct_sum(const std::vector<EuclideanIsometry>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.dimension();
  Mat a = Mat::Zero(n, n);
  Vec v = Vec::Zero(n);
  int offset = 0;
  for (const auto& p : parts) {
    const int k = p.dimension();
    a.block(offset, offset, k, k) = p.matrix();
    v.segment(offset, k) = p.translation_part();
    offset += k;
  }
  return EuclideanIsometry(std::move(a), std::move(v));
}

}  // namespace isocompat
