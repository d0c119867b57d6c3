#include "isocompat/linalg.hpp"

namespace isocompat {

NullspaceResult nullspace(const Mat& a, double cutoff) {
  const long cols = a.cols();
  NullspaceResult out;
  if (a.rows() == 0) {
    out.basis = Mat::Identity(cols, cols);
    return out;
  }
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  std::vector<long> keep;
  for (long k = 0; k < cols; ++k) {
    const double s = k < sv.size() ? sv(k) : 0.0;
    out.singular_values.push_back(s);
    if (s <= cutoff) keep.push_back(k);
  }
  out.basis.resize(cols, static_cast<long>(keep.size()));
  for (std::size_t b = 0; b < keep.size(); ++b) out.basis.col(static_cast<long>(b)) = svd.matrixV().col(keep[b]);
  return out;
}

}  // namespace isocompat
