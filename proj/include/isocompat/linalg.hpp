#pragma once

#include <vector>

#include "isocompat/isometry.hpp"

namespace isocompat {

struct NullspaceResult {
  Mat basis;  // orthonormal columns
  std::vector<double> singular_values;
};

/// Right singular vectors of `a` whose singular value is <= cutoff (absolute); columns
/// beyond the row count count as zero singular values.
NullspaceResult nullspace(const Mat& a, double cutoff);

}  // namespace isocompat
