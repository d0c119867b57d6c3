#include "isocompat/fixed_space.hpp"

#include "isocompat/errors.hpp"
#include "isocompat/linalg.hpp"

namespace isocompat {

FixedSubspace fixed_subspace(const GroupSpec& spec, std::uint64_t seed, std::size_t samples, double cutoff) {
  if (contains_lattice(spec)) {
    throw UnsupportedError("fixed_subspace: translation lattices have no linear fixed-space semantics");
  }
  std::vector<EuclideanIsometry> elements = generators(spec);
  const auto drawn = sample_group(spec, samples, seed);
  elements.insert(elements.end(), drawn.begin(), drawn.end());

  const int n = spec.dimension;
  Mat system(static_cast<long>(elements.size()) * n, n);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    system.block(static_cast<long>(k) * n, 0, n, n) = elements[k].matrix() - Mat::Identity(n, n);
  }
  const NullspaceResult ns = nullspace(system, cutoff);
  FixedSubspace out;
  out.dimension = static_cast<int>(ns.basis.cols());
  for (long c = 0; c < ns.basis.cols(); ++c) {
    Vec b = ns.basis.col(c);
    Eigen::Index lead = 0;
    b.cwiseAbs().maxCoeff(&lead);
    if (b(lead) < 0) b = -b;
    out.basis.push_back(std::move(b));
  }
  return out;
}

}  // namespace isocompat
