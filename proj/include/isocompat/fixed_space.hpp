#pragma once

#include <cstdint>
#include <vector>

#include "isocompat/group_spec.hpp"

namespace isocompat {

struct FixedSubspace {
  int dimension = 0;
  std::vector<Vec> basis;  // orthonormal
};

/// Common fixed vectors of the linear parts: nullspace of the stacked (A_k - I) over the
/// family generators and `samples` seeded Haar draws, singular-value cutoff `cutoff`.
/// Throws UnsupportedError for specs containing a translation lattice.
FixedSubspace fixed_subspace(const GroupSpec& spec, std::uint64_t seed = 0, std::size_t samples = 50,
                             double cutoff = 1e-9);

}  // namespace isocompat
