#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isocompat/group_spec.hpp"

namespace isocompat {

/// Element of the twisted group H~ = H u tau H. The coset bit is carried alongside the
/// matrix because some taus (block swaps) are not recognizable from the matrix alone.
struct TwistedElement {
  EuclideanIsometry iso;
  bool odd = false;  // true on the coset tau H
};

TwistedElement operator*(const TwistedElement& a, const TwistedElement& b);

/// rho(g) in {+1, -1}.
inline int character(const TwistedElement& g) { return g.odd ? -1 : 1; }

/// h tau^b for the i-th seeded sample h of the base group.
std::vector<TwistedElement> sample_twisted(const GroupSpec& spec, std::size_t count, std::uint64_t seed);

struct TwistReport {
  bool tau_involutive = false;
  bool tau_outside = false;
  bool normalizes = false;
  bool character_homomorphism = false;
  double involution_defect = 0.0;
  std::size_t normalizer_checks = 0;
  std::size_t normalizer_failures = 0;
  std::size_t homomorphism_checks = 0;
  std::size_t homomorphism_failures = 0;

  bool all_pass() const { return tau_involutive && tau_outside && normalizes && character_homomorphism; }
};

/// Checks tau^2 = e, tau not in H, tau h tau^-1 in H (generators plus `samples` Haar
/// draws), and rho(g1 g2) = rho(g1) rho(g2) on `samples` random products, where each
/// product's coset bit is also confirmed against membership of its matrix.
/// Failures are report fields; throws only if the spec has no twist.
TwistReport verify_twist(const GroupSpec& spec, std::uint64_t seed = 0, std::size_t samples = 100);

}  // namespace isocompat
