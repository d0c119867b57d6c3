#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocompat/group_spec.hpp"
#include "isocompat/twist.hpp"

namespace isocompat {

enum class TrivialityVerdict { OrbitCoincident, NontrivialWitness, Inconclusive };

std::string to_string(TrivialityVerdict verdict);

/// Exact orbit test y in H(x) from orbit invariants: per-block norms (or the coordinate
/// itself for SO(1), its modulus for O(1)), complex moduli plus the product phase for
/// special tori, lattice cosets, finite enumeration; products test every factor.
std::optional<bool> orbit_contains(const GroupSpec& spec, const Vec& x, const Vec& y, double tol = 1e-9);

struct OrbitGap {
  double sampled = 0.0;  // min over the Haar sample of |target - h x|
  double refined = 0.0;  // after local descent along one-parameter subgroups
};

/// min over h in H of |target - h x|: sampled, then polished factor by factor by exact
/// line minimization over each one-parameter subgroup, started from the best samples.
/// Discrete factors (lattices, finite sets) are minimized over the enumerated elements.
OrbitGap orbit_gap(const GroupSpec& spec, const Vec& target, const Vec& x, std::size_t samples, std::uint64_t seed,
                   unsigned threads = 1);

struct PointEvidence {
  Vec x;
  Vec tau_x;
  OrbitGap gap;
  std::optional<bool> exact_coincident;
};

struct TrivialityReport {
  std::vector<PointEvidence> points;
  TrivialityVerdict verdict = TrivialityVerdict::Inconclusive;
  std::optional<std::size_t> witness;
  std::optional<bool> exact_invariant_check;
  double coincidence_tolerance = 1e-6;
  double gap_threshold = 1e-2;
  std::size_t samples = 0;
  TwistReport twist;
  bool discrepancy = false;
  std::vector<std::string> notes;
};

struct TrivialityOptions {
  std::vector<Vec> explicit_points;  // tested first, in order
  std::size_t test_points = 5;       // seeded random points tested after the explicit ones
  std::size_t samples = 5000;
  std::uint64_t seed = 0;
  double coincidence_tolerance = 1e-6;
  double gap_threshold = 1e-2;
  bool claimed_nontrivial = false;
  unsigned threads = 1;
};

/// Decides whether tau x lies in H(x) for generic x, i.e. whether every twisted-invariant
/// function must vanish.
///   NontrivialWitness  some x has refined gap > gap_threshold and the exact test disagrees
///                      with coincidence
///   OrbitCoincident    every x has refined gap < coincidence_tolerance and the exact test
///                      confirms tau x in H(x)
///   Inconclusive       otherwise
/// Throws InvariantError if tau fails verify_twist.
TrivialityReport orbit_coincidence(const GroupSpec& base, const EuclideanIsometry& tau,
                                   const TrivialityOptions& options);

}  // namespace isocompat
