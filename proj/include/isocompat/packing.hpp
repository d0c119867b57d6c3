#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isocompat/group_spec.hpp"
#include "isocompat/metric_space.hpp"

namespace isocompat {

/// Greedy scan in index order: accept i iff dist(i, j) > 2r for every accepted j.
/// The accepted set is an explicit packing, so its size is a lower bound on m(y, r, G).
template <class Dist>
std::vector<std::size_t> greedy_pack_indices(std::size_t count, double radius, Dist&& dist) {
  std::vector<std::size_t> accepted;
  const double separation = 2.0 * radius;
  for (std::size_t i = 0; i < count; ++i) {
    bool free = true;
    for (std::size_t j : accepted) {
      if (!(dist(i, j) > separation)) {
        free = false;
        break;
      }
    }
    if (free) accepted.push_back(i);
  }
  return accepted;
}

struct PackingFragment {
  std::size_t m_hat = 0;
  std::vector<std::size_t> selected;  // indices into the input
};

/// Input-order greedy packing. Throws on r <= 0 or mixed space tags.
PackingFragment greedy_packing(std::span<const MetricPoint> points, double radius);

/// Exhaustive re-check that all points are pairwise more than 2r apart.
bool pairwise_separated(std::span<const MetricPoint> points, double radius);

/// Order in which estimate_m feeds the sampled orbit to the greedy scan.
/// AnchorDistance sorts by distance to the first orbit point (ties by sample index), which
/// packs a dense orbit shell by shell; SampleOrder keeps the Haar order and behaves like
/// random sequential adsorption.
enum class ScanOrder { AnchorDistance, SampleOrder };

enum class CompatVerdict { CompatibleEvidence, IncompatibleWitness, Inconclusive };

std::string to_string(ScanOrder order);
std::string to_string(CompatVerdict verdict);

struct GrowthPoint {
  double norm = 0.0;
  std::size_t m_hat = 0;
};

struct PackingReport {
  MetricPoint base_point = MetricPoint::euclidean(Vec());
  double radius = 0.0;
  std::size_t sample_count = 0;
  std::size_t m_hat = 0;
  std::vector<MetricPoint> selected_representatives;
  bool separation_verified = false;
  std::vector<GrowthPoint> growth_curve;
  std::optional<CompatVerdict> verdict;
  std::vector<std::string> notes;
};

struct PackingOptions {
  ScanOrder order = ScanOrder::AnchorDistance;
  unsigned threads = 1;
};

PackingReport estimate_m(const GroupSpec& spec, const MetricPoint& y, double radius, std::size_t samples,
                         std::uint64_t seed, const PackingOptions& options = {});

struct ProbeOptions {
  double growth_factor = 2.0;
  std::size_t incompatible_cap = 2;
  PackingOptions packing;
};

/// m_hat along the ray norm * direction for each norm (strictly increasing, >= 3 entries).
///   CompatibleEvidence  m_hat nondecreasing and last >= growth_factor * first, or m_hat
///                       equal to the sample budget at every norm (saturated orbit)
///   IncompatibleWitness m_hat constant and <= incompatible_cap
///   Inconclusive        otherwise
/// The report's base point and packing are those of the last norm.
PackingReport compatibility_probe(const GroupSpec& spec, const Vec& direction, double radius,
                                  const std::vector<double>& norms, std::size_t samples, std::uint64_t seed,
                                  const ProbeOptions& options = {});

}  // namespace isocompat
