#include "isocompat/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "isocompat/errors.hpp"
#include "isocompat/parallel.hpp"

namespace isocompat {

std::string to_string(ScanOrder order) {
  return order == ScanOrder::AnchorDistance ? "anchor_distance" : "sample_order";
}

std::string to_string(CompatVerdict verdict) {
  switch (verdict) {
    case CompatVerdict::CompatibleEvidence: return "CompatibleEvidence";
    case CompatVerdict::IncompatibleWitness: return "IncompatibleWitness";
    case CompatVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

PackingFragment greedy_packing(std::span<const MetricPoint> points, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("packing radius must be positive");
  for (const auto& p : points) {
    if (p.kind() != points.front().kind() || p.model_dim() != points.front().model_dim()) {
      throw UnsupportedError("greedy_packing: mixed space tags");
    }
  }
  PackingFragment out;
  out.selected = greedy_pack_indices(points.size(), radius,
                                     [&](std::size_t i, std::size_t j) { return distance(points[i], points[j]); });
  out.m_hat = out.selected.size();
  return out;
}

bool pairwise_separated(std::span<const MetricPoint> points, double radius) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!(distance(points[i], points[j]) > 2.0 * radius)) return false;
  return true;
}

PackingReport estimate_m(const GroupSpec& spec, const MetricPoint& y, double radius, std::size_t samples,
                         std::uint64_t seed, const PackingOptions& options) {
  if (!(radius > 0.0)) throw std::invalid_argument("packing radius must be positive");
  const auto group = sample_group(spec, samples, seed, options.threads);

  std::vector<std::optional<MetricPoint>> slots(group.size());
  parallel_for(group.size(), options.threads, [&](std::size_t i) { slots[i] = act(group[i], y); });
  std::vector<MetricPoint> orbit;
  orbit.reserve(slots.size());
  for (auto& s : slots) orbit.push_back(std::move(*s));

  std::vector<std::size_t> order(orbit.size());
  std::iota(order.begin(), order.end(), 0);
  if (options.order == ScanOrder::AnchorDistance && !orbit.empty()) {
    std::vector<double> key(orbit.size());
    parallel_for(orbit.size(), options.threads, [&](std::size_t i) { key[i] = distance(orbit.front(), orbit[i]); });
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  }
  std::vector<MetricPoint> scan;
  scan.reserve(orbit.size());
  for (std::size_t i : order) scan.push_back(orbit[i]);

  const PackingFragment frag = greedy_packing(scan, radius);
  PackingReport report;
  report.base_point = y;
  report.radius = radius;
  report.sample_count = samples;
  report.m_hat = frag.m_hat;
  for (std::size_t i : frag.selected) report.selected_representatives.push_back(scan[i]);
  report.separation_verified = pairwise_separated(report.selected_representatives, radius);
  return report;
}

PackingReport compatibility_probe(const GroupSpec& spec, const Vec& direction, double radius,
                                  const std::vector<double>& norms, std::size_t samples, std::uint64_t seed,
                                  const ProbeOptions& options) {
  require_dims(spec.dimension, direction.size(), "probe direction");
  if (norms.size() < 3) throw std::invalid_argument("probe needs at least three norms");
  for (std::size_t k = 1; k < norms.size(); ++k) {
    if (!(norms[k] > norms[k - 1])) throw std::invalid_argument("probe norms must be strictly increasing");
  }
  const double dnorm = direction.norm();
  if (!(dnorm > 0.0)) throw std::invalid_argument("probe direction must be nonzero");
  const Vec unit = direction / dnorm;

  PackingReport last;
  std::vector<GrowthPoint> curve;
  for (double norm : norms) {
    last = estimate_m(spec, MetricPoint::euclidean(norm * unit), radius, samples, seed, options.packing);
    curve.push_back({norm, last.m_hat});
  }

  const bool nondecreasing = std::is_sorted(curve.begin(), curve.end(),
                                            [](const GrowthPoint& a, const GrowthPoint& b) { return a.m_hat < b.m_hat; });
  const bool constant = std::all_of(curve.begin(), curve.end(),
                                    [&](const GrowthPoint& g) { return g.m_hat == curve.front().m_hat; });
  const bool saturated = std::all_of(curve.begin(), curve.end(),
                                     [&](const GrowthPoint& g) { return g.m_hat == samples; });
  const bool grows = static_cast<double>(curve.back().m_hat) >=
                     options.growth_factor * static_cast<double>(curve.front().m_hat);

  CompatVerdict verdict = CompatVerdict::Inconclusive;
  if (constant && curve.front().m_hat <= options.incompatible_cap) {
    verdict = CompatVerdict::IncompatibleWitness;
  } else if (nondecreasing && (grows || saturated)) {
    verdict = CompatVerdict::CompatibleEvidence;
  }

  last.growth_curve = std::move(curve);
  last.verdict = verdict;
  last.notes.push_back("base points probed along a ray (direction x norms) as a proxy for points near the domain");
  if (saturated && verdict == CompatVerdict::CompatibleEvidence) {
    last.notes.push_back("m_hat equals the sample budget at every norm: every sampled orbit point is separated");
  }
  if (lie_dimension(spec) == 1) {
    last.notes.push_back("identity component has dimension 1; admitted for probing although the growth "
                         "theorem is stated for dimension greater than one");
  }
  return last;
}

}  // namespace isocompat
