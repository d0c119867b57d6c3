#include "isocompat/boost_demo.hpp"

#include <cmath>
#include <stdexcept>

namespace isocompat {

PackingReport boost_orbit_demo(double step, std::size_t count, int n) {
  if (!(step > 0.0)) throw std::invalid_argument("boost step must be positive");
  if (count < 1) throw std::invalid_argument("boost orbit needs at least one element");
  if (static_cast<double>(count) * step > 700.0) throw std::invalid_argument("boost orbit overflows cosh range");
  std::vector<long> exponents;
  exponents.push_back(0);
  for (long k = 1; exponents.size() < count; ++k) {
    exponents.push_back(-k);
    if (exponents.size() < count) exponents.push_back(k);
  }
  const HyperboloidPoint origin = HyperboloidPoint::base(n);
  auto relative = [&](std::size_t i, std::size_t j) {
    const double m = static_cast<double>(exponents[j] - exponents[i]);
    return hyp_distance(origin, LorentzIsometry::boost(n, m * step).apply(origin));
  };
  const double radius = 0.25 * step;
  const auto selected = greedy_pack_indices(count, radius, relative);

  PackingReport report;
  report.base_point = MetricPoint::hyperboloid(origin);
  report.radius = radius;
  report.sample_count = count;
  report.m_hat = selected.size();
  bool separated = true;
  for (std::size_t a = 0; a < selected.size(); ++a)
    for (std::size_t b = a + 1; b < selected.size(); ++b)
      separated = separated && relative(selected[a], selected[b]) > 2.0 * radius;
  report.separation_verified = separated;
  for (std::size_t i : selected) {
    report.selected_representatives.push_back(
        MetricPoint::hyperboloid(LorentzIsometry::boost(n, static_cast<double>(exponents[i]) * step).apply(origin)));
  }
  report.notes.push_back("pairwise distances evaluated group-relatively as d(p, g^(j-i) p)");
  return report;
}

}  // namespace isocompat
