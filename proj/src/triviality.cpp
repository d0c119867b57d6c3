#include "isocompat/triviality.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numeric>

#include "isocompat/errors.hpp"
#include "isocompat/parallel.hpp"
#include "isocompat/rng.hpp"

namespace isocompat {

namespace {

struct Factor {
  GroupSpec spec;
  int offset = 0;
};

/// Splits products into factors and block groups into single blocks; the orbit distance
/// is a sum of squares over these pieces.
void flatten(const GroupSpec& spec, int offset, std::vector<Factor>& out) {
  if (const auto* p = std::get_if<Product>(&spec.family)) {
    for (const auto& f : p->factors) {
      flatten(f, offset, out);
      offset += f.dimension;
    }
    return;
  }
  if (const auto* b = std::get_if<BlockOrthogonal>(&spec.family); b && b->blocks.size() > 1) {
    for (const auto& blk : b->blocks) {
      out.push_back({block_orthogonal({blk}), offset});
      offset += blk.size;
    }
    return;
  }
  out.push_back({spec, offset});
}

/// Connected-component label of a sampled element (O blocks have two components).
int component_of(const GroupSpec& spec, const EuclideanIsometry& g) {
  if (const auto* b = std::get_if<BlockOrthogonal>(&spec.family)) {
    if (b->blocks.size() == 1 && b->blocks.front().flavor == Flavor::O) return g.matrix().determinant() < 0 ? 1 : 0;
  }
  return 0;
}

/// Coordinate descent: each step maximizes a . R(alpha) b exactly, since along one
/// one-parameter subgroup that inner product is P cos(alpha) + Q sin(alpha) + K.
double descend(const std::vector<PlaneSet>& subgroups, const Vec& a, Vec b) {
  const int n = static_cast<int>(a.size());
  double best = (a - b).squaredNorm();
  for (int sweep = 0; sweep < 2000; ++sweep) {
    const double before = best;
    for (const auto& planes : subgroups) {
      const double g0 = a.dot(b);
      const double g_pi = a.dot(rotate_planes(n, planes, M_PI).apply(b));
      const double g_half = a.dot(rotate_planes(n, planes, 0.5 * M_PI).apply(b));
      const double k = 0.5 * (g0 + g_pi);
      const double p = 0.5 * (g0 - g_pi);
      const double q = g_half - k;
      const double alpha = std::atan2(q, p);
      const Vec candidate = rotate_planes(n, planes, alpha).apply(b);
      const double value = (a - candidate).squaredNorm();
      if (value < best) {
        best = value;
        b = candidate;
      }
    }
    if (best < 1e-28 || !(before - best > 1e-12 * before)) break;
  }
  return best;
}

double factor_gap_squared(const Factor& factor, const Vec& a, const Vec& x, std::size_t samples, std::uint64_t seed,
                          unsigned threads) {
  const auto group = sample_group(factor.spec, samples, seed, threads);
  std::vector<double> dist2(group.size());
  parallel_for(group.size(), threads, [&](std::size_t i) { dist2[i] = (a - group[i].apply(x)).squaredNorm(); });
  const auto subgroups = one_parameter_subgroups(factor.spec);
  const double sampled = *std::min_element(dist2.begin(), dist2.end());
  if (subgroups.empty()) return sampled;

  std::vector<std::size_t> order(group.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return dist2[i] < dist2[j]; });
  std::vector<std::size_t> starts(order.begin(), order.begin() + std::min<std::size_t>(4, order.size()));
  std::map<int, std::size_t> best_per_component;
  for (std::size_t i : order) best_per_component.emplace(component_of(factor.spec, group[i]), i);
  for (const auto& [component, i] : best_per_component) starts.push_back(i);

  double best = sampled;
  for (std::size_t i : starts) best = std::min(best, descend(subgroups, a, group[i].apply(x)));
  return best;
}

std::optional<bool> torus_contains(const UnitaryTorus& t, const Vec& x, const Vec& y, double tol) {
  const int n = t.n;
  std::complex<double> px = 1.0, py = 1.0;
  bool all_nonzero = true;
  for (int k = 0; k < n; ++k) {
    // Under the block real form the torus acts on z_k = x_k - i y_k by multiplication.
    const std::complex<double> zx{x(k), -x(n + k)};
    const std::complex<double> zy{y(k), -y(n + k)};
    const double scale = std::max(1.0, std::abs(zx));
    if (std::abs(std::abs(zx) - std::abs(zy)) > tol * scale) return false;
    if (std::abs(zx) <= tol * scale) all_nonzero = false;
    px *= zx;
    py *= zy;
  }
  if (t.special && all_nonzero) {
    const double scale = std::max(1.0, std::abs(px));
    return std::abs(px - py) <= tol * scale * n;
  }
  return true;
}

}  // namespace

std::string to_string(TrivialityVerdict verdict) {
  switch (verdict) {
    case TrivialityVerdict::OrbitCoincident: return "OrbitCoincident";
    case TrivialityVerdict::NontrivialWitness: return "NontrivialWitness";
    case TrivialityVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<bool> orbit_contains(const GroupSpec& spec, const Vec& x, const Vec& y, double tol) {
  require_dims(spec.dimension, x.size(), "orbit_contains x");
  require_dims(spec.dimension, y.size(), "orbit_contains y");
  if (const auto* b = std::get_if<BlockOrthogonal>(&spec.family)) {
    int offset = 0;
    for (const auto& blk : b->blocks) {
      const Vec xb = x.segment(offset, blk.size);
      const Vec yb = y.segment(offset, blk.size);
      offset += blk.size;
      const double scale = std::max(1.0, xb.norm());
      const bool same = (blk.size == 1 && blk.flavor == Flavor::SO) ? (xb - yb).norm() <= tol * scale
                                                                     : std::abs(xb.norm() - yb.norm()) <= tol * scale;
      if (!same) return false;
    }
    return true;
  }
  if (const auto* t = std::get_if<UnitaryTorus>(&spec.family)) return torus_contains(*t, x, y, tol);
  if (std::holds_alternative<TranslationLattice>(spec.family)) {
    return is_member(spec, EuclideanIsometry::translation(y - x));
  }
  if (const auto* f = std::get_if<FiniteSet>(&spec.family)) {
    const double scale = std::max(1.0, x.norm());
    return std::any_of(f->elements.begin(), f->elements.end(),
                       [&](const EuclideanIsometry& g) { return (g.apply(x) - y).norm() <= tol * scale; });
  }
  const auto& factors = std::get<Product>(spec.family).factors;
  int offset = 0;
  bool all = true;
  for (const auto& f : factors) {
    const auto part = orbit_contains(f, x.segment(offset, f.dimension), y.segment(offset, f.dimension), tol);
    if (!part) return std::nullopt;
    all = all && *part;
    offset += f.dimension;
  }
  return all;
}

OrbitGap orbit_gap(const GroupSpec& spec, const Vec& target, const Vec& x, std::size_t samples, std::uint64_t seed,
                   unsigned threads) {
  require_dims(spec.dimension, target.size(), "orbit_gap target");
  require_dims(spec.dimension, x.size(), "orbit_gap x");
  OrbitGap gap;
  const auto group = sample_group(spec, samples, seed, threads);
  std::vector<double> dist(group.size());
  parallel_for(group.size(), threads, [&](std::size_t i) { dist[i] = (target - group[i].apply(x)).norm(); });
  gap.sampled = *std::min_element(dist.begin(), dist.end());

  std::vector<Factor> factors;
  flatten(spec, 0, factors);
  double total = 0.0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& fac = factors[f];
    total += factor_gap_squared(fac, target.segment(fac.offset, fac.spec.dimension),
                                x.segment(fac.offset, fac.spec.dimension), samples, child_stream(seed, f), threads);
  }
  gap.refined = std::min(gap.sampled, std::sqrt(total));
  return gap;
}

TrivialityReport orbit_coincidence(const GroupSpec& base, const EuclideanIsometry& tau, const TrivialityOptions& options) {
  const GroupSpec twisted = with_twist(base.base(), tau, options.claimed_nontrivial);
  TrivialityReport report;
  report.twist = verify_twist(twisted, options.seed);
  if (!report.twist.all_pass()) throw InvariantError("orbit_coincidence: twist verification failed");
  report.coincidence_tolerance = options.coincidence_tolerance;
  report.gap_threshold = options.gap_threshold;
  report.samples = options.samples;

  std::vector<Vec> points = options.explicit_points;
  for (std::size_t i = 0; i < options.test_points; ++i) {
    CounterRng rng(options.seed, 0x54657374ULL, i);
    Vec x(base.dimension);
    for (int k = 0; k < base.dimension; ++k) x(k) = 2.0 * rng.normal();
    points.push_back(std::move(x));
  }
  if (points.empty()) throw std::invalid_argument("orbit_coincidence: no test points");

  bool exact_available = true;
  bool exact_all = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_dims(base.dimension, points[i].size(), "test point");
    PointEvidence ev;
    ev.x = points[i];
    ev.tau_x = tau.apply(points[i]);
    ev.gap = orbit_gap(base, ev.tau_x, ev.x, options.samples, child_stream(options.seed, 1000 + i), options.threads);
    ev.exact_coincident = orbit_contains(base, ev.x, ev.tau_x);
    if (!ev.exact_coincident) exact_available = false;
    else exact_all = exact_all && *ev.exact_coincident;
    report.points.push_back(std::move(ev));
  }
  if (exact_available) report.exact_invariant_check = exact_all;

  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const auto& ev = report.points[i];
    if (ev.gap.refined > options.gap_threshold && ev.exact_coincident.value_or(false) == false) {
      report.witness = i;
      break;
    }
  }
  const bool all_close = std::all_of(report.points.begin(), report.points.end(), [&](const PointEvidence& ev) {
    return ev.gap.refined < options.coincidence_tolerance;
  });
  if (report.witness) {
    report.verdict = TrivialityVerdict::NontrivialWitness;
    report.notes.push_back("tau x lies outside H(x) at the witness: the twisted invariant space contains nonzero "
                           "functions supported near that orbit");
  } else if (all_close && report.exact_invariant_check.value_or(false)) {
    report.verdict = TrivialityVerdict::OrbitCoincident;
    report.notes.push_back("tau maps every tested point into its H-orbit, so the twisted constraint forces u = -u "
                           "and the twisted invariant space is {0}");
  } else {
    report.verdict = TrivialityVerdict::Inconclusive;
  }
  if (options.claimed_nontrivial && report.verdict == TrivialityVerdict::OrbitCoincident) {
    report.discrepancy = true;
    report.notes.push_back("open question: this (H, tau) pair is declared to give a nonzero twisted space, but the "
                           "computed verdict is OrbitCoincident; the intended construction is not guessed");
  }
  return report;
}

}  // namespace isocompat
