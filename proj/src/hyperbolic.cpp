#include "isocompat/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "isocompat/errors.hpp"
#include "isocompat/parallel.hpp"
#include "isocompat/rng.hpp"

namespace isocompat {

namespace {

constexpr double kSheetTol = 1e-9;

Mat eta(int n) {
  Mat e = Mat::Identity(n + 1, n + 1);
  e(n, n) = -1.0;
  return e;
}

double tangent_norm(const Vec& v) { return std::sqrt(std::max(0.0, minkowski(v, v))); }

}  // namespace

double minkowski(const Vec& a, const Vec& b) {
  require_dims(a.size(), b.size(), "minkowski");
  const auto n = a.size() - 1;
  return a.head(n).dot(b.head(n)) - a(n) * b(n);
}

HyperboloidPoint::HyperboloidPoint(Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw DimensionError("hyperboloid point needs at least 2 coordinates");
  const double t = time();
  const double q = minkowski(coords_, coords_);
  if (!(t > 0.0) || std::abs(q + 1.0) > kSheetTol * std::max(1.0, t * t)) {
    throw InvariantError("point is not on the upper sheet (q = " + std::to_string(q) + ")");
  }
}

HyperboloidPoint HyperboloidPoint::base(int n) {
  Vec e = Vec::Zero(n + 1);
  e(n) = 1.0;
  return HyperboloidPoint(std::move(e));
}

LorentzIsometry::LorentzIsometry(Mat a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() < 2) throw DimensionError("Lorentz matrix must be square");
  const int n = static_cast<int>(a_.rows()) - 1;
  const Mat e = eta(n);
  const double scale = std::max(1.0, a_.cwiseAbs().maxCoeff() * a_.cwiseAbs().maxCoeff());
  if ((a_.transpose() * e * a_ - e).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw InvariantError("matrix does not preserve the Minkowski form");
  }
  if (!(a_(n, n) > 0.0)) throw InvariantError("matrix swaps the sheets");
}

LorentzIsometry LorentzIsometry::boost(int n, double rapidity) {
  Mat a = Mat::Identity(n + 1, n + 1);
  a(0, 0) = std::cosh(rapidity);
  a(n, n) = std::cosh(rapidity);
  a(0, n) = std::sinh(rapidity);
  a(n, 0) = std::sinh(rapidity);
  return LorentzIsometry(std::move(a));
}

HyperboloidPoint LorentzIsometry::apply(const HyperboloidPoint& p) const {
  require_dims(a_.rows(), p.coords().size(), "Lorentz apply");
  return HyperboloidPoint(a_ * p.coords());
}

double hyp_distance(const HyperboloidPoint& p, const HyperboloidPoint& q) {
  require_dims(p.coords().size(), q.coords().size(), "hyp_distance");
  const double c = -minkowski(p.coords(), q.coords());
  if (c < 2.0) {
    const Vec diff = p.coords() - q.coords();
    const double chord = std::sqrt(std::max(0.0, minkowski(diff, diff)));
    return 2.0 * std::asinh(0.5 * chord);
  }
  return std::acosh(c);
}

Vec tangent_project(const HyperboloidPoint& p, const Vec& u) {
  require_dims(p.coords().size(), u.size(), "tangent_project");
  return u + minkowski(u, p.coords()) * p.coords();
}

HyperboloidPoint hyp_exp(const HyperboloidPoint& p, const Vec& v) {
  require_dims(p.coords().size(), v.size(), "hyp_exp");
  const double b = minkowski(p.coords(), v);
  if (std::abs(b) > kSheetTol * std::max(1.0, p.coords().norm() * v.norm())) {
    throw InvariantError("vector is not tangent at p (B(p,v) = " + std::to_string(b) + ")");
  }
  const double len = tangent_norm(v);
  if (len == 0.0) return p;
  return HyperboloidPoint(std::cosh(len) * p.coords() + (std::sinh(len) / len) * v);
}

RauchResult rauch_check(const HyperboloidPoint& p, const Vec& v, const Vec& w, double tolerance) {
  RauchResult r;
  r.lhs = tangent_norm(v - w);
  r.rhs = hyp_distance(hyp_exp(p, v), hyp_exp(p, w));
  r.holds = r.lhs <= r.rhs + tolerance;
  return r;
}

RauchSweepReport rauch_sweep(int n, std::size_t pairs, std::uint64_t seed, double max_norm, double tolerance,
                             unsigned threads) {
  if (n < 1) throw std::invalid_argument("rauch_sweep: n must be positive");
  struct Sample {
    RauchResult result;
    double sheet_defect = 0.0;
    double length_error = 0.0;
  };
  std::vector<Sample> samples(pairs);
  const HyperboloidPoint origin = HyperboloidPoint::base(n);

  auto random_tangent = [n](CounterRng& rng, const HyperboloidPoint& p, double length) {
    Vec u(n + 1);
    for (int i = 0; i <= n; ++i) u(i) = rng.normal();
    Vec v = tangent_project(p, u);
    const double len = tangent_norm(v);
    return len > 0 ? Vec(v * (length / len)) : Vec(Vec::Zero(n + 1));
  };

  parallel_for(pairs, threads, [&](std::size_t i) {
    CounterRng rng(seed, 0x52617563ULL, i);
    const HyperboloidPoint p = hyp_exp(origin, random_tangent(rng, origin, rng.uniform()));
    const Vec v = random_tangent(rng, p, max_norm * rng.uniform());
    const Vec w = random_tangent(rng, p, max_norm * rng.uniform());
    Sample& s = samples[i];
    s.result = rauch_check(p, v, w, tolerance);
    const HyperboloidPoint ev = hyp_exp(p, v);
    s.sheet_defect = std::abs(minkowski(ev.coords(), ev.coords()) + 1.0) / std::max(1.0, ev.time() * ev.time());
    s.length_error = std::abs(hyp_distance(p, ev) - tangent_norm(v));
  });

  RauchSweepReport report;
  report.n = n;
  report.pairs = pairs;
  report.max_norm = max_norm;
  report.tolerance = tolerance;
  report.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    if (!s.result.holds) ++report.violations;
    report.min_slack = std::min(report.min_slack, s.result.rhs - s.result.lhs);
    if (s.result.rhs > 0) report.max_ratio = std::max(report.max_ratio, s.result.lhs / s.result.rhs);
    report.max_sheet_defect = std::max(report.max_sheet_defect, s.sheet_defect);
    report.max_exp_length_error = std::max(report.max_exp_length_error, s.length_error);
  }
  if (pairs == 0) report.min_slack = 0.0;
  return report;
}

}  // namespace isocompat
