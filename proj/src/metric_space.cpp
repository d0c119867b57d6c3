#include "isocompat/metric_space.hpp"

#include "isocompat/errors.hpp"

namespace isocompat {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Euclidean: return "euclidean";
    case SpaceKind::Hyperboloid: return "hyperboloid";
    case SpaceKind::Spd: return "spd";
  }
  return "unknown";
}

MetricPoint MetricPoint::euclidean(Vec x) {
  const int n = static_cast<int>(x.size());
  return MetricPoint(SpaceKind::Euclidean, n, std::move(x));
}

MetricPoint MetricPoint::hyperboloid(const HyperboloidPoint& p) {
  return MetricPoint(SpaceKind::Hyperboloid, p.dimension(), p.coords());
}

MetricPoint MetricPoint::spd(const SpdPoint& p) {
  return MetricPoint(SpaceKind::Spd, p.dimension(), p.matrix().reshaped());
}

HyperboloidPoint MetricPoint::as_hyperboloid() const {
  if (kind_ != SpaceKind::Hyperboloid) throw UnsupportedError("point is not on the hyperboloid");
  return HyperboloidPoint(coords_);
}

SpdPoint MetricPoint::as_spd() const {
  if (kind_ != SpaceKind::Spd) throw UnsupportedError("point is not an SPD matrix");
  return SpdPoint(coords_.reshaped(model_dim_, model_dim_));
}

double distance(const MetricPoint& a, const MetricPoint& b) {
  if (a.kind() != b.kind() || a.model_dim() != b.model_dim()) {
    throw UnsupportedError("distance between points of different spaces");
  }
  switch (a.kind()) {
    case SpaceKind::Euclidean: return (a.coords() - b.coords()).norm();
    case SpaceKind::Hyperboloid: return hyp_distance(a.as_hyperboloid(), b.as_hyperboloid());
    case SpaceKind::Spd: return spd_distance(a.as_spd(), b.as_spd());
  }
  return 0.0;
}

MetricPoint act(const EuclideanIsometry& g, const MetricPoint& p) {
  require_dims(p.model_dim(), g.dimension(), "group action");
  if (p.kind() == SpaceKind::Euclidean) return MetricPoint::euclidean(g.apply(p.coords()));
  if (g.translation_part().size() > 0 && g.translation_part().cwiseAbs().maxCoeff() > 0.0) {
    throw UnsupportedError("translations act only on Euclidean points");
  }
  if (p.kind() == SpaceKind::Hyperboloid) {
    Vec c = p.coords();
    c.head(p.model_dim()) = g.matrix() * c.head(p.model_dim());
    return MetricPoint::hyperboloid(HyperboloidPoint(std::move(c)));
  }
  return MetricPoint::spd(spd_congruence(g.matrix(), p.as_spd()));
}

}  // namespace isocompat
