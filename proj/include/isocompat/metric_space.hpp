#pragma once

#include <string>

#include "isocompat/hyperbolic.hpp"
#include "isocompat/isometry.hpp"
#include "isocompat/spd.hpp"

namespace isocompat {

enum class SpaceKind { Euclidean, Hyperboloid, Spd };

std::string to_string(SpaceKind kind);

/// Point of one of the three model spaces. SPD matrices are stored column-major in
/// `coords`; `model_dim` is n for R^n, H^n and for n x n SPD matrices.
class MetricPoint {
 public:
  static MetricPoint euclidean(Vec x);
  static MetricPoint hyperboloid(const HyperboloidPoint& p);
  static MetricPoint spd(const SpdPoint& p);

  SpaceKind kind() const { return kind_; }
  int model_dim() const { return model_dim_; }
  const Vec& coords() const { return coords_; }

  HyperboloidPoint as_hyperboloid() const;
  SpdPoint as_spd() const;

 private:
  MetricPoint(SpaceKind kind, int model_dim, Vec coords)
      : kind_(kind), model_dim_(model_dim), coords_(std::move(coords)) {}

  SpaceKind kind_;
  int model_dim_;
  Vec coords_;
};

/// Throws UnsupportedError on mixed space tags.
double distance(const MetricPoint& a, const MetricPoint& b);

/// Action of Iso(R^n) on each model: affine on R^n; the linear part acts on the x block of
/// the hyperboloid (isotropy of the base point) and by congruence on SPD matrices.
/// Translations are only defined on R^n.
MetricPoint act(const EuclideanIsometry& g, const MetricPoint& p);

}  // namespace isocompat
