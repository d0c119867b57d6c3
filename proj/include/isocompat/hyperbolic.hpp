#pragma once

#include <cstdint>

#include "isocompat/isometry.hpp"

namespace isocompat {

/// Minkowski form B((x,t),(x',t')) = <x,x'> - t t'.
double minkowski(const Vec& a, const Vec& b);

/// Point (x, t) of the upper sheet q(x,t) = -1, t > 0, stored as an (n+1)-vector with t last.
///
/// The sheet constraint is checked relative to t^2: far from the origin the coordinates
/// grow like cosh(d) and the absolute roundoff in q grows with them.
class HyperboloidPoint {
 public:
  explicit HyperboloidPoint(Vec coords);
  /// (0, ..., 0, 1) in H^n.
  static HyperboloidPoint base(int n);

  int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  const Vec& coords() const { return coords_; }
  double time() const { return coords_(coords_.size() - 1); }

 private:
  Vec coords_;
};

/// Element of O(1,n) preserving the upper sheet.
class LorentzIsometry {
 public:
  explicit LorentzIsometry(Mat a);
  /// Boost with rapidity `rapidity` in the (x_1, t) plane of R^(n+1).
  static LorentzIsometry boost(int n, double rapidity);

  const Mat& matrix() const { return a_; }
  HyperboloidPoint apply(const HyperboloidPoint& p) const;

 private:
  Mat a_;
};

/// arccosh(-B(p,q)) clamped at 1; near the diagonal evaluated as 2 asinh(|p-q|_B / 2),
/// which is the same quantity without the cancellation in -B - 1.
double hyp_distance(const HyperboloidPoint& p, const HyperboloidPoint& q);

/// Projection of an ambient vector onto T_p H^n = { v : B(p, v) = 0 }.
Vec tangent_project(const HyperboloidPoint& p, const Vec& u);

/// cosh|v| p + sinh|v| v/|v|; v must satisfy B(p,v) = 0 to 1e-9 (relative).
HyperboloidPoint hyp_exp(const HyperboloidPoint& p, const Vec& v);

struct RauchResult {
  double lhs = 0.0;  // |v - w|
  double rhs = 0.0;  // d(exp_p v, exp_p w)
  bool holds = false;
};

RauchResult rauch_check(const HyperboloidPoint& p, const Vec& v, const Vec& w, double tolerance = 1e-9);

struct RauchSweepReport {
  int n = 0;
  std::size_t pairs = 0;
  std::size_t violations = 0;
  double max_norm = 0.0;
  double tolerance = 0.0;
  double min_slack = 0.0;       // min over pairs of rhs - lhs
  double max_ratio = 0.0;       // max lhs / rhs over pairs with rhs > 0
  double max_sheet_defect = 0.0;
  double max_exp_length_error = 0.0;  // max |d(p, exp_p v) - |v||
};

/// Random base points (exp of a vector of length <= 1 from the origin) and tangent pairs
/// with norms uniform in [0, max_norm].
RauchSweepReport rauch_sweep(int n, std::size_t pairs, std::uint64_t seed, double max_norm = 5.0,
                             double tolerance = 1e-9, unsigned threads = 1);

}  // namespace isocompat
