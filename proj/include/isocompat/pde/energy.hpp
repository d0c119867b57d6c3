#pragma once

#include "isocompat/pde/domain.hpp"

namespace isocompat::pde {

/// -Delta u + b0 u = |u|^(q-1) u with b0 > 0 constant and 1 < q < (n+2)/(n-2).
struct ProblemSpec {
  double b0 = 1.0;
  double q = 2.5;

  /// Throws std::invalid_argument unless b0 > 0 and q is subcritical in dimension n.
  void validate(int ambient_dim) const;
};

/// Pieces of the discrete energy on the full grid:
///   gradient  = sum over faces of face_weight * (forward difference)^2
///   mass      = sum w u^2
///   nonlinear = sum w |u|^(q+1)
struct EnergyParts {
  double gradient = 0.0;
  double mass = 0.0;
  double nonlinear = 0.0;

  double quadratic(double b0) const { return gradient + b0 * mass; }
  double energy(const ProblemSpec& p) const { return 0.5 * quadratic(p.b0) - nonlinear / (p.q + 1.0); }
};

EnergyParts energy_parts(const ReducedFunction& u, const ProblemSpec& p);

/// E_h(u) = 1/2 sum wf |D u|^2 + 1/2 b0 sum w u^2 - sum w |u|^(q+1) / (q+1).
double discrete_energy(const ReducedFunction& u, const ProblemSpec& p);

/// Gradient of E_h with respect to the weighted inner product on the class's unknowns:
/// <grad E(u), v>_w = dE(u)[v] for all v in the class.
ReducedFunction discrete_gradient(const ReducedFunction& u, const ProblemSpec& p);

/// Partial derivatives dE/du_c on every full-grid cell.
Vec full_partials(const ReducedDomain& domain, const Vec& full, const ProblemSpec& p);

double weighted_inner(const ReducedFunction& u, const ReducedFunction& v);
double weighted_norm(const ReducedFunction& u);

/// max |u(i,j) + u(j,i)| on the expanded grid (block-radial domains only, else 0).
double symmetry_defect(const ReducedFunction& u);

}  // namespace isocompat::pde
