#pragma once

#include <optional>
#include <vector>

namespace isocompat::pde {

/// Odd-in-x3 translates on R^3, u_n(x) = phi(x1^2 + x2^2) psi(x3 - n) for x3 >= n,
/// extended oddly to x3 < 0. phi(s) = (1 - s^2)^3 on |s| < 1; psi is odd with
/// psi(s) = (1 - 4(s - 3/2)^2)^3 on [1, 2].
///
/// Quadrature uses rho = x1^2 + x2^2 as the radial coordinate (dx = pi drho dz) with a
/// cell-centered grid of `cells_per_unit` cells per unit in both rho and z, so integer
/// shifts map grid nodes onto grid nodes.
struct CounterexampleOptions {
  double p = 4.0;                    // in (2, 6)
  std::vector<int> shifts{1, 2, 3, 4, 5, 6, 7, 8};
  int cells_per_unit = 32;
  std::optional<int> z_extent;       // half-length of the z grid; default max shift + 3
};

struct ShiftRecord {
  int shift = 0;
  double mass = 0.0;               // int |u_n|^p
  double relative_deviation = 0.0; // |mass - mass(first)| / mass(first)
  double pairing = 0.0;            // discrete H^1 inner product with the test function
  bool disjoint_support = false;   // supp u_n and supp g disjoint (analytic)
};

struct CounterexampleReport {
  double p = 0.0;
  int cells_per_unit = 0;
  int z_extent = 0;
  std::vector<ShiftRecord> shifts;
  double analytic_mass = 0.0;             // (pi/2) I^2, I = int_{-1}^{1} (1 - s^2)^{3p} ds
  double quadrature_relative_error = 0.0; // |mass(first) - analytic| / analytic
  double max_relative_deviation = 0.0;
  bool pairings_vanish_when_disjoint = true;
};

/// Test function g(rho, z) = phi(rho) sign(z) (1 - (|z| - 3/2)^2)^3 for |z| in [1/2, 5/2].
double counterexample_test_function(double rho, double z);
double counterexample_member(int shift, double rho, double z);

/// Throws std::invalid_argument for p outside (2, 6), nonpositive shifts, or a z grid
/// that does not cover the largest shifted support.
CounterexampleReport counterexample_sequence(const CounterexampleOptions& options = {});

}  // namespace isocompat::pde
