#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocompat/pde/energy.hpp"

namespace isocompat::pde {

enum class SolveStatus { Converged, MaxIterations, Stalled, ClassCollapse };

std::string to_string(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIterations;
  double energy = 0.0;
  double residual = 0.0;         // |grad_w E|_w, recomputed from the expanded solution
  double symmetry_defect = 0.0;  // max |u(i,j) + u(j,i)|
  double lq1_norm = 0.0;         // (sum w |u|^(q+1))^(1/(q+1))
  bool nonzero = false;
  std::optional<double> comparison_energy;  // radial baseline on the matched truncation/grid
  int iterations = 0;
  double nehari_defect = 0.0;               // |a(u) - N(u)| / a(u) at the solution
  double scaling_identity_max_error = 0.0;  // max relative |E - (1/2 - 1/(q+1)) a| after projections
  bool energy_monotone = true;
  std::vector<double> energy_history;
  std::vector<std::string> notes;
};

struct SolveOptions {
  double tol = 1e-6;
  int max_iter = 50000;
  std::uint64_t seed = 0;
  std::optional<ReducedFunction> initial;  // overrides the seeded bump
  bool record_history = false;
};

struct SolveResult {
  SolveReport report;
  ReducedFunction solution;
};

/// Seeded smooth bump centered off the diagonal r1 = r2 (antisymmetrized in the swap class).
ReducedFunction initial_bump(const ReducedDomain& domain, SymmetryClass cls, std::uint64_t seed);

/// Rescales u onto the Nehari set a(u) = N(u); nullopt if N(u) = 0.
std::optional<ReducedFunction> nehari_project(const ReducedFunction& u, const ProblemSpec& p);

/// Least-energy critical point in the symmetry class by Nehari projection + Armijo
/// backtracked weighted-gradient descent (factor 1/2, slope 1e-4). The first trial step
/// of each line search is the Barzilai-Borwein step from the previous iterate.
SolveResult nehari_ground_state(const ReducedDomain& domain, SymmetryClass cls, const ProblemSpec& p,
                                const SolveOptions& options = {});

/// The same scheme on the Radial reduction of R^n.
SolveResult radial_baseline(const ProblemSpec& p, int n, double radius, int cells, const SolveOptions& options = {});

}  // namespace isocompat::pde
