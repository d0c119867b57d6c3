#include "isocompat/pde/solver.hpp"

#include <cmath>
#include <limits>

#include "isocompat/rng.hpp"

namespace isocompat::pde {

namespace {

constexpr double kCollapseNorm = 1e-10;
constexpr double kArmijoSlope = 1e-4;
// Relative energy slack below which the derivative form of the sufficient-decrease
// test takes over (energy differences are pure roundoff there).
constexpr double kEnergySlack = 1e-12;
constexpr int kMaxHalvings = 80;

double bump(double a, double b, double ca, double cb) {
  const double s = (a - ca) * (a - ca) + (b - cb) * (b - cb);
  return std::exp(-s);
}

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIterations: return "MaxIterations";
    case SolveStatus::Stalled: return "Stalled";
    case SolveStatus::ClassCollapse: return "ClassCollapse";
  }
  return "Unknown";
}

ReducedFunction initial_bump(const ReducedDomain& d, SymmetryClass cls, std::uint64_t seed) {
  CounterRng rng(seed, 0x42756d70ULL, 0);
  const double c0 = 2.0 + 0.5 * rng.uniform();
  const double c1 = 0.5 + 0.5 * rng.uniform();
  Vec full(static_cast<long>(d.cell_count()));
  for (int i = 0; i < d.size0(); ++i) {
    for (int j = 0; j < d.size1(); ++j) {
      const double a = d.coord0(i);
      double v = 0.0;
      switch (d.reduction()) {
        case Reduction::BlockRadial4: v = bump(a, d.coord1(j), c0, c1); break;
        case Reduction::Cylinder3:
          v = bump(a, 0.0, c1, 0.0) * (1.0 + 0.25 * std::cos(2.0 * M_PI * d.coord1(j) / d.period()));
          break;
        case Reduction::Radial: v = bump(a, 0.0, c1, 0.0); break;
      }
      full(static_cast<long>(d.index(i, j))) = v;
    }
  }
  if (cls == SymmetryClass::AntisymmetricSwap) return ReducedFunction::from_full(d, cls, 2.0 * full);
  return ReducedFunction::from_full(d, cls, full);
}

std::optional<ReducedFunction> nehari_project(const ReducedFunction& u, const ProblemSpec& p) {
  const EnergyParts parts = energy_parts(u, p);
  if (!(parts.nonlinear > 0.0) || !std::isfinite(parts.nonlinear)) return std::nullopt;
  const double t = std::pow(parts.quadratic(p.b0) / parts.nonlinear, 1.0 / (p.q - 1.0));
  ReducedFunction out = u;
  out.unknowns() *= t;
  return out;
}

SolveResult nehari_ground_state(const ReducedDomain& domain, SymmetryClass cls, const ProblemSpec& p,
                                const SolveOptions& options) {
  p.validate(domain.ambient_dim());
  ReducedFunction start = options.initial ? *options.initial : initial_bump(domain, cls, options.seed);
  if (start.symmetry() != cls) start = ReducedFunction::from_full(domain, cls, start.expand());

  SolveReport report;
  const double nehari_factor = 0.5 - 1.0 / (p.q + 1.0);
  auto collapse = [&](ReducedFunction u, int iterations) {
    report.status = SolveStatus::ClassCollapse;
    report.iterations = iterations;
    report.notes.push_back("iterate fell below norm 1e-10: no nonzero critical point reached in this class");
    return SolveResult{report, std::move(u)};
  };
  auto scaling_error = [&](const EnergyParts& parts) {
    const double e = parts.energy(p);
    return std::abs(e - nehari_factor * parts.quadratic(p.b0)) / std::max(1.0, std::abs(e));
  };

  if (weighted_norm(start) < kCollapseNorm) return collapse(start, 0);
  auto projected = nehari_project(start, p);
  if (!projected) return collapse(start, 0);
  ReducedFunction u = std::move(*projected);
  const Vec mass = u.mass();

  EnergyParts parts = energy_parts(u, p);
  double energy = parts.energy(p);
  report.scaling_identity_max_error = scaling_error(parts);
  ReducedFunction grad = discrete_gradient(u, p);
  double grad_norm2 = weighted_inner(grad, grad);
  if (options.record_history) report.energy_history.push_back(energy);

  double alpha = 1.0;
  int it = 0;
  report.status = SolveStatus::MaxIterations;
  for (; it < options.max_iter; ++it) {
    if (std::sqrt(grad_norm2) < options.tol) {
      report.status = SolveStatus::Converged;
      break;
    }
    bool accepted = false;
    std::optional<ReducedFunction> trial;
    std::optional<ReducedFunction> trial_grad;
    EnergyParts trial_parts;
    const double slack = kEnergySlack * std::max(1.0, std::abs(energy));
    for (int halving = 0; halving < kMaxHalvings; ++halving) {
      ReducedFunction step = u;
      step.unknowns() -= alpha * grad.unknowns();
      if (weighted_norm(step) < kCollapseNorm) return collapse(step, it);
      trial = nehari_project(step, p);
      if (!trial) return collapse(step, it);
      trial_parts = energy_parts(*trial, p);
      const double e = trial_parts.energy(p);
      if (e <= energy - kArmijoSlope * alpha * grad_norm2) {
        accepted = true;
      } else if (e <= energy + slack) {
        // Approximate Armijo: slope along the step must still be (1 - 2 c) of the initial one.
        trial_grad = discrete_gradient(*trial, p);
        const Vec dir = u.unknowns() - trial->unknowns();
        const double slope_end = (mass.array() * trial_grad->unknowns().array() * dir.array()).sum();
        const double slope_start = (mass.array() * grad.unknowns().array() * dir.array()).sum();
        accepted = slope_start > 0.0 && slope_end >= -(1.0 - 2.0 * kArmijoSlope) * slope_start;
      }
      if (accepted) break;
      trial_grad.reset();
      alpha *= 0.5;
    }
    if (!accepted) {
      report.status = SolveStatus::Stalled;
      report.notes.push_back("line search could not satisfy the Armijo condition");
      break;
    }
    const double trial_energy = trial_parts.energy(p);
    if (trial_energy > energy + slack) report.energy_monotone = false;
    report.scaling_identity_max_error = std::max(report.scaling_identity_max_error, scaling_error(trial_parts));

    if (!trial_grad) trial_grad = discrete_gradient(*trial, p);
    const Vec s = trial->unknowns() - u.unknowns();
    const Vec y = trial_grad->unknowns() - grad.unknowns();
    const double sy = (mass.array() * s.array() * y.array()).sum();
    const double ss = (mass.array() * s.array() * s.array()).sum();
    alpha = sy > 0.0 ? ss / sy : 2.0 * alpha;

    u = std::move(*trial);
    grad = std::move(*trial_grad);
    grad_norm2 = weighted_inner(grad, grad);
    energy = trial_energy;
    if (options.record_history) report.energy_history.push_back(energy);
  }

  // Independent recomputation on the final iterate.
  const ReducedFunction check = ReducedFunction::from_full(domain, cls, u.expand());
  const EnergyParts final_parts = energy_parts(check, p);
  report.energy = final_parts.energy(p);
  report.residual = weighted_norm(discrete_gradient(check, p));
  report.symmetry_defect = cls == SymmetryClass::AntisymmetricSwap ? symmetry_defect(check) : 0.0;
  report.lq1_norm = std::pow(final_parts.nonlinear, 1.0 / (p.q + 1.0));
  report.nonzero = report.lq1_norm > 0.0;
  report.nehari_defect = std::abs(final_parts.quadratic(p.b0) - final_parts.nonlinear) /
                         std::max(std::numeric_limits<double>::min(), final_parts.quadratic(p.b0));
  report.iterations = it;
  if (report.status == SolveStatus::Converged && report.residual >= options.tol) {
    report.status = SolveStatus::MaxIterations;
  }
  return SolveResult{report, u};
}

SolveResult radial_baseline(const ProblemSpec& p, int n, double radius, int cells, const SolveOptions& options) {
  return nehari_ground_state(ReducedDomain::radial(n, cells, radius), SymmetryClass::None, p, options);
}

}  // namespace isocompat::pde
