#include "isocompat/pde/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isocompat::pde {

namespace {

constexpr double kTestInner = 0.5;
constexpr double kTestOuter = 2.5;
constexpr double kRhoExtent = 1.25;

double cube(double x) { return x * x * x; }

double phi(double s) { return std::abs(s) < 1.0 ? cube(1.0 - s * s) : 0.0; }

// Positive half of psi, supported on [1, 2].
double psi_plus(double s) {
  if (s <= 1.0 || s >= 2.0) return 0.0;
  const double t = 2.0 * (s - 1.5);
  return cube(1.0 - t * t);
}

double sign(double z) { return z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0); }

// Member evaluated from the offset |z| - n given in exact half-integer cell units.
double member_from_offset(double rho, double z_sign, double offset) {
  return phi(rho) * z_sign * psi_plus(offset);
}

}  // namespace

double counterexample_test_function(double rho, double z) {
  const double a = std::abs(z);
  if (a <= kTestInner || a >= kTestOuter) return 0.0;
  const double t = a - 1.5;
  return phi(rho) * sign(z) * cube(1.0 - t * t);
}

double counterexample_member(int shift, double rho, double z) {
  return member_from_offset(rho, sign(z), std::abs(z) - shift);
}

CounterexampleReport counterexample_sequence(const CounterexampleOptions& o) {
  if (!(o.p > 2.0 && o.p < 6.0)) throw std::invalid_argument("counterexample: p must lie in (2, 6)");
  if (o.shifts.empty()) throw std::invalid_argument("counterexample: no shifts given");
  if (o.cells_per_unit < 2) throw std::invalid_argument("counterexample: cells_per_unit must be >= 2");
  for (int n : o.shifts) {
    if (n < 1) throw std::invalid_argument("counterexample: shifts must be >= 1");
  }
  const int max_shift = *std::max_element(o.shifts.begin(), o.shifts.end());
  const int extent = o.z_extent.value_or(max_shift + 3);
  if (extent < max_shift + 2 + 1) {
    throw std::invalid_argument("counterexample: z grid too small for shift " + std::to_string(max_shift));
  }

  const int cpu = o.cells_per_unit;
  const double h = 1.0 / cpu;
  const int nrho = static_cast<int>(std::ceil(kRhoExtent * cpu));
  const int nz = 2 * extent * cpu;
  // Node k has z = (k + 1/2 - extent*cpu) h; the half-integer cell offset is exact.
  auto z_cells = [&](int k) { return k + 0.5 - static_cast<double>(extent) * cpu; };
  auto rho_at = [&](int i) { return (i + 0.5) * h; };

  std::vector<double> g(static_cast<std::size_t>(nrho) * nz);
  for (int k = 0; k < nz; ++k) {
    for (int i = 0; i < nrho; ++i) g[static_cast<std::size_t>(k) * nrho + i] = counterexample_test_function(rho_at(i), z_cells(k) * h);
  }

  CounterexampleReport report;
  report.p = o.p;
  report.cells_per_unit = cpu;
  report.z_extent = extent;

  const double cell = M_PI * h * h;  // dx = pi drho dz
  std::vector<double> u(g.size());
  for (int n : o.shifts) {
    for (int k = 0; k < nz; ++k) {
      const double zc = z_cells(k);
      const double offset = (std::abs(zc) - static_cast<double>(n) * cpu) * h;
      for (int i = 0; i < nrho; ++i) u[static_cast<std::size_t>(k) * nrho + i] = member_from_offset(rho_at(i), sign(zc), offset);
    }
    double mass = 0.0;
    double pairing = 0.0;
    for (int k = 0; k < nz; ++k) {
      for (int i = 0; i < nrho; ++i) {
        const std::size_t c = static_cast<std::size_t>(k) * nrho + i;
        mass += cell * std::pow(std::abs(u[c]), o.p);
        pairing += cell * u[c] * g[c];
        // |grad|^2 = 4 rho (d_rho)^2 + (d_z)^2; values vanish beyond the grid.
        const double ur = i + 1 < nrho ? u[c + 1] : 0.0;
        const double gr = i + 1 < nrho ? g[c + 1] : 0.0;
        pairing += cell * 4.0 * ((i + 1) * h) * ((ur - u[c]) / h) * ((gr - g[c]) / h);
        const double uz = k + 1 < nz ? u[c + nrho] : 0.0;
        const double gz = k + 1 < nz ? g[c + nrho] : 0.0;
        pairing += cell * ((uz - u[c]) / h) * ((gz - g[c]) / h);
      }
    }
    ShiftRecord rec;
    rec.shift = n;
    rec.mass = mass;
    rec.pairing = pairing;
    rec.disjoint_support = n + 1.0 >= kTestOuter;
    report.shifts.push_back(rec);
  }

  const double first = report.shifts.front().mass;
  for (auto& rec : report.shifts) {
    rec.relative_deviation = std::abs(rec.mass - first) / first;
    report.max_relative_deviation = std::max(report.max_relative_deviation, rec.relative_deviation);
    if (rec.disjoint_support && rec.pairing != 0.0) report.pairings_vanish_when_disjoint = false;
  }
  const double m = 3.0 * o.p;
  const double integral = std::exp(0.5 * std::log(M_PI) + std::lgamma(m + 1.0) - std::lgamma(m + 1.5));
  report.analytic_mass = 0.5 * M_PI * integral * integral;
  report.quadrature_relative_error = std::abs(first - report.analytic_mass) / report.analytic_mass;
  return report;
}

}  // namespace isocompat::pde
