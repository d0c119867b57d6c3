#include "isocompat/pde/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "isocompat/errors.hpp"

namespace isocompat::pde {

namespace {

/// Forward neighbour along axis 1, or -1 where the Dirichlet zero applies.
long next1(const ReducedDomain& d, int i, int j) {
  if (j + 1 < d.size1()) return static_cast<long>(d.index(i, j + 1));
  if (d.periodic1()) return static_cast<long>(d.index(i, 0));
  return -1;
}

long next0(const ReducedDomain& d, int i, int j) {
  return i + 1 < d.size0() ? static_cast<long>(d.index(i + 1, j)) : -1;
}

}  // namespace

void ProblemSpec::validate(int ambient_dim) const {
  if (!(b0 > 0.0)) throw std::invalid_argument("b0 must be positive");
  if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
  if (ambient_dim > 2 && !(q < (ambient_dim + 2.0) / (ambient_dim - 2.0))) {
    throw std::invalid_argument("q must be subcritical: q < (n+2)/(n-2)");
  }
}

EnergyParts energy_parts(const ReducedFunction& u, const ProblemSpec& p) {
  const ReducedDomain& d = u.domain();
  const Vec full = u.expand();
  EnergyParts parts;
  const double h0 = d.h0();
  const double h1 = d.h1();
  for (int i = 0; i < d.size0(); ++i) {
    for (int j = 0; j < d.size1(); ++j) {
      const long c = static_cast<long>(d.index(i, j));
      const double v = full(c);
      const double w = d.cell_weight(i, j);
      parts.mass += w * v * v;
      parts.nonlinear += w * std::pow(std::abs(v), p.q + 1.0);
      const long n0 = next0(d, i, j);
      const double d0 = ((n0 >= 0 ? full(n0) : 0.0) - v) / h0;
      parts.gradient += d.face_weight0(i, j) * d0 * d0;
      if (d.axes() == 2) {
        const long n1 = next1(d, i, j);
        const double d1 = ((n1 >= 0 ? full(n1) : 0.0) - v) / h1;
        parts.gradient += d.face_weight1(i, j) * d1 * d1;
      }
    }
  }
  return parts;
}

double discrete_energy(const ReducedFunction& u, const ProblemSpec& p) { return energy_parts(u, p).energy(p); }

Vec full_partials(const ReducedDomain& d, const Vec& full, const ProblemSpec& p) {
  require_dims(static_cast<long>(d.cell_count()), full.size(), "full_partials");
  Vec g = Vec::Zero(full.size());
  const double h0 = d.h0();
  const double h1 = d.h1();
  for (int i = 0; i < d.size0(); ++i) {
    for (int j = 0; j < d.size1(); ++j) {
      const long c = static_cast<long>(d.index(i, j));
      const double v = full(c);
      const double w = d.cell_weight(i, j);
      g(c) += w * (p.b0 * v - std::pow(std::abs(v), p.q - 1.0) * v);
      const long n0 = next0(d, i, j);
      const double flux0 = d.face_weight0(i, j) * ((n0 >= 0 ? full(n0) : 0.0) - v) / (h0 * h0);
      g(c) -= flux0;
      if (n0 >= 0) g(n0) += flux0;
      if (d.axes() == 2) {
        const long n1 = next1(d, i, j);
        const double flux1 = d.face_weight1(i, j) * ((n1 >= 0 ? full(n1) : 0.0) - v) / (h1 * h1);
        g(c) -= flux1;
        if (n1 >= 0) g(n1) += flux1;
      }
    }
  }
  return g;
}

ReducedFunction discrete_gradient(const ReducedFunction& u, const ProblemSpec& p) {
  const Vec partials = u.restrict_sum(full_partials(u.domain(), u.expand(), p));
  return ReducedFunction(u.domain(), u.symmetry(), partials.cwiseQuotient(u.mass()));
}

double weighted_inner(const ReducedFunction& u, const ReducedFunction& v) {
  require_dims(u.unknowns().size(), v.unknowns().size(), "weighted_inner");
  return (u.mass().array() * u.unknowns().array() * v.unknowns().array()).sum();
}

double weighted_norm(const ReducedFunction& u) { return std::sqrt(weighted_inner(u, u)); }

double symmetry_defect(const ReducedFunction& u) {
  const ReducedDomain& d = u.domain();
  if (d.reduction() != Reduction::BlockRadial4) return 0.0;
  const Vec full = u.expand();
  double defect = 0.0;
  for (int i = 0; i < d.size0(); ++i)
    for (int j = 0; j < d.size1(); ++j)
      defect = std::max(defect, std::abs(full(static_cast<long>(d.index(i, j))) +
                                         full(static_cast<long>(d.index(j, i)))));
  return defect;
}

}  // namespace isocompat::pde
