#include "isocompat/pde/domain.hpp"

#include <cmath>
#include <stdexcept>

#include "isocompat/errors.hpp"

namespace isocompat::pde {

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::BlockRadial4: return "block_radial4";
    case Reduction::Cylinder3: return "cylinder3";
    case Reduction::Radial: return "radial";
  }
  return "unknown";
}

std::string to_string(SymmetryClass c) {
  return c == SymmetryClass::AntisymmetricSwap ? "antisymmetric_swap" : "none";
}

ReducedDomain::ReducedDomain(Reduction reduction, int ambient_dim, int cells, double radius, double period)
    : reduction_(reduction), ambient_dim_(ambient_dim), cells_(cells), radius_(radius), period_(period) {
  if (cells < 2) throw std::invalid_argument("grid needs at least two cells per axis");
  if (!(radius > 0.0)) throw std::invalid_argument("truncation radius must be positive");
  if (reduction == Reduction::Cylinder3 && !(period > 0.0)) throw std::invalid_argument("period must be positive");
  if (reduction == Reduction::Radial && ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
}

ReducedDomain ReducedDomain::block_radial4(int cells, double radius) {
  return ReducedDomain(Reduction::BlockRadial4, 4, cells, radius, 0.0);
}

ReducedDomain ReducedDomain::cylinder3(int cells, double radius, double period) {
  return ReducedDomain(Reduction::Cylinder3, 3, cells, radius, period);
}

ReducedDomain ReducedDomain::radial(int ambient_dim, int cells, double radius) {
  return ReducedDomain(Reduction::Radial, ambient_dim, cells, radius, 0.0);
}

double ReducedDomain::h1() const {
  switch (reduction_) {
    case Reduction::BlockRadial4: return h0();
    case Reduction::Cylinder3: return period_ / cells_;
    case Reduction::Radial: return 1.0;
  }
  return 1.0;
}

double ReducedDomain::density(double a, double b) const {
  switch (reduction_) {
    case Reduction::BlockRadial4: return 4.0 * M_PI * M_PI * a * b;
    case Reduction::Cylinder3: return 2.0 * M_PI * a;
    case Reduction::Radial: {
      const double n = ambient_dim_;
      const double sphere = 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
      return sphere * std::pow(a, n - 1.0);
    }
  }
  return 0.0;
}

double ReducedDomain::cell_weight(int i, int j) const {
  const double b = reduction_ == Reduction::BlockRadial4 ? coord1(j) : 0.0;
  return density(coord0(i), b) * h0() * h1();
}

double ReducedDomain::face_weight0(int i, int j) const {
  const double b = reduction_ == Reduction::BlockRadial4 ? coord1(j) : 0.0;
  return density((i + 1) * h0(), b) * h0() * h1();
}

double ReducedDomain::face_weight1(int i, int j) const {
  if (reduction_ == Reduction::BlockRadial4) return density(coord0(i), (j + 1) * h1()) * h0() * h1();
  return cell_weight(i, j);
}

Vec ReducedDomain::cell_weights() const {
  Vec w(static_cast<long>(cell_count()));
  for (int i = 0; i < size0(); ++i)
    for (int j = 0; j < size1(); ++j) w(static_cast<long>(index(i, j))) = cell_weight(i, j);
  return w;
}

std::size_t ReducedFunction::unknown_count(const ReducedDomain& domain, SymmetryClass cls) {
  if (cls == SymmetryClass::AntisymmetricSwap) {
    const auto n = static_cast<std::size_t>(domain.cells_per_axis());
    return n * (n - 1) / 2;
  }
  return domain.cell_count();
}

ReducedFunction::ReducedFunction(ReducedDomain domain, SymmetryClass cls, Vec unknowns)
    : domain_(std::move(domain)), cls_(cls), unknowns_(std::move(unknowns)) {
  if (cls_ == SymmetryClass::AntisymmetricSwap && domain_.reduction() != Reduction::BlockRadial4) {
    throw std::invalid_argument("antisymmetric swap class requires the block-radial R^2 x R^2 reduction");
  }
  require_dims(static_cast<long>(unknown_count(domain_, cls_)), unknowns_.size(), "reduced function unknowns");
}

ReducedFunction ReducedFunction::zeros(const ReducedDomain& domain, SymmetryClass cls) {
  return ReducedFunction(domain, cls, Vec::Zero(static_cast<long>(unknown_count(domain, cls))));
}

ReducedFunction ReducedFunction::from_full(const ReducedDomain& domain, SymmetryClass cls, const Vec& full) {
  require_dims(static_cast<long>(domain.cell_count()), full.size(), "full grid function");
  if (cls == SymmetryClass::None) return ReducedFunction(domain, cls, full);
  if (domain.reduction() != Reduction::BlockRadial4) {
    throw std::invalid_argument("antisymmetric swap class requires the block-radial R^2 x R^2 reduction");
  }
  Vec v(static_cast<long>(unknown_count(domain, cls)));
  long k = 0;
  for (int i = 1; i < domain.size0(); ++i)
    for (int j = 0; j < i; ++j)
      v(k++) = 0.5 * (full(static_cast<long>(domain.index(i, j))) - full(static_cast<long>(domain.index(j, i))));
  return ReducedFunction(domain, cls, std::move(v));
}

Vec ReducedFunction::expand() const {
  if (cls_ == SymmetryClass::None) return unknowns_;
  Vec full = Vec::Zero(static_cast<long>(domain_.cell_count()));
  long k = 0;
  for (int i = 1; i < domain_.size0(); ++i) {
    for (int j = 0; j < i; ++j) {
      const double v = unknowns_(k++);
      full(static_cast<long>(domain_.index(i, j))) = v;
      full(static_cast<long>(domain_.index(j, i))) = -v;
    }
  }
  return full;
}

Vec ReducedFunction::restrict_sum(const Vec& full) const {
  if (cls_ == SymmetryClass::None) return full;
  Vec v(unknowns_.size());
  long k = 0;
  for (int i = 1; i < domain_.size0(); ++i)
    for (int j = 0; j < i; ++j)
      v(k++) = full(static_cast<long>(domain_.index(i, j))) - full(static_cast<long>(domain_.index(j, i)));
  return v;
}

Vec ReducedFunction::mass() const {
  if (cls_ == SymmetryClass::None) return domain_.cell_weights();
  Vec m(unknowns_.size());
  long k = 0;
  for (int i = 1; i < domain_.size0(); ++i)
    for (int j = 0; j < i; ++j) m(k++) = 2.0 * domain_.cell_weight(i, j);
  return m;
}

}  // namespace isocompat::pde
