#pragma once

#include <string>
#include <vector>

#include "isocompat/isometry.hpp"

namespace isocompat::pde {

/// Coordinates after quotienting by the symmetry group.
///   BlockRadial4  (r1, r2) in (0,R]^2, R^4 = R^2 x R^2, weight (2 pi)^2 r1 r2
///   Cylinder3     (r, z) in (0,R] x [0,L), z periodic, weight 2 pi r
///   Radial        r in (0,R], weight |S^(n-1)| r^(n-1)
enum class Reduction { BlockRadial4, Cylinder3, Radial };

enum class SymmetryClass { None, AntisymmetricSwap };

std::string to_string(Reduction r);
std::string to_string(SymmetryClass c);

/// Cell-centered grid, r_i = (i + 1/2) h. Values beyond r = R are zero; r = 0 carries no
/// boundary condition (no face there).
class ReducedDomain {
 public:
  static ReducedDomain block_radial4(int cells, double radius);
  static ReducedDomain cylinder3(int cells, double radius, double period);
  static ReducedDomain radial(int ambient_dim, int cells, double radius);

  Reduction reduction() const { return reduction_; }
  int ambient_dim() const { return ambient_dim_; }
  int cells_per_axis() const { return cells_; }
  double radius() const { return radius_; }
  double period() const { return period_; }

  int axes() const { return reduction_ == Reduction::Radial ? 1 : 2; }
  int size0() const { return cells_; }
  int size1() const { return reduction_ == Reduction::Radial ? 1 : cells_; }
  std::size_t cell_count() const { return static_cast<std::size_t>(size0()) * static_cast<std::size_t>(size1()); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * size1() + j; }

  double h0() const { return radius_ / cells_; }
  double h1() const;
  double coord0(int i) const { return (i + 0.5) * h0(); }
  double coord1(int j) const { return (j + 0.5) * h1(); }
  bool periodic1() const { return reduction_ == Reduction::Cylinder3; }

  /// Density times cell volume at the cell center.
  double cell_weight(int i, int j) const;
  /// Density times cell volume at the face between cells i and i+1 (axis 0) or
  /// j and j+1 (axis 1); the forward differences live there.
  double face_weight0(int i, int j) const;
  double face_weight1(int i, int j) const;

  Vec cell_weights() const;

 private:
  ReducedDomain(Reduction reduction, int ambient_dim, int cells, double radius, double period);
  double density(double a, double b) const;

  Reduction reduction_;
  int ambient_dim_;
  int cells_;
  double radius_;
  double period_;
};

/// Grid function in a symmetry class. AntisymmetricSwap stores only the strict lower
/// triangle i > j of the (r1, r2) grid; the upper triangle is its negative transpose and
/// the diagonal is zero, so the class is exact by construction.
class ReducedFunction {
 public:
  /// Throws std::invalid_argument when the class is not admissible on the domain.
  ReducedFunction(ReducedDomain domain, SymmetryClass cls, Vec unknowns);
  static ReducedFunction zeros(const ReducedDomain& domain, SymmetryClass cls);
  /// Projects a full grid function onto the class ((u - u^T) / 2 for the swap class).
  static ReducedFunction from_full(const ReducedDomain& domain, SymmetryClass cls, const Vec& full);

  static std::size_t unknown_count(const ReducedDomain& domain, SymmetryClass cls);

  const ReducedDomain& domain() const { return domain_; }
  SymmetryClass symmetry() const { return cls_; }
  const Vec& unknowns() const { return unknowns_; }
  Vec& unknowns() { return unknowns_; }

  /// Values on every cell, row-major (i along axis 0).
  Vec expand() const;
  /// Adjoint of expand(): sums full-grid coefficients into the unknowns.
  Vec restrict_sum(const Vec& full) const;
  /// Weights of the weighted inner product <u, v>_w = sum w u v expressed on the unknowns.
  Vec mass() const;

 private:
  ReducedDomain domain_;
  SymmetryClass cls_;
  Vec unknowns_;
};

}  // namespace isocompat::pde
