#pragma once

#include "isocompat/packing.hpp"

namespace isocompat {

/// Orbit of the base point of H^n under the cyclic group generated by the boost of
/// rapidity `step` in the (x_1, t) plane, packed with r = step / 4.
///
/// Elements are the centered exponents k (ordered 0, -1, 1, -2, ...). Pairwise distances
/// are evaluated as d(p, g^(j-k) p) with g^m built directly from cosh(m t), sinh(m t):
/// the ambient coordinates of far orbit points cannot resolve unit distances in double
/// precision, while the group-relative form is exact up to one acosh.
PackingReport boost_orbit_demo(double step, std::size_t count, int n = 2);

}  // namespace isocompat
