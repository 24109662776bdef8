#pragma once

// Serial reference and OpenMP implementations of the polytope kernels.
// toric.cpp dispatches on Execution; tests and the benchmark call these
// directly to compare the two paths.

#include "futaki/toric.hpp"

namespace futaki::kernels {

/// All feasible intersection points of n-subsets of facets, sorted and deduplicated.
std::vector<Point> enumerate_vertices_serial(std::size_t dimension, const std::vector<IntVector>& normals,
                                             const std::vector<Rational>& offsets);
std::vector<Point> enumerate_vertices_parallel(std::size_t dimension, const std::vector<IntVector>& normals,
                                               const std::vector<Rational>& offsets);

/// Star-triangulation volume and first moment; `apex` is a point in the polytope.
PolytopeIntegrals star_integrals_serial(const RationalPolytope& polytope, const Point& apex);
PolytopeIntegrals star_integrals_parallel(const RationalPolytope& polytope, const Point& apex);

/// n-subsets of {0..count-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t count, std::size_t choose);

}  // namespace futaki::kernels
