#pragma once

// Dense exact linear algebra over Q for the polytope kernels.

#include "futaki/rational.hpp"

#include <optional>
#include <vector>

namespace futaki::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

/// Unique solution of A y = b for square A, or nullopt when A is singular.
std::optional<Vector> solve(Matrix a, Vector b);

int rank(Matrix a);

/// Nonzero kernel vector of an (n-1) x n matrix of rank n-1.
std::optional<Vector> kernel_vector(Matrix a);

Rational determinant(Matrix a);

/// Affine rank of a point set: rank of {p_i - p_0}.
int affine_rank(const std::vector<const Vector*>& points);

Rational dot(const Vector& a, const Vector& b);

}  // namespace futaki::linalg
