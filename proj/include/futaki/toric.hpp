#pragma once

#include "futaki/localization.hpp"
#include "futaki/param_poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace futaki {

/// Which implementation of a data-parallel kernel to run. The serial path is
/// the reference; the OpenMP path must agree with it exactly.
enum class Execution { serial, parallel };

using IntVector = std::vector<std::int64_t>;
using Point = std::vector<Rational>;

/// Half-space <y, normal> <= offset(c) with an offset affine in the parameter.
struct Facet {
    IntVector normal;
    ParamPoly offset;
};

struct ParamPolytope {
    std::size_t dimension = 0;
    std::vector<Facet> facets;
};

/// A ParamPolytope realized at a rational parameter value.
struct RationalPolytope {
    std::size_t dimension = 0;
    std::vector<IntVector> normals;
    std::vector<Rational> offsets;
    std::vector<Point> vertices;                    // lexicographically sorted
    std::vector<std::vector<std::size_t>> incidence;  // facets saturated by each vertex
};

/// Vertex enumeration by intersecting every n-subset of facets. Throws
/// GeometryError when the realization is unbounded, empty or lower-dimensional.
RationalPolytope realize(const ParamPolytope& polytope, const Rational& x, Execution exec = Execution::parallel);
RationalPolytope realize(std::size_t dimension, std::vector<IntVector> normals, std::vector<Rational> offsets,
                         Execution exec = Execution::parallel);

/// Indices of facets that do not support an (n-1)-dimensional face.
std::vector<std::size_t> redundant_facets(const RationalPolytope& polytope);

/// Volume and first moment (integral of y over the polytope).
struct PolytopeIntegrals {
    Rational volume;
    Point first_moment;
};

/// Boundary-facet star triangulation. The apex is the vertex barycenter unless
/// `apex_vertex` names a vertex; sub-faces are coned from their barycenters.
PolytopeIntegrals integrate_polytope(const RationalPolytope& polytope,
                                     std::optional<std::size_t> apex_vertex = std::nullopt,
                                     Execution exec = Execution::parallel);

Rational volume(const RationalPolytope& polytope, Execution exec = Execution::parallel);

/// Integral of <y, direction> over the polytope.
Rational linear_moment(const RationalPolytope& polytope, std::span<const std::int64_t> direction,
                       Execution exec = Execution::parallel);
Rational linear_moment(const RationalPolytope& polytope, std::span<const Rational> direction,
                       Execution exec = Execution::parallel);

/// sum_alpha linear_moment(P_alpha(x), direction) / volume(P_alpha(x)).
Rational fut_toric(std::span<const ParamPolytope> polytopes, std::span<const std::int64_t> direction,
                   const Rational& x, Execution exec = Execution::parallel);

/// Euclidean volume as a polynomial in the parameter, interpolated from
/// dimension+1 exact samples on the interval and checked on one more.
ParamPoly volume_polynomial(const ParamPolytope& polytope, const Parameter& parameter,
                            Execution exec = Execution::parallel);

enum class MinkowskiStatus { pass, fail, inconclusive };

struct MinkowskiResult {
    MinkowskiStatus status = MinkowskiStatus::inconclusive;
    std::string diagnostics;
    std::optional<std::size_t> offending_facet;  // index into whole.facets
};

/// Strong-isomorphism fast path: when every polytope has the same normal set
/// and vertex-facet incidence at x, pass iff the offsets add facetwise.
MinkowskiResult minkowski_check(std::span<const ParamPolytope> parts, const ParamPolytope& whole, const Rational& x);

std::string to_string(MinkowskiStatus status);

}  // namespace futaki
