#include "futaki/toric.hpp"

#include "exact_linalg.hpp"
#include "futaki/error.hpp"
#include "futaki/toric_kernels.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace futaki {

namespace {

using linalg::Matrix;
using linalg::Vector;

Vector row_of(const IntVector& normal) {
    Vector out;
    for (auto x : normal) out.emplace_back(x);
    return out;
}

std::string vector_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

void check_bounded(std::size_t n, const std::vector<IntVector>& normals) {
    Matrix rows;
    for (const auto& a : normals) rows.push_back(row_of(a));
    if (linalg::rank(rows) < static_cast<int>(n)) throw GeometryError("unbounded realization: normals do not span");
    // A pointed recession cone {d : N d <= 0} is trivial iff none of its
    // candidate extreme rays lies in it.
    for (const auto& subset : kernels::combinations(rows.size(), n - 1)) {
        Matrix sub;
        for (auto i : subset) sub.push_back(rows[i]);
        auto ray = linalg::kernel_vector(std::move(sub));
        if (!ray) continue;
        for (int sign : {1, -1}) {
            bool inside = true;
            for (const auto& r : rows) {
                if (Rational(sign) * linalg::dot(r, *ray) > Rational(0)) {
                    inside = false;
                    break;
                }
            }
            if (inside) throw GeometryError("unbounded realization: recession cone is nontrivial");
        }
    }
}

Point apex_point(const RationalPolytope& q, std::optional<std::size_t> apex_vertex) {
    if (apex_vertex) {
        if (*apex_vertex >= q.vertices.size()) throw UsageError("apex vertex index out of range");
        return q.vertices[*apex_vertex];
    }
    Point c(q.dimension);
    for (const auto& v : q.vertices)
        for (std::size_t i = 0; i < q.dimension; ++i) c[i] += v[i];
    const Rational inv(1, static_cast<std::int64_t>(q.vertices.size()));
    for (auto& x : c) x *= inv;
    return c;
}

// Vertex incidence expressed through normals, so differently ordered facet
// lists compare equal.
std::multiset<std::set<IntVector>> incidence_signature(const RationalPolytope& q) {
    std::multiset<std::set<IntVector>> out;
    for (const auto& inc : q.incidence) {
        std::set<IntVector> s;
        for (auto j : inc) s.insert(q.normals[j]);
        out.insert(std::move(s));
    }
    return out;
}

}  // namespace

RationalPolytope realize(const ParamPolytope& polytope, const Rational& x, Execution exec) {
    std::vector<IntVector> normals;
    std::vector<Rational> offsets;
    for (const auto& f : polytope.facets) {
        normals.push_back(f.normal);
        offsets.push_back(f.offset.eval(x));
    }
    return realize(polytope.dimension, std::move(normals), std::move(offsets), exec);
}

RationalPolytope realize(std::size_t dimension, std::vector<IntVector> normals, std::vector<Rational> offsets,
                         Execution exec) {
    if (dimension == 0) throw ValidationError("polytope dimension must be positive");
    if (normals.size() != offsets.size()) throw ValidationError("normal and offset counts differ");
    for (const auto& a : normals) {
        if (a.size() != dimension)
            throw ValidationError("facet normal " + vector_string(a) + " has wrong length");
        if (std::all_of(a.begin(), a.end(), [](auto v) { return v == 0; }))
            throw ValidationError("zero facet normal");
    }
    check_bounded(dimension, normals);

    RationalPolytope q;
    q.dimension = dimension;
    q.vertices = exec == Execution::serial ? kernels::enumerate_vertices_serial(dimension, normals, offsets)
                                           : kernels::enumerate_vertices_parallel(dimension, normals, offsets);
    if (q.vertices.empty()) throw GeometryError("empty realization");
    std::vector<const Vector*> pts;
    for (const auto& v : q.vertices) pts.push_back(&v);
    if (linalg::affine_rank(pts) != static_cast<int>(dimension))
        throw GeometryError("lower-dimensional realization");

    q.incidence.resize(q.vertices.size());
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        for (std::size_t j = 0; j < normals.size(); ++j)
            if (linalg::dot(row_of(normals[j]), q.vertices[v]) == offsets[j]) q.incidence[v].push_back(j);
    q.normals = std::move(normals);
    q.offsets = std::move(offsets);
    return q;
}

std::vector<std::size_t> redundant_facets(const RationalPolytope& polytope) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < polytope.normals.size(); ++j) {
        std::vector<const Vector*> pts;
        for (std::size_t v = 0; v < polytope.vertices.size(); ++v) {
            const auto& inc = polytope.incidence[v];
            if (std::binary_search(inc.begin(), inc.end(), j)) pts.push_back(&polytope.vertices[v]);
        }
        if (linalg::affine_rank(pts) != static_cast<int>(polytope.dimension) - 1) out.push_back(j);
    }
    return out;
}

PolytopeIntegrals integrate_polytope(const RationalPolytope& polytope, std::optional<std::size_t> apex_vertex,
                                     Execution exec) {
    const Point apex = apex_point(polytope, apex_vertex);
    auto r = exec == Execution::serial ? kernels::star_integrals_serial(polytope, apex)
                                       : kernels::star_integrals_parallel(polytope, apex);
    if (r.volume.is_zero()) throw GeometryError("degenerate polytope: zero volume");
    return r;
}

Rational volume(const RationalPolytope& polytope, Execution exec) {
    return integrate_polytope(polytope, std::nullopt, exec).volume;
}

Rational linear_moment(const RationalPolytope& polytope, std::span<const std::int64_t> direction, Execution exec) {
    std::vector<Rational> xi(direction.begin(), direction.end());
    return linear_moment(polytope, std::span<const Rational>(xi), exec);
}

Rational linear_moment(const RationalPolytope& polytope, std::span<const Rational> direction, Execution exec) {
    if (direction.size() != polytope.dimension) throw UsageError("direction has wrong length");
    const auto r = integrate_polytope(polytope, std::nullopt, exec);
    Rational s;
    for (std::size_t i = 0; i < direction.size(); ++i) s += r.first_moment[i] * direction[i];
    return s;
}

Rational fut_toric(std::span<const ParamPolytope> polytopes, std::span<const std::int64_t> direction,
                   const Rational& x, Execution exec) {
    Rational total;
    for (const auto& p : polytopes) {
        if (direction.size() != p.dimension) throw UsageError("direction has wrong length");
        const auto q = realize(p, x, exec);
        const auto r = integrate_polytope(q, std::nullopt, exec);
        Rational m;
        for (std::size_t i = 0; i < direction.size(); ++i) m += r.first_moment[i] * Rational(direction[i]);
        total += m / r.volume;
    }
    return total;
}

ParamPoly volume_polynomial(const ParamPolytope& polytope, const Parameter& parameter, Execution exec) {
    if (!(parameter.lower < parameter.upper)) throw ValidationError("empty parameter interval");
    const std::size_t n = polytope.dimension;
    const auto steps = static_cast<std::int64_t>(n) + 3;
    const Rational width = parameter.upper - parameter.lower;
    std::vector<std::pair<Rational, Rational>> samples;
    for (std::int64_t i = 1; i < steps; ++i) {
        const Rational x = parameter.lower + width * Rational(i, steps);
        samples.emplace_back(x, volume(realize(polytope, x, exec), exec));
    }
    const auto check = samples.back();
    samples.pop_back();
    auto p = ParamPoly::interpolate(samples, parameter.name);
    if (p.eval(check.first) != check.second)
        throw GeometryError("volume is not a polynomial of degree <= " + std::to_string(n) + " on the interval");
    return p;
}

MinkowskiResult minkowski_check(std::span<const ParamPolytope> parts, const ParamPolytope& whole,
                                const Rational& x) {
    for (const auto& p : parts)
        if (p.dimension != whole.dimension) throw UsageError("minkowski_check: mismatched dimensions");
    if (parts.empty()) throw UsageError("minkowski_check: no summands");

    MinkowskiResult result;
    const auto w = realize(whole, x);
    const std::set<IntVector> normal_set(w.normals.begin(), w.normals.end());
    if (normal_set.size() != w.normals.size()) {
        result.diagnostics = "repeated normal in whole polytope";
        return result;
    }
    const auto signature = incidence_signature(w);

    std::vector<std::map<IntVector, Rational>> part_offsets;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        const auto q = realize(parts[a], x);
        const std::set<IntVector> s(q.normals.begin(), q.normals.end());
        if (s != normal_set || s.size() != q.normals.size()) {
            result.diagnostics = "summand " + std::to_string(a) + " has a different normal set";
            return result;
        }
        if (incidence_signature(q) != signature) {
            result.diagnostics = "summand " + std::to_string(a) + " is not strongly isomorphic to the whole";
            return result;
        }
        std::map<IntVector, Rational> m;
        for (std::size_t j = 0; j < q.normals.size(); ++j) m[q.normals[j]] = q.offsets[j];
        part_offsets.push_back(std::move(m));
    }

    for (std::size_t i = 0; i < w.normals.size(); ++i) {
        Rational sum;
        for (const auto& m : part_offsets) sum += m.at(w.normals[i]);
        if (sum != w.offsets[i]) {
            result.status = MinkowskiStatus::fail;
            result.offending_facet = i;
            result.diagnostics = "facet " + std::to_string(i) + " normal " + vector_string(w.normals[i]) +
                                 ": summand offsets add to " + sum.to_string() + ", whole has " +
                                 w.offsets[i].to_string();
            return result;
        }
    }
    result.status = MinkowskiStatus::pass;
    result.diagnostics = "strongly isomorphic; offsets add facetwise";
    return result;
}

std::string to_string(MinkowskiStatus status) {
    switch (status) {
        case MinkowskiStatus::pass: return "pass";
        case MinkowskiStatus::fail: return "fail";
        case MinkowskiStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace futaki
