#include "futaki/toric_kernels.hpp"

#include "exact_linalg.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

namespace futaki::kernels {

namespace {

using linalg::Matrix;
using linalg::Vector;

Vector to_rational(const IntVector& v) {
    Vector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

// Intersection point of the facets in `subset`, if unique and feasible.
std::optional<Point> subset_vertex(const std::vector<Vector>& rows, const std::vector<Rational>& offsets,
                                   const std::vector<std::size_t>& subset) {
    Matrix a;
    Vector b;
    for (auto i : subset) {
        a.push_back(rows[i]);
        b.push_back(offsets[i]);
    }
    auto y = linalg::solve(std::move(a), std::move(b));
    if (!y) return std::nullopt;
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (linalg::dot(rows[j], *y) > offsets[j]) return std::nullopt;
    return y;
}

void sort_unique(std::vector<Point>& points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool on_facet(const RationalPolytope& p, std::size_t vertex, std::size_t facet) {
    const auto& inc = p.incidence[vertex];
    return std::binary_search(inc.begin(), inc.end(), facet);
}

Point barycenter(const RationalPolytope& p, const std::vector<std::size_t>& verts) {
    Point c(p.dimension);
    for (auto v : verts)
        for (std::size_t i = 0; i < p.dimension; ++i) c[i] += p.vertices[v][i];
    const Rational inv(1, static_cast<std::int64_t>(verts.size()));
    for (auto& x : c) x *= inv;
    return c;
}

int face_rank(const RationalPolytope& p, const std::vector<std::size_t>& verts) {
    std::vector<const Vector*> pts;
    pts.reserve(verts.size());
    for (auto v : verts) pts.push_back(&p.vertices[v]);
    return linalg::affine_rank(pts);
}

// Simplices (d+1 points each) triangulating the face with vertex set `verts`
// of affine dimension d, coning each sub-face from the face barycenter.
std::vector<std::vector<Point>> triangulate_face(const RationalPolytope& p, const std::vector<std::size_t>& verts,
                                                 int d) {
    if (d == 0) return {{p.vertices[verts.front()]}};
    std::set<std::vector<std::size_t>> subfaces;
    for (std::size_t j = 0; j < p.normals.size(); ++j) {
        std::vector<std::size_t> sub;
        for (auto v : verts)
            if (on_facet(p, v, j)) sub.push_back(v);
        if (sub.size() < static_cast<std::size_t>(d) || sub.size() == verts.size()) continue;
        if (face_rank(p, sub) == d - 1) subfaces.insert(std::move(sub));
    }
    const Point apex = barycenter(p, verts);
    std::vector<std::vector<Point>> out;
    for (const auto& sub : subfaces)
        for (auto& simplex : triangulate_face(p, sub, d - 1)) {
            simplex.push_back(apex);
            out.push_back(std::move(simplex));
        }
    return out;
}

// Vertex sets of the distinct (n-1)-dimensional faces. Facets that are
// redundant or repeat another facet's hyperplane are dropped.
std::vector<std::vector<std::size_t>> boundary_faces(const RationalPolytope& p) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t j = 0; j < p.normals.size(); ++j) {
        std::vector<std::size_t> verts;
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            if (on_facet(p, v, j)) verts.push_back(v);
        if (verts.size() < p.dimension || face_rank(p, verts) != static_cast<int>(p.dimension) - 1) continue;
        if (seen.insert(verts).second) out.push_back(std::move(verts));
    }
    return out;
}

// Contribution of the cone from `apex` over one boundary face.
PolytopeIntegrals facet_cone(const RationalPolytope& p, const std::vector<std::size_t>& verts, const Point& apex,
                             const Rational& inv_factorial) {
    const std::size_t n = p.dimension;
    PolytopeIntegrals acc{Rational(0), Point(n)};
    const Rational inv_points(1, static_cast<std::int64_t>(n) + 1);
    for (const auto& simplex : triangulate_face(p, verts, static_cast<int>(n) - 1)) {
        Matrix m;
        for (const auto& q : simplex) {
            Vector row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = q[i] - apex[i];
            m.push_back(std::move(row));
        }
        const Rational vol = linalg::determinant(std::move(m)).abs() * inv_factorial;
        if (vol.is_zero()) continue;
        acc.volume += vol;
        for (std::size_t i = 0; i < n; ++i) {
            Rational s = apex[i];
            for (const auto& q : simplex) s += q[i];
            acc.first_moment[i] += vol * s * inv_points;
        }
    }
    return acc;
}

void accumulate(PolytopeIntegrals& into, const PolytopeIntegrals& part) {
    into.volume += part.volume;
    for (std::size_t i = 0; i < into.first_moment.size(); ++i) into.first_moment[i] += part.first_moment[i];
}

}  // namespace

std::vector<std::vector<std::size_t>> combinations(std::size_t count, std::size_t choose) {
    std::vector<std::vector<std::size_t>> out;
    if (choose > count) return out;
    std::vector<std::size_t> idx(choose);
    for (std::size_t i = 0; i < choose; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = choose;
        while (i > 0 && idx[i - 1] == count - choose + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < choose; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<Point> enumerate_vertices_serial(std::size_t dimension, const std::vector<IntVector>& normals,
                                             const std::vector<Rational>& offsets) {
    std::vector<Vector> rows;
    for (const auto& n : normals) rows.push_back(to_rational(n));
    std::vector<Point> out;
    for (const auto& subset : combinations(normals.size(), dimension))
        if (auto y = subset_vertex(rows, offsets, subset)) out.push_back(std::move(*y));
    sort_unique(out);
    return out;
}

std::vector<Point> enumerate_vertices_parallel(std::size_t dimension, const std::vector<IntVector>& normals,
                                               const std::vector<Rational>& offsets) {
    std::vector<Vector> rows;
    for (const auto& n : normals) rows.push_back(to_rational(n));
    const auto subsets = combinations(normals.size(), dimension);
    std::vector<Point> out;
    const auto count = static_cast<std::ptrdiff_t>(subsets.size());
#pragma omp parallel
    {
        std::vector<Point> local;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::ptrdiff_t s = 0; s < count; ++s)
            if (auto y = subset_vertex(rows, offsets, subsets[static_cast<std::size_t>(s)]))
                local.push_back(std::move(*y));
#pragma omp critical(futaki_vertices)
        out.insert(out.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    }
    sort_unique(out);
    return out;
}

PolytopeIntegrals star_integrals_serial(const RationalPolytope& polytope, const Point& apex) {
    const Rational inv_factorial = factorial(static_cast<unsigned>(polytope.dimension)).inverse();
    PolytopeIntegrals total{Rational(0), Point(polytope.dimension)};
    for (const auto& face : boundary_faces(polytope)) accumulate(total, facet_cone(polytope, face, apex, inv_factorial));
    return total;
}

PolytopeIntegrals star_integrals_parallel(const RationalPolytope& polytope, const Point& apex) {
    const Rational inv_factorial = factorial(static_cast<unsigned>(polytope.dimension)).inverse();
    PolytopeIntegrals total{Rational(0), Point(polytope.dimension)};
    const auto faces = boundary_faces(polytope);
    const auto facets = static_cast<std::ptrdiff_t>(faces.size());
#pragma omp parallel
    {
        PolytopeIntegrals local{Rational(0), Point(polytope.dimension)};
#pragma omp for schedule(dynamic, 1) nowait
        for (std::ptrdiff_t j = 0; j < facets; ++j)
            accumulate(local, facet_cone(polytope, faces[static_cast<std::size_t>(j)], apex, inv_factorial));
#pragma omp critical(futaki_integrals)
        accumulate(total, local);
    }
    return total;
}

}  // namespace futaki::kernels
